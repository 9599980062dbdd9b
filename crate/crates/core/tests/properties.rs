mod common;

#[test]
fn basis_pairs_decide_the_identity() {
    common::bilinearity().unwrap();
}

#[test]
fn kernel_and_image_are_subalgebras() {
    common::kernel_and_image_subalgebras().unwrap();
}

#[test]
fn kernel_conditions_on_h4_minus() {
    common::kernel_conditions().unwrap();
}

#[test]
fn conjugation_by_phi_and_psi() {
    common::conjugation_invariance().unwrap();
}

#[test]
fn scaling_the_product_keeps_the_verdict() {
    common::product_scaling().unwrap();
}

#[test]
fn weight_scaling_is_a_bijection_over_f3() {
    common::weight_scaling().unwrap();
}
