//! Transcriptions of the published operator families.
//!
//! Each family is written as printed, typos included. Where the printed
//! form fails, a sibling with the suffix `.fixed` carries the smallest
//! correction that verifies, and names the original in `fixes`.

use super::family::FamilyDef;
use crate::algebra::AlgebraId::{H4Minus, Lm2, Lm3, H4};

fn assoc() -> Vec<FamilyDef> {
    let d_g = "-p1*one + p1*g - (lambda+p1)*(lambda+p1+p2)/p3*x + (lambda+p1)*(lambda+p2)/p3*gx";
    let d_gx = "-p3*one + p3*g - (lambda+p1+p2)*x + p2*gx";
    let e_g = "(lambda+p1)*one + p1*g - (lambda+p1)*(lambda+p1+p2)/p3*x + (lambda+p1)*(lambda+p2)/p3*gx";
    let h_one = "lambda/2*one - lambda/2*g + p1*x + p2*gx";
    let h_x = "-lambda/2*x - lambda/2*gx";
    vec![
        FamilyDef::new("assoc.a", H4, "H4 associative (a)")
            .img("one", "0")
            .img("g", "0")
            .img("x", "-lambda*x")
            .img("gx", "-lambda*gx"),
        FamilyDef::new("assoc.b", H4, "H4 associative (b)")
            .img("one", "-lambda*one")
            .img("g", "-lambda*g")
            .img("x", "0")
            .img("gx", "0"),
        FamilyDef::new("assoc.c", H4, "H4 associative (c)")
            .img("one", "-lambda*one")
            .img("g", "-lambda*g")
            .img("x", "-lambda*x")
            .img("gx", "-lambda*gx"),
        FamilyDef::new("assoc.d", H4, "H4 associative (d)")
            .img("one", "0")
            .img("g", d_g)
            .img("x", "-p3*one + p3*g - (2*lambda+p1+p3)*x + (lambda+p2)*gx")
            .img("gx", d_gx)
            .when("~p3 != 0"),
        FamilyDef::new("assoc.d.fixed", H4, "H4 associative (d)")
            .img("one", "0")
            .img("g", d_g)
            .img("x", "-p3*one + p3*g - (2*lambda+p1+p2)*x + (lambda+p2)*gx")
            .img("gx", d_gx)
            .when("~p3 != 0")
            .fixes("assoc.d", "R(x): the x coefficient is -(2 lambda + p1 + p2), with p2 in place of the printed p3"),
        FamilyDef::new("assoc.e", H4, "H4 associative (e)")
            .img("one", "-lambda*one")
            .img("g", e_g)
            .img("x", "p3*one + p3*g - (2*lambda+p1+p2)*x + (lambda+p2)*gx")
            .img("gx", "p3*one + p3*g - (lambda+p1+p2)*x + p2*gx")
            .when("~p3 != 0"),
        FamilyDef::new("assoc.f", H4, "H4 associative (f)")
            .img("one", "-lambda*one")
            .img("g", "lambda*one + p1*x + p1*p2/(lambda+p2)*gx")
            .img("x", "-(lambda+p2)*x - p2*gx")
            .img("gx", "(lambda+p2)*x + p2*gx")
            .when("~lambda + p2 != 0"),
        FamilyDef::new("assoc.g", H4, "H4 associative (g)")
            .img("one", "-lambda*one")
            .img("g", "lambda*one + lambda*(lambda+p1)/p2*x + lambda*(lambda+p1)/p2*gx")
            .img("x", "-p2*one - p2*g - (2*lambda+p1)*x - (lambda+p1)*gx")
            .img("gx", "p2*one + p2*g + (lambda+p1)*x + p1*gx")
            .when("~p2 != 0"),
        FamilyDef::new("assoc.h", H4, "H4 associative (h)")
            .img("one", h_one)
            .img("g", "lambda/2*one - lambda/2*g - p2*x + p1*gx")
            .img("x", h_x)
            .img("gx", h_x),
        FamilyDef::new("assoc.h.fixed", H4, "H4 associative (h)")
            .img("one", h_one)
            .img("g", "lambda/2*one - lambda/2*g - p2*x - p1*gx")
            .img("x", h_x)
            .img("gx", h_x)
            .fixes("assoc.h", "R(g): the gx coefficient is -p1 instead of p1"),
    ]
}

fn lm2() -> Vec<FamilyDef> {
    let re = "alpha2*h + beta2*e + gamma2*f";
    let rf = "alpha3*h + beta3*e + gamma3*f";
    let gen = "alpha1*h + beta1*e + gamma1*f";
    let half = "-lambda/2*h + beta1*e + gamma1*f";
    let full = "-lambda*h + beta1*e + gamma1*f";
    let ef = "beta1*e + gamma1*f";
    vec![
        FamilyDef::new("lm2.1.1", Lm2, "Lemma 4, case 1.1")
            .img("h", "(beta2+lambda)/alpha2*R(e)")
            .img("e", re)
            .img("f", "0")
            .when("~alpha2 != 0"),
        FamilyDef::new("lm2.1.1.fixed", Lm2, "Lemma 4, case 1.1")
            .img("h", "-(beta2+lambda)/alpha2*R(e)")
            .img("e", re)
            .img("f", "0")
            .when("~alpha2 != 0")
            .fixes("lm2.1.1", "R(h) = -alpha2^-1 (beta2 + lambda) R(e), the sign derived in the proof"),
        FamilyDef::new("lm2.1.2", Lm2, "Lemma 4, case 1.2")
            .img("h", "-((beta2+lambda)*R(e) + gamma2*R(f))/alpha2")
            .img("e", re)
            .img("f", "-lambda*f")
            .when("~alpha2 != 0"),
        FamilyDef::new("lm2.1.3", Lm2, "Lemma 4, case 1.3").img("h", gen).img("e", "0").img("f", "0"),
        FamilyDef::new("lm2.1.4", Lm2, "Lemma 4, case 1.4")
            .img("h", half)
            .img("e", "0")
            .img("f", "beta3*e")
            .when("beta3 != 0"),
        FamilyDef::new("lm2.1.5", Lm2, "Lemma 4, case 1.5").img("h", gen).img("e", "0").img("f", "-lambda*f"),
        FamilyDef::new("lm2.1.6", Lm2, "Lemma 4, case 1.6")
            .img("h", ef)
            .img("e", "0")
            .img("f", "beta3*e - lambda*f")
            .when("beta3 != 0"),
        FamilyDef::new("lm2.1.7", Lm2, "Lemma 4, case 1.7")
            .img("h", full)
            .img("e", "-lambda*e")
            .img("f", "beta3*e")
            .when("beta3 != 0"),
        FamilyDef::new("lm2.1.8", Lm2, "Lemma 4, case 1.8").img("h", gen).img("e", "-lambda*e").img("f", "-lambda*f"),
        FamilyDef::new("lm2.1.9", Lm2, "Lemma 4, case 1.9")
            .img("h", half)
            .img("e", "-lambda*e")
            .img("f", "beta3*e - lambda*f")
            .when("beta3 != 0"),
        FamilyDef::new("lm2.1.10", Lm2, "Lemma 4, case 1.10")
            .img("h", half)
            .img("e", "beta2*e + gamma2*f")
            .img("f", "beta2*(beta2+lambda)/gamma2*e + beta2*f")
            .when("beta2 != 0")
            .when("beta2 + lambda != 0")
            .when("gamma2 != 0"),
        // psi conjugates of the cases above.
        FamilyDef::new("lm2.1.1.psi", Lm2, "Lemma 4, proof of case 1.1")
            .img("h", "-(gamma3+lambda)/alpha3*R(f)")
            .img("e", "0")
            .img("f", rf)
            .when("~alpha3 != 0")
            .related("psi", "lm2.1.1.fixed"),
        FamilyDef::new("lm2.1.2.psi", Lm2, "Lemma 4, proof of case 1.2")
            .img("h", "-((gamma3+lambda)*R(f) + beta3*R(e))/alpha3")
            .img("e", "-lambda*e")
            .img("f", rf)
            .when("~alpha3 != 0")
            .related("psi", "lm2.1.2"),
        FamilyDef::new("lm2.1.4.psi", Lm2, "Lemma 4, proof of case 1.4")
            .img("h", half)
            .img("e", "gamma2*f")
            .img("f", "0")
            .when("gamma2 != 0")
            .related("psi", "lm2.1.4"),
        FamilyDef::new("lm2.1.5.psi", Lm2, "Lemma 4, proof of case 1.5")
            .img("h", gen)
            .img("e", "-lambda*e")
            .img("f", "0")
            .related("psi", "lm2.1.5"),
        FamilyDef::new("lm2.1.6.psi", Lm2, "Lemma 4, proof of case 1.6")
            .img("h", ef)
            .img("e", "-lambda*e + gamma2*f")
            .img("f", "0")
            .when("gamma2 != 0")
            .related("psi", "lm2.1.6"),
        FamilyDef::new("lm2.1.7.psi", Lm2, "Lemma 4, proof of case 1.7")
            .img("h", full)
            .img("e", "gamma2*f")
            .img("f", "-lambda*f")
            .when("gamma2 != 0")
            .related("psi", "lm2.1.7"),
        FamilyDef::new("lm2.1.9.psi", Lm2, "Lemma 4, proof of case 1.9")
            .img("h", half)
            .img("e", "-lambda*e + gamma2*f")
            .img("f", "-lambda*f")
            .when("gamma2 != 0")
            .related("psi", "lm2.1.9"),
    ]
}

fn lm3() -> Vec<FamilyDef> {
    let l27 = |id, src| {
        FamilyDef::new(id, Lm3, src)
            .img("h", "beta1*y + gamma1*z")
            .img("y", "-lambda*y + gamma2*z")
            .img("z", "alpha3*h + alpha3*beta1/lambda*y + gamma3*z")
    };
    let l28 = |id, src| {
        FamilyDef::new(id, Lm3, src)
            .img("h", "-lambda*h + beta1*y + gamma1*z")
            .img("y", "gamma2*z")
            .img("z", "alpha3*h - alpha3*beta1/lambda*y + gamma3*z")
    };
    vec![
        FamilyDef::new("lm3.2.1", Lm3, "Lemma 5, case 2.1")
            .img("h", "alpha1*h + beta1*y + gamma1*z")
            .img("y", "0")
            .img("z", "alpha3*h + beta1*alpha3/alpha1*y + gamma3*z")
            .when("alpha1 != 0")
            .when("alpha1 + lambda != 0"),
        FamilyDef::new("lm3.2.2", Lm3, "Lemma 5, case 2.2")
            .img("h", "beta1*y + gamma1*z")
            .img("y", "0")
            .img("z", "beta3*y + gamma3*z"),
        FamilyDef::new("lm3.2.3", Lm3, "Lemma 5, case 2.3")
            .img("h", "gamma1*z")
            .img("y", "0")
            .img("z", "alpha3*h + beta3*y + gamma3*z"),
        FamilyDef::new("lm3.2.4", Lm3, "Lemma 5, case 2.4")
            .img("h", "alpha1*h + beta1*y + gamma1*z")
            .img("y", "-lambda*y")
            .img("z", "gamma3*z")
            .when("alpha1 != 0"),
        FamilyDef::new("lm3.2.5", Lm3, "Lemma 5, case 2.5")
            .img("h", "-lambda*h + beta1*y + gamma1*z")
            .img("y", "-lambda*y")
            .img("z", "beta3*y + gamma3*z"),
        FamilyDef::new("lm3.2.6", Lm3, "Lemma 5, case 2.6")
            .img("h", "alpha1*h + beta3/alpha3*(alpha1+lambda)*y + gamma1*z")
            .img("y", "-lambda*y")
            .img("z", "alpha3*h + beta3*y + gamma3*z")
            .when("alpha1 != 0")
            .when("~alpha3 != 0"),
        l27("lm3.2.7", "Lemma 5, case 2.7"),
        l27("lm3.2.7.fixed", "Lemma 5, case 2.7")
            .when("gamma2 = 0")
            .fixes("lm3.2.7", "the residual is a multiple of alpha3*gamma2; branch gamma2 = 0"),
        l27("lm3.2.7.fixed2", "Lemma 5, case 2.7")
            .when("alpha3 = 0")
            .fixes("lm3.2.7", "the residual is a multiple of alpha3*gamma2; branch alpha3 = 0"),
        l28("lm3.2.8", "Lemma 5, case 2.8"),
        l28("lm3.2.8.fixed", "Lemma 5, case 2.8")
            .when("gamma2 = 0")
            .fixes("lm3.2.8", "the residual is a multiple of alpha3*gamma2; branch gamma2 = 0"),
        l28("lm3.2.8.fixed2", "Lemma 5, case 2.8")
            .when("alpha3 = 0")
            .fixes("lm3.2.8", "the residual is a multiple of alpha3*gamma2; branch alpha3 = 0"),
        FamilyDef::new("lm3.2.9", Lm3, "Lemma 5, case 2.9")
            .img("h", "alpha1*h - alpha1*(alpha1+lambda)/alpha2*y + gamma1*z")
            .img("y", "alpha2*h - (alpha1+lambda)*y + gamma2*z")
            .img("z", "gamma3*z")
            .when("~alpha2 != 0"),
    ]
}

fn kernel_three() -> Vec<FamilyDef> {
    vec![
        FamilyDef::new("ker3.i", H4Minus, "Theorem 1, first form")
            .img("one", "alpha1*one + alpha2*g + alpha3*e + alpha4*f")
            .img("g", "-alpha*R(one)")
            .img("e", "0")
            .img("f", "0")
            .when("alpha1 != 0 or alpha2 != 0 or alpha3 != 0 or alpha4 != 0"),
        FamilyDef::new("ker3.ii", H4Minus, "Theorem 1, second form")
            .img("one", "0")
            .img("g", "-gamma*R(f)")
            .img("e", "0")
            .img("f", "alpha1*one + alpha2*g + alpha3*e + (gamma*alpha2 - lambda)*f")
            .when("alpha1 != 0 or alpha2 != 0 or alpha3 != 0 or gamma*alpha2 - lambda != 0"),
    ]
}

fn kernel_two_abelian() -> Vec<FamilyDef> {
    let iv_phi = |id, e| {
        FamilyDef::new(id, H4Minus, "Lemma 6, proof of (iv)")
            .img("one", "0")
            .img("g", "-xi*R(e) - eta*R(f)")
            .img("e", e)
            .img("f", "-lambda*f")
            .when("beta1 != 0")
            .when("xi != 0 or eta != 0")
    };
    vec![
        FamilyDef::new("ker2.ab.i", H4Minus, "Lemma 6 (i)")
            .img("one", "0")
            .img("g", "0")
            .img("e", "alpha*one - lambda*e")
            .img("f", "alpha1*one - lambda*f"),
        FamilyDef::new("ker2.ab.ii", H4Minus, "Lemma 6 (ii)")
            .img("one", "0")
            .img("g", "0")
            .img("e", "alpha*one + sigma*g - lambda*e")
            .img("f", "-lambda*f"),
        FamilyDef::new("ker2.ab.ii.phi", H4Minus, "Lemma 6, proof of (ii)")
            .img("one", "0")
            .img("g", "0")
            .img("e", "-lambda*e")
            .img("f", "alpha1*one + sigma*g - lambda*f")
            .related("phi", "ker2.ab.ii"),
        FamilyDef::new("ker2.ab.iii", H4Minus, "Lemma 6 (iii)")
            .img("one", "0")
            .img("g", "xi*lambda*e + eta*lambda*f - (xi*alpha + eta*alpha1)*one")
            .img("e", "-lambda*e + alpha*one")
            .img("f", "-lambda*f + alpha1*one")
            .when("xi != 0 or eta != 0")
            .note("the guard is printed with nu; the coefficient is named eta"),
        FamilyDef::new("ker2.ab.iv", H4Minus, "Lemma 6 (iv)")
            .img("one", "0")
            .img("g", "-xi*R(e) - eta*R(f)")
            .img("e", "-lambda*e")
            .img("f", "-lambda*f + alpha2*one + beta2*(g + xi*e + eta*f)")
            .when("beta2 != 0")
            .when("xi != 0 or eta != 0")
            .note("the guard is printed with nu; the coefficient is named eta"),
        iv_phi("ker2.ab.iv.phi", "-lambda*e + alpha1*e + beta1*(g + xi*e + eta*f)"),
        iv_phi("ker2.ab.iv.phi.fixed", "-lambda*e + alpha1*one + beta1*(g + xi*e + eta*f)")
            .fixes("ker2.ab.iv.phi", "R(e): the printed alpha1 e is alpha1 1")
            .related("phi", "ker2.ab.iv"),
    ]
}

fn kernel_two_abelian_in_i() -> Vec<FamilyDef> {
    let w = "w1*one + w2*e + w3*f";
    let iv = |id| {
        FamilyDef::new(id, H4Minus, "Lemma 7 (iv)")
            .img("one", "-gamma*R(f)")
            .img("g", "zeta*R(f) + mu*one")
            .img("e", "0")
            .img("f", "-lambda*f + xi*one + nu*e")
            .when("mu != 0")
    };
    let v = |id| {
        FamilyDef::new(id, H4Minus, "Lemma 7 (v)")
            .img("one", "-gamma*R(f)")
            .img("g", "sigma1*R(f) + mu*one")
            .img("e", "0")
            .img("f", "g + beta1*e - (lambda+sigma1)*f + xi*one")
            .when("mu != 0")
    };
    let vi = |id| {
        FamilyDef::new(id, H4Minus, "Lemma 7 (vi)")
            .img("one", "-gamma*one")
            .img("g", "sigma1*g + sigma1*(beta1*e + gamma1*f) + xi*one")
            .img("e", "0")
            .img("f", "one")
    };
    let vii = |id, g| {
        FamilyDef::new(id, H4Minus, "Lemma 7 (vii)")
            .img("one", "0")
            .img("g", g)
            .img("e", "0")
            .img("f", "-lambda*f + alpha1*one + beta1*e")
    };
    let in_ker = |id, s, one, g| {
        FamilyDef::new(id, H4Minus, s)
            .alias("w", "w2*e + w3*f")
            .img("one", one)
            .img("g", g)
            .img("e", "0")
            .img("f", "0")
            .when("sigma != 0")
            .when("mu != 0")
    };
    vec![
        FamilyDef::new("ker2.ab0.i", H4Minus, "Lemma 7 (i)")
            .alias("w", w)
            .img("one", "-gamma*one")
            .img("g", "-lambda*g + w")
            .img("e", "-eta*one")
            .img("f", "one")
            .when("eta != 0"),
        FamilyDef::new("ker2.ab0.ii", H4Minus, "Lemma 7 (ii)")
            .alias("w", w)
            .img("one", "-lambda*e")
            .img("g", "-lambda*g + w")
            .img("e", "-lambda*e")
            .img("f", "lambda*e"),
        FamilyDef::new("ker2.ab0.iii", H4Minus, "Lemma 7 (iii)")
            .alias("w", w)
            .img("one", "gamma*lambda*f")
            .img("g", "-lambda*g + w")
            .img("e", "lambda*f")
            .img("f", "-lambda*f"),
        iv("ker2.ab0.iv"),
        iv("ker2.ab0.iv.fixed")
            .when("gamma = 0")
            .fixes("ker2.ab0.iv", "the residual is a multiple of gamma; only gamma = 0 survives"),
        v("ker2.ab0.v"),
        v("ker2.ab0.v.fixed")
            .when("gamma = 0")
            .fixes("ker2.ab0.v", "the residual is a multiple of gamma; only gamma = 0 survives"),
        vi("ker2.ab0.vi"),
        vi("ker2.ab0.vi.fixed")
            .when("sigma1 = -lambda")
            .fixes("ker2.ab0.vi", "the residual is a multiple of lambda + sigma1; sigma1 = -lambda"),
        vii("ker2.ab0.vii", "xi*lambda*f + alpha2*one + beta2*e").when("beta2 != xi*beta1"),
        vii("ker2.ab0.vii.alt", "xi*lambda*f + alpha2*one + beta2*e")
            .when("alpha2 = xi*alpha1")
            .note("second branch of the guard beta2 != xi beta1 or xi alpha1 = alpha2"),
        vii("ker2.ab0.vii.neg", "-xi*lambda*f + alpha2*one + beta2*e")
            .when("beta2 != xi*beta1")
            .note("R(g) with -xi lambda f, as written in the proof"),
        FamilyDef::new("ker2.ab0.viii", H4Minus, "Lemma 7 (viii)")
            .alias("w", w)
            .img("one", "lambda*gamma*f")
            .img("g", "-lambda*g + w")
            .img("e", "0")
            .img("f", "-lambda*f"),
        FamilyDef::new("ker2.ab0.ix", H4Minus, "Lemma 7 (ix)")
            .alias("w", w)
            .img("one", "0")
            .img("g", "sigma1*g + w")
            .img("e", "0")
            .img("f", "-lambda*f"),
        FamilyDef::new("ker2.ab0.x", H4Minus, "Lemma 7 (x)")
            .alias("w", w)
            .img("one", "0")
            .img("g", "-lambda/2*g + w")
            .img("e", "0")
            .img("f", "-e/lambda"),
        in_ker("ker2.ab0.xi", "Lemma 7 (xi)", "sigma*g + alpha*one + w", "xi*R(one) + mu*one"),
        in_ker("ker2.ab0.xii", "Lemma 7 (xii)", "xi*R(g) + mu*one", "sigma*g + alpha*one + w"),
        FamilyDef::new("ker2.ab0.xiii", H4Minus, "Lemma 7 (xiii)")
            .img("one", "alpha1*one + beta1*e + gamma2*f")
            .img("g", "alpha2*one + beta2*e + gamma2*f")
            .img("e", "0")
            .img("f", "0"),
        FamilyDef::new("ker2.ab0.xiii.gamma1", H4Minus, "Lemma 7 (xiii)")
            .img("one", "alpha1*one + beta1*e + gamma1*f")
            .img("g", "alpha2*one + beta2*e + gamma2*f")
            .img("e", "0")
            .img("f", "0")
            .note("independent f coefficient gamma1 in R(1); the printed form repeats gamma2"),
    ]
}

fn kernel_two_nonabelian() -> Vec<FamilyDef> {
    let rf = "sigma1*one + g + (gamma-lambda)*f + sigma4*e";
    let nab = |id, src, one, f| {
        FamilyDef::new(id, H4Minus, src)
            .img("one", one)
            .img("g", "-delta*R(one) - gamma*R(f)")
            .img("e", "0")
            .img("f", f)
    };
    vec![
        nab("ker2.nonab.i", "Lemma 8 (i)", "delta1*one", rf).when("delta1 != 0"),
        nab("ker2.nonab.ii", "Lemma 8 (ii)", "delta4*e", rf).when("delta4 != 0"),
        nab("ker2.nonab.iii", "Lemma 8 (iii)", "xi*(R(f) + lambda*f)", rf).when("xi != 0"),
        nab("ker2.nonab.iv", "Lemma 8 (iv)", "delta1*one + delta3*g + gamma*delta3*f + delta4*e", "-lambda*f")
            .when("delta3 != 0"),
        nab("ker2.nonab.v", "Lemma 8 (v)", "delta1*one + delta4*e", "sigma1*one - lambda*f + sigma4*e")
            .when("delta1 != 0 or delta4 != 0"),
    ]
}

fn image_i() -> Vec<FamilyDef> {
    vec![
        FamilyDef::new("th0.i", H4Minus, "Theorem 2 (i)")
            .img("one", "alpha*one")
            .img("g", "beta*R(one) + delta*R(e) + gamma*R(f)")
            .img("e", "alpha1*one - lambda*e")
            .img("f", "alpha2*one - lambda*f")
            .when("alpha != 0"),
        FamilyDef::new("th0.ii", H4Minus, "Theorem 2 (ii)")
            .img("one", "alpha*one + beta*e")
            .img("g", "sigma*one + delta*e + nu*f")
            .img("e", "0")
            .img("f", "alpha2*one + beta2*e - lambda*f")
            .when("beta*(nu*alpha2 + sigma*lambda) - alpha*(delta*lambda + nu*beta2) != 0"),
        FamilyDef::new("th0.iii", H4Minus, "Theorem 2 (iii)")
            .img("one", "0")
            .img("g", "sigma*one + mu*e + nu*f")
            .img("e", "alpha*one - lambda*e")
            .img("f", "alpha1*one - lambda*f")
            .when("lambda*sigma + alpha*mu + alpha1*nu != 0"),
    ]
}

fn image_j() -> Vec<FamilyDef> {
    let th = |id, src| {
        FamilyDef::new(id, H4Minus, src).alias("h", "alpha*one + g").on(&["one", "h", "e", "f"])
    };
    let ii = |id, f| {
        th(id, "Theorem 3 (ii)")
            .img("one", "mu*e + nu*f")
            .img("h", "-lambda*h + beta1*e + gamma1*f")
            .img("e", "-lambda*e")
            .img("f", f)
            .when("nu != 0")
    };
    vec![
        th("th1.i", "Theorem 3 (i)")
            .img("one", "xi*h + mu*e + nu*f")
            .img("h", "nu*beta3/xi*e + nu*lambda/xi*f")
            .img("e", "0")
            .img("f", "beta3*e - lambda*f")
            .when("xi*nu*beta3 != 0"),
        ii("th1.ii", "-lambda*e"),
        ii("th1.ii.fixed", "-lambda*f").fixes("th1.ii", "R(f) = -lambda f instead of the printed -lambda e"),
        th("th1.iii", "Theorem 3 (iii)")
            .img("one", "0")
            .img("h", "alpha1*h + beta1*e + gamma1*f")
            .img("e", "-lambda*e")
            .img("f", "-lambda*f")
            .when("alpha1 != 0")
            .when("alpha1 + lambda != 0"),
        th("th1.iv", "Theorem 3 (iv)")
            .img("one", "mu*e + nu*f")
            .img("h", "-lambda*h + beta1*e + gamma1*f")
            .img("e", "-lambda*e")
            .img("f", "-lambda*f"),
        th("th1.v", "Theorem 3 (v)")
            .img("one", "xi*h + mu*e + nu*f")
            .img("h", "alpha1*h + (alpha1+lambda)*mu/xi*e + (alpha1+lambda)*nu/xi*f")
            .img("e", "-lambda*e")
            .img("f", "-lambda*f")
            .when("~xi != 0"),
        th("th1.vi", "Theorem 3 (vi)")
            .img("one", "0")
            .img("h", "-lambda/2*h + beta1*e + gamma1*f")
            .img("e", "-lambda*e")
            .img("f", "beta3*e - lambda*f")
            .when("beta3 != 0"),
        th("th1.vii", "Theorem 3 (vii)")
            .img("one", "xi*h + mu*e + nu*f")
            .img("h", "-lambda/2*h + (lambda/2*mu + beta3*nu)/xi*e + lambda/2*nu/xi*f")
            .img("e", "-lambda*e")
            .img("f", "beta3*e - lambda*f")
            .when("beta3 != 0")
            .when("~xi != 0"),
        th("th1.viii", "Theorem 3 (viii)")
            .img("one", "0")
            .img("h", "-lambda/2*h + beta1*e + gamma1*f")
            .img("e", "beta2*e + f")
            .img("f", "beta2*(beta2+lambda)*e + beta2*f")
            .when("beta2 != 0")
            .when("beta2 + lambda != 0"),
    ]
}

fn image_nonideal() -> Vec<FamilyDef> {
    let th = |id, src| FamilyDef::new(id, H4Minus, src).alias("h", "g + gamma*f").on(&["one", "h", "e", "f"]);
    let i = |id| {
        th(id, "Theorem 4 (i)")
            .img("one", "gamma3*one + beta3*e")
            .img("h", "gamma1*one - lambda/2*h + beta1*e")
            .img("e", "0")
            .img("f", "mu*e")
            .when("mu != 0")
            .when("gamma3 != 0")
    };
    let v = |id, f| {
        th(id, "Theorem 4 (v)")
            .img("one", "gamma3*one + beta3*e")
            .img("h", "gamma1*one - lambda*h + beta1*e")
            .img("e", "-lambda*e")
            .img("f", f)
            .when("beta3 != 0")
            .when("gamma3 != 0 or nu != 0")
    };
    let vi = |id| {
        th(id, "Theorem 4 (vi)")
            .img("one", "gamma3*one + alpha3*h + beta3*e")
            .img("h", "gamma1*one + alpha1*h + beta3/alpha3*(alpha1+lambda)*e")
            .img("e", "-lambda*e")
            .img("f", "0")
            .when("alpha1 != 0")
            .when("~alpha3 != 0")
    };
    let vii = |id, one| {
        th(id, "Theorem 4 (vii)")
            .img("one", one)
            .img("h", "gamma1*one + beta1*e")
            .img("e", "gamma2*one - lambda*e")
            .img("f", "0")
            .when("alpha3*(beta1*gamma2 + lambda*gamma1) != 0")
    };
    vec![
        i("th2.i"),
        i("th2.i.fixed").when("beta3 = 0").fixes("th2.i", "the residual is a multiple of beta3; R(1) = gamma3 1"),
        th("th2.ii", "Theorem 4 (ii)")
            .img("one", "gamma3*one")
            .img("h", "gamma1*one + alpha1*h + beta1*e")
            .img("e", "-lambda*e")
            .img("f", "0")
            .when("alpha1 != 0")
            .when("alpha1 + lambda != 0")
            .when("gamma3 != 0"),
        th("th2.iii", "Theorem 4 (iii)")
            .img("one", "gamma3*one")
            .img("h", "gamma1*one - lambda*h + beta1*e")
            .img("e", "-lambda*e")
            .img("f", "nu*one + mu*e")
            .when("gamma3 != 0 or nu != 0"),
        th("th2.iv", "Theorem 4 (iv)")
            .img("one", "gamma3*one")
            .img("h", "gamma1*one - lambda*h")
            .img("e", "-lambda*e")
            .img("f", "nu*one + xi*h + mu*e")
            .when("gamma3 != 0 or nu != 0 or xi != 0"),
        v("th2.v", "nu*one + mu*f"),
        v("th2.v.fixed", "nu*one + mu*e").fixes("th2.v", "R(f) = nu 1 + mu e instead of the printed nu 1 + mu f"),
        vi("th2.vi").when("gamma3*alpha1 - gamma1*alpha3 != 0"),
        vi("th2.vi.b").when("gamma3 != 0").note("guard gamma3 != 0 used in the case analysis"),
        vii("th2.vii", "gamma3*one + alpha3*h + alpha3/lambda*e"),
        vii("th2.vii.fixed", "gamma3*one + alpha3*h + alpha3*beta1/lambda*e").when("gamma2 = 0").fixes(
            "th2.vii",
            "R(1) has e coefficient lambda^-1 alpha3 beta1, and gamma2 = 0 is forced as in case 2.7",
        ),
        th("th2.viii", "Theorem 4 (viii)")
            .img("one", "gamma3*one")
            .img("h", "gamma1*one - lambda*h - lambda*mu/xi*e")
            .img("e", "0")
            .img("f", "nu*one + xi*h + mu*e")
            .when("gamma3 != 0")
            .when("xi != 0")
            .when("gamma1*xi + lambda*nu != 0"),
        th("th2.ix", "Theorem 4 (ix)")
            .img("one", "gamma3*one")
            .img("h", "gamma1*one - lambda*h")
            .img("e", "gamma2*one")
            .img("f", "nu*one + xi*h")
            .when("gamma2 != 0")
            .when("xi != 0"),
    ]
}

fn nondegenerate() -> Vec<FamilyDef> {
    let nd = |id, src| FamilyDef::new(id, H4Minus, src).alias("h", "alpha*one + g");
    let i = |id, f| {
        nd(id, "Theorem 5 (i)")
            .img("one", "xi*one + mu*e + nu*f")
            .img("g", "-lambda*h + beta1*e + gamma1*f")
            .img("e", "-lambda*e")
            .img("f", f)
            .when("xi != 0")
    };
    vec![
        nd("nondeg.0", "Theorem 5, R(I) != I")
            .on(&["one", "h", "e", "f"])
            .img("one", "xi*h + mu*e + nu*f")
            .img("h", "alpha1*one + beta1*h + (lambda+beta1)*mu/xi*e + (lambda+beta1)*nu/xi*f")
            .img("e", "-lambda*e")
            .img("f", "-lambda*f")
            .when("xi*alpha1 != 0"),
        i("nondeg.i", "lambda*f"),
        i("nondeg.i.fixed", "-lambda*f").fixes("nondeg.i", "R(f) = -lambda f instead of the printed lambda f"),
        nd("nondeg.ii", "Theorem 5 (ii)")
            .img("one", "xi*one")
            .img("g", "alpha1*h + beta1*e + gamma1*f")
            .img("e", "-lambda*e")
            .img("f", "-lambda*f")
            .when("alpha1 != 0")
            .when("alpha1 + lambda != 0")
            .when("xi != 0"),
        nd("nondeg.iii", "Theorem 5 (iii)")
            .img("one", "xi*one")
            .img("g", "-lambda/2*h + beta1*e + gamma1*f")
            .img("e", "-lambda*e")
            .img("f", "beta3*e - lambda*f")
            .when("beta3*xi != 0"),
        nd("nondeg.iv", "Theorem 5 (iv)")
            .img("one", "xi*one")
            .img("g", "-lambda/2*h + beta1*e + gamma1*f")
            .img("e", "beta2*e + f")
            .img("f", "beta2*(beta2+lambda)*e + beta2*f")
            .when("xi != 0")
            .when("beta2 != 0")
            .when("beta2 + lambda != 0"),
    ]
}

/// All definitions in catalog order.
pub fn definitions() -> Vec<FamilyDef> {
    let mut out = assoc();
    out.extend(lm2());
    out.extend(lm3());
    out.extend(kernel_three());
    out.extend(kernel_two_abelian());
    out.extend(kernel_two_abelian_in_i());
    out.extend(kernel_two_nonabelian());
    out.extend(image_i());
    out.extend(image_j());
    out.extend(image_nonideal());
    out.extend(nondegenerate());
    out
}
