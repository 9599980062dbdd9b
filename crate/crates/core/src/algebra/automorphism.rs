use super::spec::{unit, AlgebraSpec};
use crate::error::AlgebraError;
use crate::exactalg::{Field, Scalar};
use crate::rbcore::LinearOperator;

/// An invertible linear map certified to preserve the product on every
/// pair of basis vectors.
#[derive(Clone, PartialEq)]
pub struct Automorphism<S> {
    map: LinearOperator<S>,
    inverse: LinearOperator<S>,
}

impl<S: std::fmt::Display> std::fmt::Debug for Automorphism<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Automorphism({:?})", self.map)
    }
}

impl<S: Field> Automorphism<S> {
    pub fn certify(spec: &AlgebraSpec, map: LinearOperator<S>) -> Result<Self, AlgebraError> {
        let d = spec.dim();
        if map.dim() != d {
            return Err(AlgebraError::Dimension { expected: d, got: map.dim() });
        }
        let inverse = map.inverse().ok_or(AlgebraError::NotInvertible)?;
        let t = spec.table::<S>()?;
        for i in 0..d {
            for j in 0..d {
                let lhs = t.multiply(&map.column(i), &map.column(j))?;
                let rhs = map.apply(&t.multiply(&unit(d, i), &unit(d, j))?);
                if lhs != rhs {
                    return Err(AlgebraError::NotMultiplicative(i, j));
                }
            }
        }
        Ok(Automorphism { map, inverse })
    }

    pub fn map(&self) -> &LinearOperator<S> {
        &self.map
    }

    pub fn inverse(&self) -> &LinearOperator<S> {
        &self.inverse
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.map.apply(v)
    }
}

fn signed_permutation<S: Scalar>(images: &[(usize, i64)]) -> LinearOperator<S> {
    let cols = images
        .iter()
        .map(|&(k, s)| {
            let mut c = vec![S::zero(); images.len()];
            c[k] = S::from_i64(s);
            c
        })
        .collect();
    LinearOperator::from_columns(cols).expect("square")
}

/// `phi` on `H4(-)`: `1 -> 1`, `g -> -g`, `e -> -f`, `f -> -e`.
pub fn phi<S: Field>() -> Automorphism<S> {
    let m = signed_permutation(&[(0, 1), (1, -1), (3, -1), (2, -1)]);
    Automorphism::certify(&super::spec::h4_minus(), m).expect("phi is an automorphism")
}

/// `psi` on `L(h,e,f)`: `h -> -h`, `e -> -f`, `f -> -e`.
pub fn psi<S: Field>() -> Automorphism<S> {
    let m = signed_permutation(&[(0, -1), (2, -1), (1, -1)]);
    Automorphism::certify(&super::spec::lm2(), m).expect("psi is an automorphism")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::spec::{h4, h4_minus, lm2};
    use crate::exactalg::{Fp, Rational};

    #[test]
    fn phi_and_psi_certify() {
        let _ = phi::<Rational>();
        let _ = psi::<Rational>();
        let _ = phi::<Fp<3>>();
        let _ = psi::<Fp<5>>();
    }

    #[test]
    fn phi_is_also_an_automorphism_of_h4() {
        // same map in the associative algebra
        let ef = crate::algebra::spec::h4_ef();
        let m = phi::<Rational>().map().clone();
        Automorphism::certify(&ef, m).unwrap();
        let _ = h4();
    }

    #[test]
    fn rejects_non_multiplicative() {
        let swap = signed_permutation::<Rational>(&[(0, 1), (1, 1), (3, 1), (2, 1)]);
        assert!(matches!(
            Automorphism::certify(&h4_minus(), swap),
            Err(AlgebraError::NotMultiplicative(_, _))
        ));
        let z = LinearOperator::<Rational>::zero(3);
        assert_eq!(Automorphism::certify(&lm2(), z), Err(AlgebraError::NotInvertible));
    }
}
