use serde::Serialize;

use super::LinearOperator;
use crate::algebra::{unit, AlgebraKind, AlgebraSpec, Table};
use crate::error::AlgebraError;
use crate::exactalg::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairResidual<S> {
    pub pair: (usize, usize),
    pub residual: Vec<S>,
}

/// Outcome of checking every basis pair. Only pairs with a nonzero
/// residual are listed, so `verdict == Pass` iff `residuals` is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct RbReport<S> {
    pub verdict: Verdict,
    pub residuals: Vec<PairResidual<S>>,
}

impl<S: Scalar> RbReport<S> {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self, basis: &[String]) -> serde_json::Value {
        let residuals: Vec<serde_json::Value> = self
            .residuals
            .iter()
            .map(|r| {
                serde_json::json!({
                    "pair": [basis[r.pair.0], basis[r.pair.1]],
                    "indices": [r.pair.0, r.pair.1],
                    "residual": r.residual.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "verdict": self.verdict, "residuals": residuals })
    }
}

/// `m(Ra, Rb) - R(m(Ra, b) + m(a, Rb) + weight * m(a, b))` for arbitrary
/// vectors `a`, `b`.
pub fn rb_residual_vectors<S: Scalar>(
    t: &Table<S>,
    r: &LinearOperator<S>,
    weight: &S,
    a: &[S],
    b: &[S],
) -> Result<Vec<S>, AlgebraError> {
    let d = t.dim();
    if r.dim() != d {
        return Err(AlgebraError::Dimension { expected: d, got: r.dim() });
    }
    let ra = r.apply(a);
    let rb = r.apply(b);
    let lhs = t.multiply(&ra, &rb)?;
    let inner: Vec<S> = t
        .multiply(&ra, b)?
        .into_iter()
        .zip(t.multiply(a, &rb)?)
        .zip(t.multiply(a, b)?)
        .map(|((x, y), z)| x + y + weight.clone() * z)
        .collect();
    let rhs = r.apply(&inner);
    Ok(lhs.into_iter().zip(rhs).map(|(x, y)| x - y).collect())
}

/// Residual of the Rota-Baxter identity on the basis pair `(i, j)`, using
/// the product of `t` (bracket for Lie kind, Jordan product for Jordan
/// kind).
pub fn rb_residual<S: Scalar>(
    t: &Table<S>,
    r: &LinearOperator<S>,
    weight: &S,
    i: usize,
    j: usize,
) -> Result<Vec<S>, AlgebraError> {
    let d = t.dim();
    rb_residual_vectors(t, r, weight, &unit(d, i), &unit(d, j))
}

/// Basis pairs that decide the identity. The residual is antisymmetric
/// for a Lie bracket (and zero on the diagonal) and symmetric for a
/// commutative product.
pub fn deciding_pairs(kind: AlgebraKind, dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let keep = match kind {
                AlgebraKind::Lie => i < j,
                AlgebraKind::Jordan => i <= j,
                AlgebraKind::Associative => true,
            };
            if keep {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn check_rb_table<S: Scalar>(
    t: &Table<S>,
    r: &LinearOperator<S>,
    weight: &S,
) -> Result<RbReport<S>, AlgebraError> {
    let mut residuals = Vec::new();
    for (i, j) in deciding_pairs(t.kind(), t.dim()) {
        let res = rb_residual(t, r, weight, i, j)?;
        if res.iter().any(|x| !x.is_zero()) {
            residuals.push(PairResidual { pair: (i, j), residual: res });
        }
    }
    let verdict = if residuals.is_empty() { Verdict::Pass } else { Verdict::Fail };
    Ok(RbReport { verdict, residuals })
}

/// Check the Rota-Baxter identity of weight `weight` on all basis pairs.
pub fn check_rb<S: Scalar>(
    spec: &AlgebraSpec,
    r: &LinearOperator<S>,
    weight: &S,
) -> Result<RbReport<S>, AlgebraError> {
    check_rb_table(&spec.table::<S>()?, r, weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{h4, h4_minus};
    use crate::exactalg::{int, Rational};

    #[test]
    fn zero_operator_is_rb() {
        let l = h4_minus();
        let t = l.table::<Rational>().unwrap();
        let z = LinearOperator::zero(4);
        for i in 0..4 {
            for j in 0..4 {
                assert!(rb_residual(&t, &z, &int(3), i, j).unwrap().iter().all(|x| x == &int(0)));
            }
        }
    }

    #[test]
    fn minus_weight_identity_is_rb() {
        for spec in [h4(), h4_minus()] {
            let lam = int(5);
            let r = LinearOperator::scalar(4, -lam.clone());
            assert!(check_rb(&spec, &r, &lam).unwrap().passed());
        }
    }

    #[test]
    fn identity_weight_zero_on_g_e() {
        let l = h4_minus();
        let t = l.table::<Rational>().unwrap();
        let id = LinearOperator::identity(4);
        let res = rb_residual(&t, &id, &int(0), 1, 2).unwrap();
        assert_eq!(res, vec![int(0), int(0), int(-2), int(0)]);
    }

    #[test]
    fn identity_fails_at_weight_one() {
        let l = h4_minus();
        let rep = check_rb(&l, &LinearOperator::identity(4), &int(1)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        assert_eq!(rep.residuals[0].pair, (1, 2));
        // [g,e] - (2[g,e] + [g,e]) = -2[g,e] = -4e
        assert_eq!(rep.residuals[0].residual, vec![int(0), int(0), int(-4), int(0)]);
    }

    #[test]
    fn family_a_on_h4() {
        let lam = int(1);
        let r = LinearOperator::from_columns(vec![
            vec![int(0); 4],
            vec![int(0); 4],
            vec![int(0), int(0), -lam.clone(), int(0)],
            vec![int(0), int(0), int(0), -lam.clone()],
        ])
        .unwrap();
        assert!(check_rb(&h4(), &r, &lam).unwrap().passed());
    }

    #[test]
    fn dimension_mismatch() {
        let r = LinearOperator::<Rational>::zero(3);
        assert!(check_rb(&h4(), &r, &int(1)).is_err());
    }
}
