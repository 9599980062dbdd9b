use crate::algebra::{h4, h4_minus, AlgebraSpec};
use crate::error::SearchError;
use crate::exactalg::Fp;
use crate::rbcore::{check_rb, LinearOperator, RbReport};

use super::coverage::ef_change;
use super::{enumerate_all, SearchConfig};

/// An operator that satisfies the Lie identity on `H4(-)` but not the
/// associative identity on `H4`.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison<const P: u32> {
    /// In the basis `1, g, e, f`.
    pub ef: LinearOperator<Fp<P>>,
    /// The same map in the basis `1, g, x, gx`.
    pub xgx: LinearOperator<Fp<P>>,
    pub lie: RbReport<Fp<P>>,
    pub assoc: RbReport<Fp<P>>,
}

impl<const P: u32> Comparison<P> {
    pub fn to_json(&self) -> serde_json::Value {
        let ef = h4_minus();
        let xgx = h4();
        serde_json::json!({
            "matrix": self.ef.to_strings(),
            "matrix_xgx": self.xgx.to_strings(),
            "lie": self.lie.to_json(ef.basis()),
            "associative": self.assoc.to_json(xgx.basis()),
        })
    }
}

/// `P R P^-1`, where the columns of `P` are `1, g, e, f` written in
/// `1, g, x, gx`.
pub fn to_xgx_basis<const P: u32>(r: &LinearOperator<Fp<P>>) -> LinearOperator<Fp<P>> {
    let (p, p_inv) = ef_change::<P>();
    p.compose(r).compose(&p_inv)
}

fn report<const P: u32>(spec: &AlgebraSpec, r: &LinearOperator<Fp<P>>, lambda: Fp<P>) -> RbReport<Fp<P>> {
    check_rb(spec, r, &lambda).expect("dimensions agree")
}

/// Lie Rota-Baxter operators on `H4(-)` that are not associative
/// Rota-Baxter operators on `H4`, sorted by their `1, g, e, f` matrix.
pub fn compare_lie_vs_assoc<const P: u32>(lambda: Fp<P>, config: &SearchConfig) -> Result<Vec<Comparison<P>>, SearchError> {
    let (lie, assoc) = (h4_minus(), h4());
    let ops = enumerate_all(&lie, lambda, config)?;
    Ok(ops
        .into_iter()
        .filter_map(|ef| {
            let xgx = to_xgx_basis(&ef);
            let a = report(&assoc, &xgx, lambda);
            (!a.passed()).then(|| Comparison { lie: report(&lie, &ef, lambda), assoc: a, ef, xgx })
        })
        .collect())
}
