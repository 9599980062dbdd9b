use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ef_columns, AlgebraId, Automorphism};
use crate::catalog::{Catalog, Family};
use crate::error::CatalogError;
use crate::exactalg::{Fp, Scalar};
use crate::rbcore::{conjugate, LinearOperator};

/// Families with more free parameters than this are not enumerated.
pub const DEFAULT_PARAM_BOUND: usize = 10;

struct Candidate<const P: u32> {
    id: String,
    instances: HashSet<LinearOperator<Fp<P>>>,
}

/// Finite-field images of catalog families, for membership lookups.
pub struct Matcher<const P: u32> {
    algebra: AlgebraId,
    lambda: Fp<P>,
    candidates: Vec<Candidate<P>>,
    first: HashMap<LinearOperator<Fp<P>>, usize>,
    skipped: Vec<SkippedFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedFamily {
    pub family: String,
    pub reason: String,
}

pub(super) fn ef_change<const P: u32>() -> (LinearOperator<Fp<P>>, LinearOperator<Fp<P>>) {
    let cols: Vec<Vec<Fp<P>>> =
        ef_columns().iter().map(|c| c.iter().map(|q| Fp::from_rational(q).expect("integer entries")).collect()).collect();
    let p = LinearOperator::from_columns(cols).expect("square");
    let inv = p.inverse().expect("basis change is invertible in odd characteristic");
    (p, inv)
}

impl<const P: u32> Matcher<P> {
    /// Families on `algebra` in catalog order; on `H4(-)` and `H4(+)` the
    /// associative families follow, carried over by the basis change.
    pub fn new(catalog: &Catalog, algebra: AlgebraId, lambda: Fp<P>, bound: usize) -> Result<Self, CatalogError> {
        let mut sources: Vec<(&Family, bool)> = catalog.on_algebra(algebra).map(|f| (f, false)).collect();
        if matches!(algebra, AlgebraId::H4Minus | AlgebraId::H4Plus) {
            sources.extend(catalog.on_algebra(AlgebraId::H4).map(|f| (f, true)));
        }
        let (p, p_inv) = ef_change::<P>();
        let built: Vec<Result<Candidate<P>, SkippedFamily>> = sources
            .par_iter()
            .map(|(f, transported)| match f.enumerate_instances(lambda, bound) {
                Ok(ops) => {
                    let instances = ops
                        .into_iter()
                        .map(|r| if *transported { p_inv.compose(&r).compose(&p) } else { r })
                        .collect();
                    Ok(Candidate { id: f.id().to_string(), instances })
                }
                Err(e) => Err(SkippedFamily { family: f.id().to_string(), reason: e.to_string() }),
            })
            .collect();
        let mut candidates = Vec::new();
        let mut skipped = Vec::new();
        for b in built {
            match b {
                Ok(c) => candidates.push(c),
                Err(s) => skipped.push(s),
            }
        }
        let mut first = HashMap::new();
        for (k, c) in candidates.iter().enumerate() {
            for r in &c.instances {
                first.entry(r.clone()).or_insert(k);
            }
        }
        Ok(Matcher { algebra, lambda, candidates, first, skipped })
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn lambda(&self) -> Fp<P> {
        self.lambda
    }

    /// The first family, in catalog order, with `r` among its instances.
    pub fn first_match(&self, r: &LinearOperator<Fp<P>>) -> Option<&str> {
        self.first.get(r).map(|&k| self.candidates[k].id.as_str())
    }

    pub fn skipped(&self) -> &[SkippedFamily] {
        &self.skipped
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCount {
    pub family: String,
    /// Scanned operators whose first match is this family.
    pub first_matches: usize,
    /// Scanned operators among this family's instances.
    pub matches: usize,
    /// Distinct instances of the family over the field.
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugateMatch {
    pub automorphism: Vec<Vec<String>>,
    pub family: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnmatchedOperator {
    /// Row-major.
    pub matrix: Vec<Vec<String>>,
    pub kernel_dim: usize,
    /// An automorphism conjugate that some family does contain.
    pub conjugate_match: Option<ConjugateMatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub algebra: AlgebraId,
    pub p: u32,
    pub lambda: u32,
    pub total: usize,
    pub families: Vec<FamilyCount>,
    pub unmatched: Vec<UnmatchedOperator>,
    pub skipped: Vec<SkippedFamily>,
}

impl CoverageReport {
    pub fn matched(&self) -> usize {
        self.families.iter().map(|f| f.first_matches).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Match every operator against the catalog.
pub fn coverage<const P: u32>(
    ops: &[LinearOperator<Fp<P>>],
    matcher: &Matcher<P>,
    automorphisms: &[Automorphism<Fp<P>>],
) -> CoverageReport {
    let mut families: Vec<FamilyCount> = matcher
        .candidates
        .iter()
        .map(|c| FamilyCount {
            family: c.id.clone(),
            first_matches: 0,
            matches: ops.iter().filter(|r| c.instances.contains(r)).count(),
            instances: c.instances.len(),
        })
        .collect();
    let mut unmatched = Vec::new();
    for r in ops {
        match matcher.first.get(r) {
            Some(&k) => families[k].first_matches += 1,
            None => {
                let conjugate_match = automorphisms.iter().find_map(|s| {
                    matcher.first_match(&conjugate(r, s)).map(|f| ConjugateMatch {
                        automorphism: s.map().to_strings(),
                        family: f.to_string(),
                    })
                });
                unmatched.push(UnmatchedOperator {
                    matrix: r.to_strings(),
                    kernel_dim: r.dim() - r.rank(),
                    conjugate_match,
                });
            }
        }
    }
    CoverageReport {
        algebra: matcher.algebra,
        p: P,
        lambda: matcher.lambda.value(),
        total: ops.len(),
        families,
        unmatched,
        skipped: matcher.skipped.clone(),
    }
}

/// One JSON-lines record for a scanned operator.
pub fn operator_line<const P: u32>(r: &LinearOperator<Fp<P>>, matched: Option<&str>) -> serde_json::Value {
    serde_json::json!({
        "matrix": r.to_strings(),
        "kernel_dim": r.dim() - r.rank(),
        "matched_family": matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lm2;
    use crate::search::{enumerate_all, SearchConfig};

    #[test]
    fn zero_matches_case_1_3_first() {
        let m = Matcher::<3>::new(Catalog::builtin(), AlgebraId::Lm2, Fp::new(1), DEFAULT_PARAM_BOUND).unwrap();
        assert_eq!(m.first_match(&LinearOperator::zero(3)), Some("lm2.1.3"));
    }

    #[test]
    fn lm2_coverage_is_complete() {
        let ops = enumerate_all(&lm2(), Fp::<3>::new(1), &SearchConfig::default()).unwrap();
        let m = Matcher::<3>::new(Catalog::builtin(), AlgebraId::Lm2, Fp::new(1), DEFAULT_PARAM_BOUND).unwrap();
        let rep = coverage(&ops, &m, &[]);
        assert_eq!(rep.total, 342);
        assert_eq!(rep.matched() + rep.unmatched.len(), rep.total);
        assert!(rep.unmatched.is_empty(), "{:?}", rep.unmatched);
        assert!(rep.skipped.is_empty());
    }
}
