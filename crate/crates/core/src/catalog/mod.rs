//! Every published operator family as a parametric matrix with
//! constraints, plus symbolic verification, instantiation and
//! finite-field membership.

mod data;
mod expr;
mod family;

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;

pub use family::{Constraint, ConstraintAtom, DiscrepancyRecord, Family, FamilyDef, Relation, Verification};

use crate::algebra::AlgebraId;
use crate::error::CatalogError;

/// An immutable, ordered collection of families.
#[derive(Debug, Clone)]
pub struct Catalog {
    families: Vec<Family>,
    index: HashMap<String, usize>,
}

impl Catalog {
    /// The embedded catalog, built once.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::from_defs(&data::definitions()).expect("embedded catalog is well formed"))
    }

    /// Build a catalog, checking that ids are unique and that every
    /// `fixes` and `related` target exists.
    pub fn from_defs(defs: &[FamilyDef]) -> Result<Catalog, CatalogError> {
        let families = defs.par_iter().map(Family::build).collect::<Result<Vec<_>, _>>()?;
        let mut index = HashMap::new();
        for (i, f) in families.iter().enumerate() {
            if index.insert(f.id.clone(), i).is_some() {
                return Err(CatalogError::Malformed { id: f.id.clone(), reason: "duplicate id".into() });
            }
        }
        let mut cat = Catalog { families, index };
        for i in 0..cat.families.len() {
            let (id, fixes, related) =
                (cat.families[i].id.clone(), cat.families[i].fixes.clone(), cat.families[i].related.clone());
            if let Some(orig) = fixes {
                let j = *cat.index.get(&orig).ok_or_else(|| CatalogError::Malformed {
                    id: id.clone(),
                    reason: format!("fixes unknown family `{orig}`"),
                })?;
                cat.families[j].fixed_by.push(id.clone());
            }
            if let Some(r) = related {
                if !cat.index.contains_key(&r.family) {
                    return Err(CatalogError::Malformed { id, reason: format!("related to unknown family `{}`", r.family) });
                }
            }
        }
        Ok(cat)
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn get(&self, id: &str) -> Result<&Family, CatalogError> {
        self.index.get(id).map(|&i| &self.families[i]).ok_or_else(|| CatalogError::UnknownFamily(id.to_string()))
    }

    /// Families defined on `algebra`, in catalog order.
    pub fn on_algebra(&self, algebra: AlgebraId) -> impl Iterator<Item = &Family> + '_ {
        self.families.iter().filter(move |f| f.algebra == algebra)
    }

    /// Symbolic verdict for one family. A discrepancy names the first
    /// fixed variant that verifies as its correction.
    pub fn verify(&self, id: &str) -> Result<Verification, CatalogError> {
        let f = self.get(id)?;
        let mut v = f.verify_symbolic()?;
        if let Verification::Discrepancy(rec) = &mut v {
            for fix in &f.fixed_by {
                let g = self.get(fix)?;
                if g.verify_symbolic()?.passed() {
                    rec.correction = Some(format!("{fix}: {}", g.note.as_deref().unwrap_or("")));
                    break;
                }
            }
        }
        Ok(v)
    }

    /// Verdicts for every family, in catalog order, computed in parallel.
    pub fn verify_all(&self) -> Result<Vec<(String, Verification)>, CatalogError> {
        self.families.par_iter().map(|f| Ok((f.id.clone(), self.verify(&f.id)?))).collect()
    }

    /// Discrepancy records of every failing family, in catalog order.
    pub fn discrepancies(&self) -> Result<Vec<DiscrepancyRecord>, CatalogError> {
        Ok(self
            .verify_all()?
            .into_iter()
            .filter_map(|(_, v)| match v {
                Verification::Discrepancy(d) => Some(d),
                Verification::Pass(_) => None,
            })
            .collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.families.iter().map(Family::to_json).collect())
    }
}

/// One JSON document per line.
pub fn to_jsonl<'a>(values: impl IntoIterator<Item = &'a serde_json::Value>) -> String {
    let mut s = String::new();
    for v in values {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Rational, Symbol};
    use crate::rbcore::check_rb;

    #[test]
    fn builtin_loads_and_links_fixes() {
        let c = Catalog::builtin();
        assert!(c.len() > 100);
        assert_eq!(c.get("lm2.1.1").unwrap().fixed_by(), ["lm2.1.1.fixed"]);
        assert_eq!(c.get("lm3.2.7").unwrap().fixed_by(), ["lm3.2.7.fixed", "lm3.2.7.fixed2"]);
        assert!(matches!(c.get("nosuch"), Err(CatalogError::UnknownFamily(_))));
    }

    #[test]
    fn every_sample_instantiates_and_passes_when_verified() {
        let c = Catalog::builtin();
        for f in c.families() {
            let r = f.instantiate(&f.sample()).unwrap();
            let lam = f.sample()[&Symbol::lambda()].clone();
            let report = check_rb(&f.algebra().spec(), &r, &lam).unwrap();
            if f.verify_symbolic().unwrap().passed() {
                assert!(report.passed(), "{}", f.id());
            }
        }
    }

    #[test]
    fn assoc_a_instance() {
        let f = Catalog::builtin().get("assoc.a").unwrap();
        let a: HashMap<Symbol, Rational> = [(Symbol::lambda(), int(1))].into_iter().collect();
        let r = f.instantiate(&a).unwrap();
        assert_eq!(r.column(2), vec![int(0), int(0), int(-1), int(0)]);
        assert_eq!(r.column(3), vec![int(0), int(0), int(0), int(-1)]);
    }

    #[test]
    fn discrepancy_carries_correction() {
        let c = Catalog::builtin();
        match c.verify("assoc.h").unwrap() {
            Verification::Discrepancy(d) => {
                assert!(d.correction.unwrap().starts_with("assoc.h.fixed"));
                assert_ne!(d.numerator, "0");
            }
            Verification::Pass(_) => panic!("assoc.h as printed should fail"),
        }
    }
}
