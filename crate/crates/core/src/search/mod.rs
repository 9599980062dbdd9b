//! Exhaustive finite-field enumeration of Rota-Baxter operators, coverage
//! against the catalog, and the comparison of Lie and associative
//! operators on `H4`.

mod compare;
mod coverage;
mod engine;

use std::collections::BTreeSet;

use serde::Serialize;

pub use compare::{compare_lie_vs_assoc, to_xgx_basis, Comparison};
pub use coverage::{coverage, operator_line, CoverageReport, FamilyCount, Matcher, UnmatchedOperator, DEFAULT_PARAM_BOUND};

use crate::algebra::{AlgebraSpec, Automorphism};
use crate::error::SearchError;
use crate::exactalg::{is_odd_prime, Field, Fp, Scalar, SUPPORTED_PRIMES};
use crate::rbcore::{check_rb, deciding_pairs, LinearOperator};
use engine::{multiplicative_pair_ok, rb_pair_ok, Engine, Flat, ModTable, Plan};

/// Largest search space, `p^(d^2)`, that will be enumerated.
pub const MAX_SPACE: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    /// Number of leading entries (in search order) fixed per partition.
    /// `None` fixes one column.
    pub prefix_len: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
        SearchConfig { jobs, prefix_len: None }
    }
}

impl SearchConfig {
    pub fn sequential() -> Self {
        SearchConfig { jobs: 1, prefix_len: None }
    }

    pub fn with_jobs(jobs: usize) -> Self {
        SearchConfig { jobs: jobs.max(1), prefix_len: None }
    }
}

/// One partition of a search: all matrices whose first `prefix.len()`
/// entries, in the engine's column order, equal `prefix`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchTask {
    pub algebra: String,
    pub p: u32,
    pub lambda: u32,
    pub prefix: Vec<u32>,
}

fn mod_table<const P: u32>(spec: &AlgebraSpec) -> Result<ModTable, SearchError> {
    let d = spec.dim();
    let t = spec.table::<Fp<P>>()?;
    let mut c = vec![0u32; d * d * d];
    let mut terms = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for (k, v) in t.product_terms(i, j) {
                if !v.is_zero() {
                    c[(i * d + j) * d + k] = v.value();
                    terms.push((i, j, *k, v.value()));
                }
            }
        }
    }
    Ok(ModTable { d, p: P, c, terms })
}

fn validate<const P: u32>(spec: &AlgebraSpec) -> Result<(), SearchError> {
    if !SUPPORTED_PRIMES.contains(&P) || !is_odd_prime(P) {
        return Err(SearchError::UnsupportedPrime(P));
    }
    let entries = spec.dim() * spec.dim();
    let space = (P as u64).checked_pow(entries as u32);
    if space.is_none_or(|s| s > MAX_SPACE) || spec.dim() > 8 {
        return Err(SearchError::TooLarge { p: P, entries });
    }
    Ok(())
}

fn rb_plan(t: &ModTable, spec: &AlgebraSpec) -> Plan {
    let pairs = deciding_pairs(spec.kind(), t.d);
    // The residual on (i, j) reads columns i and j, and R applied to a
    // vector supported on the products e_a e_j, e_i e_b.
    let needs = |i: usize, j: usize| -> BTreeSet<usize> {
        let mut n: BTreeSet<usize> = [i, j].into_iter().collect();
        n.extend(t.left_support(j));
        n.extend(t.right_support(i));
        n
    };
    Plan::new(t.d, &pairs, needs, |i| t.activity(i))
}

fn to_operator<const P: u32>(d: usize, m: &Flat) -> LinearOperator<Fp<P>> {
    let cols = (0..d).map(|c| m[c * d..c * d + d].iter().map(|&v| Fp::new(v as i64)).collect()).collect();
    LinearOperator::from_columns(cols).expect("square")
}

fn prefix_len(config: &SearchConfig, d: usize) -> usize {
    config.prefix_len.unwrap_or(d).min(d * d)
}

/// The partitions [`enumerate_all`] splits the search into.
pub fn search_tasks<const P: u32>(
    spec: &AlgebraSpec,
    lambda: Fp<P>,
    config: &SearchConfig,
) -> Result<Vec<SearchTask>, SearchError> {
    validate::<P>(spec)?;
    let t = mod_table::<P>(spec)?;
    let e = Engine { p: P, plan: rb_plan(&t, spec), check: |_: &[u32], _: usize, _: usize| true };
    let k = prefix_len(config, spec.dim());
    Ok((0..e.prefix_count(k))
        .map(|c| SearchTask { algebra: spec.name().to_string(), p: P, lambda: lambda.value(), prefix: e.decode_prefix(c, k) })
        .collect())
}

/// Run one partition. The result is sorted.
pub fn run_task<const P: u32>(spec: &AlgebraSpec, task: &SearchTask) -> Result<Vec<LinearOperator<Fp<P>>>, SearchError> {
    validate::<P>(spec)?;
    let lambda = Fp::<P>::new(task.lambda as i64);
    if lambda.is_zero() {
        return Err(SearchError::ZeroWeight);
    }
    let t = mod_table::<P>(spec)?;
    let e = Engine { p: P, plan: rb_plan(&t, spec), check: |m: &[u32], i, j| rb_pair_ok(&t, lambda.value(), m, i, j) };
    let mut ops: Vec<_> = e.run_prefix(&task.prefix).iter().map(|m| to_operator(spec.dim(), m)).collect();
    ops.sort();
    Ok(ops)
}

/// Every Rota-Baxter operator of weight `lambda` on `spec` over `F_P`,
/// sorted. The output does not depend on the worker or partition count.
pub fn enumerate_all<const P: u32>(
    spec: &AlgebraSpec,
    lambda: Fp<P>,
    config: &SearchConfig,
) -> Result<Vec<LinearOperator<Fp<P>>>, SearchError> {
    validate::<P>(spec)?;
    if lambda.is_zero() {
        return Err(SearchError::ZeroWeight);
    }
    let t = mod_table::<P>(spec)?;
    let lam = lambda.value();
    let e = Engine { p: P, plan: rb_plan(&t, spec), check: |m: &[u32], i, j| rb_pair_ok(&t, lam, m, i, j) };
    let mut ops: Vec<_> =
        e.run_all(prefix_len(config, spec.dim()), config.jobs).iter().map(|m| to_operator(spec.dim(), m)).collect();
    ops.sort();
    let table = spec.table::<Fp<P>>()?;
    for r in &ops {
        assert!(crate::rbcore::check_rb_table(&table, r, &lambda)?.passed(), "fast path accepted a non-RB matrix");
    }
    Ok(ops)
}

/// Every automorphism of `spec` over `F_P`, sorted by matrix.
pub fn automorphisms<const P: u32>(spec: &AlgebraSpec, config: &SearchConfig) -> Result<Vec<Automorphism<Fp<P>>>, SearchError> {
    validate::<P>(spec)?;
    let t = mod_table::<P>(spec)?;
    let d = spec.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
    let needs = |i: usize, j: usize| -> BTreeSet<usize> {
        let mut n: BTreeSet<usize> = [i, j].into_iter().collect();
        n.extend(t.product_support(i, j));
        n
    };
    let plan = Plan::new(d, &pairs, needs, |i| t.activity(i));
    let e = Engine { p: P, plan, check: |m: &[u32], i, j| multiplicative_pair_ok(&t, m, i, j) };
    let mut out: Vec<LinearOperator<Fp<P>>> = e
        .run_all(prefix_len(config, d), config.jobs)
        .iter()
        .map(|m| to_operator(d, m))
        .filter(|m| m.rank() == d)
        .collect();
    out.sort();
    Ok(out.into_iter().map(|m| Automorphism::certify(spec, m).expect("enumerated map is an automorphism")).collect())
}

/// `R -> cR` carries weight `lambda` operators to weight `c lambda`.
pub fn scale_operators<S: Field + Ord>(ops: &[LinearOperator<S>], c: &S) -> Vec<LinearOperator<S>> {
    let mut out: Vec<_> = ops.iter().map(|r| r.scale(c)).collect();
    out.sort();
    out
}

/// Kernel dimension of each operator, tallied.
pub fn kernel_histogram<S: Field>(ops: &[LinearOperator<S>]) -> Vec<usize> {
    let d = ops.first().map_or(0, LinearOperator::dim);
    let mut h = vec![0usize; d + 1];
    for r in ops {
        h[d - r.rank()] += 1;
    }
    h
}

/// Re-check an operator outside the fast path.
pub fn reverify<const P: u32>(spec: &AlgebraSpec, r: &LinearOperator<Fp<P>>, lambda: Fp<P>) -> bool {
    check_rb(spec, r, &lambda).is_ok_and(|rep| rep.passed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{h4, h4_minus, lm2, lm3, phi};
    use crate::rbcore::conjugate;

    type F3 = Fp<3>;

    #[test]
    fn lm2_counts_match_the_brute_force_oracle() {
        let one = enumerate_all(&lm2(), F3::new(1), &SearchConfig::sequential()).unwrap();
        let two = enumerate_all(&lm2(), F3::new(2), &SearchConfig::sequential()).unwrap();
        assert_eq!((one.len(), two.len()), (342, 342));
        assert!(one.contains(&LinearOperator::zero(3)));
        assert!(one.contains(&LinearOperator::scalar(3, F3::new(-1))));
        assert_eq!(scale_operators(&one, &F3::new(2)), two);
    }

    #[test]
    fn lm3_count_and_partition_independence() {
        let a = enumerate_all(&lm3(), F3::new(1), &SearchConfig::sequential()).unwrap();
        let b = enumerate_all(&lm3(), F3::new(1), &SearchConfig { jobs: 3, prefix_len: Some(5) }).unwrap();
        assert_eq!(a.len(), 864);
        assert_eq!(a, b);
    }

    #[test]
    fn brute_force_agrees_on_lm3_over_f5() {
        let fast = enumerate_all(&lm3(), Fp::<5>::new(1), &SearchConfig::default()).unwrap();
        let t = lm3().table::<Fp<5>>().unwrap();
        let mut slow = Vec::new();
        for code in 0..5u64.pow(9) {
            let mut c = code;
            let rows: Vec<Vec<Fp<5>>> = (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            let v = Fp::new((c % 5) as i64);
                            c /= 5;
                            v
                        })
                        .collect()
                })
                .collect();
            let r = LinearOperator::from_rows(rows).unwrap();
            if crate::rbcore::check_rb_table(&t, &r, &Fp::new(1)).unwrap().passed() {
                slow.push(r);
            }
        }
        slow.sort();
        assert_eq!(fast, slow);
    }

    #[test]
    fn h4_minus_automorphisms_include_phi() {
        let auts = automorphisms::<3>(&h4_minus(), &SearchConfig::default()).unwrap();
        let p = phi::<F3>();
        assert!(auts.iter().any(|a| a.map() == p.map()));
        assert!(auts.iter().any(|a| *a.map() == LinearOperator::identity(4)));
    }

    #[test]
    fn refuses_large_spaces_and_bad_weights() {
        assert!(matches!(enumerate_all(&h4(), Fp::<5>::new(1), &SearchConfig::sequential()), Err(SearchError::TooLarge { p: 5, .. })));
        assert_eq!(enumerate_all(&lm2(), F3::new(0), &SearchConfig::sequential()), Err(SearchError::ZeroWeight));
        assert!(matches!(enumerate_all(&lm2(), Fp::<11>::new(1), &SearchConfig::sequential()), Err(SearchError::UnsupportedPrime(11))));
    }

    #[test]
    fn phi_closure_on_h4_minus() {
        let ops = enumerate_all(&h4_minus(), F3::new(1), &SearchConfig::default()).unwrap();
        let p = phi::<F3>();
        for r in ops.iter().step_by(7) {
            assert!(ops.binary_search(&conjugate(r, &p)).is_ok());
        }
        let hist = kernel_histogram(&ops);
        assert_eq!(hist.iter().sum::<usize>(), ops.len());
    }

    #[test]
    fn tasks_partition_the_run() {
        let cfg = SearchConfig { jobs: 1, prefix_len: Some(2) };
        let tasks = search_tasks(&lm2(), F3::new(1), &cfg).unwrap();
        assert_eq!(tasks.len(), 9);
        let mut all: Vec<_> = tasks.iter().flat_map(|t| run_task::<3>(&lm2(), t).unwrap()).collect();
        all.sort();
        assert_eq!(all, enumerate_all(&lm2(), F3::new(1), &cfg).unwrap());
    }
}
