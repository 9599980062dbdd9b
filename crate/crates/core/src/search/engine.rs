//! Exhaustive enumeration of `d x d` matrices over `F_p` subject to a
//! conjunction of per-basis-pair predicates.
//!
//! A pair predicate only reads some of the matrix columns. Columns are
//! assigned in an order that completes those column sets early, and every
//! pair is tested at the first depth where all of its columns are known.
//! The search is still exhaustive: a branch is cut only when a pair that
//! every completion shares has already failed.

use std::collections::BTreeSet;

use rayon::prelude::*;

/// Dense structure constants reduced mod `p`.
#[derive(Debug, Clone)]
pub(crate) struct ModTable {
    pub d: usize,
    pub p: u32,
    /// `c[(i * d + j) * d + k]`.
    pub c: Vec<u32>,
    /// Nonzero `(i, j, k, c)` with `c != 0`.
    pub terms: Vec<(usize, usize, usize, u32)>,
}

impl ModTable {
    pub fn at(&self, i: usize, j: usize, k: usize) -> u32 {
        self.c[(i * self.d + j) * self.d + k]
    }

    /// Basis indices in the support of some `e_a e_j` (any `a`).
    pub fn left_support(&self, j: usize) -> BTreeSet<usize> {
        self.terms.iter().filter(|t| t.1 == j).map(|t| t.2).collect()
    }

    pub fn right_support(&self, i: usize) -> BTreeSet<usize> {
        self.terms.iter().filter(|t| t.0 == i).map(|t| t.2).collect()
    }

    pub fn product_support(&self, i: usize, j: usize) -> BTreeSet<usize> {
        self.terms.iter().filter(|t| t.0 == i && t.1 == j).map(|t| t.2).collect()
    }

    /// How many structure constants mention `i` as a factor.
    pub fn activity(&self, i: usize) -> usize {
        self.terms.iter().filter(|t| t.0 == i || t.1 == i).count()
    }
}

/// Column order and the pairs decided after each column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Plan {
    pub d: usize,
    pub order: Vec<usize>,
    pub ready: Vec<Vec<(usize, usize)>>,
}

impl Plan {
    /// Greedy: repeatedly complete the pair with the fewest missing
    /// columns. Within one depth, pairs touching busier basis vectors are
    /// tested first, since they fail most often.
    pub fn new(d: usize, pairs: &[(usize, usize)], needs: impl Fn(usize, usize) -> BTreeSet<usize>, busy: impl Fn(usize) -> usize) -> Plan {
        let needed: Vec<BTreeSet<usize>> = pairs.iter().map(|&(i, j)| needs(i, j)).collect();
        let mut order: Vec<usize> = Vec::with_capacity(d);
        while order.len() < d {
            let missing = |n: &BTreeSet<usize>| n.iter().filter(|c| !order.contains(c)).count();
            let next = needed.iter().filter(|n| missing(n) > 0).min_by_key(|n| missing(n));
            match next {
                Some(n) => {
                    let add: Vec<usize> = n.iter().copied().filter(|c| !order.contains(c)).collect();
                    order.extend(add);
                }
                None => {
                    let rest: Vec<usize> = (0..d).filter(|c| !order.contains(c)).collect();
                    order.extend(rest);
                }
            }
        }
        let mut ready = vec![Vec::new(); d];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let depth = needed[k].iter().map(|c| order.iter().position(|o| o == c).expect("column in order")).max();
            ready[depth.unwrap_or(0)].push((i, j));
        }
        for r in ready.iter_mut() {
            r.sort_by_key(|&(i, j)| std::cmp::Reverse(busy(i) + busy(j)));
        }
        Plan { d, order, ready }
    }
}

/// Matrix stored column-major: `m[c * d + r]`.
pub(crate) type Flat = Vec<u32>;

pub(crate) struct Engine<F> {
    pub p: u32,
    pub plan: Plan,
    pub check: F,
}

impl<F: Fn(&[u32], usize, usize) -> bool + Sync> Engine<F> {
    fn entries(&self) -> usize {
        self.plan.d * self.plan.d
    }

    /// Position in the matrix of the `n`-th assigned entry.
    fn slot(&self, n: usize) -> usize {
        let d = self.plan.d;
        self.plan.order[n / d] * d + n % d
    }

    /// All prefixes of length `k` in the search order, as base-`p` codes.
    pub fn prefix_count(&self, k: usize) -> u64 {
        (self.p as u64).pow(k as u32)
    }

    /// Every accepted matrix whose first `prefix.len()` entries in search
    /// order equal `prefix`.
    pub fn run_prefix(&self, prefix: &[u32]) -> Vec<Flat> {
        let mut m = vec![0u32; self.entries()];
        let mut out = Vec::new();
        self.dfs(0, prefix, &mut m, &mut out);
        out
    }

    fn dfs(&self, n: usize, prefix: &[u32], m: &mut Flat, out: &mut Vec<Flat>) {
        let d = self.plan.d;
        if n == self.entries() {
            out.push(m.clone());
            return;
        }
        let slot = self.slot(n);
        let values = if n < prefix.len() { prefix[n]..prefix[n] + 1 } else { 0..self.p };
        for v in values {
            m[slot] = v;
            if n % d == d - 1 && !self.plan.ready[n / d].iter().all(|&(i, j)| (self.check)(m, i, j)) {
                continue;
            }
            self.dfs(n + 1, prefix, m, out);
        }
        m[slot] = 0;
    }

    pub fn decode_prefix(&self, code: u64, k: usize) -> Vec<u32> {
        let mut v = vec![0u32; k];
        let mut c = code;
        for x in v.iter_mut().rev() {
            *x = (c % self.p as u64) as u32;
            c /= self.p as u64;
        }
        v
    }

    /// Run every prefix of length `k`, on `jobs` threads, and return all
    /// accepted matrices sorted.
    pub fn run_all(&self, k: usize, jobs: usize) -> Vec<Flat> {
        let codes: Vec<u64> = (0..self.prefix_count(k)).collect();
        let work = |c: &u64| self.run_prefix(&self.decode_prefix(*c, k));
        let parts: Vec<Vec<Flat>> = if jobs <= 1 {
            codes.iter().map(work).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
            pool.install(|| codes.par_iter().map(work).collect())
        };
        parts.into_iter().flatten().collect()
    }
}

/// Rota-Baxter residual on one pair, over `F_p`, with early exit.
pub(crate) fn rb_pair_ok(t: &ModTable, lambda: u32, m: &[u32], i: usize, j: usize) -> bool {
    let d = t.d;
    let p = t.p as u64;
    let ri = &m[i * d..i * d + d];
    let rj = &m[j * d..j * d + d];
    let mut lhs = [0u64; 8];
    let mut v = [0u64; 8];
    for &(a, b, k, c) in &t.terms {
        let c = c as u64;
        lhs[k] += ri[a] as u64 * rj[b] as u64 % p * c;
        if b == j {
            v[k] += ri[a] as u64 * c;
        }
        if a == i {
            v[k] += rj[b] as u64 * c;
        }
        if a == i && b == j {
            v[k] += lambda as u64 * c;
        }
    }
    for r in 0..d {
        let mut rhs = 0u64;
        for (k, vk) in v.iter().enumerate().take(d) {
            if *vk != 0 {
                rhs += (vk % p) * m[k * d + r] as u64;
            }
        }
        if !(lhs[r] + p * p - rhs % p).is_multiple_of(p) {
            return false;
        }
    }
    true
}

/// `s(e_i) s(e_j) = s(e_i e_j)` over `F_p`.
pub(crate) fn multiplicative_pair_ok(t: &ModTable, m: &[u32], i: usize, j: usize) -> bool {
    let d = t.d;
    let p = t.p as u64;
    let si = &m[i * d..i * d + d];
    let sj = &m[j * d..j * d + d];
    let mut lhs = [0u64; 8];
    for &(a, b, k, c) in &t.terms {
        lhs[k] += si[a] as u64 * sj[b] as u64 % p * c as u64;
    }
    for r in 0..d {
        let mut rhs = 0u64;
        for k in 0..d {
            rhs += t.at(i, j, k) as u64 * m[k * d + r] as u64;
        }
        if !(lhs[r] % p + p - rhs % p).is_multiple_of(p) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_orders_columns_by_readiness() {
        // Products land in {1, 2}: the pair (1, 2) needs only those.
        let needs = |i: usize, j: usize| -> BTreeSet<usize> { [i, j, 1, 2].into_iter().collect() };
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let plan = Plan::new(3, &pairs, needs, |_| 0);
        assert_eq!(plan.order, vec![1, 2, 0]);
        assert_eq!(plan.ready[1], vec![(1, 2)]);
        assert_eq!(plan.ready[2].len(), 2);
    }

    #[test]
    fn prefixes_cover_the_space() {
        let plan = Plan { d: 2, order: vec![0, 1], ready: vec![vec![], vec![]] };
        let e = Engine { p: 3, plan, check: |_: &[u32], _: usize, _: usize| true };
        assert_eq!(e.run_all(0, 1).len(), 81);
        let by_parts: usize = (0..9).map(|c| e.run_prefix(&e.decode_prefix(c, 2)).len()).sum();
        assert_eq!(by_parts, 81);
    }
}
