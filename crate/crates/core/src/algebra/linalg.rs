//! Exact Gaussian elimination over any [`Field`].
//!
//! Matrices are row-major `Vec<Vec<S>>`.

use crate::exactalg::{Field, Scalar};

/// Reduced row echelon form of `rows`; returns the nonzero rows and the
/// pivot column of each.
pub fn rref<S: Field>(rows: &[Vec<S>]) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - y.clone() * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<S: Field>(rows: &[Vec<S>]) -> usize {
    rref(rows).0.len()
}

/// Basis of `{x : A x = 0}` in reduced echelon form.
pub fn nullspace<S: Field>(a: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let (r, pivots) = rref(a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![S::zero(); ncols];
        v[fc] = S::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = -row[fc].clone();
        }
        basis.push(v);
    }
    rref(&basis).0
}

pub fn inverse<S: Field>(a: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let n = a.len();
    let aug: Vec<Vec<S>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug);
    if r.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn matmul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let inner = b.len();
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    (0..inner).fold(S::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<S: Scalar>(a: &[Vec<S>], v: &[S]) -> Vec<S> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone()))
        .collect()
}

pub fn transpose<S: Clone>(a: &[Vec<S>]) -> Vec<Vec<S>> {
    let ncols = a.first().map_or(0, Vec::len);
    (0..ncols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn rank_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = nullspace(&a, 3);
        assert_eq!(rank(&a) + k.len(), 3);
        for v in &k {
            assert!(mat_vec(&a, v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(matmul(&a, &inv), m(&[&[1, 0], &[0, 1]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }
}
