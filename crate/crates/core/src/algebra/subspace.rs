use serde::Serialize;

use super::linalg::{rank, rref};
use super::spec::{unit, AlgebraKind, AlgebraSpec, Table};
use crate::error::AlgebraError;
use crate::exactalg::{Field, Scalar};

/// Subspace of `k^dim` stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubspaceProps {
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    pub is_abelian: bool,
}

impl<S: Field> Subspace<S> {
    pub fn span(ambient: usize, vectors: &[Vec<S>]) -> Self {
        if vectors.is_empty() {
            return Subspace { ambient, basis: Vec::new() };
        }
        Subspace { ambient, basis: rref(vectors).0 }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Self {
        let b: Vec<Vec<S>> = (0..ambient).map(|i| unit(ambient, i)).collect();
        Subspace { ambient, basis: b }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &[S]) -> bool {
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(&rows) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn intersection(&self, other: &Subspace<S>) -> Subspace<S> {
        // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a, b) = 0
        let n = self.ambient;
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Subspace::zero(n);
        }
        let rows: Vec<Vec<S>> = (0..n)
            .map(|k| {
                let mut r: Vec<S> = self.basis.iter().map(|u| u[k].clone()).collect();
                r.extend(other.basis.iter().map(|w| -w[k].clone()));
                r
            })
            .collect();
        let coeffs = super::linalg::nullspace(&rows, p + q);
        let vecs: Vec<Vec<S>> = coeffs
            .iter()
            .map(|c| {
                (0..n).fold(vec![S::zero(); n], |mut acc, k| {
                    acc[k] = (0..p).fold(S::zero(), |s, i| s + c[i].clone() * self.basis[i][k].clone());
                    acc
                })
            })
            .collect();
        Subspace::span(n, &vecs)
    }

    pub fn is_subalgebra(&self, t: &Table<S>) -> bool {
        self.basis.iter().all(|u| {
            self.basis.iter().all(|v| self.contains(&t.multiply(u, v).expect("dimension checked")))
        })
    }

    pub fn is_ideal(&self, t: &Table<S>) -> bool {
        let n = self.ambient;
        self.basis.iter().all(|u| {
            (0..n).all(|k| {
                let b = unit::<S>(n, k);
                self.contains(&t.multiply(u, &b).unwrap()) && self.contains(&t.multiply(&b, u).unwrap())
            })
        })
    }

    /// All products of elements of the subspace vanish.
    pub fn is_abelian(&self, t: &Table<S>) -> bool {
        self.basis.iter().all(|u| {
            self.basis.iter().all(|v| t.multiply(u, v).unwrap().iter().all(Scalar::is_zero))
        })
    }

    pub fn props(&self, t: &Table<S>) -> SubspaceProps {
        SubspaceProps {
            is_subalgebra: self.is_subalgebra(t),
            is_ideal: self.is_ideal(t),
            is_abelian: self.is_abelian(t),
        }
    }
}

/// Named ideals of `H4(-)` in the basis `(1, g, e, f)`.
#[derive(Debug, Clone, PartialEq)]
pub enum IdealTag<S> {
    /// `span(e, f)`
    K,
    /// `span(1, e)`
    Ke,
    /// `span(1, f)`
    Kf,
    /// `span(1, e, f)`
    I,
    /// `span(alpha 1 + g, e, f)`
    J(S),
    Other,
}

impl<S: Scalar> IdealTag<S> {
    pub fn label(&self) -> String {
        match self {
            IdealTag::K => "K".into(),
            IdealTag::Ke => "K_e".into(),
            IdealTag::Kf => "K_f".into(),
            IdealTag::I => "I".into(),
            IdealTag::J(a) => format!("J_{a}"),
            IdealTag::Other => "other".into(),
        }
    }
}

fn is_h4_minus(spec: &AlgebraSpec) -> bool {
    spec.kind() == AlgebraKind::Lie && spec.basis() == ["1", "g", "e", "f"]
}

/// Name an ideal. Only `H4(-)` has named ideals; every other ideal (and
/// every ideal of another algebra) is tagged `Other`.
pub fn identify_ideal<S: Field>(spec: &AlgebraSpec, s: &Subspace<S>) -> Result<IdealTag<S>, AlgebraError> {
    let t = spec.table::<S>()?;
    if s.ambient_dim() != spec.dim() {
        return Err(AlgebraError::Dimension { expected: spec.dim(), got: s.ambient_dim() });
    }
    if !s.is_ideal(&t) {
        return Err(AlgebraError::NotAnIdeal);
    }
    if !is_h4_minus(spec) {
        return Ok(IdealTag::Other);
    }
    let e = |i| unit::<S>(4, i);
    let sp = |v: &[usize]| Subspace::span(4, &v.iter().map(|&i| e(i)).collect::<Vec<_>>());
    match s.dim() {
        2 => {
            let tags = [(sp(&[2, 3]), IdealTag::K), (sp(&[0, 2]), IdealTag::Ke), (sp(&[0, 3]), IdealTag::Kf)];
            Ok(tags.into_iter().find(|(u, _)| u == s).map_or(IdealTag::Other, |(_, t)| t))
        }
        3 if s.contains(&e(2)) && s.contains(&e(3)) => {
            // the (1, g) projections of the basis span a line
            let rep = s
                .basis()
                .iter()
                .find(|v| !v[0].is_zero() || !v[1].is_zero())
                .expect("dimension 3 with e, f inside");
            if rep[1].is_zero() {
                Ok(IdealTag::I)
            } else {
                Ok(IdealTag::J(rep[0].div(&rep[1]).expect("nonzero g coefficient")))
            }
        }
        _ => Ok(IdealTag::Other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::spec::h4_minus;
    use crate::exactalg::{int, Rational};

    fn v(c: [i64; 4]) -> Vec<Rational> {
        c.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn named_ideals() {
        let l = h4_minus();
        let t = l.table::<Rational>().unwrap();
        let k = Subspace::span(4, &[v([0, 0, 1, 0]), v([0, 0, 0, 1])]);
        let p = k.props(&t);
        assert!(p.is_ideal && p.is_abelian);
        assert_eq!(identify_ideal(&l, &k).unwrap(), IdealTag::K);

        let i = Subspace::span(4, &[v([1, 0, 0, 0]), v([0, 0, 1, 0]), v([0, 0, 0, 1])]);
        assert!(i.is_ideal(&t) && i.is_abelian(&t));
        assert_eq!(identify_ideal(&l, &i).unwrap(), IdealTag::I);

        let ke = Subspace::span(4, &[v([1, 0, 0, 0]), v([0, 0, 1, 0])]);
        assert_eq!(identify_ideal(&l, &ke).unwrap(), IdealTag::Ke);

        let j2 = Subspace::span(4, &[v([2, 1, 0, 0]), v([0, 0, 1, 0]), v([0, 0, 0, 1])]);
        assert_eq!(identify_ideal(&l, &j2).unwrap(), IdealTag::J(int(2)));
    }

    #[test]
    fn subalgebra_not_ideal() {
        let l = h4_minus();
        let t = l.table::<Rational>().unwrap();
        let s = Subspace::span(4, &[v([0, 1, 0, 0]), v([0, 0, 1, 0])]);
        let p = s.props(&t);
        assert!(p.is_subalgebra && !p.is_ideal && !p.is_abelian);
        assert_eq!(identify_ideal(&l, &s), Err(AlgebraError::NotAnIdeal));
    }

    #[test]
    fn derived_algebra_is_k() {
        let l = h4_minus();
        let t = l.table::<Rational>().unwrap();
        let mut prods = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                prods.push(t.multiply(&unit(4, a), &unit(4, b)).unwrap());
            }
        }
        let derived = Subspace::span(4, &prods);
        assert_eq!(derived, Subspace::span(4, &[v([0, 0, 1, 0]), v([0, 0, 0, 1])]));
    }

    #[test]
    fn intersections() {
        let a = Subspace::span(4, &[v([1, 0, 0, 0]), v([0, 0, 1, 0])]);
        let b = Subspace::span(4, &[v([1, 0, 1, 0]), v([0, 1, 0, 0])]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(4, &[v([1, 0, 1, 0])]));
    }
}
