use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::linalg;
use crate::error::{AlgebraError, ParseError};
use crate::exactalg::{format_rational, int, parse_rational, rat, Field, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Associative,
    Lie,
    Jordan,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Associative => "associative",
            AlgebraKind::Lie => "lie",
            AlgebraKind::Jordan => "jordan",
        })
    }
}

impl FromStr for AlgebraKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "associative" => Ok(AlgebraKind::Associative),
            "lie" => Ok(AlgebraKind::Lie),
            "jordan" => Ok(AlgebraKind::Jordan),
            _ => Err(format!("unknown algebra kind `{s}`")),
        }
    }
}

/// Finite-dimensional algebra given by rational structure constants:
/// `b_i * b_j = sum_k c[i][j][k] b_k`.
#[derive(Clone, PartialEq)]
pub struct AlgebraSpec {
    name: String,
    kind: AlgebraKind,
    basis: Vec<String>,
    /// Flat `dim^3` array indexed by `(i * dim + j) * dim + k`.
    constants: Vec<Rational>,
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSpec({}, {}, {:?})", self.name, self.kind, self.basis)
    }
}

/// A nonzero basis product `e_i e_j = sum c e_k`, as `(i, j, [(k, c)])`.
pub type Product<'a> = (usize, usize, &'a [(usize, Rational)]);

impl AlgebraSpec {
    /// Build from a list of nonzero products.
    pub fn from_products(
        name: &str,
        kind: AlgebraKind,
        basis: &[&str],
        products: &[Product<'_>],
    ) -> Self {
        let dim = basis.len();
        let mut constants = vec![Rational::zero(); dim * dim * dim];
        for (i, j, terms) in products {
            for (k, c) in terms.iter() {
                constants[(i * dim + j) * dim + k] = c.clone();
            }
        }
        AlgebraSpec {
            name: name.to_string(),
            kind,
            basis: basis.iter().map(|s| s.to_string()).collect(),
            constants,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let d = self.dim();
        &self.constants[(i * d + j) * d + k]
    }

    /// Product of basis elements as a rational coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim()).map(|k| self.constant(i, j, k).clone()).collect()
    }

    /// Structure constants mapped into the scalar ring `S`.
    pub fn table<S: Scalar>(&self) -> Result<Table<S>, AlgebraError> {
        let d = self.dim();
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut terms = Vec::new();
                for k in 0..d {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        let s = S::from_rational(c)
                            .ok_or_else(|| AlgebraError::Coefficient(format_rational(c)))?;
                        if !s.is_zero() {
                            terms.push((k, s));
                        }
                    }
                }
                entries.push(terms);
            }
        }
        Ok(Table { dim: d, kind: self.kind, entries })
    }

    /// Bilinear product of coordinate vectors.
    pub fn multiply<S: Scalar>(&self, a: &[S], b: &[S]) -> Result<Vec<S>, AlgebraError> {
        self.table::<S>()?.multiply(a, b)
    }

    /// Same structure with every constant multiplied by `c`.
    pub fn scaled(&self, c: &Rational) -> AlgebraSpec {
        AlgebraSpec {
            name: format!("{}*{}", format_rational(c), self.name),
            kind: self.kind,
            basis: self.basis.clone(),
            constants: self.constants.iter().map(|x| x * c).collect(),
        }
    }

    /// Check the defining laws of `kind` on all basis pairs and triples.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        let t = self.table::<Rational>()?;
        let e = |i: usize| unit::<Rational>(d, i);
        let law = |law| AlgebraError::Law { name: self.name.clone(), law };
        match self.kind {
            AlgebraKind::Lie => {
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            if self.constant(i, j, k) != &-self.constant(j, i, k).clone() {
                                return Err(law("antisymmetry"));
                            }
                        }
                    }
                }
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let a = t.multiply(&e(i), &t.multiply(&e(j), &e(k))?)?;
                            let b = t.multiply(&e(j), &t.multiply(&e(k), &e(i))?)?;
                            let c = t.multiply(&e(k), &t.multiply(&e(i), &e(j))?)?;
                            if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                                return Err(law("Jacobi"));
                            }
                        }
                    }
                }
            }
            AlgebraKind::Associative => {
                if !self.is_associative() {
                    return Err(law("associativity"));
                }
            }
            AlgebraKind::Jordan => {
                for i in 0..d {
                    for j in 0..d {
                        if self.basis_product(i, j) != self.basis_product(j, i) {
                            return Err(law("commutativity"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn is_associative(&self) -> bool {
        let d = self.dim();
        let t = self.table::<Rational>().expect("rational table");
        let e = |i: usize| unit::<Rational>(d, i);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let l = t.multiply(&t.multiply(&e(i), &e(j)).unwrap(), &e(k)).unwrap();
                    let r = t.multiply(&e(i), &t.multiply(&e(j), &e(k)).unwrap()).unwrap();
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Express the algebra in a new basis. `columns[j]` is the `j`-th new
    /// basis vector in old coordinates.
    pub fn change_basis(
        &self,
        name: &str,
        labels: &[&str],
        columns: &[Vec<Rational>],
    ) -> Result<AlgebraSpec, AlgebraError> {
        let d = self.dim();
        if columns.len() != d || labels.len() != d {
            return Err(AlgebraError::Dimension { expected: d, got: columns.len() });
        }
        let p = linalg::transpose(columns);
        let pinv = linalg::inverse(&p).ok_or(AlgebraError::NotInvertible)?;
        let t = self.table::<Rational>()?;
        let mut constants = vec![Rational::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let prod = t.multiply(&columns[i], &columns[j])?;
                let new = linalg::mat_vec(&pinv, &prod);
                for (k, c) in new.into_iter().enumerate() {
                    constants[(i * d + j) * d + k] = c;
                }
            }
        }
        Ok(AlgebraSpec {
            name: name.to_string(),
            kind: self.kind,
            basis: labels.iter().map(|s| s.to_string()).collect(),
            constants,
        })
    }

    fn require_associative(&self) -> Result<(), AlgebraError> {
        if self.kind != AlgebraKind::Associative || !self.is_associative() {
            return Err(AlgebraError::NotAssociative(self.name.clone()));
        }
        Ok(())
    }

    /// Commutator algebra `A(-)` with `[a, b] = ab - ba`.
    pub fn adjoint_minus(&self) -> Result<AlgebraSpec, AlgebraError> {
        self.require_associative()?;
        let out = self.symmetrized(format!("{}(-)", self.name), AlgebraKind::Lie, -Rational::one(), Rational::one());
        out.validate()?;
        Ok(out)
    }

    /// Jordan algebra `A(+)` with `a o b = (ab + ba) / 2`.
    pub fn adjoint_plus(&self) -> Result<AlgebraSpec, AlgebraError> {
        self.require_associative()?;
        let half = rat(1, 2);
        let out = self.symmetrized(format!("{}(+)", self.name), AlgebraKind::Jordan, half.clone(), half);
        out.validate()?;
        Ok(out)
    }

    /// `c'[i][j] = a * c[i][j] + b * c[j][i]`, with `a` applied to the
    /// transposed product so `(-1, 1)` gives the commutator.
    fn symmetrized(&self, name: String, kind: AlgebraKind, swapped: Rational, direct: Rational) -> AlgebraSpec {
        let d = self.dim();
        let mut constants = vec![Rational::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    constants[(i * d + j) * d + k] =
                        &direct * self.constant(i, j, k) + &swapped * self.constant(j, i, k);
                }
            }
        }
        AlgebraSpec { name, kind, basis: self.basis.clone(), constants }
    }
}

/// Structure constants over a concrete scalar ring, stored sparsely.
#[derive(Clone, Debug)]
pub struct Table<S> {
    dim: usize,
    kind: AlgebraKind,
    entries: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> Table<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Nonzero terms of `b_i * b_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.entries[i * self.dim + j]
    }

    pub fn multiply(&self, a: &[S], b: &[S]) -> Result<Vec<S>, AlgebraError> {
        let d = self.dim;
        for v in [a, b] {
            if v.len() != d {
                return Err(AlgebraError::Dimension { expected: d, got: v.len() });
            }
        }
        let mut out = vec![S::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.clone() * y.clone();
                for (k, c) in &self.entries[i * d + j] {
                    out[*k] = out[*k].clone() + xy.clone() * c.clone();
                }
            }
        }
        Ok(out)
    }
}

pub fn unit<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    (0..dim).map(|k| if k == i { S::one() } else { S::zero() }).collect()
}

/// Built-in algebras addressed by short ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraId {
    #[serde(rename = "h4")]
    H4,
    #[serde(rename = "h4minus")]
    H4Minus,
    #[serde(rename = "h4plus")]
    H4Plus,
    #[serde(rename = "lm2")]
    Lm2,
    #[serde(rename = "lm3")]
    Lm3,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 5] = [AlgebraId::H4, AlgebraId::H4Minus, AlgebraId::H4Plus, AlgebraId::Lm2, AlgebraId::Lm3];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraId::H4 => "h4",
            AlgebraId::H4Minus => "h4minus",
            AlgebraId::H4Plus => "h4plus",
            AlgebraId::Lm2 => "lm2",
            AlgebraId::Lm3 => "lm3",
        }
    }

    pub fn spec(self) -> AlgebraSpec {
        match self {
            AlgebraId::H4 => h4(),
            AlgebraId::H4Minus => h4_minus(),
            AlgebraId::H4Plus => h4_plus(),
            AlgebraId::Lm2 => lm2(),
            AlgebraId::Lm3 => lm3(),
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlgebraId {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, AlgebraError> {
        AlgebraId::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| AlgebraError::UnknownAlgebra(s.to_string()))
    }
}

/// Sweedler algebra in the basis `(1, g, x, gx)`:
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`.
pub fn h4() -> AlgebraSpec {
    let (one, g, x, gx) = (0, 1, 2, 3);
    let p = |k: usize| vec![(k, int(1))];
    let n = |k: usize| vec![(k, int(-1))];
    let products = [
        (one, one, p(one)),
        (one, g, p(g)),
        (one, x, p(x)),
        (one, gx, p(gx)),
        (g, one, p(g)),
        (x, one, p(x)),
        (gx, one, p(gx)),
        (g, g, p(one)),
        (g, x, p(gx)),
        (g, gx, p(x)),
        (x, g, n(gx)),
        (gx, g, n(x)),
    ];
    let borrowed: Vec<Product<'_>> =
        products.iter().map(|(i, j, t)| (*i, *j, t.as_slice())).collect();
    AlgebraSpec::from_products("H4", AlgebraKind::Associative, &["1", "g", "x", "gx"], &borrowed)
}

/// Columns of `1, g, e = x + gx, f = x - gx` in `(1, g, x, gx)` coordinates.
pub fn ef_columns() -> Vec<Vec<Rational>> {
    let r = |v: [i64; 4]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
    vec![r([1, 0, 0, 0]), r([0, 1, 0, 0]), r([0, 0, 1, 1]), r([0, 0, 1, -1])]
}

/// `H4` written in the basis `(1, g, e, f)`.
pub fn h4_ef() -> AlgebraSpec {
    h4().change_basis("H4", &["1", "g", "e", "f"], &ef_columns()).expect("invertible basis change")
}

/// Adjoint Lie algebra of `H4` in the basis `(1, g, e, f)`.
pub fn h4_minus() -> AlgebraSpec {
    h4_ef().adjoint_minus().expect("H4 is associative")
}

/// Jordan algebra of `H4` in the basis `(1, g, e, f)`.
pub fn h4_plus() -> AlgebraSpec {
    h4_ef().adjoint_plus().expect("H4 is associative")
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = 0`.
pub fn lm2() -> AlgebraSpec {
    AlgebraSpec::from_products(
        "L(h,e,f)",
        AlgebraKind::Lie,
        &["h", "e", "f"],
        &[
            (0, 1, &[(1, int(2))]),
            (1, 0, &[(1, int(-2))]),
            (0, 2, &[(2, int(-2))]),
            (2, 0, &[(2, int(2))]),
        ],
    )
}

/// `[h, y] = 2y`, `[h, z] = [y, z] = 0`.
pub fn lm3() -> AlgebraSpec {
    AlgebraSpec::from_products(
        "L(h,y,z)",
        AlgebraKind::Lie,
        &["h", "y", "z"],
        &[(0, 1, &[(1, int(2))]), (1, 0, &[(1, int(-2))])],
    )
}

/// Coordinates in `(1, g, x, gx)` to coordinates in `(1, g, e, f)`.
pub fn xgx_to_ef<S: Field>(v: &[S]) -> Vec<S> {
    let half = S::from_rational(&rat(1, 2)).expect("characteristic is not 2");
    vec![
        v[0].clone(),
        v[1].clone(),
        (v[2].clone() + v[3].clone()) * half.clone(),
        (v[2].clone() - v[3].clone()) * half,
    ]
}

/// Coordinates in `(1, g, e, f)` to coordinates in `(1, g, x, gx)`.
pub fn ef_to_xgx<S: Scalar>(v: &[S]) -> Vec<S> {
    vec![v[0].clone(), v[1].clone(), v[2].clone() + v[3].clone(), v[2].clone() - v[3].clone()]
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    name: String,
    kind: AlgebraKind,
    basis: Vec<String>,
    constants: Vec<Vec<Vec<String>>>,
}

impl Serialize for AlgebraSpec {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> Result<Z::Ok, Z::Error> {
        let d = self.dim();
        let constants = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| format_rational(self.constant(i, j, k))).collect())
                    .collect()
            })
            .collect();
        SpecJson { name: self.name.clone(), kind: self.kind, basis: self.basis.clone(), constants }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = SpecJson::deserialize(d)?;
        let dim = j.basis.len();
        let mut constants = Vec::with_capacity(dim * dim * dim);
        if j.constants.len() != dim {
            return Err(D::Error::custom("constants must be a dim x dim x dim array"));
        }
        for plane in &j.constants {
            if plane.len() != dim {
                return Err(D::Error::custom("constants must be a dim x dim x dim array"));
            }
            for row in plane {
                if row.len() != dim {
                    return Err(D::Error::custom("constants must be a dim x dim x dim array"));
                }
                for c in row {
                    constants.push(parse_rational(c).map_err(|e: ParseError| D::Error::custom(e.to_string()))?);
                }
            }
        }
        Ok(AlgebraSpec { name: j.name, kind: j.kind, basis: j.basis, constants })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(d: usize, i: usize) -> Vec<Rational> {
        unit(d, i)
    }

    #[test]
    fn h4_table() {
        let a = h4();
        a.validate().unwrap();
        let (g, x, gx) = (1, 2, 3);
        assert_eq!(a.basis_product(g, g), e(4, 0));
        let xg = a.basis_product(x, g);
        let gxv = a.basis_product(g, x);
        assert_eq!(gxv, e(4, gx));
        assert_eq!(xg, gxv.iter().map(|c| -c.clone()).collect::<Vec<_>>());
        assert_eq!(a.basis_product(x, x), vec![Rational::zero(); 4]);
    }

    #[test]
    fn h4_minus_brackets() {
        let l = h4_minus();
        l.validate().unwrap();
        let (one, g, ee, f) = (0, 1, 2, 3);
        for b in 0..4 {
            assert_eq!(l.basis_product(one, b), vec![Rational::zero(); 4]);
        }
        assert_eq!(l.basis_product(g, ee), vec![int(0), int(0), int(2), int(0)]);
        assert_eq!(l.basis_product(g, f), vec![int(0), int(0), int(0), int(-2)]);
        assert_eq!(l.basis_product(ee, f), vec![Rational::zero(); 4]);
    }

    #[test]
    fn commutator_in_original_basis() {
        // [g, x] = gx - xg = 2gx
        let l = h4().adjoint_minus().unwrap();
        assert_eq!(l.basis_product(1, 2), vec![int(0), int(0), int(0), int(2)]);
    }

    #[test]
    fn commutative_algebra_has_zero_brackets() {
        let c = AlgebraSpec::from_products(
            "k[t]/t^2",
            AlgebraKind::Associative,
            &["1", "t"],
            &[(0, 0, &[(0, int(1))]), (0, 1, &[(1, int(1))]), (1, 0, &[(1, int(1))])],
        );
        let l = c.adjoint_minus().unwrap();
        assert!(l.constants.iter().all(Scalar::is_zero));
    }

    #[test]
    fn jordan_products() {
        let j = h4().adjoint_plus().unwrap();
        assert_eq!(j.basis_product(1, 1), e(4, 0));
        assert_eq!(j.basis_product(1, 2), vec![Rational::zero(); 4]);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(j.basis_product(a, b), j.basis_product(b, a));
            }
        }
        h4_plus().validate().unwrap();
    }

    #[test]
    fn adjoint_requires_associative() {
        assert!(matches!(lm2().adjoint_minus(), Err(AlgebraError::NotAssociative(_))));
        assert!(lm3().adjoint_plus().is_err());
    }

    #[test]
    fn basis_change_coordinates() {
        let x: Vec<Rational> = e(4, 2);
        assert_eq!(xgx_to_ef(&x), vec![int(0), int(0), rat(1, 2), rat(1, 2)]);
        assert_eq!(ef_to_xgx(&e(4, 2)), vec![int(0), int(0), int(1), int(1)]);
        assert_eq!(ef_to_xgx(&e(4, 0)), e(4, 0));
        assert_eq!(xgx_to_ef(&e(4, 1)), e(4, 1));
        let v = vec![int(3), rat(-1, 2), int(5), int(7)];
        assert_eq!(ef_to_xgx(&xgx_to_ef(&v)), v);
    }

    #[test]
    fn dimension_mismatch() {
        let r = h4().multiply(&[int(1)], &e(4, 0));
        assert_eq!(r, Err(AlgebraError::Dimension { expected: 4, got: 1 }));
    }

    #[test]
    fn json_round_trip() {
        for id in AlgebraId::ALL {
            let s = id.spec();
            let j = serde_json::to_string(&s).unwrap();
            let back: AlgebraSpec = serde_json::from_str(&j).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn small_algebras_validate() {
        lm2().validate().unwrap();
        lm3().validate().unwrap();
    }
}
