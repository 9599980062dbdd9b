use std::fmt;

use crate::algebra::linalg;
use crate::algebra::Subspace;
use crate::exactalg::{Field, Scalar};

/// Square matrix acting on coordinate vectors; column `j` is the image of
/// basis vector `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOperator<S> {
    dim: usize,
    /// Row-major entries.
    rows: Vec<Vec<S>>,
}

impl<S: fmt::Display> fmt::Debug for LinearOperator<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            f.write_str(&cells.join(", "))?;
        }
        f.write_str("]")
    }
}

impl<S: Scalar> LinearOperator<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Option<Self> {
        let dim = rows.len();
        rows.iter().all(|r| r.len() == dim).then_some(LinearOperator { dim, rows })
    }

    /// `columns[j]` is the image of basis vector `j`.
    pub fn from_columns(columns: Vec<Vec<S>>) -> Option<Self> {
        let dim = columns.len();
        if columns.iter().any(|c| c.len() != dim) {
            return None;
        }
        Some(LinearOperator { dim, rows: linalg::transpose(&columns) })
    }

    pub fn zero(dim: usize) -> Self {
        LinearOperator { dim, rows: vec![vec![S::zero(); dim]; dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    pub fn scalar(dim: usize, c: S) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { c.clone() } else { S::zero() }).collect())
            .collect();
        LinearOperator { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &S {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.rows[r][c] = v;
    }

    /// Image of basis vector `j`.
    pub fn column(&self, j: usize) -> Vec<S> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.dim).map(|j| self.column(j)).collect()
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        linalg::mat_vec(&self.rows, v)
    }

    /// `self o other`.
    pub fn compose(&self, other: &LinearOperator<S>) -> LinearOperator<S> {
        LinearOperator { dim: self.dim, rows: linalg::matmul(&self.rows, &other.rows) }
    }

    pub fn scale(&self, c: &S) -> LinearOperator<S> {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LinearOperator<T> {
        LinearOperator { dim: self.dim, rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Scalar::is_zero)
    }

    /// Row-major entries as display strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
    }
}

impl<S: Field> LinearOperator<S> {
    pub fn inverse(&self) -> Option<LinearOperator<S>> {
        linalg::inverse(&self.rows).map(|rows| LinearOperator { dim: self.dim, rows })
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.rows)
    }

    pub fn kernel_basis(&self) -> Subspace<S> {
        Subspace::span(self.dim, &linalg::nullspace(&self.rows, self.dim))
    }

    pub fn image_basis(&self) -> Subspace<S> {
        Subspace::span(self.dim, &self.columns())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, Rational};

    #[test]
    fn zero_operator_kernel_and_image() {
        let z = LinearOperator::<Rational>::zero(4);
        assert_eq!(z.kernel_basis().dim(), 4);
        assert_eq!(z.image_basis().dim(), 0);
    }

    #[test]
    fn rank_nullity() {
        let m = LinearOperator::from_rows(vec![
            vec![int(1), int(2), int(0)],
            vec![int(0), int(0), int(1)],
            vec![int(1), int(2), int(1)],
        ])
        .unwrap();
        assert_eq!(m.kernel_basis().dim() + m.image_basis().dim(), 3);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn columns_are_images() {
        let m = LinearOperator::from_columns(vec![vec![int(1), int(2)], vec![int(3), int(4)]]).unwrap();
        assert_eq!(m.apply(&[int(0), int(1)]), vec![int(3), int(4)]);
        assert_eq!(*m.entry(1, 0), int(2));
    }
}
