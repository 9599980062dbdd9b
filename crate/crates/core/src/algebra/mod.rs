//! Structure-constant algebras: `H4`, its adjoint Lie and Jordan algebras,
//! the two 3-dimensional Lie algebras, subspaces and automorphisms.

mod automorphism;
pub mod linalg;
mod spec;
mod subspace;

pub use automorphism::{phi, psi, Automorphism};
pub use spec::{
    ef_columns, ef_to_xgx, h4, h4_ef, h4_minus, h4_plus, lm2, lm3, unit, xgx_to_ef, AlgebraId,
    AlgebraKind, AlgebraSpec, Table,
};
pub use subspace::{identify_ideal, IdealTag, Subspace, SubspaceProps};
