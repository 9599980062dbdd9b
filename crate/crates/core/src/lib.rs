//! Exact Rota-Baxter operator engine for the Sweedler algebra `H4`, its
//! adjoint Lie algebra `H4(-)` and its Jordan algebra `H4(+)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: rationals, polynomials, rational functions, `F_p`.
//! * [`algebra`]: structure-constant algebras, subspaces, automorphisms.
//! * [`rbcore`]: Rota-Baxter residuals, kernels, conjugation, classification.
//! * [`catalog`]: every published operator family with its constraints.
//! * [`search`]: exhaustive finite-field enumeration and coverage.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod exactalg;
pub mod rbcore;
pub mod search;

pub use catalog::{Catalog, Constraint, ConstraintAtom, DiscrepancyRecord, Family, Verification};
pub use search::{CoverageReport, SearchConfig};
pub use algebra::{AlgebraId, AlgebraKind, AlgebraSpec, Automorphism, IdealTag, Subspace};

pub use error::{AlgebraError, CatalogError, EvalError, ParseError, RbError, SearchError};
pub use exactalg::{Field, Fp, Polynomial, Rational, RationalFunction, Scalar, Symbol};
pub use rbcore::{check_rb, rb_residual, Bucket, Classification, LinearOperator, RbReport, Verdict};

