//! Rota-Baxter residuals, verification reports, kernels and images,
//! conjugation and classification by kernel shape.

mod check;
mod classify;
mod operator;

pub use check::{
    check_rb, check_rb_table, deciding_pairs, rb_residual, rb_residual_vectors, PairResidual, RbReport, Verdict,
};
pub use classify::{classify, conjugate, conjugate_by, Bucket, Classification};
pub use operator::LinearOperator;
