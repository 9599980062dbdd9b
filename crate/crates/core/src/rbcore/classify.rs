use serde::Serialize;

use super::{check_rb, LinearOperator};
use crate::algebra::{identify_ideal, AlgebraKind, AlgebraSpec, Automorphism, IdealTag, Subspace};
use crate::error::{AlgebraError, RbError};
use crate::exactalg::Field;

/// `sigma o R o sigma^-1`.
pub fn conjugate<S: Field>(r: &LinearOperator<S>, sigma: &Automorphism<S>) -> LinearOperator<S> {
    sigma.map().compose(r).compose(sigma.inverse())
}

/// Conjugate by an arbitrary matrix, refusing singular ones.
pub fn conjugate_by<S: Field>(
    r: &LinearOperator<S>,
    sigma: &LinearOperator<S>,
) -> Result<LinearOperator<S>, AlgebraError> {
    let inv = sigma.inverse().ok_or(AlgebraError::NotInvertible)?;
    Ok(sigma.compose(r).compose(&inv))
}

/// Which part of the classification of operators on `H4(-)` applies,
/// decided by the kernel dimension and the shape of kernel and image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bucket {
    Zero,
    KernelDim3,
    KernelDim2Abelian,
    KernelDim2Nonabelian,
    /// Image is `span(1, e, f)`.
    KernelDim1ImageI,
    /// Image is `span(alpha 1 + g, e, f)`.
    KernelDim1ImageJ,
    /// Image is `span(1, g + c f, e)` or `span(1, g + c e, f)`.
    KernelDim1ImageNonIdeal,
    Nondegenerate,
    /// Kernel dimension on an algebra without a finer split.
    Other { kernel_dim: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification<S> {
    pub kernel: Subspace<S>,
    pub image: Subspace<S>,
    pub kernel_tag: Option<IdealTag<S>>,
    pub image_tag: Option<IdealTag<S>>,
    pub kernel_abelian: bool,
    pub bucket: Bucket,
}

impl<S: Field> Classification<S> {
    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strs = |s: &Subspace<S>| -> Vec<Vec<String>> {
            s.basis().iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
        };
        serde_json::json!({
            "kernel_dim": self.kernel.dim(),
            "image_dim": self.image.dim(),
            "kernel_basis": strs(&self.kernel),
            "image_basis": strs(&self.image),
            "kernel_tag": self.kernel_tag.as_ref().map(IdealTag::label),
            "image_tag": self.image_tag.as_ref().map(IdealTag::label),
            "kernel_abelian": self.kernel_abelian,
            "bucket": self.bucket,
        })
    }
}

fn tag<S: Field>(spec: &AlgebraSpec, s: &Subspace<S>) -> Option<IdealTag<S>> {
    identify_ideal(spec, s).ok()
}

/// Classify a verified Rota-Baxter operator. Non-RB maps are refused.
pub fn classify<S: Field>(
    spec: &AlgebraSpec,
    r: &LinearOperator<S>,
    weight: &S,
) -> Result<Classification<S>, RbError> {
    if !check_rb(spec, r, weight)?.passed() {
        return Err(RbError::NotRotaBaxter);
    }
    let t = spec.table::<S>()?;
    let kernel = r.kernel_basis();
    let image = r.image_basis();
    let kernel_abelian = kernel.is_abelian(&t);
    let kernel_tag = tag(spec, &kernel);
    let image_tag = tag(spec, &image);
    let d = spec.dim();
    let h4_minus = spec.kind() == AlgebraKind::Lie && spec.basis() == ["1", "g", "e", "f"];
    let bucket = match kernel.dim() {
        k if k == d => Bucket::Zero,
        0 => Bucket::Nondegenerate,
        k if !h4_minus => Bucket::Other { kernel_dim: k },
        3 => Bucket::KernelDim3,
        2 if kernel_abelian => Bucket::KernelDim2Abelian,
        2 => Bucket::KernelDim2Nonabelian,
        1 => match &image_tag {
            Some(IdealTag::I) => Bucket::KernelDim1ImageI,
            Some(IdealTag::J(_)) => Bucket::KernelDim1ImageJ,
            _ => Bucket::KernelDim1ImageNonIdeal,
        },
        k => Bucket::Other { kernel_dim: k },
    };
    Ok(Classification { kernel, image, kernel_tag, image_tag, kernel_abelian, bucket })
}
