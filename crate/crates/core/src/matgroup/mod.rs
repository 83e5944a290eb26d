//! Finite matrix groups over cyclotomic fields: enumeration, conjugacy
//! data, determinant kernels, and the scalar-extension and `det⁻¹`
//! constructions.

mod embedding;
mod group;
mod matrix;

pub use embedding::{cyclic_quotient, sl_kernel, NormalEmbedding};
pub use group::{ConjugacyClass, FiniteMatrixGroup, DEFAULT_MAX_ORDER};
pub use matrix::CycMatrix;

use crate::cyclotomic::{lcm, CycElem};
use crate::error::{Error, Result};

/// The group generated by `n` and the scalar matrix `ζ_k · I`.
pub fn scalar_extend(n: &FiniteMatrixGroup, k: u32, max_order: usize) -> Result<FiniteMatrixGroup> {
    if !n.is_special_linear() {
        return Err(Error::NotSpecialLinear);
    }
    let conductor = lcm(n.conductor(), k.max(1));
    let mut gens: Vec<CycMatrix> = n
        .generator_matrices()
        .into_iter()
        .map(|g| g.lift(conductor))
        .collect();
    gens.push(CycMatrix::scalar(
        n.dim(),
        &CycElem::zeta_pow(conductor, (conductor / k.max(1)) as i64),
    ));
    FiniteMatrixGroup::enumerate(&gens, max_order)
}

/// Image of `G ⊂ GL(m)` under `g ↦ diag(g, det(g)⁻¹)` in `SL(m+1)`.
///
/// Element `i` of the result is the image of element `i` of the input, so
/// the returned index correspondence is the identity.
pub fn embed_det_inverse(g: &FiniteMatrixGroup) -> (FiniteMatrixGroup, Vec<usize>) {
    let elements: Vec<CycMatrix> = g
        .elements()
        .iter()
        .zip(g.dets())
        .map(|(m, d)| {
            // determinants of finite-order matrices are roots of unity
            m.block_with(&d.conj())
        })
        .collect();
    let dets = vec![CycElem::one(elements[0].conductor()); elements.len()];
    let image = g.with_matrices(elements, dets);
    (image, (0..g.order()).collect())
}

/// Drop the last coordinate of a diagonal group inside `SL(m)`.
pub fn strip_diagonal(g: &FiniteMatrixGroup) -> Result<FiniteMatrixGroup> {
    if g.dim() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: g.dim(),
        });
    }
    if !g.elements().iter().all(CycMatrix::is_diagonal) {
        return Err(Error::NotDiagonal);
    }
    if !g.is_special_linear() {
        return Err(Error::NotSpecialLinear);
    }
    let elements: Vec<CycMatrix> = g.elements().iter().map(CycMatrix::upper_left).collect();
    let dets = elements.iter().map(CycMatrix::det).collect();
    Ok(g.with_matrices(elements, dets))
}
