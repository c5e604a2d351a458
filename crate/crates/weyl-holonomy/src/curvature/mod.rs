//! Spaces of algebraic curvature tensors and derived verdicts.

mod decomp;
mod envelope;
mod prolongation;
mod space;
mod weak;

pub use decomp::{
    check_structure_constraints, decompose, reconstruct, s_and_p_memberships,
    CurvatureComponents, StructureReport,
};
pub use envelope::Envelope;
pub use prolongation::{first_prolongation, prolongation_nonzero_criterion, Prolongation};
pub use space::{
    berger_check, curvature_space, generated_algebra, BergerVerdict, CurvatureTensor,
};
pub use weak::{weak_berger_check, weak_curvature_space, WeakBergerVerdict, WeakCurvature};

/// Index of the bivector `e_i ^ e_j`, `i < j`, in lexicographic order.
pub(crate) fn biv_index(i: usize, j: usize, dim: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

/// Number of basis bivectors of an `dim`-dimensional space.
pub(crate) fn biv_count(dim: usize) -> usize {
    dim * (dim - 1) / 2
}
