#![allow(clippy::needless_range_loop)]

//! Exact-arithmetic toolkit for holonomy algebras of Lorentzian Weyl
//! connections.
//!
//! The crate has four layers:
//!
//! * [`matrix`] / [`solve`] — dense matrices and fraction-free elimination
//!   over a generic scalar, with canonical subspaces whose equality test is
//!   plain comparison;
//! * [`lie`] — the Minkowski model with a Witt basis, the matrix algebra of
//!   conformal transformations preserving an isotropic line, the classified
//!   families, brackets and Lie closure;
//! * [`curvature`] — spaces of algebraic curvature tensors, Berger and
//!   weak-Berger verdicts, first prolongations and the structure
//!   decomposition of curvature tensors of the model algebra;
//! * [`jet`] / [`weyl`] — truncated multivariate Taylor arithmetic, Walker
//!   metrics, Weyl connections, iterated covariant derivatives and holonomy
//!   generation at the origin.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! tolerances anywhere. The generic cores accept any exact field; the crate
//! root fixes the concrete scalar used by the domain layers.

pub mod curvature;
pub mod error;
pub mod jet;
pub mod json;
pub mod lie;
pub mod matrix;
pub mod sampling;
pub mod scalar;
pub mod solve;
pub mod suites;
pub mod weyl;

/// The scalar every verdict in this crate is computed over: exact rationals
/// with arbitrary-precision integer numerator and positive denominator in
/// lowest terms.
pub type Rational = num_rational::BigRational;

/// Dense matrix over [`Rational`].
pub type QMatrix = matrix::Matrix<Rational>;

/// Canonical subspace over [`Rational`].
pub type QSubspace = solve::Subspace<Rational>;

/// Truncated multivariate Taylor polynomial over [`Rational`].
pub type QJet = jet::Jet<Rational>;

pub use scalar::{format_rational, int, parse_rational, ratio};
