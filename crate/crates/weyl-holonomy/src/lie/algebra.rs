//! Bracket-closed matrix spans.

use super::{CoElement, WittFrame};
use crate::error::{DecodeError, FamilyError, LinalgError};
use crate::{QMatrix, QSubspace, Rational};
use num_traits::Zero;

/// A subspace of `gl(N)` together with the frame it was built in. The
/// carrier subspace is canonical, so equality of algebras is equality of
/// carriers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieSubalgebra {
    matrix_dim: usize,
    witt: Option<WittFrame>,
    carrier: QSubspace,
    label: String,
}

impl LieSubalgebra {
    /// Span of the given matrices, without closing under brackets. The
    /// caller asserts closedness; [`LieSubalgebra::is_bracket_closed`]
    /// checks it.
    pub fn from_span(
        matrix_dim: usize,
        witt: Option<WittFrame>,
        matrices: Vec<QMatrix>,
        label: impl Into<String>,
    ) -> Self {
        let vectors = matrices
            .into_iter()
            .map(|m| {
                assert_eq!((m.rows(), m.cols()), (matrix_dim, matrix_dim), "generator shape");
                m.into_flat()
            })
            .collect();
        Self {
            matrix_dim,
            witt,
            carrier: QSubspace::span_unchecked(matrix_dim * matrix_dim, vectors),
            label: label.into(),
        }
    }

    /// Smallest bracket-closed subspace containing the generators: iterate
    /// span-then-bracket until the dimension stabilizes. The dimension grows
    /// strictly at every round, so the ambient dimension bounds the number
    /// of rounds; exceeding it is a hard failure.
    pub fn lie_closure(
        matrix_dim: usize,
        witt: Option<WittFrame>,
        generators: &[QMatrix],
        label: impl Into<String>,
    ) -> Result<Self, FamilyError> {
        for (index, g) in generators.iter().enumerate() {
            if (g.rows(), g.cols()) != (matrix_dim, matrix_dim) {
                return Err(FamilyError::GeneratorShape {
                    index,
                    rows: g.rows(),
                    cols: g.cols(),
                    expected: matrix_dim,
                });
            }
        }
        let ambient = matrix_dim * matrix_dim;
        let mut current = QSubspace::span_unchecked(
            ambient,
            generators.iter().map(|m| m.flatten().to_vec()).collect(),
        );
        for _ in 0..=ambient {
            let basis: Vec<QMatrix> = current
                .basis()
                .iter()
                .map(|v| QMatrix::from_flat(matrix_dim, matrix_dim, v.clone()))
                .collect();
            let mut vectors: Vec<Vec<Rational>> = current.basis().to_vec();
            let before = current.dim();
            for i in 0..basis.len() {
                for j in i + 1..basis.len() {
                    let br = basis[i].commutator(&basis[j]);
                    if !br.is_zero() {
                        vectors.push(br.into_flat());
                    }
                }
            }
            current = QSubspace::span_unchecked(ambient, vectors);
            if current.dim() == before {
                return Ok(Self {
                    matrix_dim,
                    witt,
                    carrier: current,
                    label: label.into(),
                });
            }
        }
        Err(FamilyError::ClosureDiverged)
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn witt(&self) -> Option<WittFrame> {
        self.witt
    }

    pub fn carrier(&self) -> &QSubspace {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn basis_matrices(&self) -> Vec<QMatrix> {
        self.carrier
            .basis()
            .iter()
            .map(|v| QMatrix::from_flat(self.matrix_dim, self.matrix_dim, v.clone()))
            .collect()
    }

    pub fn contains_matrix(&self, m: &QMatrix) -> bool {
        m.rows() == self.matrix_dim
            && m.cols() == self.matrix_dim
            && self.carrier.contains(m.flatten()).unwrap_or(false)
    }

    pub fn is_bracket_closed(&self) -> bool {
        let basis = self.basis_matrices();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !self.contains_matrix(&basis[i].commutator(&basis[j])) {
                    return false;
                }
            }
        }
        true
    }

    /// Structure constants: for each basis pair `i < j` the coordinates of
    /// `[B_i, B_j]` against the canonical basis.
    pub fn bracket_table(&self) -> Vec<(usize, usize, Vec<Rational>)> {
        let basis = self.basis_matrices();
        let mut table = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let br = basis[i].commutator(&basis[j]);
                let coords = self
                    .carrier
                    .coords(br.flatten())
                    .expect("ambient matches")
                    .expect("algebra must be bracket-closed");
                table.push((i, j, coords));
            }
        }
        table
    }

    /// Projection onto the trace-free part: each basis element minus its
    /// scalar component.
    pub fn project_so_part(&self) -> LieSubalgebra {
        let n = self.matrix_dim;
        let size = Rational::from_integer((n as i64).into());
        let mats: Vec<QMatrix> = self
            .basis_matrices()
            .into_iter()
            .map(|m| {
                let b = m.trace() / size.clone();
                m.sub(&QMatrix::identity(n).scale(&b))
            })
            .collect();
        LieSubalgebra::from_span(n, self.witt, mats, format!("so-part of {}", self.label))
    }

    /// Projection onto the scalar line: zero- or one-dimensional span of the
    /// identity inside `gl(N)`.
    pub fn project_id_part(&self) -> QSubspace {
        let n = self.matrix_dim;
        let size = Rational::from_integer((n as i64).into());
        let vectors: Vec<Vec<Rational>> = self
            .basis_matrices()
            .into_iter()
            .filter_map(|m| {
                let b = m.trace() / size.clone();
                if b.is_zero() {
                    None
                } else {
                    Some(QMatrix::identity(n).scale(&b).into_flat())
                }
            })
            .collect();
        QSubspace::span_unchecked(n * n, vectors)
    }

    /// Projection onto the rotation block: the subalgebra of `so(n)` spanned
    /// by the `A`-components of the basis. Requires a Witt frame.
    pub fn project_so_n_part(&self) -> Result<LieSubalgebra, DecodeError> {
        let frame = self.witt.expect("so(n)-projection needs a Witt frame");
        let n = frame.n();
        let mut mats = Vec::new();
        for m in self.basis_matrices() {
            let e = CoElement::decode(frame, &m)?;
            mats.push(e.rotation().clone());
        }
        Ok(LieSubalgebra::from_span(n, None, mats, format!("so(n)-part of {}", self.label)))
    }

    /// True if every element maps the vector to a multiple of itself.
    pub fn preserves_line(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        let line = QSubspace::span(self.matrix_dim, vec![v.to_vec()])?;
        for m in self.basis_matrices() {
            if !line.contains(&m.apply(v))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Search a declared candidate list for a proper invariant subspace on
    /// which the frame's scalar product is non-degenerate. `None` certifies
    /// weak irreducibility over that list only.
    pub fn invariant_nondegenerate_witness(
        &self,
        candidates: &[QSubspace],
    ) -> Option<QSubspace> {
        let frame = self.witt.expect("witness search needs a Witt frame");
        let gram = frame.gram();
        let basis_mats = self.basis_matrices();
        'candidate: for cand in candidates {
            assert_eq!(cand.ambient(), self.matrix_dim);
            if cand.is_zero() || cand.dim() == self.matrix_dim {
                continue;
            }
            for m in &basis_mats {
                for v in cand.basis() {
                    if !cand.contains(&m.apply(v)).unwrap_or(false) {
                        continue 'candidate;
                    }
                }
            }
            let d = cand.dim();
            let restricted = QMatrix::from_fn(d, d, |i, j| {
                let gv = gram.apply(&cand.basis()[j]);
                cand.basis()[i]
                    .iter()
                    .zip(&gv)
                    .map(|(a, b)| a.clone() * b.clone())
                    .fold(Rational::zero(), |acc, t| acc + t)
            });
            if crate::solve::invert(&restricted).is_some() {
                return Some(cand.clone());
            }
        }
        None
    }
}

/// The declared candidate list for the weak-irreducibility certificate:
/// lines through `p`, `q`, `p + q`, `p - q` and each `e_i`, the plane
/// spanned by `p` and `q`, its timelike/spacelike splitting, and all
/// coordinate planes `e_i, e_j`.
pub fn standard_candidate_subspaces(frame: WittFrame) -> Vec<QSubspace> {
    let n = frame.n();
    let dim = frame.dim();
    let mut singles: Vec<Vec<Rational>> = vec![frame.p(), frame.q()];
    let plus: Vec<Rational> = frame
        .p()
        .iter()
        .zip(&frame.q())
        .map(|(a, b)| a.clone() + b.clone())
        .collect();
    let minus: Vec<Rational> = frame
        .p()
        .iter()
        .zip(&frame.q())
        .map(|(a, b)| a.clone() - b.clone())
        .collect();
    singles.push(plus.clone());
    singles.push(minus.clone());
    for i in 1..=n {
        singles.push(frame.e(i));
    }
    let mut out: Vec<QSubspace> = singles
        .into_iter()
        .map(|v| QSubspace::span_unchecked(dim, vec![v]))
        .collect();
    out.push(QSubspace::span_unchecked(dim, vec![frame.p(), frame.q()]));
    out.push(QSubspace::span_unchecked(dim, vec![plus, minus]));
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(QSubspace::span_unchecked(dim, vec![frame.e(i), frame.e(j)]));
        }
    }
    out
}
