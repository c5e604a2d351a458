//! Weak curvature tensors: maps `P` from the Euclidean space into a
//! rotation subalgebra with totally cyclic trace, and the weak-Berger test.

use crate::lie::LieSubalgebra;
use crate::matrix::Matrix;
use crate::solve::nullspace;
use crate::{QMatrix, QSubspace, Rational};
use num_traits::Zero;

/// An element of the weak curvature space: the operators `P(e_1), ...,
/// P(e_n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakCurvature {
    p_ops: Vec<QMatrix>,
}

impl WeakCurvature {
    pub fn from_ops(p_ops: Vec<QMatrix>) -> Self {
        let n = p_ops.len();
        for p in &p_ops {
            assert_eq!((p.rows(), p.cols()), (n, n));
        }
        Self { p_ops }
    }

    pub fn n(&self) -> usize {
        self.p_ops.len()
    }

    /// Operator `P(e_i)` (zero-based index).
    pub fn op(&self, i: usize) -> &QMatrix {
        &self.p_ops[i]
    }

    pub fn ops(&self) -> &[QMatrix] {
        &self.p_ops
    }

    pub fn evaluate(&self, x: &[Rational]) -> QMatrix {
        let n = self.n();
        assert_eq!(x.len(), n);
        let mut out = QMatrix::zeros(n, n);
        for (p, c) in self.p_ops.iter().zip(x) {
            if !c.is_zero() {
                out = out.add(&p.scale(c));
            }
        }
        out
    }

    /// The cyclic condition `(P(X)Y, Z) + (P(Y)Z, X) + (P(Z)X, Y) = 0` on
    /// all basis triples.
    pub fn satisfies_cyclic(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = self.p_ops[i][(k, j)].clone()
                        + self.p_ops[j][(i, k)].clone()
                        + self.p_ops[k][(j, i)].clone();
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn values_in(&self, space: &QSubspace) -> bool {
        self.p_ops
            .iter()
            .all(|p| space.contains(p.flatten()).unwrap_or(false))
    }

    pub fn coefficient_vector(&self) -> Vec<Rational> {
        self.p_ops.iter().flat_map(|p| p.flatten().to_vec()).collect()
    }
}

/// Canonical basis of the space of weak curvature tensors of type `h`,
/// where `h` is a subalgebra of the Euclidean rotations on `R^n`.
pub fn weak_curvature_space(h: &LieSubalgebra) -> Vec<WeakCurvature> {
    let n = h.matrix_dim();
    let h_basis = h.basis_matrices();
    for a in &h_basis {
        assert!(a.add(&a.transpose()).is_zero(), "h must consist of skew matrices");
    }
    let d = h_basis.len();
    if d == 0 || n == 0 {
        return Vec::new();
    }
    let unknowns = n * d;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = vec![Rational::zero(); unknowns];
                for (m, a) in h_basis.iter().enumerate() {
                    let mut add = |slot: usize, val: Rational| {
                        if !val.is_zero() {
                            row[slot] = row[slot].clone() + val;
                        }
                    };
                    add(i * d + m, a[(k, j)].clone());
                    add(j * d + m, a[(i, k)].clone());
                    add(k * d + m, a[(j, i)].clone());
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        nullspace(&Matrix::zeros(1, unknowns))
    } else {
        nullspace(&Matrix::from_rows(rows))
    };
    kernel
        .basis()
        .iter()
        .map(|u| {
            let ops = (0..n)
                .map(|i| {
                    let mut m = QMatrix::zeros(n, n);
                    for (idx, a) in h_basis.iter().enumerate() {
                        let c = &u[i * d + idx];
                        if !c.is_zero() {
                            m = m.add(&a.scale(c));
                        }
                    }
                    m
                })
                .collect();
            WeakCurvature::from_ops(ops)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct WeakBergerVerdict {
    pub holds: bool,
    pub weak_space_dim: usize,
    pub witness: QSubspace,
}

/// Weak-Berger test: the images of all weak curvature tensors must span `h`.
pub fn weak_berger_check(h: &LieSubalgebra) -> WeakBergerVerdict {
    let basis = weak_curvature_space(h);
    let n = h.matrix_dim();
    let mut vectors = Vec::new();
    for p in &basis {
        for op in p.ops() {
            if !op.is_zero() {
                vectors.push(op.flatten().to_vec());
            }
        }
    }
    let witness = QSubspace::span_unchecked(n * n, vectors);
    WeakBergerVerdict {
        holds: witness == *h.carrier(),
        weak_space_dim: basis.len(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{direct_sum_euclidean, so_algebra, LieSubalgebra};

    #[test]
    fn weak_space_of_trivial_algebra_is_zero() {
        let zero = LieSubalgebra::from_span(2, None, vec![], "0");
        assert!(weak_curvature_space(&zero).is_empty());
        // vacuous equality of zero spaces
        assert!(weak_berger_check(&zero).holds);
    }

    #[test]
    fn weak_space_of_so2_is_two_dimensional() {
        // for n = 2 the cyclic condition is empty: P(e_i) = c_i J always works
        let basis = weak_curvature_space(&so_algebra(2));
        assert_eq!(basis.len(), 2);
        for p in &basis {
            assert!(p.satisfies_cyclic());
            assert!(p.values_in(so_algebra(2).carrier()));
        }
    }

    #[test]
    fn so2_and_so3_are_weak_berger() {
        assert!(weak_berger_check(&so_algebra(2)).holds);
        assert!(weak_berger_check(&so_algebra(3)).holds);
    }

    #[test]
    fn weak_space_is_additive_over_direct_sums() {
        let so2 = so_algebra(2);
        let sum = direct_sum_euclidean(&[&so2, &so2], false);
        let d = weak_curvature_space(&sum).len();
        assert_eq!(d, 2 * weak_curvature_space(&so2).len());
        assert!(weak_berger_check(&sum).holds);
    }
}
