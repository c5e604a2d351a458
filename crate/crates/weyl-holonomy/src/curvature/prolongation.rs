//! First prolongations of matrix Lie algebras.

use crate::lie::{CoElement, LieSubalgebra};
use crate::matrix::Matrix;
use crate::solve::nullspace;
use crate::{QMatrix, Rational};
use num_traits::{One, Zero};

/// Basis of `{ phi in Hom(R^N, g) : phi(X) Y = phi(Y) X }`; each element is
/// stored through its values `phi(e_1), ..., phi(e_N)`.
#[derive(Clone, Debug)]
pub struct Prolongation {
    matrix_dim: usize,
    basis: Vec<Vec<QMatrix>>,
}

impl Prolongation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn basis(&self) -> &[Vec<QMatrix>] {
        &self.basis
    }

    /// Symmetry `phi(e_i) e_j = phi(e_j) e_i` for every basis element.
    pub fn is_symmetric(&self) -> bool {
        let n = self.matrix_dim;
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        };
        self.basis.iter().all(|phi| {
            (0..n).all(|i| {
                (i + 1..n).all(|j| phi[i].apply(&unit(j)) == phi[j].apply(&unit(i)))
            })
        })
    }
}

/// Canonical basis of the first prolongation of `g`.
pub fn first_prolongation(g: &LieSubalgebra) -> Prolongation {
    let n = g.matrix_dim();
    let g_basis = g.basis_matrices();
    let d = g_basis.len();
    if d == 0 || n == 0 {
        return Prolongation { matrix_dim: n, basis: Vec::new() };
    }
    let unknowns = n * d;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for c in 0..n {
                let mut row = vec![Rational::zero(); unknowns];
                for (m, b) in g_basis.iter().enumerate() {
                    let mut add = |slot: usize, val: Rational| {
                        if !val.is_zero() {
                            row[slot] = row[slot].clone() + val;
                        }
                    };
                    add(i * d + m, b[(c, j)].clone());
                    add(j * d + m, -b[(c, i)].clone());
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
    let basis = kernel
        .basis()
        .iter()
        .map(|u| {
            (0..n)
                .map(|i| {
                    let mut m = QMatrix::zeros(n, n);
                    for (idx, b) in g_basis.iter().enumerate() {
                        let c = &u[i * d + idx];
                        if !c.is_zero() {
                            m = m.add(&b.scale(c));
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    Prolongation { matrix_dim: n, basis }
}

/// The two sides of the non-vanishing criterion for subalgebras of the
/// line-preserving conformal algebra: the prolongation dimension is positive
/// exactly when the algebra contains the scalar-shifted boost `p ^ q + Id`
/// together with all translations. Both booleans are returned so callers can
/// assert their agreement.
pub fn prolongation_nonzero_criterion(f: &LieSubalgebra) -> (bool, bool) {
    let frame = f.witt().expect("criterion needs a Witt frame");
    let n = frame.n();
    let dim_positive = first_prolongation(f).dim() > 0;

    let pq = frame.wedge(&frame.p(), &frame.q()).expect("frame");
    let shifted = pq.add(&QMatrix::identity(n + 2));
    let mut contains = f.contains_matrix(&shifted);
    for j in 0..n {
        if !contains {
            break;
        }
        let mut x = vec![Rational::zero(); n];
        x[j] = Rational::one();
        let t = CoElement::new(frame, Rational::zero(), Rational::zero(), QMatrix::zeros(n, n), x);
        contains = f.contains_matrix(&t.matrix());
    }
    (dim_positive, contains)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{co_pseudo, co_rp_full, make_family, so_algebra, so_pseudo, so_rp, Family, FamilySpec, WittFrame};

    #[test]
    fn orthogonal_algebras_have_zero_prolongation() {
        assert_eq!(first_prolongation(&so_algebra(3)).dim(), 0);
        assert_eq!(first_prolongation(&so_pseudo(1, 2)).dim(), 0);
    }

    #[test]
    fn conformal_algebra_prolongation_has_space_dimension() {
        let p = first_prolongation(&co_pseudo(1, 2));
        assert_eq!(p.dim(), 3);
        assert!(p.is_symmetric());
        assert_eq!(first_prolongation(&co_pseudo(2, 0)).dim(), 2);
    }

    #[test]
    fn line_preserving_conformal_algebra_has_line_prolongation() {
        for n in 1..=3 {
            let f = co_rp_full(WittFrame::new(n));
            assert_eq!(first_prolongation(&f).dim(), 1, "n = {n}");
        }
    }

    #[test]
    fn criterion_agrees_on_examples() {
        let full = co_rp_full(WittFrame::new(2));
        assert_eq!(prolongation_nonzero_criterion(&full), (true, true));

        // rotation block alone: neither side
        let g2 = make_family(&FamilySpec::new(Family::G2H, 2)).unwrap();
        let rotations_only = so_rp(WittFrame::new(2)).project_so_n_part().unwrap();
        let _ = rotations_only;
        let (a, b) = prolongation_nonzero_criterion(&g2);
        assert_eq!((a, b), (false, false));

        // exactly the line plus translations
        let frame = WittFrame::new(2);
        let pq_id = frame
            .wedge(&frame.p(), &frame.q())
            .unwrap()
            .add(&QMatrix::identity(4));
        let mut gens = vec![pq_id];
        for j in 1..=2 {
            gens.push(frame.wedge(&frame.p(), &frame.e(j)).unwrap());
        }
        let f = crate::lie::LieSubalgebra::lie_closure(4, Some(frame), &gens, "minimal").unwrap();
        assert_eq!(prolongation_nonzero_criterion(&f), (true, true));
    }
}
