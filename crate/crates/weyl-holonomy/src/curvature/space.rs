//! Curvature tensor spaces and the Berger verdict.

use super::envelope::Envelope;
use super::{biv_count, biv_index};
use crate::lie::LieSubalgebra;
use crate::matrix::Matrix;
use crate::solve::nullspace;
use crate::{QMatrix, QSubspace, Rational};
use num_traits::Zero;

/// A linear map from bivectors into `gl(N)` satisfying the first Bianchi
/// identity, stored through its values on the basis bivectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurvatureTensor {
    matrix_dim: usize,
    values: Vec<QMatrix>,
}

impl CurvatureTensor {
    pub fn from_values(matrix_dim: usize, values: Vec<QMatrix>) -> Self {
        assert_eq!(values.len(), biv_count(matrix_dim));
        for v in &values {
            assert_eq!((v.rows(), v.cols()), (matrix_dim, matrix_dim));
        }
        Self { matrix_dim, values }
    }

    pub fn zero(matrix_dim: usize) -> Self {
        Self {
            matrix_dim,
            values: vec![QMatrix::zeros(matrix_dim, matrix_dim); biv_count(matrix_dim)],
        }
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn basis_values(&self) -> &[QMatrix] {
        &self.values
    }

    /// Value on the pair of basis vectors `(i, j)` in any order.
    pub fn value(&self, i: usize, j: usize) -> QMatrix {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.values[biv_index(i, j, self.matrix_dim)].clone(),
            Ordering::Equal => QMatrix::zeros(self.matrix_dim, self.matrix_dim),
            Ordering::Greater => self.values[biv_index(j, i, self.matrix_dim)].neg(),
        }
    }

    /// Bilinear evaluation on arbitrary vectors.
    pub fn evaluate(&self, x: &[Rational], y: &[Rational]) -> QMatrix {
        assert_eq!(x.len(), self.matrix_dim);
        assert_eq!(y.len(), self.matrix_dim);
        let mut out = QMatrix::zeros(self.matrix_dim, self.matrix_dim);
        for i in 0..self.matrix_dim {
            for j in i + 1..self.matrix_dim {
                let c = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
                if !c.is_zero() {
                    out = out.add(&self.values[biv_index(i, j, self.matrix_dim)].scale(&c));
                }
            }
        }
        out
    }

    /// First Bianchi identity on all basis triples.
    pub fn satisfies_bianchi(&self) -> bool {
        let n = self.matrix_dim;
        let unit = |i: usize| {
            let mut v = vec![Rational::zero(); n];
            v[i] = num_traits::One::one();
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = self.value(i, j).apply(&unit(k));
                    for (t, x) in self.value(j, k).apply(&unit(i)).into_iter().enumerate() {
                        acc[t] = acc[t].clone() + x;
                    }
                    for (t, x) in self.value(k, i).apply(&unit(j)).into_iter().enumerate() {
                        acc[t] = acc[t].clone() + x;
                    }
                    if !acc.iter().all(Zero::is_zero) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Do all values lie in the given subspace of `gl(N)`?
    pub fn values_in(&self, space: &QSubspace) -> bool {
        self.values
            .iter()
            .all(|v| space.contains(v.flatten()).unwrap_or(false))
    }

    /// Full coefficient array (bivector-major, matrix-entry-minor); the
    /// canonical coordinate vector used for comparisons and spans.
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        self.values.iter().flat_map(|v| v.flatten().to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(QMatrix::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            matrix_dim: self.matrix_dim,
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.matrix_dim, other.matrix_dim);
        Self {
            matrix_dim: self.matrix_dim,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

/// Canonical basis of the space of algebraic curvature tensors of type `g`.
///
/// The tensor values range over the smallest standard envelope of `g`;
/// membership of every value in `g` and the Bianchi identity on every basis
/// triple are stacked into one linear system whose kernel is returned.
pub fn curvature_space(g: &LieSubalgebra) -> Vec<CurvatureTensor> {
    assert!(g.is_bracket_closed(), "curvature space needs a bracket-closed algebra");
    curvature_space_unchecked(g)
}

pub(crate) fn curvature_space_unchecked(g: &LieSubalgebra) -> Vec<CurvatureTensor> {
    let env = Envelope::for_algebra(g);
    let size = env.matrix_dim();
    let env_dim = env.dim();
    let env_basis = env.basis();
    let nb = biv_count(size);
    let unknowns = nb * env_dim;

    let mut rows: Vec<Vec<Rational>> = Vec::new();

    // membership: annihilator functionals of g inside the envelope,
    // applied to the value on every bivector
    let g_coords: Vec<Vec<Rational>> = g
        .basis_matrices()
        .iter()
        .map(|m| env.coords(m).expect("envelope contains the algebra"))
        .collect();
    let ann = QSubspace::span_unchecked(env_dim, g_coords).annihilator();
    for t in 0..nb {
        for w in ann.basis() {
            let mut row = vec![Rational::zero(); unknowns];
            row[t * env_dim..(t + 1) * env_dim].clone_from_slice(w);
            rows.push(row);
        }
    }

    // Bianchi identity on every basis triple, one scalar row per output
    // coordinate
    for i in 0..size {
        for j in i + 1..size {
            for k in j + 1..size {
                let tij = biv_index(i, j, size);
                let tjk = biv_index(j, k, size);
                let tik = biv_index(i, k, size);
                for c in 0..size {
                    let mut row = vec![Rational::zero(); unknowns];
                    for (m, b) in env_basis.iter().enumerate() {
                        // R(e_i, e_j) e_k + R(e_j, e_k) e_i - R(e_i, e_k) e_j
                        let mut add = |slot: usize, val: Rational| {
                            if !val.is_zero() {
                                row[slot] = row[slot].clone() + val;
                            }
                        };
                        add(tij * env_dim + m, b[(c, k)].clone());
                        add(tjk * env_dim + m, b[(c, i)].clone());
                        add(tik * env_dim + m, -b[(c, j)].clone());
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
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
            let values: Vec<QMatrix> = (0..nb)
                .map(|t| env.reconstruct(&u[t * env_dim..(t + 1) * env_dim]))
                .collect();
            CurvatureTensor::from_values(size, values)
        })
        .collect()
}

/// Span of all values of the given curvature tensors inside `gl(N)`.
pub fn generated_algebra(matrix_dim: usize, basis: &[CurvatureTensor]) -> QSubspace {
    let mut vectors = Vec::new();
    for r in basis {
        assert_eq!(r.matrix_dim(), matrix_dim);
        for v in r.basis_values() {
            if !v.is_zero() {
                vectors.push(v.flatten().to_vec());
            }
        }
    }
    QSubspace::span_unchecked(matrix_dim * matrix_dim, vectors)
}

/// Outcome of the Berger test, with the generated span as witness.
#[derive(Clone, Debug)]
pub struct BergerVerdict {
    pub is_berger: bool,
    pub curvature_dim: usize,
    pub witness: QSubspace,
}

/// Decide whether the span of all curvature values recovers the algebra.
pub fn berger_check(g: &LieSubalgebra) -> BergerVerdict {
    let basis = curvature_space(g);
    let witness = generated_algebra(g.matrix_dim(), &basis);
    let is_berger = witness == *g.carrier();
    BergerVerdict { is_berger, curvature_dim: basis.len(), witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::lie::{make_family, so_algebra, Family, FamilySpec};

    #[test]
    fn curvature_space_of_so2_and_so3() {
        // classical dimension n^2 (n^2 - 1) / 12
        let basis2 = curvature_space(&so_algebra(2));
        assert_eq!(basis2.len(), 1);
        let basis3 = curvature_space(&so_algebra(3));
        assert_eq!(basis3.len(), 6);
        for r in &basis3 {
            assert!(r.satisfies_bianchi());
            assert!(r.values_in(so_algebra(3).carrier()));
        }
    }

    #[test]
    fn so3_curvature_generates_so3() {
        let so3 = so_algebra(3);
        let basis = curvature_space(&so3);
        let generated = generated_algebra(3, &basis);
        assert_eq!(generated, *so3.carrier());
        assert!(berger_check(&so3).is_berger);
    }

    #[test]
    fn empty_basis_generates_zero() {
        let s = generated_algebra(3, &[]);
        assert!(s.is_zero());
    }

    #[test]
    fn evaluation_is_antisymmetric() {
        let basis = curvature_space(&so_algebra(3));
        let x = vec![int(1), int(2), int(0)];
        let y = vec![int(0), int(1), int(-1)];
        for r in &basis {
            assert_eq!(r.evaluate(&x, &y), r.evaluate(&y, &x).neg());
        }
    }

    #[test]
    fn rid_g1h_is_berger() {
        let h = {
            let mut m = QMatrix::zeros(2, 2);
            m[(1, 0)] = int(1);
            m[(0, 1)] = int(-1);
            vec![m]
        };
        let g = make_family(&FamilySpec::new(Family::RidG1H, 2).with_h(h)).unwrap();
        let verdict = berger_check(&g);
        assert!(verdict.is_berger);
        assert_eq!(verdict.witness, *g.carrier());
    }

    #[test]
    fn generated_span_is_contained_in_the_algebra() {
        let g = make_family(&FamilySpec::new(Family::G2H, 2)).unwrap();
        let basis = curvature_space(&g);
        let gen = generated_algebra(g.matrix_dim(), &basis);
        assert!(g.carrier().contains_space(&gen).unwrap());
    }
}
