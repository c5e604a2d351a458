//! Exact elimination, null spaces and canonical subspaces.
//!
//! Elimination is fraction-free: rows are combined by cross-multiplication
//! (`piv * row - entry * pivot_row`) and re-normalized by their content, so
//! intermediate entries stay integral and small instead of accumulating
//! rational blow-up. The final reduced form divides by pivots, giving the
//! unique reduced row echelon form over the field.

use crate::error::LinalgError;
use crate::matrix::Matrix;
use crate::scalar::ExactScalar;
use num_traits::Zero;

/// Result of a reduction: the RREF matrix and its pivot columns.
pub struct Reduced<T> {
    pub mat: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: ExactScalar> Reduced<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn combine_rows<T: ExactScalar>(target: &mut [T], pivot_row: &[T], piv: &T, factor: &T) {
    for (t, p) in target.iter_mut().zip(pivot_row) {
        let mut v = t.clone() * piv.clone();
        if !factor.is_zero() && !p.is_zero() {
            v = v - factor.clone() * p.clone();
        }
        *t = v;
    }
    T::strip_row_content(target);
}

/// Unique reduced row echelon form with unit pivots.
pub fn rref<T: ExactScalar>(m: &Matrix<T>) -> Reduced<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work: Vec<Vec<T>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    for row in work.iter_mut() {
        T::strip_row_content(row);
    }

    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pr);
        let pivot_row = work[rank].clone();
        let piv = pivot_row[col].clone();
        for row in work.iter_mut().skip(rank + 1) {
            let factor = row[col].clone();
            if !factor.is_zero() {
                combine_rows(row, &pivot_row, &piv, &factor);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // eliminate above pivots, then normalize pivots to one
    for k in (0..rank).rev() {
        let col = pivots[k];
        let pivot_row = work[k].clone();
        let piv = pivot_row[col].clone();
        for row in work.iter_mut().take(k) {
            let factor = row[col].clone();
            if !factor.is_zero() {
                combine_rows(row, &pivot_row, &piv, &factor);
            }
        }
    }
    for k in 0..rank {
        let piv = work[k][pivots[k]].clone();
        for x in work[k].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / piv.clone();
            }
        }
    }

    work.truncate(rank);
    let mat = if rank == 0 { Matrix::zeros(0, cols) } else { Matrix::from_rows(work) };
    Reduced { mat, pivots }
}

/// Canonical basis of `{ v : M v = 0 }`.
///
/// `dim + rank(M) = cols(M)` always holds for the result.
pub fn nullspace<T: ExactScalar>(m: &Matrix<T>) -> Subspace<T> {
    let cols = m.cols();
    let red = rref(m);
    let mut vectors = Vec::new();
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (r, &c) in red.pivots.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (r, &pc) in red.pivots.iter().enumerate() {
            v[pc] = -red.mat[(r, free)].clone();
        }
        vectors.push(v);
    }
    Subspace::span_unchecked(cols, vectors)
}

/// Solve `A x = b`; free coordinates are set to zero. `None` when the
/// system is inconsistent.
pub fn solve_linear<T: ExactScalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len());
    let cols = a.cols();
    let aug = Matrix::from_fn(a.rows(), cols + 1, |i, j| {
        if j < cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let red = rref(&aug);
    if red.pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![T::zero(); cols];
    for (r, &pc) in red.pivots.iter().enumerate() {
        x[pc] = red.mat[(r, cols)].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it exists.
pub fn invert<T: ExactScalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    assert!(m.is_square());
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            T::one()
        } else {
            T::zero()
        }
    });
    let red = rref(&aug);
    if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| red.mat[(i, n + j)].clone()))
}

/// A linear subspace in canonical form.
///
/// The basis rows are the non-zero rows of a reduced row echelon form, so two
/// equal subspaces have byte-identical representations and equality testing
/// is plain comparison.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: ExactScalar> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    /// Canonical span of a family of vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(LinalgError::LengthMismatch { expected: ambient, got: v.len() });
            }
        }
        Ok(Self::span_unchecked(ambient, vectors))
    }

    pub(crate) fn span_unchecked(ambient: usize, vectors: Vec<Vec<T>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let red = rref(&Matrix::from_rows(vectors));
        let basis: Vec<Vec<T>> = (0..red.rank()).map(|r| red.mat.row(r).to_vec()).collect();
        Self { ambient, basis, pivots: red.pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    fn check_ambient(&self, len: usize) -> Result<(), LinalgError> {
        if len != self.ambient {
            return Err(LinalgError::AmbientMismatch { expected: self.ambient, got: len });
        }
        Ok(())
    }

    /// Coefficients of `v` against the canonical basis, or `None` if `v` is
    /// outside the subspace.
    pub fn coords(&self, v: &[T]) -> Result<Option<Vec<T>>, LinalgError> {
        self.check_ambient(v.len())?;
        // pivot columns carry unit entries in exactly one basis row each, so
        // the candidate coefficients can be read off directly
        let coeffs: Vec<T> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let mut residual = v.to_vec();
        for (row, c) in self.basis.iter().zip(&coeffs) {
            if c.is_zero() {
                continue;
            }
            for (res, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *res = res.clone() - c.clone() * b.clone();
                }
            }
        }
        if residual.iter().all(Zero::is_zero) {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[T]) -> Result<bool, LinalgError> {
        Ok(self.coords(v)?.is_some())
    }

    pub fn contains_space(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_ambient(other.ambient)?;
        for v in &other.basis {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Set equality; `PartialEq` gives the same answer for equal ambients.
    pub fn same_space(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_ambient(other.ambient)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other.ambient)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Self::span_unchecked(self.ambient, vectors))
    }

    /// The space of linear functionals vanishing on this subspace, as row
    /// vectors for the standard pairing.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            // every functional vanishes: the annihilator is everything
            return Self::span_unchecked(
                self.ambient,
                (0..self.ambient)
                    .map(|i| {
                        let mut v = vec![T::zero(); self.ambient];
                        v[i] = T::one();
                        v
                    })
                    .collect(),
            );
        }
        nullspace(&Matrix::from_rows(self.basis.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use num_rational::BigRational;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<BigRational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
    }

    fn v(entries: Vec<i64>) -> Vec<BigRational> {
        entries.into_iter().map(int).collect()
    }

    #[test]
    fn nullspace_of_identity_is_zero() {
        let ns = nullspace(&m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]));
        assert_eq!(ns.dim(), 0);
        assert!(ns.is_zero());
    }

    #[test]
    fn nullspace_of_zero_matrix_is_everything() {
        let ns = nullspace(&Matrix::<BigRational>::zeros(2, 4));
        assert_eq!(ns.dim(), 4);
    }

    #[test]
    fn nullspace_of_rank_one_matrix() {
        // rows are proportional, kernel has dimension 2
        let mat = m(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = nullspace(&mat);
        assert_eq!(ns.dim(), 2);
        for b in ns.basis() {
            assert!(mat.apply(b).iter().all(num_traits::Zero::is_zero));
        }
        // frozen canonical basis: rows of the RREF of { (-2,1,0), (-3,0,1) }
        assert_eq!(
            ns.basis(),
            &[
                vec![int(1), int(0), ratio(-1, 3)],
                vec![int(0), int(1), ratio(-2, 3)]
            ]
        );
    }

    #[test]
    fn rank_nullity_holds() {
        let mat = m(vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        let red = rref(&mat);
        let ns = nullspace(&mat);
        assert_eq!(red.rank() + ns.dim(), mat.cols());
    }

    #[test]
    fn span_examples() {
        // e1 and e1 + e2 span a plane containing e2
        let s = Subspace::span(3, vec![v(vec![1, 0, 0]), v(vec![1, 1, 0])]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(vec![0, 1, 0])).unwrap());
        assert!(!s.contains(&v(vec![0, 0, 1])).unwrap());

        let empty = Subspace::<BigRational>::span(5, Vec::new()).unwrap();
        assert_eq!(empty.dim(), 0);

        let line = Subspace::span(2, vec![v(vec![1, 2]), v(vec![2, 4]), v(vec![3, 6])]).unwrap();
        assert_eq!(line.dim(), 1);
    }

    #[test]
    fn subspace_equality_is_representation_independent() {
        let a = Subspace::span(3, vec![v(vec![1, 0, 0]), v(vec![0, 1, 0])]).unwrap();
        assert!(a.same_space(&a).unwrap());

        let b = Subspace::span(3, vec![v(vec![2, 0, 0])]).unwrap();
        let c = Subspace::span(3, vec![v(vec![1, 0, 0])]).unwrap();
        assert!(b.same_space(&c).unwrap());

        let d = Subspace::span(3, vec![v(vec![1, 1, 0]), v(vec![1, -1, 0])]).unwrap();
        assert!(a.same_space(&d).unwrap());
        assert_eq!(a, d);

        let wrong = Subspace::span(4, vec![v(vec![1, 0, 0, 0])]).unwrap();
        assert!(a.same_space(&wrong).is_err());
    }

    #[test]
    fn contains_examples() {
        let a = Subspace::span(3, vec![v(vec![1, 1, 0]), v(vec![0, 1, 1])]).unwrap();
        assert!(a.contains(&v(vec![0, 0, 0])).unwrap());
        // e1 - e3 = (e1 + e2) - (e2 + e3)
        assert!(a.contains(&v(vec![1, 0, -1])).unwrap());
        let coords = a.coords(&v(vec![1, 0, -1])).unwrap().unwrap();
        let rebuilt: Vec<BigRational> = (0..3)
            .map(|j| {
                a.basis()
                    .iter()
                    .zip(&coords)
                    .map(|(row, c)| row[j].clone() * c.clone())
                    .fold(int(0), |acc, x| acc + x)
            })
            .collect();
        assert_eq!(rebuilt, v(vec![1, 0, -1]));

        let line = Subspace::span(3, vec![v(vec![1, 0, 0])]).unwrap();
        assert!(!line.contains(&v(vec![0, 1, 0])).unwrap());
    }

    #[test]
    fn span_is_idempotent() {
        let s = Subspace::span(4, vec![v(vec![1, 2, 3, 4]), v(vec![0, 1, 0, 1]), v(vec![1, 3, 3, 5])]).unwrap();
        let again = Subspace::span(4, s.basis().to_vec()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn annihilator_pairs_to_zero() {
        let s = Subspace::span(3, vec![v(vec![1, 1, 0]), v(vec![0, 1, 1])]).unwrap();
        let ann = s.annihilator();
        assert_eq!(ann.dim(), 1);
        for f in ann.basis() {
            for b in s.basis() {
                let pairing = f
                    .iter()
                    .zip(b)
                    .map(|(x, y)| x.clone() * y.clone())
                    .fold(int(0), |acc, x| acc + x);
                assert!(pairing.is_zero());
            }
        }
    }

    #[test]
    fn invert_small_matrix() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let inv = invert(&a).unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(invert(&m(vec![vec![1, 2], vec![2, 4]])).is_none());
    }
}
