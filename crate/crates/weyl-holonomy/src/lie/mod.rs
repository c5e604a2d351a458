//! The Minkowski model, the matrix Lie algebra of conformal maps preserving
//! an isotropic line, and the classified subalgebra families.

mod algebra;
mod co;
mod families;

pub use algebra::{standard_candidate_subspaces, LieSubalgebra};
pub use co::CoElement;
pub use families::{
    case_b2_algebra, co_pseudo, co_rp_full, direct_sum_euclidean, make_family, so_algebra,
    so_pseudo, so_rp, Family, FamilySpec,
};

use crate::error::LinalgError;
use crate::{QMatrix, Rational};
use num_traits::{One, Zero};

/// Witt frame `(p, e_1, ..., e_n, q)` of the Minkowski space of signature
/// `(1, n + 1)`: `p`, `q` isotropic with `(p, q) = 1`, the `e_i` orthonormal
/// and orthogonal to both.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WittFrame {
    n: usize,
}

impl WittFrame {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    /// Number of spacelike directions `e_i`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the underlying space, `n + 2`.
    pub fn dim(&self) -> usize {
        self.n + 2
    }

    /// Gram matrix of the scalar product in the frame ordering.
    pub fn gram(&self) -> QMatrix {
        let n = self.n;
        QMatrix::from_fn(n + 2, n + 2, |i, j| {
            let pairing = (i == 0 && j == n + 1) || (i == n + 1 && j == 0);
            if pairing || (i == j && i >= 1 && i <= n) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    fn unit(&self, index: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[index] = Rational::one();
        v
    }

    pub fn p(&self) -> Vec<Rational> {
        self.unit(0)
    }

    /// The `i`-th spacelike vector, `1 <= i <= n`.
    pub fn e(&self, i: usize) -> Vec<Rational> {
        assert!((1..=self.n).contains(&i), "e_{i} out of range");
        self.unit(i)
    }

    pub fn q(&self) -> Vec<Rational> {
        self.unit(self.n + 1)
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LinalgError> {
        if v.len() != self.dim() {
            return Err(LinalgError::LengthMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    /// The scalar product `x^t G y`.
    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Result<Rational, LinalgError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let gy = self.gram().apply(y);
        Ok(x.iter()
            .zip(&gy)
            .map(|(a, b)| a.clone() * b.clone())
            .fold(Rational::zero(), |acc, t| acc + t))
    }

    /// Matrix of `z -> (x, z) y - (y, z) x`, an element of the orthogonal
    /// algebra of the frame's scalar product.
    pub fn wedge(&self, x: &[Rational], y: &[Rational]) -> Result<QMatrix, LinalgError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let g = self.gram();
        let gx = g.apply(x);
        let gy = g.apply(y);
        Ok(QMatrix::from_fn(self.dim(), self.dim(), |r, c| {
            y[r].clone() * gx[c].clone() - x[r].clone() * gy[c].clone()
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn witt_products() {
        let f = WittFrame::new(3);
        assert_eq!(f.product(&f.p(), &f.q()).unwrap(), int(1));
        assert_eq!(f.product(&f.p(), &f.p()).unwrap(), int(0));
        assert_eq!(f.product(&f.q(), &f.q()).unwrap(), int(0));
        assert_eq!(f.product(&f.e(1), &f.e(1)).unwrap(), int(1));
        assert_eq!(f.product(&f.e(1), &f.e(2)).unwrap(), int(0));
        assert_eq!(f.product(&f.p(), &f.e(2)).unwrap(), int(0));
        assert!(f.product(&f.p(), &[int(1)]).is_err());
    }

    #[test]
    fn wedge_defining_formula() {
        let f = WittFrame::new(2);
        // (p ^ q) p = (p, p) q - (q, p) p = -p
        let pq = f.wedge(&f.p(), &f.q()).unwrap();
        let minus_p: Vec<_> = f.p().iter().map(|x| -x.clone()).collect();
        assert_eq!(pq.apply(&f.p()), minus_p);
        // (e1 ^ e2) e1 = e2
        let e12 = f.wedge(&f.e(1), &f.e(2)).unwrap();
        assert_eq!(e12.apply(&f.e(1)), f.e(2));
        // antisymmetry
        assert!(f.wedge(&f.e(1), &f.e(1)).unwrap().is_zero());
    }

    #[test]
    fn wedge_lands_in_orthogonal_algebra() {
        let f = WittFrame::new(2);
        let g = f.gram();
        for (x, y) in [(f.p(), f.q()), (f.p(), f.e(1)), (f.e(1), f.e(2)), (f.q(), f.e(2))] {
            let w = f.wedge(&x, &y).unwrap();
            assert!(w.transpose().mul(&g).add(&g.mul(&w)).is_zero());
        }
    }
}
