//! Enveloping coordinate spaces for curvature computations.
//!
//! The curvature solver works with unknown values ranging over a standard
//! algebra containing the target: membership in the target is imposed through
//! annihilator rows. Picking the smallest standard envelope keeps the
//! stacked system small.

use crate::lie::{CoElement, LieSubalgebra, WittFrame};
use crate::{QMatrix, Rational};
use num_traits::{One, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Envelope {
    /// Conformal algebra preserving the line through `p`; coordinates
    /// `(b, a, A_{i<j}, X)`.
    CoRp(WittFrame),
    /// Scalar line plus the full orthogonal algebra of the Witt form.
    CoWitt(WittFrame),
    /// Scalar line plus Euclidean rotations.
    CoEuclid(usize),
    /// All of `gl(N)`.
    Gl(usize),
}

impl Envelope {
    /// Smallest standard envelope containing the algebra.
    pub fn for_algebra(g: &LieSubalgebra) -> Envelope {
        let basis = g.basis_matrices();
        if let Some(frame) = g.witt() {
            if basis.iter().all(|m| CoElement::decode(frame, m).is_ok()) {
                return Envelope::CoRp(frame);
            }
            let co_witt = Envelope::CoWitt(frame);
            if basis.iter().all(|m| co_witt.coords(m).is_some()) {
                return co_witt;
            }
            return Envelope::Gl(g.matrix_dim());
        }
        let co_euclid = Envelope::CoEuclid(g.matrix_dim());
        if basis.iter().all(|m| co_euclid.coords(m).is_some()) {
            return co_euclid;
        }
        Envelope::Gl(g.matrix_dim())
    }

    /// Size of the matrices in the envelope.
    pub fn matrix_dim(&self) -> usize {
        match self {
            Envelope::CoRp(f) | Envelope::CoWitt(f) => f.dim(),
            Envelope::CoEuclid(n) | Envelope::Gl(n) => *n,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Envelope::CoRp(f) => 2 + f.n() * (f.n() - 1) / 2 + f.n(),
            Envelope::CoWitt(f) => 1 + (f.n() + 2) * (f.n() + 1) / 2,
            Envelope::CoEuclid(n) => 1 + n * (n - 1) / 2,
            Envelope::Gl(n) => n * n,
        }
    }

    /// Ordered basis matrices; [`Envelope::coords`] is exact for this order.
    pub fn basis(&self) -> Vec<QMatrix> {
        match self {
            Envelope::CoRp(frame) => {
                let n = frame.n();
                let zero_rot = QMatrix::zeros(n, n);
                let zero_x = vec![Rational::zero(); n];
                let mut out = vec![
                    QMatrix::identity(n + 2),
                    CoElement::new(*frame, Rational::zero(), Rational::one(), zero_rot.clone(), zero_x.clone())
                        .matrix(),
                ];
                for i in 0..n {
                    for j in i + 1..n {
                        let mut a = QMatrix::zeros(n, n);
                        a[(j, i)] = Rational::one();
                        a[(i, j)] = -Rational::one();
                        out.push(
                            CoElement::new(*frame, Rational::zero(), Rational::zero(), a, zero_x.clone())
                                .matrix(),
                        );
                    }
                }
                for j in 0..n {
                    let mut x = zero_x.clone();
                    x[j] = Rational::one();
                    out.push(
                        CoElement::new(*frame, Rational::zero(), Rational::zero(), zero_rot.clone(), x)
                            .matrix(),
                    );
                }
                out
            }
            Envelope::CoWitt(frame) => {
                let n = frame.n();
                let mut out = vec![QMatrix::identity(n + 2)];
                out.push(frame.wedge(&frame.p(), &frame.q()).expect("frame"));
                for i in 1..=n {
                    out.push(frame.wedge(&frame.p(), &frame.e(i)).expect("frame"));
                }
                for i in 1..=n {
                    out.push(frame.wedge(&frame.q(), &frame.e(i)).expect("frame"));
                }
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(frame.wedge(&frame.e(i), &frame.e(j)).expect("frame"));
                    }
                }
                out
            }
            Envelope::CoEuclid(n) => {
                let mut out = vec![QMatrix::identity(*n)];
                for i in 0..*n {
                    for j in i + 1..*n {
                        let mut m = QMatrix::zeros(*n, *n);
                        m[(j, i)] = Rational::one();
                        m[(i, j)] = -Rational::one();
                        out.push(m);
                    }
                }
                out
            }
            Envelope::Gl(n) => {
                let mut out = Vec::with_capacity(n * n);
                for r in 0..*n {
                    for c in 0..*n {
                        let mut m = QMatrix::zeros(*n, *n);
                        m[(r, c)] = Rational::one();
                        out.push(m);
                    }
                }
                out
            }
        }
    }

    /// Coordinates of a matrix in the envelope basis, or `None` if it lies
    /// outside the envelope.
    pub fn coords(&self, m: &QMatrix) -> Option<Vec<Rational>> {
        let size = self.matrix_dim();
        if m.rows() != size || m.cols() != size {
            return None;
        }
        match self {
            Envelope::CoRp(frame) => {
                let e = CoElement::decode(*frame, m).ok()?;
                let n = frame.n();
                let mut coords = vec![e.b().clone(), e.a().clone()];
                for i in 0..n {
                    for j in i + 1..n {
                        coords.push(e.rotation()[(j, i)].clone());
                    }
                }
                coords.extend(e.translation().iter().cloned());
                Some(coords)
            }
            Envelope::CoWitt(frame) => {
                let n = frame.n();
                let b = m.trace() / Rational::from_integer(((n + 2) as i64).into());
                let s = m.sub(&QMatrix::identity(n + 2).scale(&b));
                let mut coords = vec![b, -s[(0, 0)].clone()];
                for i in 1..=n {
                    coords.push(s[(i, n + 1)].clone());
                }
                for i in 1..=n {
                    coords.push(s[(i, 0)].clone());
                }
                for i in 1..=n {
                    for j in i + 1..=n {
                        coords.push(s[(j, i)].clone());
                    }
                }
                self.verify(m, &coords)
            }
            Envelope::CoEuclid(n) => {
                let b = m.trace() / Rational::from_integer((*n as i64).into());
                let s = m.sub(&QMatrix::identity(*n).scale(&b));
                let mut coords = vec![b];
                for i in 0..*n {
                    for j in i + 1..*n {
                        coords.push(s[(j, i)].clone());
                    }
                }
                self.verify(m, &coords)
            }
            Envelope::Gl(_) => Some(m.flatten().to_vec()),
        }
    }

    fn verify(&self, m: &QMatrix, coords: &[Rational]) -> Option<Vec<Rational>> {
        if self.reconstruct(coords) == *m {
            Some(coords.to_vec())
        } else {
            None
        }
    }

    /// Linear combination of the envelope basis.
    pub fn reconstruct(&self, coords: &[Rational]) -> QMatrix {
        let size = self.matrix_dim();
        assert_eq!(coords.len(), self.dim());
        let mut out = QMatrix::zeros(size, size);
        for (b, c) in self.basis().iter().zip(coords) {
            if !c.is_zero() {
                out = out.add(&b.scale(c));
            }
        }
        out
    }
}
