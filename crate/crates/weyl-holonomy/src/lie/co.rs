//! Elements of the conformal algebra preserving the isotropic line through
//! `p`, in `(b, a, A, X)` coordinates.
//!
//! Relative to a Witt frame the algebra consists of the matrices
//!
//! ```text
//!        ( a  X^t   0 )
//! b*Id + ( 0   A   -X )
//!        ( 0   0   -a )
//! ```
//!
//! with `A` skew. The scalar part `b` is recovered from the trace, every
//! other block is read off positionally; [`CoElement::decode`] reports the
//! first block that breaks the shape.

use super::WittFrame;
use crate::error::DecodeError;
use crate::{QMatrix, Rational};
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoElement {
    frame: WittFrame,
    b: Rational,
    a: Rational,
    rotation: QMatrix,
    translation: Vec<Rational>,
}

impl CoElement {
    /// Assemble an element from its four components. `rotation` must be a
    /// skew `n x n` matrix and `translation` a vector of length `n`.
    pub fn new(
        frame: WittFrame,
        b: Rational,
        a: Rational,
        rotation: QMatrix,
        translation: Vec<Rational>,
    ) -> Self {
        let n = frame.n();
        assert_eq!((rotation.rows(), rotation.cols()), (n, n), "rotation block shape");
        assert!(rotation.add(&rotation.transpose()).is_zero(), "rotation block must be skew");
        assert_eq!(translation.len(), n, "translation length");
        Self { frame, b, a, rotation, translation }
    }

    pub fn zero(frame: WittFrame) -> Self {
        let n = frame.n();
        Self {
            frame,
            b: Rational::zero(),
            a: Rational::zero(),
            rotation: QMatrix::zeros(n, n),
            translation: vec![Rational::zero(); n],
        }
    }

    /// Purely scalar element `b * Id`.
    pub fn scalar(frame: WittFrame, b: Rational) -> Self {
        let mut e = Self::zero(frame);
        e.b = b;
        e
    }

    pub fn frame(&self) -> WittFrame {
        self.frame
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn rotation(&self) -> &QMatrix {
        &self.rotation
    }

    pub fn translation(&self) -> &[Rational] {
        &self.translation
    }

    /// The full `(n + 2) x (n + 2)` matrix in the frame ordering.
    pub fn matrix(&self) -> QMatrix {
        let n = self.frame.n();
        let mut m = QMatrix::zeros(n + 2, n + 2);
        for i in 0..n + 2 {
            m[(i, i)] = self.b.clone();
        }
        m[(0, 0)] = self.b.clone() + self.a.clone();
        m[(n + 1, n + 1)] = self.b.clone() - self.a.clone();
        for j in 0..n {
            m[(0, j + 1)] = self.translation[j].clone();
            m[(j + 1, n + 1)] = -self.translation[j].clone();
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    m[(i + 1, j + 1)] = self.rotation[(i, j)].clone();
                }
            }
        }
        m
    }

    /// Read a matrix back into `(b, a, A, X)` components.
    pub fn decode(frame: WittFrame, m: &QMatrix) -> Result<Self, DecodeError> {
        let n = frame.n();
        if m.rows() != n + 2 || m.cols() != n + 2 {
            return Err(DecodeError::BadShape { rows: m.rows(), cols: m.cols() });
        }
        let size = Rational::from_integer((n as i64 + 2).into());
        let b = m.trace() / size;

        if !m[(0, n + 1)].is_zero() {
            return Err(DecodeError::CornerNotZero);
        }
        for i in 1..n + 2 {
            if !m[(i, 0)].is_zero() {
                return Err(DecodeError::LowerLeftNotZero { row: i });
            }
        }
        for j in 1..=n {
            if !m[(n + 1, j)].is_zero() {
                return Err(DecodeError::LastRowNotZero { col: j });
            }
        }
        let a = m[(0, 0)].clone() - b.clone();
        if m[(n + 1, n + 1)].clone() != b.clone() - a.clone() {
            return Err(DecodeError::DiagonalMismatch);
        }
        let rotation = QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::zero()
            } else {
                m[(i + 1, j + 1)].clone()
            }
        });
        for i in 0..n {
            if m[(i + 1, i + 1)] != b {
                return Err(DecodeError::MiddleBlockNotSkew { row: i, col: i });
            }
            for j in 0..n {
                if !(rotation[(i, j)].clone() + rotation[(j, i)].clone()).is_zero() {
                    return Err(DecodeError::MiddleBlockNotSkew { row: i, col: j });
                }
            }
        }
        let translation: Vec<Rational> = (0..n).map(|j| m[(0, j + 1)].clone()).collect();
        for (j, x) in translation.iter().enumerate() {
            if !(m[(j + 1, n + 1)].clone() + x.clone()).is_zero() {
                return Err(DecodeError::TranslationMismatch { index: j });
            }
        }
        Ok(Self { frame, b, a, rotation, translation })
    }

    /// Lie bracket, computed as the matrix commutator and decoded. The
    /// scalar part of a bracket always vanishes.
    pub fn bracket(&self, other: &Self) -> Self {
        assert_eq!(self.frame, other.frame, "bracket across different frames");
        let c = self.matrix().commutator(&other.matrix());
        let out = Self::decode(self.frame, &c)
            .expect("commutator of model elements stays in the model");
        debug_assert!(out.b.is_zero());
        out
    }
}
