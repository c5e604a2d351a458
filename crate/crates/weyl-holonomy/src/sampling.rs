//! Seeded random rational data for reproducible fixtures.
//!
//! All randomized tests and suite fixtures draw from this sampler with a
//! fixed seed, keeping numerators and denominators small so coefficient
//! growth in downstream eliminations stays bounded.

use crate::lie::{CoElement, WittFrame};
use crate::{QJet, QMatrix, Rational};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A rational with numerator in `[-7, 7]` and denominator in `[1, 7]`.
    pub fn rational(&mut self) -> Rational {
        let numer = self.rng.gen_range(-7i64..=7);
        let denom = self.rng.gen_range(1i64..=7);
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let q = self.rational();
            if !num_traits::Zero::is_zero(&q) {
                return q;
            }
        }
    }

    pub fn vector(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.rational()).collect()
    }

    pub fn skew_matrix(&mut self, n: usize) -> QMatrix {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let x = self.rational();
                m[(i, j)] = x.clone();
                m[(j, i)] = -x;
            }
        }
        m
    }

    /// Random element of the line-preserving conformal algebra.
    pub fn co_element(&mut self, frame: WittFrame) -> CoElement {
        let n = frame.n();
        CoElement::new(
            frame,
            self.rational(),
            self.rational(),
            self.skew_matrix(n),
            self.vector(n),
        )
    }

    /// A quadratic jet `sum c_ab t_a t_b` in the listed variables.
    pub fn quadratic_jet(&mut self, vars: usize, order: u32, in_vars: &[usize]) -> QJet {
        let mut jet = QJet::zero(vars, order);
        for (pos, &a) in in_vars.iter().enumerate() {
            for &b in &in_vars[pos..] {
                let mut mono = vec![0u32; vars];
                mono[a] += 1;
                mono[b] += 1;
                jet = jet.add(&QJet::from_terms(vars, order, vec![(mono, self.rational())]));
            }
        }
        jet
    }
}
