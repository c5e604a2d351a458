//! Jet-level Walker geometry: metrics, connections compatible with a gauge
//! 1-form, curvature, iterated covariant derivatives and the holonomy
//! algebra at the origin.
//!
//! Coordinates are `(v, x^1, ..., x^n, u)`; jets use variable index `0` for
//! `v`, `1..=n` for the `x^i` and `n + 1` for `u`.

mod connection;
mod holonomy;
mod presets;
mod walker;

pub use connection::{
    covariant_derivative_chain, curvature, derive_operator, gauge_compatible, torsion_free,
    weyl_connection, Connection, CurvatureJet,
};
pub use holonomy::{
    holonomy_generate, translation_span, verify_realization, HolonomyResult, RealizationReport,
};
pub use presets::{build_preset, PresetTag, RealizationPreset, RiemannianFactor};
pub use walker::{invert_metric, WeylStructure};

use crate::{QJet, QMatrix, Rational};

/// Square matrix of jets sharing one variable tuple and truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetMatrix {
    size: usize,
    vars: usize,
    order: u32,
    entries: Vec<QJet>,
}

impl JetMatrix {
    pub fn zeros(size: usize, vars: usize, order: u32) -> Self {
        Self { size, vars, order, entries: vec![QJet::zero(vars, order); size * size] }
    }

    pub fn from_fn(size: usize, vars: usize, order: u32, mut f: impl FnMut(usize, usize) -> QJet) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for r in 0..size {
            for c in 0..size {
                let jet = f(r, c);
                assert_eq!((jet.vars(), jet.order()), (vars, order), "jet shape mismatch");
                entries.push(jet);
            }
        }
        Self { size, vars, order, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> &QJet {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, jet: QJet) {
        assert_eq!((jet.vars(), jet.order()), (self.vars, self.order));
        self.entries[r * self.size + c] = jet;
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub(b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&QJet, &QJet) -> QJet) -> Self {
        assert_eq!(self.size, other.size);
        Self {
            size: self.size,
            vars: self.vars,
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let mut out = Self::zeros(self.size, self.vars, self.order);
        for i in 0..self.size {
            for k in 0..self.size {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.size {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn partial(&self, var: usize) -> Self {
        Self {
            size: self.size,
            vars: self.vars,
            order: self.order,
            entries: self
                .entries
                .iter()
                .map(|e| e.partial(var).expect("variable in range"))
                .collect(),
        }
    }

    /// Drop all monomials above the given total degree, entry-wise.
    pub fn truncated(&self, degree: u32) -> Self {
        Self {
            size: self.size,
            vars: self.vars,
            order: self.order,
            entries: self.entries.iter().map(|e| e.truncated(degree)).collect(),
        }
    }

    /// Constant term as a rational matrix.
    pub fn eval0(&self) -> QMatrix {
        QMatrix::from_fn(self.size, self.size, |r, c| self.get(r, c).eval0())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(QJet::is_zero)
    }

    /// Embed a constant matrix.
    pub fn constant(m: &QMatrix, vars: usize, order: u32) -> Self {
        assert!(m.is_square());
        Self::from_fn(m.rows(), vars, order, |r, c| {
            QJet::constant(vars, order, m[(r, c)].clone())
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            size: self.size,
            vars: self.vars,
            order: self.order,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn scale_jet(&self, c: &QJet) -> Self {
        Self {
            size: self.size,
            vars: self.vars,
            order: self.order,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }
}
