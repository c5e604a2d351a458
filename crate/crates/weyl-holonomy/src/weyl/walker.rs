//! Walker metric data with a gauge 1-form proportional to `du`.

use super::JetMatrix;
use crate::error::{LinalgError, WeylError};
use crate::solve::invert;
use crate::{QJet, Rational};
use num_traits::{One, Zero};

/// The metric `2 dv du + h_ij dx^i dx^j + 2 A_i dx^i du + H (du)^2` together
/// with the gauge function `f` of the 1-form `f du`.
///
/// The blocks `h` and `A` must not depend on `v` and `h` must equal the
/// identity at the origin; these are the normalizations under which the
/// coordinate frame at the origin is already a Witt frame.
#[derive(Clone, Debug)]
pub struct WeylStructure {
    n: usize,
    order: u32,
    h: Vec<Vec<QJet>>,
    a: Vec<QJet>,
    big_h: QJet,
    f: QJet,
}

impl WeylStructure {
    pub fn new(
        n: usize,
        order: u32,
        h: Vec<Vec<QJet>>,
        a: Vec<QJet>,
        big_h: QJet,
        f: QJet,
    ) -> Result<Self, WeylError> {
        let vars = n + 2;
        let shape_ok = |jet: &QJet| jet.vars() == vars && jet.order() == order;
        if h.len() != n || h.iter().any(|row| row.len() != n) {
            return Err(WeylError::BadShape { reason: format!("h must be {n} x {n}") });
        }
        for row in &h {
            for jet in row {
                if !shape_ok(jet) {
                    return Err(WeylError::BadShape {
                        reason: "h entries must share the structure's variables and order".into(),
                    });
                }
            }
        }
        if a.len() != n || a.iter().any(|jet| !shape_ok(jet)) {
            return Err(WeylError::BadShape {
                reason: format!("A must hold {n} jets of the structure's shape"),
            });
        }
        if !shape_ok(&big_h) || !shape_ok(&f) {
            return Err(WeylError::BadShape { reason: "H and f must match the structure's shape".into() });
        }
        for (i, row) in h.iter().enumerate() {
            for (j, jet) in row.iter().enumerate() {
                if jet != &h[j][i] {
                    return Err(WeylError::BadShape { reason: format!("h must be symmetric at ({i},{j})") });
                }
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                if jet.eval0() != expected {
                    return Err(WeylError::HNotNormalized { row: i, col: j });
                }
                if !jet.partial(0).expect("v is variable 0").is_zero() {
                    return Err(WeylError::VDependence { what: format!("h_{}{}", i + 1, j + 1) });
                }
            }
        }
        for (i, jet) in a.iter().enumerate() {
            if !jet.partial(0).expect("v is variable 0").is_zero() {
                return Err(WeylError::VDependence { what: format!("A_{}", i + 1) });
            }
        }
        Ok(Self { n, order, h, a, big_h, f })
    }

    /// Flat structure: `h = id`, `A = 0`, `H = 0`, `f = 0`.
    pub fn flat(n: usize, order: u32) -> Self {
        let vars = n + 2;
        let h = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            QJet::one(vars, order)
                        } else {
                            QJet::zero(vars, order)
                        }
                    })
                    .collect()
            })
            .collect();
        let a = vec![QJet::zero(vars, order); n];
        Self::new(n, order, h, a, QJet::zero(vars, order), QJet::zero(vars, order))
            .expect("flat data is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn vars(&self) -> usize {
        self.n + 2
    }

    pub fn h(&self) -> &[Vec<QJet>] {
        &self.h
    }

    pub fn a(&self) -> &[QJet] {
        &self.a
    }

    pub fn big_h(&self) -> &QJet {
        &self.big_h
    }

    pub fn f(&self) -> &QJet {
        &self.f
    }

    /// Replace the gauge function, keeping the metric.
    pub fn with_f(mut self, f: QJet) -> Self {
        assert_eq!((f.vars(), f.order()), (self.vars(), self.order));
        self.f = f;
        self
    }

    /// Replace `H`, keeping everything else.
    pub fn with_big_h(mut self, big_h: QJet) -> Self {
        assert_eq!((big_h.vars(), big_h.order()), (self.vars(), self.order));
        self.big_h = big_h;
        self
    }

    /// Gauge derivative `(d_i f)(0)`, one value per spacelike direction.
    pub fn gauge_slopes(&self) -> Vec<Rational> {
        (1..=self.n)
            .map(|i| self.f.partial(i).expect("variable in range").eval0())
            .collect()
    }

    /// The assembled symmetric metric matrix in coordinates `(v, x, u)`.
    pub fn metric(&self) -> JetMatrix {
        let n = self.n;
        let vars = self.vars();
        let order = self.order;
        JetMatrix::from_fn(n + 2, vars, order, |r, c| {
            let one = || QJet::one(vars, order);
            match (r, c) {
                (0, c) if c == n + 1 => one(),
                (r, 0) if r == n + 1 => one(),
                (0, _) | (_, 0) => QJet::zero(vars, order),
                (r, c) if r <= n && c <= n => self.h[r - 1][c - 1].clone(),
                (r, c) if r <= n && c == n + 1 => self.a[r - 1].clone(),
                (r, c) if r == n + 1 && c <= n => self.a[c - 1].clone(),
                _ => self.big_h.clone(),
            }
        })
    }

    /// The gauge 1-form `f du` as a covector of jets.
    pub fn omega(&self) -> Vec<QJet> {
        let mut w = vec![QJet::zero(self.vars(), self.order); self.vars()];
        w[self.n + 1] = self.f.clone();
        w
    }
}

/// Inverse of a jet-matrix that is invertible at the origin, to the full
/// truncation order.
pub fn invert_metric(g: &JetMatrix) -> Result<JetMatrix, WeylError> {
    let size = g.size();
    let c0 = g.eval0();
    let c0_inv = invert(&c0).ok_or(WeylError::Linalg(LinalgError::Singular))?;
    let order = g.order();
    let vars_order = {
        // all entries share the shape by construction
        let sample = g.get(0, 0);
        (sample.vars(), sample.order())
    };
    let c0_inv_jets = JetMatrix::constant(&c0_inv, vars_order.0, vars_order.1);
    let delta = g.sub(&JetMatrix::constant(&c0, vars_order.0, vars_order.1));
    // (C + D)^-1 = (Id + C^-1 D)^-1 C^-1, expanded as a Neumann series in
    // the nilpotent-to-truncation part C^-1 D
    let m = c0_inv_jets.mul(&delta);
    let mut sum = JetMatrix::constant(&crate::QMatrix::identity(size), vars_order.0, vars_order.1);
    let mut power = sum.clone();
    for _ in 0..order {
        power = power.mul(&m).scale(&-Rational::one());
        if power.is_zero() {
            break;
        }
        sum = sum.add(&power);
    }
    Ok(sum.mul(&c0_inv_jets))
}
