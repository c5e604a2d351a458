//! Holonomy algebra at the origin, generated by curvature and its iterated
//! covariant derivatives.

use super::connection::{curvature, derive_operator};
use super::walker::WeylStructure;
use super::JetMatrix;
use crate::error::WeylError;
use crate::lie::{CoElement, LieSubalgebra, WittFrame};
use crate::solve::invert;
use crate::{QMatrix, QSubspace, Rational};
use num_traits::{One, Zero};

/// Outcome of the holonomy generation.
#[derive(Clone, Debug)]
pub struct HolonomyResult {
    pub algebra: LieSubalgebra,
    /// Dimension of the closed span after each derivative order.
    pub per_order_dims: Vec<usize>,
    /// First order whose chains added nothing to the closed span; `None`
    /// when the span was still growing at the maximal order.
    pub stabilized_at: Option<usize>,
}

/// Generate the holonomy algebra at the origin from all covariant-derivative
/// chains of the curvature up to `max_order`, evaluated at zero, converted
/// into the Witt frame and closed under brackets.
///
/// Orders are processed one by one; once an entire order of chains adds
/// nothing to the closed span, the generation stops and reports that order
/// as the stabilization certificate.
pub fn holonomy_generate(
    ws: &WeylStructure,
    max_order: usize,
) -> Result<HolonomyResult, WeylError> {
    let required = max_order as u32 + 3;
    if ws.order() < required {
        return Err(WeylError::OrderTooSmall {
            order: ws.order(),
            required,
            max_order,
        });
    }
    let n = ws.n();
    let size = n + 2;
    let frame = WittFrame::new(n);
    let conn = ws.connection()?;
    let curv = curvature(&conn);

    // frame change at the origin: p = d_v, e_i = d_i - A_i(0) d_v,
    // q = d_u - H(0)/2 d_v; the normalizations force it to be the identity
    let mut frame_change = QMatrix::identity(size);
    for (i, a) in ws.a().iter().enumerate() {
        frame_change[(0, i + 1)] = -a.eval0();
    }
    frame_change[(0, size - 1)] = -ws.big_h().eval0() / Rational::from_integer(2.into());
    if frame_change != QMatrix::identity(size) {
        return Err(WeylError::FrameNotNormalized);
    }
    let change_inv = invert(&frame_change).expect("triangular with unit diagonal");

    let to_witt = |m: &QMatrix| change_inv.mul(m).mul(&frame_change);

    let mut generators: Vec<QMatrix> = Vec::new();
    let mut per_order_dims = Vec::new();
    let mut stabilized_at = None;

    // chains of the current order, with their index paths for diagnostics
    let mut level: Vec<(Vec<usize>, JetMatrix)> = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            let m = curv.value(a, b).truncated(max_order as u32);
            if !m.is_zero() {
                level.push((vec![a, b], m));
            }
        }
    }

    let mut closed = LieSubalgebra::lie_closure(size, Some(frame), &[], "holonomy")?;
    for order in 0..=max_order {
        for (chain, m) in &level {
            let value = to_witt(&m.eval0());
            if value.is_zero() {
                continue;
            }
            CoElement::decode(frame, &value).map_err(|source| {
                WeylError::GeneratorOutsideModel { chain: chain.clone(), source }
            })?;
            generators.push(value);
        }
        let next_closed =
            LieSubalgebra::lie_closure(size, Some(frame), &generators, "holonomy")?;
        let grew = next_closed.dim() > closed.dim();
        closed = next_closed;
        per_order_dims.push(closed.dim());
        if order > 0 && !grew {
            stabilized_at = Some(order);
            break;
        }
        if order == max_order {
            break;
        }
        // extend every chain by every direction, truncating to the degree
        // that can still reach the origin within the remaining derivatives
        let budget = (max_order - order - 1) as u32;
        let mut next_level = Vec::with_capacity(level.len() * size);
        for (chain, m) in &level {
            for dir in 0..size {
                let extended = derive_operator(&conn, m, dir).truncated(budget);
                if !extended.is_zero() {
                    let mut c = chain.clone();
                    c.push(dir);
                    next_level.push((c, extended));
                }
            }
        }
        level = next_level;
        if level.is_empty() {
            // nothing left to differentiate: the span is final
            if stabilized_at.is_none() {
                stabilized_at = Some(order + 1);
                per_order_dims.push(closed.dim());
            }
            break;
        }
    }

    Ok(HolonomyResult {
        algebra: closed.with_label("holonomy at 0"),
        per_order_dims,
        stabilized_at,
    })
}

/// Per-check outcome of a realization run.
#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub target_dim: usize,
    pub generated_dim: usize,
    pub per_order_dims: Vec<usize>,
    pub stabilized_at: Option<usize>,
    pub generated_in_target: bool,
    pub target_in_generated: bool,
    /// All translation directions lie in the generated algebra.
    pub translations_contained: bool,
    /// Dimension of the holonomy of the underlying metric connection
    /// (gauge form dropped), when requested.
    pub metric_holonomy_dim: Option<usize>,
}

impl RealizationReport {
    pub fn holonomy_equal(&self) -> bool {
        self.generated_in_target && self.target_in_generated
    }

    pub fn pass(&self) -> bool {
        self.holonomy_equal() && self.stabilized_at.is_some() && self.translations_contained
    }
}

/// Run the holonomy generation and compare against a target algebra: both
/// containments, the translation-part check, and the stability certificate.
pub fn verify_realization(
    ws: &WeylStructure,
    target: &LieSubalgebra,
    max_order: usize,
    with_metric_holonomy: bool,
) -> Result<RealizationReport, WeylError> {
    let hol = holonomy_generate(ws, max_order)?;
    let generated = &hol.algebra;
    let frame = WittFrame::new(ws.n());

    let generated_in_target = target
        .carrier()
        .contains_space(generated.carrier())
        .unwrap_or(false);
    let target_in_generated = generated
        .carrier()
        .contains_space(target.carrier())
        .unwrap_or(false);

    let mut translations_contained = true;
    for j in 0..ws.n() {
        let mut x = vec![Rational::zero(); ws.n()];
        x[j] = Rational::one();
        let t = CoElement::new(frame, Rational::zero(), Rational::zero(), QMatrix::zeros(ws.n(), ws.n()), x);
        if !generated.contains_matrix(&t.matrix()) {
            translations_contained = false;
            break;
        }
    }

    let metric_holonomy_dim = if with_metric_holonomy {
        let metric_only = ws.clone().with_f(crate::QJet::zero(ws.vars(), ws.order()));
        Some(holonomy_generate(&metric_only, max_order)?.algebra.dim())
    } else {
        None
    };

    Ok(RealizationReport {
        target_dim: target.dim(),
        generated_dim: generated.dim(),
        per_order_dims: hol.per_order_dims,
        stabilized_at: hol.stabilized_at,
        generated_in_target,
        target_in_generated,
        translations_contained,
        metric_holonomy_dim,
    })
}

/// The span of the scalar-free translation block inside the generated
/// algebra; used by tests asserting emergence of the flat directions.
pub fn translation_span(frame: WittFrame) -> QSubspace {
    let n = frame.n();
    let vectors = (0..n)
        .map(|j| {
            let mut x = vec![Rational::zero(); n];
            x[j] = Rational::one();
            CoElement::new(frame, Rational::zero(), Rational::zero(), QMatrix::zeros(n, n), x)
                .matrix()
                .into_flat()
        })
        .collect();
    QSubspace::span_unchecked(frame.dim() * frame.dim(), vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QJet;

    #[test]
    fn flat_structure_has_trivial_holonomy() {
        let ws = WeylStructure::flat(2, 6);
        let hol = holonomy_generate(&ws, 3).unwrap();
        assert_eq!(hol.algebra.dim(), 0);
        assert_eq!(hol.stabilized_at, Some(1));
    }

    #[test]
    fn order_too_small_is_refused() {
        let ws = WeylStructure::flat(2, 4);
        let err = holonomy_generate(&ws, 3).unwrap_err();
        assert_eq!(err, WeylError::OrderTooSmall { order: 4, required: 6, max_order: 3 });
    }

    #[test]
    fn quadratic_h_gives_the_boost_plus_scalar_line() {
        // H = v^2, f = 0: the only generator is diag(1, 0, -1) at the origin
        let n = 1;
        let order = 6;
        let v = QJet::variable(n + 2, order, 0).unwrap();
        let ws = WeylStructure::flat(n, order).with_big_h(v.mul(&v));
        let hol = holonomy_generate(&ws, 3).unwrap();
        assert_eq!(hol.algebra.dim(), 1);
        assert!(hol.stabilized_at.is_some());
        let frame = WittFrame::new(n);
        let boost = CoElement::new(
            frame,
            Rational::zero(),
            Rational::one(),
            QMatrix::zeros(n, n),
            vec![Rational::zero(); n],
        );
        assert!(hol.algebra.contains_matrix(&boost.matrix()));
    }
}
