//! The realization table: metric/gauge data whose holonomy at the origin is
//! a prescribed classified algebra.
//!
//! Rows 1-6 use the quadratic-in-`P` Walker metric with a gauge function
//! matched to the scalar twist of the target; the conformal-product presets
//! use a product metric with a conformally rescaled Riemannian block.

use super::walker::WeylStructure;
use crate::error::{FamilyError, WeylError};
use crate::lie::{make_family, Family, FamilySpec, LieSubalgebra};
use crate::matrix::Matrix;
use crate::sampling::RationalSampler;
use crate::solve::solve_linear;
use crate::{QJet, QMatrix, Rational};
use num_traits::{One, Zero};

/// Which construction to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PresetTag {
    /// Rows 1-6 of the realization table.
    Row(u8),
    /// Conformal product with `H = 0`.
    Cp2,
    /// Conformal product with `H = v^2`.
    Cp3,
}

impl PresetTag {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "cp2" => Some(PresetTag::Cp2),
            "cp3" => Some(PresetTag::Cp3),
            _ => s.parse::<u8>().ok().filter(|r| (1..=6).contains(r)).map(PresetTag::Row),
        }
    }

    pub fn label(&self) -> String {
        match self {
            PresetTag::Row(r) => format!("row {r}"),
            PresetTag::Cp2 => "cp2".to_string(),
            PresetTag::Cp3 => "cp3".to_string(),
        }
    }
}

/// How the Riemannian factor of a conformal-product preset is generated.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RiemannianFactor {
    /// Flat block; the factor holonomy is trivial.
    Flat,
    /// Seeded random quadratic perturbation of the flat block; generically
    /// realizes the full rotation holonomy of the factor, validated by the
    /// final holonomy comparison.
    GenericSoK { seed: u64 },
}

/// Parameters of a realization preset.
#[derive(Clone, Debug)]
pub struct RealizationPreset {
    pub tag: PresetTag,
    pub n: usize,
    pub n0: usize,
    pub h_basis: Vec<QMatrix>,
    /// Operators `P(e_i)`, one per spacelike direction.
    pub p_ops: Vec<QMatrix>,
    /// Coefficients of `theta` against `h_basis`.
    pub theta: Vec<Rational>,
    /// Coefficients of `phi` against `h_basis`.
    pub phi: Vec<Rational>,
    pub alpha: Rational,
    /// Split position for the conformal-product presets.
    pub k: Option<i64>,
    pub factor: RiemannianFactor,
    /// Jet truncation order `K`.
    pub order: u32,
    /// Highest covariant-derivative order.
    pub max_order: usize,
}

impl RealizationPreset {
    pub fn new(tag: PresetTag, n: usize) -> Self {
        Self {
            tag,
            n,
            n0: 0,
            h_basis: Vec::new(),
            p_ops: Vec::new(),
            theta: Vec::new(),
            phi: Vec::new(),
            alpha: Rational::zero(),
            k: None,
            factor: RiemannianFactor::Flat,
            order: 7,
            max_order: 4,
        }
    }
}

/// Coefficients of `target` against the listed basis vectors, if it lies in
/// their span.
fn coeffs_against(basis: &[QMatrix], target: &QMatrix) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return if target.is_zero() { Some(Vec::new()) } else { None };
    }
    let rows = basis[0].flatten().len();
    let a = Matrix::from_fn(rows, basis.len(), |i, j| basis[j].flatten()[i].clone());
    solve_linear(&a, target.flatten())
}

/// Build the metric/gauge structure and the target algebra for a preset.
pub fn build_preset(p: &RealizationPreset) -> Result<(WeylStructure, LieSubalgebra), WeylError> {
    match p.tag {
        PresetTag::Row(row) => build_table_row(p, row),
        PresetTag::Cp2 | PresetTag::Cp3 => build_conformal_product(p),
    }
}

fn build_table_row(
    p: &RealizationPreset,
    row: u8,
) -> Result<(WeylStructure, LieSubalgebra), WeylError> {
    assert!((1..=6).contains(&row), "table rows are 1..=6");
    let n = p.n;
    let vars = n + 2;
    let order = p.order;
    if p.n0 > n {
        return Err(WeylError::BadShape { reason: format!("n0 = {} exceeds n = {n}", p.n0) });
    }

    // the rotation algebra and the generating weak curvature tensor
    let h_span = LieSubalgebra::from_span(n, None, p.h_basis.clone(), "h");
    if h_span.dim() != p.h_basis.len() || !h_span.is_bracket_closed() {
        return Err(FamilyError::BadSplit {
            reason: "h_basis must be a linearly independent bracket-closed family".into(),
        }
        .into());
    }
    if p.p_ops.len() != n {
        return Err(WeylError::InvalidP {
            reason: format!("need {n} operators P(e_i), got {}", p.p_ops.len()),
        });
    }
    let weak = crate::curvature::WeakCurvature::from_ops(p.p_ops.clone());
    if !weak.satisfies_cyclic() {
        return Err(WeylError::InvalidP { reason: "cyclic condition fails".into() });
    }
    if !weak.values_in(h_span.carrier()) {
        return Err(WeylError::InvalidP { reason: "values escape the span of h".into() });
    }
    let image_closure = LieSubalgebra::lie_closure(n, None, &p.p_ops, "P image")?;
    if image_closure.carrier() != h_span.carrier() {
        return Err(WeylError::PDoesNotGenerate);
    }

    // twist coefficients theta_i = theta(P(e_i)), phi_i = phi(P(e_i))
    let per_direction = |coeffs: &[Rational]| -> Result<Vec<Rational>, WeylError> {
        if coeffs.is_empty() {
            return Ok(vec![Rational::zero(); n]);
        }
        if coeffs.len() != p.h_basis.len() {
            return Err(WeylError::BadShape {
                reason: "functional coefficients must pair with h_basis".into(),
            });
        }
        (0..n)
            .map(|i| {
                let c = coeffs_against(&p.h_basis, &p.p_ops[i]).ok_or_else(|| {
                    WeylError::InvalidP { reason: format!("P(e_{}) escapes h", i + 1) }
                })?;
                Ok(c.iter()
                    .zip(coeffs)
                    .map(|(a, b)| a.clone() * b.clone())
                    .fold(Rational::zero(), |acc, x| acc + x))
            })
            .collect()
    };
    let theta_i = per_direction(&p.theta)?;
    let phi_i = per_direction(&p.phi)?;

    // metric blocks: h = id, A_i = 1/3 (P^i_jk + P^i_kj) x^j x^k
    let mut a_jets = Vec::with_capacity(n);
    for i in 0..n {
        let mut jet = QJet::zero(vars, order);
        for j in 0..n {
            for k in 0..n {
                let coeff = (p.p_ops[k][(i, j)].clone() + p.p_ops[j][(i, k)].clone())
                    / Rational::from_integer(3.into());
                if coeff.is_zero() {
                    continue;
                }
                let mut mono = vec![0u32; vars];
                mono[j + 1] += 1;
                mono[k + 1] += 1;
                jet = jet.add(&QJet::from_terms(vars, order, vec![(mono, coeff)]));
            }
        }
        a_jets.push(jet);
    }

    let v = QJet::variable(vars, order, 0).expect("v");
    let u = QJet::variable(vars, order, vars - 1).expect("u");
    let _ = u;
    let x = |i: usize| QJet::variable(vars, order, i).expect("x");

    // common summand sum_{i <= n0} (x^i)^2
    let mut flat_sq = QJet::zero(vars, order);
    for i in 1..=p.n0 {
        flat_sq = flat_sq.add(&x(i).mul(&x(i)));
    }
    // linear twist terms sum_{i > n0} c_i x^i
    let linear = |c: &[Rational]| {
        let mut jet = QJet::zero(vars, order);
        for i in p.n0 + 1..=n {
            let ci = &c[i - 1];
            if !ci.is_zero() {
                jet = jet.add(&x(i).scale(ci));
            }
        }
        jet
    };

    let two = Rational::from_integer(2.into());
    let v2 = v.mul(&v);
    let (big_h, f) = match row {
        1 => (
            v.mul(&v2).scale(&Rational::new(1.into(), 3.into())).add(&flat_sq),
            v.clone(),
        ),
        2 => (v2.add(&flat_sq), v.clone()),
        3 => (
            v2.add(&linear(&phi_i).mul(&v).scale(&two)).add(&flat_sq),
            v.clone(),
        ),
        4 => (
            v2.scale(&(Rational::one() + p.alpha.clone()))
                .add(&linear(&theta_i).mul(&v).scale(&two))
                .add(&flat_sq),
            v.scale(&p.alpha).add(&linear(&theta_i)),
        ),
        5 => (
            linear(&theta_i).mul(&v).scale(&two).add(&flat_sq),
            linear(&theta_i),
        ),
        _ => {
            let sums: Vec<Rational> = theta_i
                .iter()
                .zip(&phi_i)
                .map(|(t, f)| t.clone() + f.clone())
                .collect();
            (
                linear(&sums).mul(&v).scale(&two).add(&flat_sq),
                linear(&theta_i),
            )
        }
    };

    let h_blocks = identity_blocks(n, vars, order);
    let ws = WeylStructure::new(n, order, h_blocks, a_jets, big_h, f)?;

    let family = match row {
        1 => Family::RidG1H,
        2 => Family::RidG2H,
        3 => Family::RidG3HPhi,
        4 => Family::GAlphaTheta1,
        5 => Family::GTheta2,
        _ => Family::GTheta3Phi,
    };
    let mut spec = FamilySpec::new(family, n).with_h(p.h_basis.clone());
    spec.theta = p.theta.clone();
    spec.phi = p.phi.clone();
    spec.alpha = p.alpha.clone();
    let target = make_family(&spec)?;
    Ok((ws, target))
}

fn build_conformal_product(
    p: &RealizationPreset,
) -> Result<(WeylStructure, LieSubalgebra), WeylError> {
    let n = p.n;
    let vars = n + 2;
    let order = p.order;
    let k = p.k.ok_or(WeylError::BadShape { reason: "conformal preset needs k".into() })?;
    if k < 0 || k >= n as i64 {
        return Err(WeylError::BadShape { reason: format!("k = {k} out of range [0, {}]", n - 1) });
    }
    let k = k as usize;

    // flat or seeded-random Riemannian block on the first k coordinates
    let mut h_blocks = identity_blocks(n, vars, order);
    let kk_basis: Vec<QMatrix> = match p.factor {
        RiemannianFactor::Flat => Vec::new(),
        RiemannianFactor::GenericSoK { seed } => {
            if k < 2 {
                return Err(WeylError::BadShape {
                    reason: "a curved factor needs k >= 2".into(),
                });
            }
            let mut sampler = RationalSampler::new(seed);
            let factor_vars: Vec<usize> = (1..=k).collect();
            for i in 0..k {
                for j in i..k {
                    let q = sampler.quadratic_jet(vars, order, &factor_vars);
                    h_blocks[i][j] = h_blocks[i][j].add(&q);
                    if i != j {
                        h_blocks[j][i] = h_blocks[i][j].clone();
                    }
                }
            }
            // target factor holonomy: all rotations of the block
            let mut basis = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    let mut m = QMatrix::zeros(k, k);
                    m[(j, i)] = Rational::one();
                    m[(i, j)] = -Rational::one();
                    basis.push(m);
                }
            }
            basis
        }
    };

    // conformally rescaled block h^2 = exp(-2 f u) on the rest, f = x^(k+1)
    let f = QJet::variable(vars, order, k + 1).expect("x^(k+1)");
    let u = QJet::variable(vars, order, vars - 1).expect("u");
    let exp_factor = f
        .mul(&u)
        .scale(&Rational::from_integer((-2).into()))
        .exp()
        .map_err(WeylError::Jet)?;
    for i in k..n {
        h_blocks[i][i] = exp_factor.clone();
    }

    let v = QJet::variable(vars, order, 0).expect("v");
    let big_h = match p.tag {
        PresetTag::Cp2 => QJet::zero(vars, order),
        _ => v.mul(&v),
    };

    let a_jets = vec![QJet::zero(vars, order); n];
    let ws = WeylStructure::new(n, order, h_blocks, a_jets, big_h, f)?;

    let target = match (p.tag, k) {
        (PresetTag::Cp2, _) => {
            let mut spec = FamilySpec::new(Family::ConformalProduct2, n).with_k(k as i64);
            spec.h_basis = kk_basis;
            make_family(&spec)?
        }
        (PresetTag::Cp3, 0) => {
            // acting non-trivially on the line with no Riemannian factor
            // yields the plain orthogonal sum
            make_family(&FamilySpec::new(Family::ConformalProduct1, n).with_k(0))?
        }
        (PresetTag::Cp3, _) => {
            let mut spec = FamilySpec::new(Family::ConformalProduct3, n).with_k(k as i64);
            spec.h_basis = kk_basis;
            make_family(&spec)?
        }
        (PresetTag::Row(_), _) => unreachable!("handled by build_table_row"),
    };
    Ok((ws, target))
}

fn identity_blocks(n: usize, vars: usize, order: u32) -> Vec<Vec<QJet>> {
    (0..n)
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
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, ratio};

    fn j2() -> QMatrix {
        let mut m = QMatrix::zeros(2, 2);
        m[(1, 0)] = int(1);
        m[(0, 1)] = int(-1);
        m
    }

    #[test]
    fn row_one_smallest_preset() {
        // n = n0 = 1, trivial rotation algebra: H = v^3/3 + (x^1)^2, f = v
        let mut p = RealizationPreset::new(PresetTag::Row(1), 1);
        p.n0 = 1;
        p.p_ops = vec![QMatrix::zeros(1, 1)];
        let (ws, target) = build_preset(&p).unwrap();
        assert_eq!(target.dim(), 3);
        let vars = 3;
        let expected_h = QJet::from_terms(
            vars,
            p.order,
            vec![(vec![3, 0, 0], ratio(1, 3)), (vec![0, 2, 0], int(1))],
        );
        assert_eq!(ws.big_h(), &expected_h);
        assert_eq!(ws.f(), &QJet::variable(vars, p.order, 0).unwrap());
    }

    #[test]
    fn quadratic_gauge_blocks_from_p() {
        // P(e_1) = J, P(e_2) = 0 gives A_1 = -2/3 x1 x2 and A_2 = 2/3 x1^2
        let mut p = RealizationPreset::new(PresetTag::Row(2), 2);
        p.h_basis = vec![j2()];
        p.p_ops = vec![j2(), QMatrix::zeros(2, 2)];
        let (ws, target) = build_preset(&p).unwrap();
        assert_eq!(target.dim(), 1 + 1 + 2);
        let vars = 4;
        let a1 = QJet::from_terms(vars, p.order, vec![(vec![0, 1, 1, 0], ratio(-2, 3))]);
        let a2 = QJet::from_terms(vars, p.order, vec![(vec![0, 2, 0, 0], ratio(2, 3))]);
        assert_eq!(ws.a(), &[a1, a2]);
    }

    #[test]
    fn row_five_twisted_preset() {
        // theta(J) = 1, n = 2, n0 = 0: H = 2 x^1 v, f = x^1
        let mut p = RealizationPreset::new(PresetTag::Row(5), 2);
        p.h_basis = vec![j2()];
        p.p_ops = vec![j2(), QMatrix::zeros(2, 2)];
        p.theta = vec![int(1)];
        let (ws, target) = build_preset(&p).unwrap();
        assert_eq!(target.label(), "g-theta-2");
        assert_eq!(target.dim(), 3);
        let vars = 4;
        let expected_h =
            QJet::from_terms(vars, p.order, vec![(vec![1, 1, 0, 0], int(2))]);
        assert_eq!(ws.big_h(), &expected_h);
        let expected_f = QJet::variable(vars, p.order, 1).unwrap();
        assert_eq!(ws.f(), &expected_f);
    }

    #[test]
    fn row_six_adds_phi_to_the_potential() {
        let mut p = RealizationPreset::new(PresetTag::Row(6), 2);
        p.h_basis = vec![j2()];
        p.p_ops = vec![j2(), QMatrix::zeros(2, 2)];
        p.theta = vec![int(1)];
        p.phi = vec![int(1)];
        let (ws, target) = build_preset(&p).unwrap();
        assert_eq!(target.label(), "g-theta-3-phi");
        // H = 2 (theta_1 + phi_1) x^1 v = 4 x^1 v, f = x^1
        let vars = 4;
        let expected_h =
            QJet::from_terms(vars, p.order, vec![(vec![1, 1, 0, 0], int(4))]);
        assert_eq!(ws.big_h(), &expected_h);
        assert_eq!(ws.f(), &QJet::variable(vars, p.order, 1).unwrap());
    }

    #[test]
    fn generation_check_rejects_degenerate_p() {
        let mut p = RealizationPreset::new(PresetTag::Row(2), 2);
        p.h_basis = vec![j2()];
        p.p_ops = vec![QMatrix::zeros(2, 2), QMatrix::zeros(2, 2)];
        assert_eq!(build_preset(&p).unwrap_err(), WeylError::PDoesNotGenerate);
    }

    #[test]
    fn conformal_preset_blocks() {
        let mut p = RealizationPreset::new(PresetTag::Cp2, 2);
        p.k = Some(0);
        let (ws, target) = build_preset(&p).unwrap();
        // h_11 = exp(-2 x^1 u) truncated
        let vars = 4;
        let x1u = QJet::variable(vars, p.order, 1)
            .unwrap()
            .mul(&QJet::variable(vars, p.order, 3).unwrap());
        let expected = x1u.scale(&int(-2)).exp().unwrap();
        assert_eq!(&ws.h()[0][0], &expected);
        assert!(ws.big_h().is_zero());
        assert_eq!(ws.f(), &QJet::variable(vars, p.order, 1).unwrap());
        assert_eq!(target.label(), "conformal-product-2");
    }
}
