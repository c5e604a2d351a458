//! Named verification suites: fixed fixture lists with expected outcomes,
//! producing deterministic per-check reports.

use crate::curvature::{
    berger_check, check_structure_constraints, curvature_space, decompose,
    first_prolongation, prolongation_nonzero_criterion, reconstruct, weak_berger_check,
    weak_curvature_space, CurvatureTensor,
};
use crate::json::OperationReport;
use crate::lie::{
    case_b2_algebra, co_pseudo, co_rp_full, direct_sum_euclidean, make_family, so_algebra,
    so_pseudo, Family, FamilySpec, LieSubalgebra, WittFrame,
};
use crate::sampling::RationalSampler;
use crate::weyl::{build_preset, curvature as jet_curvature, verify_realization, PresetTag, RealizationPreset};
use crate::{QMatrix, Rational};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// The suites the runner knows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteTag {
    Prolongations,
    CurvatureDecomp,
    BergerMatrix,
    WeakBerger,
    Realizations,
}

impl SuiteTag {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "prolongations" => SuiteTag::Prolongations,
            "curvature-decomp" => SuiteTag::CurvatureDecomp,
            "berger-matrix" => SuiteTag::BergerMatrix,
            "weak-berger" => SuiteTag::WeakBerger,
            "realizations" => SuiteTag::Realizations,
            _ => return None,
        })
    }

    pub fn label(&self) -> &'static str {
        match self {
            SuiteTag::Prolongations => "prolongations",
            SuiteTag::CurvatureDecomp => "curvature-decomp",
            SuiteTag::BergerMatrix => "berger-matrix",
            SuiteTag::WeakBerger => "weak-berger",
            SuiteTag::Realizations => "realizations",
        }
    }

    pub fn all() -> Vec<SuiteTag> {
        vec![
            SuiteTag::Prolongations,
            SuiteTag::CurvatureDecomp,
            SuiteTag::BergerMatrix,
            SuiteTag::WeakBerger,
            SuiteTag::Realizations,
        ]
    }
}

/// Runner parameters. Fixtures are fixed; the seed feeds every randomized
/// fixture and the orders bound the jet computations.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suites: Vec<SuiteTag>,
    pub seed: u64,
    /// Jet truncation order for realization fixtures.
    pub order: u32,
    /// Covariant-derivative bound for realization fixtures.
    pub max_order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { suites: SuiteTag::all(), seed: 7, order: 7, max_order: 4 }
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("config out of desk-scale bounds: {0}")]
    Bounds(String),
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.order > 10 {
            return Err(SuiteError::Bounds(format!("order K = {} exceeds 10", self.order)));
        }
        if self.max_order + 3 > self.order as usize {
            return Err(SuiteError::Bounds(format!(
                "max derivative order {} needs K >= {}, got {}",
                self.max_order,
                self.max_order + 3,
                self.order
            )));
        }
        Ok(())
    }
}

/// One executed check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

/// A full run: every check, in fixture order.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    fn from_checks(suite: String, checks: Vec<CheckRecord>) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        Self { suite, checks, passed, failed }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    /// Fixed-width table, one row per check.
    pub fn render_text(&self, wall: Option<std::time::Duration>) -> String {
        let mut width_id = "check".len();
        let mut width_anchor = "anchor".len();
        let mut width_exp = "expected".len();
        let mut width_got = "computed".len();
        for c in &self.checks {
            width_id = width_id.max(c.id.len());
            width_anchor = width_anchor.max(c.anchor.len());
            width_exp = width_exp.max(c.expected.len());
            width_got = width_got.max(c.computed.len());
        }
        let mut out = String::new();
        out.push_str(&format!(
            "| {:width_id$} | {:width_anchor$} | {:width_exp$} | {:width_got$} | {:4} |\n",
            "check", "anchor", "expected", "computed", "pass"
        ));
        out.push_str(&format!(
            "|{:-<w0$}|{:-<w1$}|{:-<w2$}|{:-<w3$}|{:-<6}|\n",
            "",
            "",
            "",
            "",
            "",
            w0 = width_id + 2,
            w1 = width_anchor + 2,
            w2 = width_exp + 2,
            w3 = width_got + 2,
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "| {:width_id$} | {:width_anchor$} | {:width_exp$} | {:width_got$} | {:4} |\n",
                c.id,
                c.anchor,
                c.expected,
                c.computed,
                if c.pass { "ok" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "\n{} checks: {} passed, {} failed",
            self.checks.len(),
            self.passed,
            self.failed
        ));
        if let Some(d) = wall {
            out.push_str(&format!(" ({d:.2?})"));
        }
        out.push('\n');
        out
    }
}

/// Run the configured suites; the report is deterministic for a given
/// `(config, seed)` pair.
pub fn run_suite(config: &SuiteConfig) -> Result<VerificationReport, SuiteError> {
    config.validate()?;
    let mut checks = Vec::new();
    for tag in &config.suites {
        match tag {
            SuiteTag::Prolongations => prolongation_checks(config, &mut checks),
            SuiteTag::CurvatureDecomp => curvature_decomp_checks(config, &mut checks),
            SuiteTag::BergerMatrix => berger_matrix_checks(&mut checks),
            SuiteTag::WeakBerger => weak_berger_checks(&mut checks),
            SuiteTag::Realizations => realization_checks(config, &mut checks),
        }
    }
    let label = if config.suites.is_empty() {
        "(empty)".to_string()
    } else {
        config
            .suites
            .iter()
            .map(|t| t.label())
            .collect::<Vec<_>>()
            .join("+")
    };
    Ok(VerificationReport::from_checks(label, checks))
}

/// Report for one family-spec operation, shared by the CLI commands.
pub fn operation_report(op: &str, spec: &FamilySpec) -> Result<OperationReport, crate::error::FamilyError> {
    let algebra = make_family(spec)?;
    let report = match op {
        "prolongation" => OperationReport {
            op: op.to_string(),
            dim: first_prolongation(&algebra).dim(),
            is_berger: None,
            witness_dim: None,
            violations: Vec::new(),
        },
        "curvature-space" => OperationReport {
            op: op.to_string(),
            dim: curvature_space(&algebra).len(),
            is_berger: None,
            witness_dim: None,
            violations: Vec::new(),
        },
        "berger" => {
            let v = berger_check(&algebra);
            OperationReport {
                op: op.to_string(),
                dim: algebra.dim(),
                is_berger: Some(v.is_berger),
                witness_dim: Some(v.witness.dim()),
                violations: Vec::new(),
            }
        }
        "weak-berger" => {
            let so_part = if algebra.witt().is_some() {
                algebra.project_so_n_part().map_err(|_| {
                    crate::error::FamilyError::BadSplit {
                        reason: "weak-berger needs a rotation block".to_string(),
                    }
                })?
            } else {
                algebra
            };
            let v = weak_berger_check(&so_part);
            OperationReport {
                op: op.to_string(),
                dim: so_part.dim(),
                is_berger: Some(v.holds),
                witness_dim: Some(v.witness.dim()),
                violations: Vec::new(),
            }
        }
        other => panic!("unknown operation `{other}`"),
    };
    Ok(report)
}

fn push(checks: &mut Vec<CheckRecord>, id: impl Into<String>, anchor: &str, expected: impl ToString, computed: impl ToString, pass: bool) {
    checks.push(CheckRecord {
        id: id.into(),
        anchor: anchor.to_string(),
        expected: expected.to_string(),
        computed: computed.to_string(),
        pass,
    });
}

pub(crate) fn jmat(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m[(j, i)] = Rational::one();
    m[(i, j)] = -Rational::one();
    m
}

fn so2_in(n: usize, i0: usize) -> Vec<QMatrix> {
    vec![jmat(n, i0, i0 + 1)]
}

fn so3_in(n: usize, i0: usize) -> Vec<QMatrix> {
    vec![jmat(n, i0, i0 + 1), jmat(n, i0, i0 + 2), jmat(n, i0 + 1, i0 + 2)]
}

fn so22_in(n: usize, i0: usize) -> Vec<QMatrix> {
    vec![jmat(n, i0, i0 + 1), jmat(n, i0 + 2, i0 + 3)]
}

// ---------------------------------------------------------------------------
// prolongations
// ---------------------------------------------------------------------------

fn prolongation_checks(config: &SuiteConfig, checks: &mut Vec<CheckRecord>) {
    for (r, s) in [(2usize, 0usize), (3, 0), (1, 1), (1, 2), (1, 3)] {
        let dim = first_prolongation(&so_pseudo(r, s)).dim();
        push(
            checks,
            format!("prolong/so({r},{s})"),
            "orthogonal algebras have zero first prolongation",
            0,
            dim,
            dim == 0,
        );
        let dim = first_prolongation(&co_pseudo(r, s)).dim();
        push(
            checks,
            format!("prolong/co({r},{s})"),
            "conformal prolongation has the dimension of the space",
            r + s,
            dim,
            dim == r + s,
        );
    }
    for n in 1..=3usize {
        let dim = first_prolongation(&co_rp_full(WittFrame::new(n))).dim();
        push(
            checks,
            format!("prolong/co-rp(n={n})"),
            "line-preserving conformal algebra has a line of prolongations",
            1,
            dim,
            dim == 1,
        );
    }

    // scalar extensions of proper rotation subalgebras
    let scalar_extension_fixtures: Vec<(String, LieSubalgebra)> = vec![
        ("Rid-on-R2".to_string(), LieSubalgebra::from_span(2, None, vec![QMatrix::identity(2)], "R id")),
        (
            "u1-in-so3+Rid".to_string(),
            LieSubalgebra::from_span(3, None, {
                let mut v = so2_in(3, 0);
                v.push(QMatrix::identity(3));
                v
            }, "u(1)+R id"),
        ),
        (
            "so2+so2-in-so4+Rid".to_string(),
            LieSubalgebra::from_span(4, None, {
                let mut v = so22_in(4, 0);
                v.push(QMatrix::identity(4));
                v
            }, "so2+so2+R id"),
        ),
        (
            "diag-u1-in-so4+Rid".to_string(),
            LieSubalgebra::from_span(
                4,
                None,
                vec![jmat(4, 0, 1).add(&jmat(4, 2, 3)), QMatrix::identity(4)],
                "diag u(1)+R id",
            ),
        ),
        (
            "so3-in-so4+Rid".to_string(),
            LieSubalgebra::from_span(4, None, {
                let mut v = so3_in(4, 0);
                v.push(QMatrix::identity(4));
                v
            }, "so3+R id"),
        ),
    ];
    for (name, alg) in scalar_extension_fixtures {
        let dim = first_prolongation(&alg).dim();
        push(
            checks,
            format!("prolong/scalar-extension/{name}"),
            "proper rotation part plus scalar line prolongs to zero",
            0,
            dim,
            dim == 0,
        );
    }

    // non-vanishing criterion: both routes must agree
    let mut fixtures: Vec<(String, LieSubalgebra)> = Vec::new();
    fixtures.push(("full-co-rp-n2".into(), co_rp_full(WittFrame::new(2))));
    fixtures.push((
        "rotations-only-n2".into(),
        make_family(&FamilySpec::new(Family::G2H, 2).with_h(so2_in(2, 0)))
            .map(|g| g.project_so_part())
            .map(|g| {
                // rotation block inside the Witt model
                let frame = WittFrame::new(2);
                let gens: Vec<QMatrix> = vec![crate::lie::CoElement::new(
                    frame,
                    Rational::zero(),
                    Rational::zero(),
                    jmat(2, 0, 1),
                    vec![Rational::zero(); 2],
                )
                .matrix()];
                let _ = g;
                LieSubalgebra::from_span(4, Some(frame), gens, "rotation block")
            })
            .expect("fixture"),
    ));
    {
        let frame = WittFrame::new(2);
        let pq_id = frame
            .wedge(&frame.p(), &frame.q())
            .expect("frame")
            .add(&QMatrix::identity(4));
        let mut gens = vec![pq_id];
        for j in 1..=2 {
            gens.push(frame.wedge(&frame.p(), &frame.e(j)).expect("frame"));
        }
        fixtures.push((
            "minimal-line-plus-translations".into(),
            LieSubalgebra::lie_closure(4, Some(frame), &gens, "minimal").expect("fixture"),
        ));
    }
    fixtures.push((
        "g2h-n2".into(),
        make_family(&FamilySpec::new(Family::G2H, 2).with_h(so2_in(2, 0))).expect("fixture"),
    ));
    fixtures.push((
        "Rid-g1h-n2".into(),
        make_family(&FamilySpec::new(Family::RidG1H, 2).with_h(so2_in(2, 0))).expect("fixture"),
    ));
    for i in 0..6u64 {
        let n = 2 + (i as usize) % 2;
        let frame = WittFrame::new(n);
        let mut sampler = RationalSampler::new(config.seed.wrapping_add(i));
        let gens = vec![
            sampler.co_element(frame).matrix(),
            sampler.co_element(frame).matrix(),
        ];
        let alg = LieSubalgebra::lie_closure(n + 2, Some(frame), &gens, format!("random-{i}"))
            .expect("closure terminates");
        fixtures.push((format!("random-{i}-n{n}"), alg));
    }
    for (name, alg) in fixtures {
        let (by_dim, by_containment) = prolongation_nonzero_criterion(&alg);
        push(
            checks,
            format!("prolong/criterion/{name}"),
            "prolongation dimension agrees with the containment test",
            "agree",
            format!("dim>0: {by_dim}, contains: {by_containment}"),
            by_dim == by_containment,
        );
    }
}

// ---------------------------------------------------------------------------
// curvature-decomp
// ---------------------------------------------------------------------------

fn curvature_decomp_checks(config: &SuiteConfig, checks: &mut Vec<CheckRecord>) {
    // additivity of curvature spaces over a two-block splitting with a
    // scalar line
    for n1 in 1..=3usize {
        for n2 in 1..=3usize {
            let lhs = curvature_space(&direct_sum_euclidean(
                &[&so_algebra(n1), &so_algebra(n2)],
                true,
            ))
            .len();
            let rhs = curvature_space(&so_algebra(n1)).len()
                + curvature_space(&so_algebra(n2)).len()
                + n1 * n2;
            push(
                checks,
                format!("curv/additivity/{n1}+{n2}"),
                "curvature space of a split sum with scalar line is additive",
                rhs,
                lhs,
                lhs == rhs,
            );
        }
    }

    // scalar-line collapse: a proper first factor kills the mixed block
    {
        let h1 = LieSubalgebra::from_span(3, None, so2_in(3, 0), "so2-in-so3");
        let h2 = so_algebra(2);
        let base = direct_sum_euclidean(&[&h1, &h2], false);
        let with_id = direct_sum_euclidean(&[&h1, &h2], true);
        let d0 = curvature_space(&base).len();
        let d1 = curvature_space(&with_id).len();
        push(
            checks,
            "curv/collapse/so2-in-so3+so2",
            "adding the scalar line to a proper factor adds no curvature",
            d0,
            d1,
            d0 == d1,
        );
        let v = berger_check(&with_id);
        push(
            checks,
            "curv/collapse/not-berger",
            "the scalar-extended proper sum is not a Berger algebra",
            false,
            v.is_berger,
            !v.is_berger,
        );
    }

    // three factors: curvature splits into the blocks, never a Berger algebra
    {
        let so2 = so_algebra(2);
        let sum = direct_sum_euclidean(&[&so2, &so2, &so2], true);
        let dim = curvature_space(&sum).len();
        let expected = 3 * curvature_space(&so2).len();
        push(
            checks,
            "curv/three-factor/dim",
            "three-block curvature is the sum of the block curvatures",
            expected,
            dim,
            dim == expected,
        );
        let v = berger_check(&sum);
        push(
            checks,
            "curv/three-factor/not-berger",
            "three blocks with a scalar line never form a Berger algebra",
            false,
            v.is_berger,
            !v.is_berger,
        );
    }

    // mixed block of the two-block sum is a rank-one conformal pair
    {
        let so2 = so_algebra(2);
        let g = direct_sum_euclidean(&[&so2, &so2], true);
        let basis = curvature_space(&g);
        let ok = basis.iter().all(|r| mixed_block_has_conformal_form(r, 2, 2));
        push(
            checks,
            "curv/mixed-block-form",
            "mixed curvature block is determined by one linear map",
            "all basis tensors",
            format!("{}/{} tensors", basis.iter().filter(|r| mixed_block_has_conformal_form(r, 2, 2)).count(), basis.len()),
            ok,
        );
    }

    // decompose / reconstruct round trips on random tensors
    for n in [2usize, 3] {
        let frame = WittFrame::new(n);
        let basis = curvature_space(&co_rp_full(frame));
        let mut sampler = RationalSampler::new(config.seed.wrapping_add(1000 + n as u64));
        let mut good = 0;
        let total = 25;
        for _ in 0..total {
            let mut r = CurvatureTensor::zero(n + 2);
            for b in &basis {
                r = r.add(&b.scale(&sampler.rational()));
            }
            if let Ok(c) = decompose(frame, &r) {
                if reconstruct(&c) == r {
                    good += 1;
                }
            }
        }
        push(
            checks,
            format!("curv/round-trip/n{n}"),
            "component read-off reassembles the tensor exactly",
            format!("{total}/{total}"),
            format!("{good}/{total}"),
            good == total,
        );
    }

    // structure constraints for scalar-extended families with a proper
    // rotation part
    let proper_h = so2_in(3, 0);
    let fixtures: Vec<(String, FamilySpec)> = vec![
        ("Rid-g1h".into(), FamilySpec::new(Family::RidG1H, 3).with_h(proper_h.clone())),
        ("Rid-g2h".into(), FamilySpec::new(Family::RidG2H, 3).with_h(proper_h.clone())),
        (
            "Rid-g3h-phi".into(),
            FamilySpec::new(Family::RidG3HPhi, 3)
                .with_h(proper_h.clone())
                .with_phi(vec![Rational::one()]),
        ),
    ];
    for (name, spec) in fixtures {
        match make_family(&spec) {
            Ok(g) => {
                let basis = curvature_space(&g);
                let mut good = 0;
                for r in &basis {
                    if let Ok(rep) = check_structure_constraints(&g, r) {
                        if rep.all_pass() {
                            good += 1;
                        }
                    }
                }
                push(
                    checks,
                    format!("curv/structure/{name}"),
                    "mixed components vanish, S and P are curvature data of the rotation part",
                    format!("{0}/{0}", basis.len()),
                    format!("{good}/{}", basis.len()),
                    good == basis.len() && !basis.is_empty(),
                );
            }
            Err(e) => push(checks, format!("curv/structure/{name}"), "fixture builds", "ok", e, false),
        }
    }
}

/// Mixed block `R(x1, x2) = Z(x2) ^ x1 + Z*(x1) ^ x2 + (Z(x2), x1) id` for a
/// linear map `Z` recovered from the scalar parts.
fn mixed_block_has_conformal_form(r: &CurvatureTensor, n1: usize, n2: usize) -> bool {
    let n = n1 + n2;
    assert_eq!(r.matrix_dim(), n);
    let size = Rational::from_integer((n as i64).into());
    // Z(e_b) has first-block coordinates read from the scalar parts
    let z: Vec<Vec<Rational>> = (0..n2)
        .map(|b| {
            (0..n1)
                .map(|a| r.value(a, n1 + b).trace() / size.clone())
                .collect()
        })
        .collect();
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };
    let wedge = |x: &[Rational], y: &[Rational]| {
        QMatrix::from_fn(n, n, |rr, cc| y[rr].clone() * x[cc].clone() - x[rr].clone() * y[cc].clone())
    };
    for a in 0..n1 {
        for b in 0..n2 {
            // Z(e_b) as an ambient vector supported on the first block
            let mut zb = vec![Rational::zero(); n];
            for (i, c) in z[b].iter().enumerate() {
                zb[i] = c.clone();
            }
            // Z*(e_a) has second-block coordinates (Z(e_c), e_a)
            let mut za = vec![Rational::zero(); n];
            for c in 0..n2 {
                za[n1 + c] = z[c][a].clone();
            }
            let mut expected = wedge(&zb, &unit(a)).add(&wedge(&za, &unit(n1 + b)));
            expected = expected.add(&QMatrix::identity(n).scale(&z[b][a]));
            if r.value(a, n1 + b) != expected {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// berger-matrix
// ---------------------------------------------------------------------------

fn berger_matrix_checks(checks: &mut Vec<CheckRecord>) {
    let mut fixtures: Vec<(String, Result<LieSubalgebra, crate::error::FamilyError>, bool)> =
        Vec::new();
    let listed = |name: &str, spec: FamilySpec| {
        (format!("berger/listed/{name}"), make_family(&spec), true)
    };

    // scalar-extended families over the rotation menu
    let entries = [
        ("g1h", Family::RidG1H),
        ("g2h", Family::RidG2H),
    ];
    for (fname, family) in entries {
        fixtures.push(listed(&format!("Rid-{fname}/h0-n1"), FamilySpec::new(family, 1)));
        fixtures.push(listed(
            &format!("Rid-{fname}/so2-n2"),
            FamilySpec::new(family, 2).with_h(so2_in(2, 0)),
        ));
        fixtures.push(listed(
            &format!("Rid-{fname}/so2-n3-padded"),
            FamilySpec::new(family, 3).with_h(so2_in(3, 1)),
        ));
        fixtures.push(listed(
            &format!("Rid-{fname}/so3-n3"),
            FamilySpec::new(family, 3).with_h(so3_in(3, 0)),
        ));
        fixtures.push(listed(
            &format!("Rid-{fname}/so22-n4"),
            FamilySpec::new(family, 4).with_h(so22_in(4, 0)),
        ));
    }
    fixtures.push(listed(
        "Rid-g1h/so22-n5-padded",
        FamilySpec::new(Family::RidG1H, 5).with_h(so22_in(5, 1)),
    ));
    fixtures.push(listed(
        "Rid-g2h/so22-n6-padded",
        FamilySpec::new(Family::RidG2H, 6).with_h(so22_in(6, 2)),
    ));

    // scalar-extended boost-coupled families
    for (tag, phi) in [("1", vec![Rational::one()]), ("-1", vec![-Rational::one()])] {
        fixtures.push(listed(
            &format!("Rid-g3h-phi/so2-n2-phi{tag}"),
            FamilySpec::new(Family::RidG3HPhi, 2).with_h(so2_in(2, 0)).with_phi(phi),
        ));
    }
    fixtures.push(listed(
        "Rid-g3h-phi/so22-n4-phi(1,1)",
        FamilySpec::new(Family::RidG3HPhi, 4)
            .with_h(so22_in(4, 0))
            .with_phi(vec![Rational::one(), Rational::one()]),
    ));
    fixtures.push(listed(
        "Rid-g3h-phi/so22-n4-phi(1/2,0)",
        FamilySpec::new(Family::RidG3HPhi, 4)
            .with_h(so22_in(4, 0))
            .with_phi(vec![crate::ratio(1, 2), Rational::zero()]),
    ));

    // twisted families
    let half = crate::ratio(1, 2);
    for (tag, alpha, theta) in [
        ("a0-t1", Rational::zero(), vec![Rational::one()]),
        ("a1-t0", Rational::one(), vec![Rational::zero()]),
        ("a1-t1", Rational::one(), vec![Rational::one()]),
        ("a-1-t1/2", -Rational::one(), vec![half.clone()]),
        ("a1/2-t-1", half.clone(), vec![-Rational::one()]),
    ] {
        fixtures.push(listed(
            &format!("g-alpha-theta-1/so2-n2-{tag}"),
            FamilySpec::new(Family::GAlphaTheta1, 2)
                .with_h(so2_in(2, 0))
                .with_theta(theta)
                .with_alpha(alpha),
        ));
    }
    for (tag, alpha) in [("a1", Rational::one()), ("a-1", -Rational::one()), ("a1/2", half.clone())] {
        fixtures.push(listed(
            &format!("g-alpha-theta-1/so3-n3-{tag}"),
            FamilySpec::new(Family::GAlphaTheta1, 3)
                .with_h(so3_in(3, 0))
                .with_theta(vec![Rational::zero(); 3])
                .with_alpha(alpha),
        ));
    }
    fixtures.push(listed(
        "g-alpha-theta-1/h0-n1-a1",
        FamilySpec::new(Family::GAlphaTheta1, 1).with_alpha(Rational::one()),
    ));
    fixtures.push(listed(
        "g-alpha-theta-1/so22-n4-a1-t(1,1)",
        FamilySpec::new(Family::GAlphaTheta1, 4)
            .with_h(so22_in(4, 0))
            .with_theta(vec![Rational::one(), Rational::one()])
            .with_alpha(Rational::one()),
    ));
    for (tag, theta) in [
        ("t1", vec![Rational::one()]),
        ("t-1", vec![-Rational::one()]),
        ("t1/2", vec![half.clone()]),
    ] {
        fixtures.push(listed(
            &format!("g-theta-2/so2-n2-{tag}"),
            FamilySpec::new(Family::GTheta2, 2).with_h(so2_in(2, 0)).with_theta(theta),
        ));
    }
    fixtures.push(listed(
        "g-theta-2/so2-n3-padded",
        FamilySpec::new(Family::GTheta2, 3)
            .with_h(so2_in(3, 1))
            .with_theta(vec![Rational::one()]),
    ));
    fixtures.push(listed(
        "g-theta-2/so22-n4-t(1,1)",
        FamilySpec::new(Family::GTheta2, 4)
            .with_h(so22_in(4, 0))
            .with_theta(vec![Rational::one(), Rational::one()]),
    ));
    fixtures.push(listed(
        "g-theta-2/so22-n4-t(1/2,-1)",
        FamilySpec::new(Family::GTheta2, 4)
            .with_h(so22_in(4, 0))
            .with_theta(vec![half.clone(), -Rational::one()]),
    ));
    for (tag, theta, phi) in [
        ("t1-p1", vec![Rational::one()], vec![Rational::one()]),
        ("t1-p-1", vec![Rational::one()], vec![-Rational::one()]),
        ("t1/2-p1", vec![half.clone()], vec![Rational::one()]),
    ] {
        fixtures.push(listed(
            &format!("g-theta-3-phi/so2-n2-{tag}"),
            FamilySpec::new(Family::GTheta3Phi, 2)
                .with_h(so2_in(2, 0))
                .with_theta(theta)
                .with_phi(phi),
        ));
    }
    fixtures.push(listed(
        "g-theta-3-phi/so22-n4",
        FamilySpec::new(Family::GTheta3Phi, 4)
            .with_h(so22_in(4, 0))
            .with_theta(vec![Rational::one(), Rational::one()])
            .with_phi(vec![Rational::one(), -Rational::one()]),
    ));

    // conformal products
    for (k, n) in [(-1i64, 2usize), (0, 2), (1, 2), (1, 3)] {
        fixtures.push(listed(
            &format!("conformal-product-1/k{k}-n{n}"),
            FamilySpec::new(Family::ConformalProduct1, n).with_k(k),
        ));
    }
    for (k, n) in [(0i64, 1usize), (0, 2), (1, 2)] {
        fixtures.push(listed(
            &format!("conformal-product-2/k{k}-n{n}"),
            FamilySpec::new(Family::ConformalProduct2, n).with_k(k),
        ));
    }
    fixtures.push(listed(
        "conformal-product-2/k2-n3-so2",
        {
            let mut s = FamilySpec::new(Family::ConformalProduct2, 3).with_k(2);
            s.h_basis = so2_in(2, 0);
            s
        },
    ));
    for (k, n) in [(1i64, 2usize), (1, 3)] {
        fixtures.push(listed(
            &format!("conformal-product-3/k{k}-n{n}"),
            FamilySpec::new(Family::ConformalProduct3, n).with_k(k),
        ));
    }
    fixtures.push(listed(
        "conformal-product-3/k2-n3-so2",
        {
            let mut s = FamilySpec::new(Family::ConformalProduct3, 3).with_k(2);
            s.h_basis = so2_in(2, 0);
            s
        },
    ));

    // excluded configurations
    fixtures.push((
        "berger/excluded/Rid-type4".to_string(),
        make_family(&FamilySpec {
            m: Some(2),
            psi: vec![vec![Rational::one()]],
            ..FamilySpec::new(Family::RidG4HMPsi, 3).with_h(so2_in(2, 0))
        }),
        false,
    ));
    {
        let frame = WittFrame::new(2);
        let pq = frame.wedge(&frame.p(), &frame.q()).expect("frame");
        let e12 = frame.wedge(&frame.e(1), &frame.e(2)).expect("frame");
        fixtures.push((
            "berger/excluded/boost-rotation-coupling".to_string(),
            LieSubalgebra::lie_closure(
                4,
                Some(frame),
                &[pq.clone(), e12.add(&QMatrix::identity(4))],
                "coupled",
            ),
            false,
        ));
        fixtures.push((
            "berger/excluded/conformal-block-twisted".to_string(),
            LieSubalgebra::lie_closure(
                4,
                Some(frame),
                &[
                    QMatrix::identity(4).add(&pq),
                    e12.add(&QMatrix::identity(4)),
                ],
                "twisted block",
            ),
            false,
        ));
    }
    fixtures.push((
        "berger/excluded/flat-twist-b2".to_string(),
        case_b2_algebra(
            WittFrame::new(3),
            1,
            &[jmat(3, 1, 2)],
            &[Rational::zero()],
            &[Rational::one()],
        ),
        false,
    ));

    for (id, built, expected) in fixtures {
        match built {
            Ok(algebra) => {
                let v = berger_check(&algebra);
                push(
                    checks,
                    id,
                    "Berger verdict matches the classification",
                    expected,
                    v.is_berger,
                    v.is_berger == expected,
                );
            }
            Err(e) => push(checks, id, "fixture builds", "ok", e, false),
        }
    }

    // every Berger algebra in the model projects onto a weak-Berger
    // rotation part
    let representative: Vec<(String, FamilySpec)> = vec![
        ("Rid-g1h/so2-n2".into(), FamilySpec::new(Family::RidG1H, 2).with_h(so2_in(2, 0))),
        (
            "g-theta-2/so22-n4".into(),
            FamilySpec::new(Family::GTheta2, 4)
                .with_h(so22_in(4, 0))
                .with_theta(vec![Rational::one(), Rational::one()]),
        ),
        ("Rid-g2h/so3-n3".into(), FamilySpec::new(Family::RidG2H, 3).with_h(so3_in(3, 0))),
    ];
    for (name, spec) in representative {
        let result = make_family(&spec).map(|g| {
            let h = g.project_so_n_part().expect("model family");
            weak_berger_check(&h).holds
        });
        match result {
            Ok(holds) => push(
                checks,
                format!("berger/rotation-part-weak-berger/{name}"),
                "rotation part of a Berger algebra is weak-Berger",
                true,
                holds,
                holds,
            ),
            Err(e) => push(checks, format!("berger/rotation-part-weak-berger/{name}"), "fixture builds", "ok", e, false),
        }
    }
}

// ---------------------------------------------------------------------------
// weak-berger
// ---------------------------------------------------------------------------

fn weak_berger_checks(checks: &mut Vec<CheckRecord>) {
    let menu: Vec<(&str, LieSubalgebra)> = vec![
        ("so2", so_algebra(2)),
        ("so3", so_algebra(3)),
        ("so2+so2", direct_sum_euclidean(&[&so_algebra(2), &so_algebra(2)], false)),
    ];
    for (name, h) in &menu {
        let v = weak_berger_check(h);
        push(
            checks,
            format!("weak/{name}"),
            "weak curvature images span the algebra",
            true,
            v.holds,
            v.holds,
        );
    }
    let dim = weak_curvature_space(&so_algebra(2)).len();
    push(
        checks,
        "weak/dim-so2",
        "planar weak curvature space is two-dimensional",
        2,
        dim,
        dim == 2,
    );
    let zero = LieSubalgebra::from_span(2, None, vec![], "0");
    push(
        checks,
        "weak/trivial",
        "trivial algebra is vacuously weak-Berger",
        true,
        weak_berger_check(&zero).holds,
        weak_berger_check(&zero).holds,
    );
    // additivity over orthogonal splittings
    let sums = [
        ("so2+so2", direct_sum_euclidean(&[&so_algebra(2), &so_algebra(2)], false), 4usize),
        (
            "so3+so2",
            direct_sum_euclidean(&[&so_algebra(3), &so_algebra(2)], false),
            weak_curvature_space(&so_algebra(3)).len() + 2,
        ),
    ];
    for (name, alg, expected) in sums {
        let dim = weak_curvature_space(&alg).len();
        push(
            checks,
            format!("weak/additivity/{name}"),
            "weak curvature space splits along the block decomposition",
            expected,
            dim,
            dim == expected,
        );
    }
}

// ---------------------------------------------------------------------------
// realizations
// ---------------------------------------------------------------------------

fn standard_p(n: usize, h_basis: &[QMatrix], n0: usize) -> Vec<QMatrix> {
    // one generator per block start: P(e_i) = first basis element acting
    // there; zero on the flat block
    let mut p = vec![QMatrix::zeros(n, n); n];
    // place each h-basis generator on the first direction it moves
    let mut used = vec![false; n];
    for a in h_basis {
        let mut first = None;
        'outer: for i in n0..n {
            for r in 0..n {
                if !a[(r, i)].is_zero() {
                    first = Some(i);
                    break 'outer;
                }
            }
        }
        if let Some(i) = first {
            if !used[i] {
                p[i] = a.clone();
                used[i] = true;
            }
        }
    }
    p
}

fn realization_checks(config: &SuiteConfig, checks: &mut Vec<CheckRecord>) {
    struct Fx {
        id: String,
        preset: RealizationPreset,
        require_translations: bool,
    }
    let mut fixtures: Vec<Fx> = Vec::new();
    let table_preset = |row: u8, n: usize, n0: usize, h: Vec<QMatrix>| -> RealizationPreset {
        let mut p = RealizationPreset::new(PresetTag::Row(row), n);
        p.n0 = n0;
        p.p_ops = standard_p(n, &h, n0);
        p.h_basis = h;
        p.order = config.order;
        p.max_order = config.max_order;
        p
    };

    for row in 1..=2u8 {
        for (n, n0, h) in [
            (1usize, 1usize, Vec::new()),
            (2, 0, so2_in(2, 0)),
            (3, 1, so2_in(3, 1)),
        ] {
            fixtures.push(Fx {
                id: format!("realize/row{row}/n{n}-n0{n0}"),
                preset: table_preset(row, n, n0, h),
                require_translations: true,
            });
        }
    }
    for (n, n0, h) in [(2usize, 0usize, so2_in(2, 0)), (3, 1, so2_in(3, 1))] {
        let mut p = table_preset(3, n, n0, h);
        p.phi = vec![Rational::one()];
        fixtures.push(Fx {
            id: format!("realize/row3/n{n}-n0{n0}"),
            preset: p,
            require_translations: true,
        });
    }
    for alpha in [Rational::zero(), Rational::one()] {
        let mut p = table_preset(4, 2, 0, so2_in(2, 0));
        p.theta = vec![Rational::one()];
        p.alpha = alpha.clone();
        fixtures.push(Fx {
            id: format!("realize/row4/n2-alpha{alpha}"),
            preset: p,
            require_translations: true,
        });
    }
    {
        let mut p = table_preset(5, 2, 0, so2_in(2, 0));
        p.theta = vec![Rational::one()];
        fixtures.push(Fx { id: "realize/row5/n2".into(), preset: p, require_translations: true });
        let mut p = table_preset(5, 3, 1, so2_in(3, 1));
        p.theta = vec![Rational::one()];
        fixtures.push(Fx { id: "realize/row5/n3-n01".into(), preset: p, require_translations: true });
    }
    {
        let mut p = table_preset(6, 2, 0, so2_in(2, 0));
        p.theta = vec![Rational::one()];
        p.phi = vec![Rational::one()];
        fixtures.push(Fx { id: "realize/row6/n2".into(), preset: p, require_translations: true });
    }
    for (tag, k, n) in [
        (PresetTag::Cp2, 0i64, 2usize),
        (PresetTag::Cp2, 1, 3),
        (PresetTag::Cp3, 0, 2),
        (PresetTag::Cp3, 1, 3),
    ] {
        let mut p = RealizationPreset::new(tag, n);
        p.k = Some(k);
        p.order = config.order;
        p.max_order = config.max_order;
        fixtures.push(Fx {
            id: format!("realize/{}/k{k}-n{n}", tag.label().replace(' ', "")),
            preset: p,
            require_translations: false,
        });
    }

    for fx in fixtures {
        match build_preset(&fx.preset) {
            Ok((ws, target)) => match verify_realization(&ws, &target, fx.preset.max_order, false) {
                Ok(report) => {
                    let pass = report.holonomy_equal()
                        && report.stabilized_at.is_some()
                        && (!fx.require_translations || report.translations_contained);
                    push(
                        checks,
                        fx.id,
                        "holonomy at the origin equals the classified target",
                        format!("dim {}", report.target_dim),
                        format!(
                            "dim {}, stabilized at {:?}, orders {:?}",
                            report.generated_dim, report.stabilized_at, report.per_order_dims
                        ),
                        pass,
                    );
                }
                Err(e) => push(checks, fx.id, "holonomy generation runs", "ok", e, false),
            },
            Err(e) => push(checks, fx.id, "preset builds", "ok", e, false),
        }
    }

    // the displayed curvature components of the conformal-product metrics
    for (k, n) in [(0usize, 2usize), (1, 3)] {
        let mut p = RealizationPreset::new(PresetTag::Cp2, n);
        p.k = Some(k as i64);
        p.order = config.order;
        p.max_order = config.max_order;
        let id = format!("realize/display/cp2-k{k}-n{n}");
        match build_preset(&p).map(|(ws, _)| ws.connection().map(|c| jet_curvature(&c))) {
            Ok(Ok(curv)) => {
                let at0 = curv.value(k + 1, n + 1).eval0();
                let mut expected = QMatrix::zeros(n + 2, n + 2);
                for i in 1..=n {
                    expected[(i, i)] = Rational::one();
                }
                expected[(n + 1, n + 1)] = Rational::from_integer(2.into());
                push(
                    checks,
                    id,
                    "curvature along the gauge direction is the displayed block matrix",
                    "diag(0, E_n, 2)",
                    if at0 == expected { "diag(0, E_n, 2)".to_string() } else { format!("{at0:?}") },
                    at0 == expected,
                );
            }
            Ok(Err(e)) => push(checks, id, "connection builds", "ok", e, false),
            Err(e) => push(checks, id, "preset builds", "ok", e, false),
        }
    }
    for (k, n) in [(0usize, 2usize), (1, 3)] {
        let mut p = RealizationPreset::new(PresetTag::Cp3, n);
        p.k = Some(k as i64);
        p.order = config.order;
        p.max_order = config.max_order;
        let id = format!("realize/display/cp3-k{k}-n{n}");
        match build_preset(&p).map(|(ws, _)| ws.connection().map(|c| jet_curvature(&c))) {
            Ok(Ok(curv)) => {
                let at0 = curv.value(0, n + 1).eval0();
                let mut expected = QMatrix::zeros(n + 2, n + 2);
                expected[(0, 0)] = Rational::one();
                expected[(n + 1, n + 1)] = -Rational::one();
                push(
                    checks,
                    id,
                    "boost curvature of the quadratic potential is diagonal",
                    "diag(1, 0, .., -1)",
                    if at0 == expected { "diag(1, 0, .., -1)".to_string() } else { format!("{at0:?}") },
                    at0 == expected,
                );
            }
            Ok(Err(e)) => push(checks, id, "connection builds", "ok", e, false),
            Err(e) => push(checks, id, "preset builds", "ok", e, false),
        }
    }
}

/// Run a realization preset and report the comparison; shared by the CLI.
pub fn realize_report(preset: &RealizationPreset) -> Result<VerificationReport, crate::error::WeylError> {
    let (ws, target) = build_preset(preset)?;
    let report = verify_realization(&ws, &target, preset.max_order, true)?;
    let require_translations = matches!(preset.tag, PresetTag::Row(_));
    let mut checks = Vec::new();
    push(
        &mut checks,
        "realize/equality",
        "holonomy at the origin equals the classified target",
        format!("dim {}", report.target_dim),
        format!(
            "dim {} (in target: {}, contains target: {})",
            report.generated_dim, report.generated_in_target, report.target_in_generated
        ),
        report.holonomy_equal(),
    );
    push(
        &mut checks,
        "realize/stability",
        "derivative orders stopped adding generators",
        "stabilized",
        format!("at {:?}, orders {:?}", report.stabilized_at, report.per_order_dims),
        report.stabilized_at.is_some(),
    );
    if require_translations {
        push(
            &mut checks,
            "realize/translations",
            "all flat directions appear in the holonomy algebra",
            true,
            report.translations_contained,
            report.translations_contained,
        );
    }
    if let Some(dim) = report.metric_holonomy_dim {
        push(
            &mut checks,
            "realize/metric-holonomy",
            "holonomy of the underlying metric connection (informational)",
            "-",
            format!("dim {dim}"),
            true,
        );
    }
    Ok(VerificationReport::from_checks(format!("realize {}", preset.tag.label()), checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_reports_zero_checks_and_passes() {
        let cfg = SuiteConfig { suites: vec![], ..SuiteConfig::default() };
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.checks.len(), 0);
        assert!(report.all_pass());
        assert_eq!(report.suite, "(empty)");
    }

    #[test]
    fn config_bounds_are_enforced() {
        let cfg = SuiteConfig { order: 11, ..SuiteConfig::default() };
        assert!(cfg.validate().is_err());
        let cfg = SuiteConfig { order: 5, max_order: 4, ..SuiteConfig::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn weak_berger_suite_passes() {
        let cfg = SuiteConfig { suites: vec![SuiteTag::WeakBerger], ..SuiteConfig::default() };
        let report = run_suite(&cfg).unwrap();
        assert!(report.all_pass(), "{}", report.render_text(None));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig { suites: vec![SuiteTag::WeakBerger], ..SuiteConfig::default() };
        let a = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
