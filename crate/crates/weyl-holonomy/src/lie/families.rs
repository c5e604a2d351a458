//! Constructors for the classified subalgebra families and common ambient
//! algebras.
//!
//! Family parameters follow the classification: `h` is a user-supplied list
//! of skew matrices (validated for skewness and bracket-closure, never looked
//! up in a catalog), the linear functionals `theta` and `phi` are coefficient
//! vectors against that basis, and the constructors reject parameters that
//! break the defining constraints instead of silently producing a span that
//! is not a Lie algebra.

use super::{CoElement, LieSubalgebra, WittFrame};
use crate::error::FamilyError;
use crate::solve::nullspace;
use crate::{QMatrix, QSubspace, Rational};
use num_traits::Zero;

/// Family tags of the constructor catalog.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// `(R + h) |x R^n`, boost plus rotations plus translations.
    G1H,
    /// `h |x R^n`.
    G2H,
    /// `{ (phi(A), A, 0) } |x R^n`, boost coupled to the rotation.
    G3HPhi,
    /// `{ (0, A, X + psi(A)) }`, translations twisted into the rotation.
    G4HMPsi,
    /// Scalar line added to one of the four types above.
    RidG1H,
    RidG2H,
    RidG3HPhi,
    RidG4HMPsi,
    /// `{ (alpha a + theta(A), a, A, 0) } |x R^n`.
    GAlphaTheta1,
    /// `{ (theta(A), 0, A, 0) } |x R^n`.
    GTheta2,
    /// `{ (theta(A), phi(A), A, 0) } |x R^n`.
    GTheta3Phi,
    /// Scalar line plus a Lorentz block plus a Euclidean rotation block.
    ConformalProduct1,
    /// Coupled scalar/boost generator with a Riemannian block.
    ConformalProduct2,
    /// Scalar line, free boost, Riemannian block.
    ConformalProduct3,
    /// Euclidean `R id + so(k) + so(n-k)` on `R^n`.
    SoSum,
    /// Lie closure of explicit generator matrices.
    Custom,
}

impl Family {
    pub fn parse(tag: &str) -> Result<Self, FamilyError> {
        Ok(match tag {
            "g1h" => Family::G1H,
            "g2h" => Family::G2H,
            "g3h-phi" => Family::G3HPhi,
            "g4h-m-psi" => Family::G4HMPsi,
            "Rid-plus:g1h" => Family::RidG1H,
            "Rid-plus:g2h" => Family::RidG2H,
            "Rid-plus:g3h-phi" => Family::RidG3HPhi,
            "Rid-plus:g4h-m-psi" => Family::RidG4HMPsi,
            "g-alpha-theta-1" => Family::GAlphaTheta1,
            "g-theta-2" => Family::GTheta2,
            "g-theta-3-phi" => Family::GTheta3Phi,
            "conformal-product-1" => Family::ConformalProduct1,
            "conformal-product-2" => Family::ConformalProduct2,
            "conformal-product-3" => Family::ConformalProduct3,
            "so-sum" => Family::SoSum,
            "custom" => Family::Custom,
            _ => return Err(FamilyError::UnknownFamily { tag: tag.to_string() }),
        })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::G1H => "g1h",
            Family::G2H => "g2h",
            Family::G3HPhi => "g3h-phi",
            Family::G4HMPsi => "g4h-m-psi",
            Family::RidG1H => "Rid-plus:g1h",
            Family::RidG2H => "Rid-plus:g2h",
            Family::RidG3HPhi => "Rid-plus:g3h-phi",
            Family::RidG4HMPsi => "Rid-plus:g4h-m-psi",
            Family::GAlphaTheta1 => "g-alpha-theta-1",
            Family::GTheta2 => "g-theta-2",
            Family::GTheta3Phi => "g-theta-3-phi",
            Family::ConformalProduct1 => "conformal-product-1",
            Family::ConformalProduct2 => "conformal-product-2",
            Family::ConformalProduct3 => "conformal-product-3",
            Family::SoSum => "so-sum",
            Family::Custom => "custom",
        }
    }
}

/// Parameters of a family constructor. Fields that a family does not use are
/// ignored by it.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    /// Basis of the rotation subalgebra. `n x n` matrices, except for the
    /// type-4 and conformal-product families where the block is `m x m`
    /// respectively `k x k` and gets embedded into the leading coordinates.
    pub h_basis: Vec<QMatrix>,
    /// Coefficients of `theta` against `h_basis`.
    pub theta: Vec<Rational>,
    /// Coefficients of `phi` against `h_basis`.
    pub phi: Vec<Rational>,
    pub alpha: Rational,
    /// Split position of the conformal products (`-1 <= k <= n - 1`).
    pub k: Option<i64>,
    /// Split position of the type-4 family (`h` sits in `so(m)`).
    pub m: Option<usize>,
    /// Size of the block the rotation algebra acts trivially on.
    pub n0: Option<usize>,
    /// Values `psi(A_i)` in `R^(n-m)`, one per `h_basis` element.
    pub psi: Vec<Vec<Rational>>,
    /// Explicit generators for `Family::Custom`.
    pub generators: Vec<QMatrix>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            h_basis: Vec::new(),
            theta: Vec::new(),
            phi: Vec::new(),
            alpha: Rational::zero(),
            k: None,
            m: None,
            n0: None,
            psi: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn with_h(mut self, h_basis: Vec<QMatrix>) -> Self {
        self.h_basis = h_basis;
        self
    }

    pub fn with_theta(mut self, theta: Vec<Rational>) -> Self {
        self.theta = theta;
        self
    }

    pub fn with_phi(mut self, phi: Vec<Rational>) -> Self {
        self.phi = phi;
        self
    }

    pub fn with_alpha(mut self, alpha: Rational) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }
}

/// Validated rotation subalgebra data: the span of the basis inside `gl(d)`.
struct ValidatedH {
    span: QSubspace,
}

fn validate_h(d: usize, h_basis: &[QMatrix]) -> Result<ValidatedH, FamilyError> {
    for (index, a) in h_basis.iter().enumerate() {
        if (a.rows(), a.cols()) != (d, d) || !a.add(&a.transpose()).is_zero() {
            return Err(FamilyError::HBasisNotSkew { index });
        }
    }
    let span = QSubspace::span_unchecked(
        d * d,
        h_basis.iter().map(|m| m.flatten().to_vec()).collect(),
    );
    if span.dim() != h_basis.len() {
        return Err(FamilyError::BadSplit {
            reason: "h_basis is linearly dependent".to_string(),
        });
    }
    for i in 0..h_basis.len() {
        for j in i + 1..h_basis.len() {
            let br = h_basis[i].commutator(&h_basis[j]);
            if !span.contains(br.flatten()).expect("ambient matches") {
                return Err(FamilyError::HBasisNotClosed { i, j });
            }
        }
    }
    Ok(ValidatedH { span })
}

/// Check that a functional given by coefficients against `h_basis` vanishes
/// on every bracket of basis elements.
fn check_vanishes_on_commutant(
    functional: &'static str,
    coeffs: &[Rational],
    h_basis: &[QMatrix],
    h: &ValidatedH,
) -> Result<(), FamilyError> {
    if coeffs.len() != h_basis.len() {
        return Err(FamilyError::FunctionalLength {
            functional,
            expected: h_basis.len(),
            got: coeffs.len(),
        });
    }
    for i in 0..h_basis.len() {
        for j in i + 1..h_basis.len() {
            let br = h_basis[i].commutator(&h_basis[j]);
            let coords = h
                .span
                .coords(br.flatten())
                .expect("ambient matches")
                .expect("h is bracket-closed");
            let value = coords
                .iter()
                .zip(coeffs)
                .map(|(c, t)| c.clone() * t.clone())
                .fold(Rational::zero(), |acc, x| acc + x);
            if !value.is_zero() {
                return Err(FamilyError::FunctionalOnCommutant { functional, i, j });
            }
        }
    }
    Ok(())
}

fn require_nonzero(
    functional: &'static str,
    coeffs: &[Rational],
) -> Result<(), FamilyError> {
    if coeffs.iter().all(Zero::is_zero) {
        return Err(FamilyError::FunctionalZero { functional });
    }
    Ok(())
}

/// Dimension of the center `{ C in h : [C, A_i] = 0 for all i }`.
fn center_dim(h_basis: &[QMatrix]) -> usize {
    if h_basis.is_empty() {
        return 0;
    }
    let d = h_basis[0].rows();
    let rows_per = d * d;
    let mut rows = Vec::new();
    for a in h_basis {
        for r in 0..rows_per {
            let mut row = Vec::with_capacity(h_basis.len());
            for c in h_basis {
                let br = c.commutator(a);
                row.push(br.flatten()[r].clone());
            }
            rows.push(row);
        }
    }
    nullspace(&QMatrix::from_rows(rows)).dim()
}

fn zero_rot(n: usize) -> QMatrix {
    QMatrix::zeros(n, n)
}

fn zero_x(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

fn unit_x(n: usize, j: usize) -> Vec<Rational> {
    let mut v = zero_x(n);
    v[j] = Rational::one();
    v
}

use num_traits::One;

fn embed_block(block: &QMatrix, offset: usize, n: usize) -> QMatrix {
    let mut out = QMatrix::zeros(n, n);
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            out[(offset + i, offset + j)] = block[(i, j)].clone();
        }
    }
    out
}

/// Euclidean rotation generators `e_i ^ e_j` for `lo <= i < j < hi`,
/// as `n x n` matrices.
fn euclidean_rotations(n: usize, lo: usize, hi: usize) -> Vec<QMatrix> {
    let mut out = Vec::new();
    for i in lo..hi {
        for j in i + 1..hi {
            let mut m = QMatrix::zeros(n, n);
            m[(j, i)] = Rational::one();
            m[(i, j)] = -Rational::one();
            out.push(m);
        }
    }
    out
}

/// Full Euclidean rotation algebra on `R^n`.
pub fn so_algebra(n: usize) -> LieSubalgebra {
    LieSubalgebra::from_span(n, None, euclidean_rotations(n, 0, n), format!("so({n})"))
}

/// Orthogonal algebra of the diagonal form with `r` minus and `s` plus
/// signs, acting on `R^(r+s)`.
pub fn so_pseudo(r: usize, s: usize) -> LieSubalgebra {
    let n = r + s;
    let gram = QMatrix::from_fn(n, n, |i, j| {
        if i != j {
            Rational::zero()
        } else if i < r {
            -Rational::one()
        } else {
            Rational::one()
        }
    });
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // wedge of basis vectors for the diagonal form
            let mut m = QMatrix::zeros(n, n);
            m[(j, i)] = gram[(i, i)].clone();
            m[(i, j)] = -gram[(j, j)].clone();
            gens.push(m);
        }
    }
    LieSubalgebra::from_span(n, None, gens, format!("so({r},{s})"))
}

/// `so(r, s)` together with the scalar line.
pub fn co_pseudo(r: usize, s: usize) -> LieSubalgebra {
    let n = r + s;
    let mut gens = vec![QMatrix::identity(n)];
    gens.extend(so_pseudo(r, s).basis_matrices());
    LieSubalgebra::from_span(n, None, gens, format!("co({r},{s})"))
}

/// The orthogonal algebra of the Witt form preserving the line through `p`.
pub fn so_rp(frame: WittFrame) -> LieSubalgebra {
    let n = frame.n();
    let mut gens = vec![CoElement::new(
        frame,
        Rational::zero(),
        Rational::one(),
        zero_rot(n),
        zero_x(n),
    )
    .matrix()];
    for a in euclidean_rotations(n, 0, n) {
        gens.push(CoElement::new(frame, Rational::zero(), Rational::zero(), a, zero_x(n)).matrix());
    }
    for j in 0..n {
        gens.push(
            CoElement::new(frame, Rational::zero(), Rational::zero(), zero_rot(n), unit_x(n, j))
                .matrix(),
        );
    }
    LieSubalgebra::from_span(frame.dim(), Some(frame), gens, format!("so(1,{}) R p", n + 1))
}

/// The full conformal algebra preserving the line through `p`.
pub fn co_rp_full(frame: WittFrame) -> LieSubalgebra {
    let mut gens = vec![QMatrix::identity(frame.dim())];
    gens.extend(so_rp(frame).basis_matrices());
    LieSubalgebra::from_span(
        frame.dim(),
        Some(frame),
        gens,
        format!("co(1,{}) R p", frame.n() + 1),
    )
}

/// Block-diagonal sum of algebras acting on consecutive coordinate blocks of
/// the Euclidean space, optionally with the scalar line added.
pub fn direct_sum_euclidean(blocks: &[&LieSubalgebra], with_id: bool) -> LieSubalgebra {
    let total: usize = blocks.iter().map(|b| b.matrix_dim()).sum();
    let mut gens = Vec::new();
    if with_id {
        gens.push(QMatrix::identity(total));
    }
    let mut offset = 0;
    let mut labels = Vec::new();
    for b in blocks {
        for m in b.basis_matrices() {
            gens.push(embed_block(&m, offset, total));
        }
        offset += b.matrix_dim();
        labels.push(b.label().to_string());
    }
    let label = if with_id {
        format!("R id + {}", labels.join(" + "))
    } else {
        labels.join(" + ")
    };
    LieSubalgebra::from_span(total, None, gens, label)
}

/// The twisted family of case b.2: rotations and the flat translations carry
/// a scalar component, the remaining translations do not.
///
/// `h_basis` are `n x n` skew matrices acting trivially on the first `n0`
/// coordinates, `theta_h` pairs with `h_basis`, `theta_flat` with the first
/// `n0` translation directions.
pub fn case_b2_algebra(
    frame: WittFrame,
    n0: usize,
    h_basis: &[QMatrix],
    theta_h: &[Rational],
    theta_flat: &[Rational],
) -> Result<LieSubalgebra, FamilyError> {
    let n = frame.n();
    let h = validate_h(n, h_basis)?;
    check_vanishes_on_commutant("theta", theta_h, h_basis, &h)?;
    if theta_flat.len() != n0 {
        return Err(FamilyError::FunctionalLength {
            functional: "theta",
            expected: n0,
            got: theta_flat.len(),
        });
    }
    for (index, a) in h_basis.iter().enumerate() {
        for j in 0..n0 {
            if !a.apply(&unit_x(n, j)).iter().all(Zero::is_zero) {
                return Err(FamilyError::BadSplit {
                    reason: format!("h_basis[{index}] does not act trivially on the flat block"),
                });
            }
        }
    }
    let mut gens = Vec::new();
    for (a, t) in h_basis.iter().zip(theta_h) {
        gens.push(CoElement::new(frame, t.clone(), Rational::zero(), a.clone(), zero_x(n)).matrix());
    }
    for (j, t) in theta_flat.iter().enumerate() {
        gens.push(
            CoElement::new(frame, t.clone(), Rational::zero(), zero_rot(n), unit_x(n, j)).matrix(),
        );
    }
    for j in n0..n {
        gens.push(
            CoElement::new(frame, Rational::zero(), Rational::zero(), zero_rot(n), unit_x(n, j))
                .matrix(),
        );
    }
    Ok(LieSubalgebra::from_span(frame.dim(), Some(frame), gens, "case-b2-twisted"))
}

/// Build the matrix span of a classified family.
pub fn make_family(spec: &FamilySpec) -> Result<LieSubalgebra, FamilyError> {
    let n = spec.n;
    let frame = WittFrame::new(n);
    let label = spec.family.tag().to_string();
    match spec.family {
        Family::G1H | Family::RidG1H => {
            let h = validate_h(n, &spec.h_basis)?;
            let _ = h;
            let mut gens = base_gens(frame, spec.family == Family::RidG1H);
            gens.push(boost(frame));
            for a in &spec.h_basis {
                gens.push(rot(frame, a.clone()));
            }
            gens.extend(translations(frame, 0, n));
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::G2H | Family::RidG2H => {
            validate_h(n, &spec.h_basis)?;
            let mut gens = base_gens(frame, spec.family == Family::RidG2H);
            for a in &spec.h_basis {
                gens.push(rot(frame, a.clone()));
            }
            gens.extend(translations(frame, 0, n));
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::G3HPhi | Family::RidG3HPhi => {
            let h = validate_h(n, &spec.h_basis)?;
            require_nonzero("phi", &spec.phi)?;
            check_vanishes_on_commutant("phi", &spec.phi, &spec.h_basis, &h)?;
            if center_dim(&spec.h_basis) == 0 {
                return Err(FamilyError::CenterTrivial);
            }
            let mut gens = base_gens(frame, spec.family == Family::RidG3HPhi);
            for (a, f) in spec.h_basis.iter().zip(&spec.phi) {
                gens.push(
                    CoElement::new(frame, Rational::zero(), f.clone(), a.clone(), zero_x(n))
                        .matrix(),
                );
            }
            gens.extend(translations(frame, 0, n));
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::G4HMPsi | Family::RidG4HMPsi => {
            let m = spec
                .m
                .ok_or(FamilyError::MissingParameter { family: label.clone(), param: "m" })?;
            if m > n {
                return Err(FamilyError::BadSplit { reason: format!("m = {m} exceeds n = {n}") });
            }
            let h = validate_h(m, &spec.h_basis)?;
            if spec.psi.len() != spec.h_basis.len()
                || spec.psi.iter().any(|v| v.len() != n - m)
            {
                return Err(FamilyError::FunctionalLength {
                    functional: "psi",
                    expected: spec.h_basis.len(),
                    got: spec.psi.len(),
                });
            }
            // psi must vanish on the commutant of h
            for i in 0..spec.h_basis.len() {
                for j in i + 1..spec.h_basis.len() {
                    let br = spec.h_basis[i].commutator(&spec.h_basis[j]);
                    let coords = h
                        .span
                        .coords(br.flatten())
                        .expect("ambient matches")
                        .expect("h is bracket-closed");
                    for t in 0..n - m {
                        let val = coords
                            .iter()
                            .zip(&spec.psi)
                            .map(|(c, v)| c.clone() * v[t].clone())
                            .fold(Rational::zero(), |acc, x| acc + x);
                        if !val.is_zero() {
                            return Err(FamilyError::FunctionalOnCommutant {
                                functional: "psi",
                                i,
                                j,
                            });
                        }
                    }
                }
            }
            if QSubspace::span_unchecked(n - m, spec.psi.clone()).dim() != n - m {
                return Err(FamilyError::PsiNotSurjective);
            }
            if center_dim(&spec.h_basis) < n - m {
                return Err(FamilyError::CenterTooSmall);
            }
            let mut gens = base_gens(frame, spec.family == Family::RidG4HMPsi);
            for (a, psi_a) in spec.h_basis.iter().zip(&spec.psi) {
                let mut x = zero_x(n);
                for (t, val) in psi_a.iter().enumerate() {
                    x[m + t] = val.clone();
                }
                gens.push(
                    CoElement::new(frame, Rational::zero(), Rational::zero(), embed_block(a, 0, n), x)
                        .matrix(),
                );
            }
            gens.extend(translations(frame, 0, m));
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::GAlphaTheta1 => {
            let h = validate_h(n, &spec.h_basis)?;
            check_vanishes_on_commutant("theta", &spec.theta, &spec.h_basis, &h)?;
            if spec.alpha.is_zero() && spec.theta.iter().all(Zero::is_zero) {
                return Err(FamilyError::AlphaThetaBothZero);
            }
            let mut gens = vec![CoElement::new(
                frame,
                spec.alpha.clone(),
                Rational::one(),
                zero_rot(n),
                zero_x(n),
            )
            .matrix()];
            for (a, t) in spec.h_basis.iter().zip(&spec.theta) {
                gens.push(
                    CoElement::new(frame, t.clone(), Rational::zero(), a.clone(), zero_x(n))
                        .matrix(),
                );
            }
            gens.extend(translations(frame, 0, n));
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::GTheta2 => {
            let h = validate_h(n, &spec.h_basis)?;
            require_nonzero("theta", &spec.theta)?;
            check_vanishes_on_commutant("theta", &spec.theta, &spec.h_basis, &h)?;
            let mut gens = Vec::new();
            for (a, t) in spec.h_basis.iter().zip(&spec.theta) {
                gens.push(
                    CoElement::new(frame, t.clone(), Rational::zero(), a.clone(), zero_x(n))
                        .matrix(),
                );
            }
            gens.extend(translations(frame, 0, n));
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::GTheta3Phi => {
            let h = validate_h(n, &spec.h_basis)?;
            require_nonzero("theta", &spec.theta)?;
            require_nonzero("phi", &spec.phi)?;
            check_vanishes_on_commutant("theta", &spec.theta, &spec.h_basis, &h)?;
            check_vanishes_on_commutant("phi", &spec.phi, &spec.h_basis, &h)?;
            if center_dim(&spec.h_basis) == 0 {
                return Err(FamilyError::CenterTrivial);
            }
            let mut gens = Vec::new();
            for ((a, t), f) in spec.h_basis.iter().zip(&spec.theta).zip(&spec.phi) {
                gens.push(CoElement::new(frame, t.clone(), f.clone(), a.clone(), zero_x(n)).matrix());
            }
            gens.extend(translations(frame, 0, n));
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::ConformalProduct1 => {
            let k = conformal_k(spec, -1)?;
            let mut gens = vec![QMatrix::identity(n + 2)];
            if k >= 0 {
                let k = k as usize;
                // full Lorentz block on (p, e_1..e_k, q)
                let mut block_vectors = vec![frame.p()];
                for i in 1..=k {
                    block_vectors.push(frame.e(i));
                }
                block_vectors.push(frame.q());
                for i in 0..block_vectors.len() {
                    for j in i + 1..block_vectors.len() {
                        gens.push(frame.wedge(&block_vectors[i], &block_vectors[j]).expect("frame"));
                    }
                }
                for i in k + 1..=n {
                    for j in i + 1..=n {
                        gens.push(frame.wedge(&frame.e(i), &frame.e(j)).expect("frame"));
                    }
                }
            } else {
                // timelike line p - q; rotations act on e_i and p + q
                let plus: Vec<Rational> = frame
                    .p()
                    .iter()
                    .zip(&frame.q())
                    .map(|(a, b)| a.clone() + b.clone())
                    .collect();
                let mut vectors: Vec<Vec<Rational>> = (1..=n).map(|i| frame.e(i)).collect();
                vectors.push(plus);
                for i in 0..vectors.len() {
                    for j in i + 1..vectors.len() {
                        gens.push(frame.wedge(&vectors[i], &vectors[j]).expect("frame"));
                    }
                }
            }
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::ConformalProduct2 => {
            let k = conformal_k(spec, 0)? as usize;
            validate_h(k, &spec.h_basis)?;
            let mut gens = vec![QMatrix::identity(n + 2).add(
                &CoElement::new(frame, Rational::zero(), -Rational::one(), zero_rot(n), zero_x(n))
                    .matrix(),
            )];
            for a in &spec.h_basis {
                gens.push(rot(frame, embed_block(a, 0, n)));
            }
            gens.extend(translations(frame, 0, k));
            for a in euclidean_rotations(n, k, n) {
                gens.push(rot(frame, a));
            }
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::ConformalProduct3 => {
            let k = conformal_k(spec, 1)? as usize;
            validate_h(k, &spec.h_basis)?;
            let mut gens = vec![QMatrix::identity(n + 2), boost(frame)];
            for a in &spec.h_basis {
                gens.push(rot(frame, embed_block(a, 0, n)));
            }
            gens.extend(translations(frame, 0, k));
            for a in euclidean_rotations(n, k, n) {
                gens.push(rot(frame, a));
            }
            Ok(LieSubalgebra::from_span(n + 2, Some(frame), gens, label))
        }
        Family::SoSum => {
            let k = spec.k.ok_or(FamilyError::MissingParameter {
                family: label.clone(),
                param: "k",
            })?;
            if k < 0 || k as usize > n {
                return Err(FamilyError::BadSplit { reason: format!("k = {k} out of range") });
            }
            let k = k as usize;
            let mut gens = vec![QMatrix::identity(n)];
            gens.extend(euclidean_rotations(n, 0, k));
            gens.extend(euclidean_rotations(n, k, n));
            Ok(LieSubalgebra::from_span(n, None, gens, label))
        }
        Family::Custom => {
            let size = spec
                .generators
                .first()
                .map(|g| g.rows())
                .ok_or(FamilyError::MissingParameter { family: label.clone(), param: "generators" })?;
            let closed = LieSubalgebra::lie_closure(size, None, &spec.generators, label)?;
            // keep the Witt interpretation when every generator fits the model
            if size >= 2 {
                let frame = WittFrame::new(size - 2);
                if spec
                    .generators
                    .iter()
                    .all(|g| CoElement::decode(frame, g).is_ok())
                {
                    return LieSubalgebra::lie_closure(
                        size,
                        Some(frame),
                        &spec.generators,
                        spec.family.tag(),
                    );
                }
            }
            Ok(closed)
        }
    }
}

fn conformal_k(spec: &FamilySpec, min: i64) -> Result<i64, FamilyError> {
    let k = spec.k.ok_or(FamilyError::MissingParameter {
        family: spec.family.tag().to_string(),
        param: "k",
    })?;
    if k < min || k >= spec.n as i64 {
        return Err(FamilyError::BadSplit {
            reason: format!("k = {k} out of range [{min}, {}]", spec.n as i64 - 1),
        });
    }
    Ok(k)
}

fn base_gens(frame: WittFrame, with_id: bool) -> Vec<QMatrix> {
    if with_id {
        vec![QMatrix::identity(frame.dim())]
    } else {
        Vec::new()
    }
}

fn boost(frame: WittFrame) -> QMatrix {
    let n = frame.n();
    CoElement::new(frame, Rational::zero(), Rational::one(), zero_rot(n), zero_x(n)).matrix()
}

fn rot(frame: WittFrame, a: QMatrix) -> QMatrix {
    let n = frame.n();
    CoElement::new(frame, Rational::zero(), Rational::zero(), a, zero_x(n)).matrix()
}

fn translations(frame: WittFrame, lo: usize, hi: usize) -> Vec<QMatrix> {
    let n = frame.n();
    (lo..hi)
        .map(|j| {
            CoElement::new(frame, Rational::zero(), Rational::zero(), zero_rot(n), unit_x(n, j))
                .matrix()
        })
        .collect()
}
