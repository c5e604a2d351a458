//! Error types shared across the crate.

use thiserror::Error;

/// Failure to parse a `"p/q"` rational literal.
#[derive(Debug, Clone, Error)]
#[error("invalid rational literal `{literal}` (expected `p/q` or `p` with q > 0)")]
pub struct ParseRationalError {
    pub literal: String,
}

impl ParseRationalError {
    pub fn new(literal: &str) -> Self {
        Self { literal: literal.to_string() }
    }
}

/// Input errors of the linear-algebra layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is singular at the origin")]
    Singular,
}

/// Structural failures when reading a matrix back into `(b, a, A, X)` form.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("matrix is not square of size n + 2 (got {rows}x{cols})")]
    BadShape { rows: usize, cols: usize },
    #[error("corner entry (p, q) must vanish, found a nonzero value")]
    CornerNotZero,
    #[error("lower-left column under p must vanish (entry at row {row})")]
    LowerLeftNotZero { row: usize },
    #[error("last row must vanish off the diagonal (entry at column {col})")]
    LastRowNotZero { col: usize },
    #[error("diagonal q-entry must be b - a, the matrix does not preserve the line through p conformally")]
    DiagonalMismatch,
    #[error("middle block minus b*Id is not skew-symmetric (entry ({row},{col}))")]
    MiddleBlockNotSkew { row: usize, col: usize },
    #[error("first-row and last-column translation parts disagree (index {index})")]
    TranslationMismatch { index: usize },
    #[error("matrix is not skew-symmetric for the ambient scalar product (entry ({row},{col}))")]
    NotSkewForMetric { row: usize, col: usize },
}

/// Validation failures when constructing a classified family.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("h-basis element {index} is not a skew-symmetric n x n matrix")]
    HBasisNotSkew { index: usize },
    #[error("h-basis does not span a bracket-closed subalgebra (bracket of elements {i}, {j} escapes the span)")]
    HBasisNotClosed { i: usize, j: usize },
    #[error("{functional} must vanish on the commutant [h, h], violated on bracket of basis elements {i}, {j}")]
    FunctionalOnCommutant { functional: &'static str, i: usize, j: usize },
    #[error("{functional} must be a non-zero linear map")]
    FunctionalZero { functional: &'static str },
    #[error("type-3 family needs a subalgebra with non-trivial center")]
    CenterTrivial,
    #[error("alpha and theta cannot both vanish (alpha^2 + theta^2 != 0)")]
    AlphaThetaBothZero,
    #[error("psi must be a surjective map onto R^(n-m)")]
    PsiNotSurjective,
    #[error("type-4 family needs dim z(h) >= n - m (center too small)")]
    CenterTooSmall,
    #[error("coefficient vector for {functional} has length {got}, expected {expected}")]
    FunctionalLength { functional: &'static str, expected: usize, got: usize },
    #[error("invalid split parameter: {reason}")]
    BadSplit { reason: String },
    #[error("family `{family}` is missing required parameter `{param}`")]
    MissingParameter { family: String, param: &'static str },
    #[error("generator {index} has shape {rows}x{cols}, expected {expected}x{expected}")]
    GeneratorShape { index: usize, rows: usize, cols: usize, expected: usize },
    #[error("lie closure did not stabilize within the ambient dimension bound")]
    ClosureDiverged,
    #[error("unknown family tag `{tag}`")]
    UnknownFamily { tag: String },
}

/// Validation failures of curvature-tensor inputs.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CurvatureError {
    #[error("tensor value on bivector ({i},{j}) lies outside the model algebra: {source}")]
    ValueOutsideModel { i: usize, j: usize, source: DecodeError },
    #[error("tensor violates the Bianchi identity")]
    BianchiViolated,
    #[error("components are inconsistent: {what}")]
    Inconsistent { what: String },
}

/// Domain errors of the truncated-jet layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum JetError {
    #[error("jet variable/order mismatch: ({vars_a} vars, order {order_a}) vs ({vars_b} vars, order {order_b})")]
    ShapeMismatch { vars_a: usize, order_a: u32, vars_b: usize, order_b: u32 },
    #[error("unknown variable index {index} (jet has {vars} variables)")]
    UnknownVariable { index: usize, vars: usize },
    #[error("jet is not invertible: constant term vanishes")]
    NonInvertible,
    #[error("jet exponential needs a vanishing constant term")]
    ExpConstantTerm,
}

/// Validation failures for Walker structures and realization presets.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("metric block h must equal the identity at the origin (entry ({row},{col}))")]
    HNotNormalized { row: usize, col: usize },
    #[error("metric blocks h and A must not depend on v ({what})")]
    VDependence { what: String },
    #[error("gauge data has wrong shape: {reason}")]
    BadShape { reason: String },
    #[error("truncation order {order} too small, need at least {required} for {max_order} derivatives")]
    OrderTooSmall { order: u32, required: u32, max_order: usize },
    #[error("frame change at the origin is not the identity: A or H does not vanish at 0")]
    FrameNotNormalized,
    #[error("holonomy generator at chain {chain:?} does not preserve the line through p: {source}")]
    GeneratorOutsideModel { chain: Vec<usize>, source: DecodeError },
    #[error("image of P does not generate h as a Lie algebra")]
    PDoesNotGenerate,
    #[error("P is not a weak curvature tensor of type h: {reason}")]
    InvalidP { reason: String },
    #[error("jet arithmetic failed: {0}")]
    Jet(#[from] JetError),
    #[error("linear algebra failed: {0}")]
    Linalg(#[from] LinalgError),
    #[error("family construction failed: {0}")]
    Family(#[from] FamilyError),
}
