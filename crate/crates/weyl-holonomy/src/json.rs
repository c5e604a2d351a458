//! JSON wire formats: family specifications, realization presets and
//! reports. Rationals travel as decimal strings `"p/q"` (or `"p"` when the
//! denominator is one).

use crate::error::ParseRationalError;
use crate::lie::{Family, FamilySpec, LieSubalgebra};
use crate::scalar::{format_rational, parse_rational};
use crate::weyl::{PresetTag, RealizationPreset, RiemannianFactor};
use crate::{QMatrix, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error("unknown family tag `{0}`")]
    UnknownFamily(String),
    #[error("unknown preset row `{0}` (expected 1-6, \"cp2\" or \"cp3\")")]
    UnknownRow(String),
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("unknown riemannian factor `{0}` (expected \"flat\" or \"generic\")")]
    UnknownFactor(String),
}

pub fn matrix_to_json(m: &QMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect())
        .collect()
}

pub fn matrix_from_json(rows: &[Vec<String>]) -> Result<QMatrix, JsonError> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(JsonError::RaggedMatrix);
    }
    let mut data = Vec::with_capacity(nrows * ncols);
    for row in rows {
        for s in row {
            data.push(parse_rational(s)?);
        }
    }
    Ok(QMatrix::from_flat(nrows, ncols, data))
}

fn rationals_from_json(v: &[String]) -> Result<Vec<Rational>, JsonError> {
    v.iter().map(|s| parse_rational(s).map_err(Into::into)).collect()
}

fn matrices_from_json(v: &[Vec<Vec<String>>]) -> Result<Vec<QMatrix>, JsonError> {
    v.iter().map(|m| matrix_from_json(m)).collect()
}

/// JSON form of a family specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilySpecJson {
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub h_basis: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub theta: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phi: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n0: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub psi: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<Vec<String>>>,
}

impl FamilySpecJson {
    pub fn to_spec(&self) -> Result<FamilySpec, JsonError> {
        let family = Family::parse(&self.family)
            .map_err(|_| JsonError::UnknownFamily(self.family.clone()))?;
        let mut spec = FamilySpec::new(family, self.n);
        spec.h_basis = matrices_from_json(&self.h_basis)?;
        spec.theta = rationals_from_json(&self.theta)?;
        spec.phi = rationals_from_json(&self.phi)?;
        if let Some(a) = &self.alpha {
            spec.alpha = parse_rational(a)?;
        }
        spec.k = self.k;
        spec.m = self.m;
        spec.n0 = self.n0;
        spec.psi = self
            .psi
            .iter()
            .map(|v| rationals_from_json(v))
            .collect::<Result<_, _>>()?;
        spec.generators = matrices_from_json(&self.generators)?;
        Ok(spec)
    }
}

/// JSON form of a realization preset. `row` accepts the numbers 1-6 or the
/// strings `"cp2"` / `"cp3"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresetJson {
    pub row: serde_json::Value,
    pub n: usize,
    #[serde(default)]
    pub n0: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub h_basis: Vec<Vec<Vec<String>>>,
    #[serde(default, rename = "P", skip_serializing_if = "Vec::is_empty")]
    pub p: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub theta: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phi: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, rename = "K", skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_order: Option<usize>,
}

impl PresetJson {
    pub fn to_preset(&self) -> Result<RealizationPreset, JsonError> {
        let tag = match &self.row {
            serde_json::Value::Number(n) => n
                .as_u64()
                .and_then(|r| u8::try_from(r).ok())
                .and_then(|r| PresetTag::parse(&r.to_string()))
                .ok_or_else(|| JsonError::UnknownRow(self.row.to_string()))?,
            serde_json::Value::String(s) => {
                PresetTag::parse(s).ok_or_else(|| JsonError::UnknownRow(s.clone()))?
            }
            other => return Err(JsonError::UnknownRow(other.to_string())),
        };
        let mut preset = RealizationPreset::new(tag, self.n);
        preset.n0 = self.n0;
        preset.h_basis = matrices_from_json(&self.h_basis)?;
        preset.p_ops = matrices_from_json(&self.p)?;
        preset.theta = rationals_from_json(&self.theta)?;
        preset.phi = rationals_from_json(&self.phi)?;
        if let Some(a) = &self.alpha {
            preset.alpha = parse_rational(a)?;
        }
        preset.k = self.k;
        preset.factor = match self.factor.as_deref() {
            None | Some("flat") => RiemannianFactor::Flat,
            Some("generic") => RiemannianFactor::GenericSoK { seed: self.seed.unwrap_or(0) },
            Some(other) => return Err(JsonError::UnknownFactor(other.to_string())),
        };
        if let Some(order) = self.order {
            preset.order = order;
        }
        if let Some(max_order) = self.max_order {
            preset.max_order = max_order;
            if self.order.is_none() {
                preset.order = max_order as u32 + 3;
            }
        }
        Ok(preset)
    }
}

/// Machine-readable outcome of a single-algebra operation.
#[derive(Debug, Clone, Serialize)]
pub struct OperationReport {
    pub op: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_berger: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_dim: Option<usize>,
    pub violations: Vec<String>,
}

/// Full description of a constructed algebra.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraDescription {
    pub family: String,
    pub n: usize,
    pub matrix_dim: usize,
    pub dim: usize,
    pub basis: Vec<Vec<Vec<String>>>,
    /// Structure constants: for each basis pair `i < j` the coordinates of
    /// the bracket against the basis.
    pub bracket_table: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coords: Vec<String>,
}

pub fn describe_algebra(spec: &FamilySpecJson) -> Result<AlgebraDescription, JsonError> {
    let parsed = spec.to_spec()?;
    let algebra = crate::lie::make_family(&parsed)
        .map_err(|e| JsonError::UnknownFamily(format!("{}: {e}", spec.family)))?;
    Ok(describe_built(&spec.family, parsed.n, &algebra))
}

pub fn describe_built(family: &str, n: usize, algebra: &LieSubalgebra) -> AlgebraDescription {
    AlgebraDescription {
        family: family.to_string(),
        n,
        matrix_dim: algebra.matrix_dim(),
        dim: algebra.dim(),
        basis: algebra.basis_matrices().iter().map(matrix_to_json).collect(),
        bracket_table: algebra
            .bracket_table()
            .into_iter()
            .map(|(i, j, coords)| BracketEntry {
                i,
                j,
                coords: coords.iter().map(format_rational).collect(),
            })
            .collect(),
    }
}
