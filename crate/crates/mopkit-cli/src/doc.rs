//! Spec and report documents.
//!
//! Ensemble specs travel as TOML with rationals as strings, so the
//! exact path never sees a float. Reports are JSON, one record per
//! check, with values rendered as rational strings on the exact field
//! and 17-significant-digit decimals on the float field.

use std::str::FromStr;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use mopkit_core::{
    quadrature_preset, ChainPolicy, Cf64, DiscreteMeasure, EnsembleSpec, MultiIndexPair,
    Polynomial, QuadratureFamily, Rat, Scalar, WeightExpr, Weights,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub field: FieldKind,
    pub p: usize,
    pub q: usize,
    pub nvec: Vec<usize>,
    pub mvec: Vec<usize>,
    pub measure: MeasureDoc,
    pub w1: Vec<WeightDoc>,
    pub w2: Vec<WeightDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps_tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enum_cap: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_up: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_down: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, untagged)]
pub enum MeasureDoc {
    Atoms {
        nodes: Vec<String>,
        masses: Vec<String>,
    },
    Preset {
        preset: String,
        points: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightDoc {
    /// Ascending polynomial coefficients as rational strings.
    pub coeffs: Vec<String>,
    /// Optional exponential factor `e^{rate * x}`; float field only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exp_rate: Option<String>,
}

pub fn parse_rational(s: &str) -> anyhow::Result<Rat> {
    Rat::from_str(s.trim()).with_context(|| format!("invalid rational `{}`", s))
}

pub fn parse_spec_document(text: &str) -> anyhow::Result<SpecDocument> {
    toml::from_str(text).map_err(|e| anyhow::anyhow!("spec parse error: {}", e))
}

pub fn serialize_spec_document(doc: &SpecDocument) -> anyhow::Result<String> {
    toml::to_string(doc).context("spec serialize error")
}

/// The spec instantiated over one of the two scalar fields.
pub enum AnySpec {
    Exact(EnsembleSpec<Rat>),
    Float(EnsembleSpec<Cf64>),
}

impl SpecDocument {
    pub fn chain_policy(&self) -> ChainPolicy {
        ChainPolicy {
            up_mvecs: self.chain_up.clone().unwrap_or_default(),
            down_nvecs: self.chain_down.clone().unwrap_or_default(),
        }
    }

    fn weight_exprs<F: Scalar>(
        docs: &[WeightDoc],
        allow_exp: bool,
        conv: impl Fn(&Rat) -> F,
    ) -> anyhow::Result<Vec<WeightExpr<F>>> {
        docs.iter()
            .map(|doc| {
                let coeffs = doc
                    .coeffs
                    .iter()
                    .map(|s| parse_rational(s).map(|r| conv(&r)))
                    .collect::<anyhow::Result<Vec<F>>>()?;
                let mut expr = WeightExpr::from_poly(Polynomial::new(coeffs));
                if let Some(rate) = &doc.exp_rate {
                    if !allow_exp {
                        bail!("exponential weights need field = \"float\"");
                    }
                    expr = expr.with_exp_rate(conv(&parse_rational(rate)?));
                }
                Ok(expr)
            })
            .collect()
    }

    pub fn build(&self) -> anyhow::Result<AnySpec> {
        if self.nvec.len() != self.p || self.mvec.len() != self.q {
            bail!(
                "nvec/mvec lengths ({}, {}) must match p = {}, q = {}",
                self.nvec.len(),
                self.mvec.len(),
                self.p,
                self.q
            );
        }
        let pair = MultiIndexPair::new(self.nvec.clone(), self.mvec.clone())?;
        match self.field {
            FieldKind::Exact => {
                let measure = match &self.measure {
                    MeasureDoc::Atoms { nodes, masses } => DiscreteMeasure::new(
                        nodes
                            .iter()
                            .map(|s| parse_rational(s))
                            .collect::<anyhow::Result<Vec<_>>>()?,
                        masses
                            .iter()
                            .map(|s| parse_rational(s))
                            .collect::<anyhow::Result<Vec<_>>>()?,
                    )?,
                    MeasureDoc::Preset { .. } => {
                        bail!("quadrature presets need field = \"float\"")
                    }
                };
                let weights = Weights::rank_one(
                    Self::weight_exprs::<Rat>(&self.w1, false, Rat::clone)?,
                    Self::weight_exprs::<Rat>(&self.w2, false, Rat::clone)?,
                )?;
                let spec = EnsembleSpec::new(weights, measure, pair)?
                    .with_chain_policy(self.chain_policy());
                Ok(AnySpec::Exact(spec))
            }
            FieldKind::Float => {
                let measure = match &self.measure {
                    MeasureDoc::Atoms { nodes, masses } => DiscreteMeasure::new(
                        nodes
                            .iter()
                            .map(|s| Ok(parse_rational(s)?.to_complex()))
                            .collect::<anyhow::Result<Vec<_>>>()?,
                        masses
                            .iter()
                            .map(|s| Ok(parse_rational(s)?.to_complex()))
                            .collect::<anyhow::Result<Vec<_>>>()?,
                    )?,
                    MeasureDoc::Preset { preset, points } => {
                        quadrature_preset(QuadratureFamily::parse(preset)?, *points)?
                    }
                };
                let weights = Weights::rank_one(
                    Self::weight_exprs::<Cf64>(&self.w1, true, Scalar::to_complex)?,
                    Self::weight_exprs::<Cf64>(&self.w2, true, Scalar::to_complex)?,
                )?;
                let spec = EnsembleSpec::new(weights, measure, pair)?
                    .with_chain_policy(self.chain_policy());
                Ok(AnySpec::Float(spec))
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_name: String,
    pub paper_anchor: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub max_error: Option<f64>,
    pub runtime: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportDocument {
    pub spec_path: String,
    pub field: String,
    pub eps_tol: f64,
    pub enum_cap: u64,
    pub seed: u64,
    pub records: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl ReportDocument {
    pub fn new(spec_path: &str, field: &str, eps_tol: f64, enum_cap: u64, seed: u64) -> Self {
        ReportDocument {
            spec_path: spec_path.to_string(),
            field: field.to_string(),
            eps_tol,
            enum_cap,
            seed,
            records: Vec::new(),
            passed: 0,
            failed: 0,
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        if record.equal {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.records.push(record);
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}
