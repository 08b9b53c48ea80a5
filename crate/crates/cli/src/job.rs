//! Job files: a JSON document with structure constants, parsed into core types.

use serde::{Deserialize, Serialize};
use unicyclic_core::hopf::{BialgebraSpec, CoefficientDatum, Kind, SymmetryDatum};
use unicyclic_core::lambda::Flavor;
use unicyclic_core::{FieldSpec, Matrix, Scalar};

use crate::CliError;

pub const FORMAT: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Pipeline {
    Validate,
    Build,
    Approx,
    Homology,
    HopfHochschild,
    LambdaCalc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TheoryArg {
    Hh,
    Hc,
    Coch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// A scalar as written in a job file: `"p/q"` strings or integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

/// `[i, j, [coefficients over the output basis]]`.
pub type ProductEntry = (usize, usize, Vec<Num>);
/// `[i, [[j, k, coefficient], ...]]`.
pub type CoproductEntry = (usize, Vec<(usize, usize, Num)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawField {
    Named(String),
    Prime { prime: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBialgebra {
    pub dim: usize,
    pub mult: Vec<ProductEntry>,
    pub unit: Vec<Num>,
    pub comult: Vec<CoproductEntry>,
    pub counit: Vec<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, Vec<Num>)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDatum {
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<ProductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<CoproductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<ProductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<CoproductEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCoefficient {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<ProductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<CoproductEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawJob {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: RawField,
    pub pipeline: Pipeline,
    #[serde(default)]
    pub truncation: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theory: Option<TheoryArg>,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bialgebra: Option<RawBialgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub datum: Option<RawDatum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<RawCoefficient>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expression: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<String>,
}

/// A parsed job with every structure as core matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub name: Option<String>,
    pub field: FieldSpec,
    pub pipeline: Pipeline,
    pub truncation: usize,
    pub theory: Option<TheoryArg>,
    pub output: OutputFormat,
    pub bialgebra: Option<BialgebraSpec>,
    pub datum: Option<SymmetryDatum>,
    pub coefficient: Option<CoefficientDatum>,
    pub expression: Option<String>,
    pub flavor: Option<Flavor>,
}

fn format_err(msg: impl Into<String>) -> CliError {
    CliError::Format(msg.into())
}

fn scalar(field: FieldSpec, n: &Num) -> Result<Scalar, CliError> {
    match n {
        Num::Int(v) => Ok(field.from_i64(*v)),
        Num::Text(s) => field.parse_scalar(s).map_err(|e| format_err(e.to_string())),
    }
}

fn num(field: FieldSpec, s: &Scalar) -> Num {
    match field {
        FieldSpec::Rationals => Num::Text(s.to_string()),
        FieldSpec::Prime(_) => Num::Int(
            s.to_string()
                .parse()
                .expect("prime field elements fit in i64"),
        ),
    }
}

fn check_index(what: &str, i: usize, dim: usize) -> Result<(), CliError> {
    if i >= dim {
        return Err(format_err(format!(
            "{what}: index {i} out of range for dimension {dim}"
        )));
    }
    Ok(())
}

/// `left ⊗ right → out` from product triples.
fn product(
    field: FieldSpec,
    what: &str,
    entries: &[ProductEntry],
    left: usize,
    right: usize,
    out: usize,
) -> Result<Matrix, CliError> {
    let mut t = Vec::new();
    for (i, j, coeffs) in entries {
        check_index(what, *i, left)?;
        check_index(what, *j, right)?;
        if coeffs.len() != out {
            return Err(format_err(format!(
                "{what}: [{i}, {j}] lists {} coefficients, expected {out}",
                coeffs.len()
            )));
        }
        for (c, v) in coeffs.iter().enumerate() {
            t.push((c, i * right + j, scalar(field, v)?));
        }
    }
    Matrix::from_triplets(field, out, left * right, t)
        .map_err(|e| format_err(format!("{what}: {e}")))
}

/// `in → left ⊗ right` from coproduct entries.
fn coproduct(
    field: FieldSpec,
    what: &str,
    entries: &[CoproductEntry],
    input: usize,
    left: usize,
    right: usize,
) -> Result<Matrix, CliError> {
    let mut t = Vec::new();
    for (i, terms) in entries {
        check_index(what, *i, input)?;
        for (j, k, v) in terms {
            check_index(what, *j, left)?;
            check_index(what, *k, right)?;
            t.push((j * right + k, *i, scalar(field, v)?));
        }
    }
    Matrix::from_triplets(field, left * right, input, t)
        .map_err(|e| format_err(format!("{what}: {e}")))
}

fn column(field: FieldSpec, what: &str, v: &[Num], dim: usize) -> Result<Matrix, CliError> {
    if v.len() != dim {
        return Err(format_err(format!(
            "{what}: {} coefficients, expected {dim}",
            v.len()
        )));
    }
    let t = v
        .iter()
        .enumerate()
        .map(|(i, x)| Ok((i, 0, scalar(field, x)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Matrix::from_triplets(field, dim, 1, t).map_err(|e| format_err(e.to_string()))
}

fn emit_product(field: FieldSpec, m: &Matrix, right: usize) -> Vec<ProductEntry> {
    m.columns()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(col, _)| {
            (
                col / right,
                col % right,
                (0..m.nrows()).map(|r| num(field, &m.get(r, col))).collect(),
            )
        })
        .collect()
}

fn emit_coproduct(field: FieldSpec, m: &Matrix, right: usize) -> Vec<CoproductEntry> {
    m.columns()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(i, c)| {
            (
                i,
                c.iter()
                    .map(|(r, v)| (r / right, r % right, num(field, v)))
                    .collect(),
            )
        })
        .collect()
}

fn emit_column(field: FieldSpec, m: &Matrix) -> Vec<Num> {
    (0..m.nrows()).map(|r| num(field, &m.get(r, 0))).collect()
}

fn emit_row(field: FieldSpec, m: &Matrix) -> Vec<Num> {
    (0..m.ncols()).map(|c| num(field, &m.get(0, c))).collect()
}

fn parse_field(raw: &RawField) -> Result<FieldSpec, CliError> {
    match raw {
        RawField::Named(s) if s == "Q" => Ok(FieldSpec::Rationals),
        RawField::Named(s) => Err(format_err(format!(
            "unknown field {s:?}; use \"Q\" or {{\"prime\": p}}"
        ))),
        RawField::Prime { prime } => {
            FieldSpec::prime(*prime).map_err(|e| format_err(e.to_string()))
        }
    }
}

fn parse_bialgebra(field: FieldSpec, raw: &RawBialgebra) -> Result<BialgebraSpec, CliError> {
    let d = raw.dim;
    let mult = product(field, "bialgebra.mult", &raw.mult, d, d, d)?;
    let unit = column(field, "bialgebra.unit", &raw.unit, d)?;
    let comult = coproduct(field, "bialgebra.comult", &raw.comult, d, d, d)?;
    let counit = column(field, "bialgebra.counit", &raw.counit, d)?.transpose();
    let antipode = raw
        .antipode
        .as_ref()
        .map(|rows| {
            let mut t = Vec::new();
            for (i, coeffs) in rows {
                check_index("bialgebra.antipode", *i, d)?;
                if coeffs.len() != d {
                    return Err(format_err(
                        "bialgebra.antipode: wrong number of coefficients",
                    ));
                }
                for (r, v) in coeffs.iter().enumerate() {
                    t.push((r, *i, scalar(field, v)?));
                }
            }
            Matrix::from_triplets(field, d, d, t).map_err(|e| format_err(e.to_string()))
        })
        .transpose()?;
    BialgebraSpec::new(field, d, mult, unit, comult, counit, antipode)
        .map_err(|e| format_err(e.to_string()))
}

fn parse_datum(
    field: FieldSpec,
    b: &BialgebraSpec,
    raw: &RawDatum,
) -> Result<SymmetryDatum, CliError> {
    let kind: Kind = raw
        .kind
        .parse()
        .map_err(|e: unicyclic_core::Error| format_err(e.to_string()))?;
    let d = raw.dim;
    let need = |what: &str| format_err(format!("datum of kind {kind} needs {what:?}"));
    let (structure, unit) = if kind.is_algebra() {
        (
            product(
                field,
                "datum.mult",
                raw.mult.as_ref().ok_or_else(|| need("mult"))?,
                d,
                d,
                d,
            )?,
            column(
                field,
                "datum.unit",
                raw.unit.as_ref().ok_or_else(|| need("unit"))?,
                d,
            )?,
        )
    } else {
        (
            coproduct(
                field,
                "datum.comult",
                raw.comult.as_ref().ok_or_else(|| need("comult"))?,
                d,
                d,
                d,
            )?,
            column(
                field,
                "datum.counit",
                raw.counit.as_ref().ok_or_else(|| need("counit"))?,
                d,
            )?
            .transpose(),
        )
    };
    let equivariance = if kind.is_module() {
        product(
            field,
            "datum.action",
            raw.action.as_ref().ok_or_else(|| need("action"))?,
            b.dim,
            d,
            d,
        )?
    } else {
        coproduct(
            field,
            "datum.coaction",
            raw.coaction.as_ref().ok_or_else(|| need("coaction"))?,
            d,
            b.dim,
            d,
        )?
    };
    SymmetryDatum::new(kind, d, structure, unit, equivariance, b.dim)
        .map_err(|e| format_err(e.to_string()))
}

fn parse_coefficient(
    field: FieldSpec,
    b: &BialgebraSpec,
    raw: &RawCoefficient,
) -> Result<CoefficientDatum, CliError> {
    let d = raw.dim;
    let action = raw
        .action
        .as_ref()
        .map(|a| product(field, "coefficient.action", a, b.dim, d, d))
        .transpose()?;
    let coaction = raw
        .coaction
        .as_ref()
        .map(|c| coproduct(field, "coefficient.coaction", c, d, b.dim, d))
        .transpose()?;
    Ok(CoefficientDatum {
        dim: d,
        action,
        coaction,
    })
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<JobSpec, CliError> {
        let raw: RawJob =
            serde_json::from_str(text).map_err(|e| format_err(format!("job file: {e}")))?;
        JobSpec::from_raw(&raw)
    }

    pub fn from_raw(raw: &RawJob) -> Result<JobSpec, CliError> {
        if raw.format != FORMAT {
            return Err(format_err(format!(
                "unsupported format {}; this build reads format {FORMAT}",
                raw.format
            )));
        }
        let field = parse_field(&raw.field)?;
        let bialgebra = raw
            .bialgebra
            .as_ref()
            .map(|b| parse_bialgebra(field, b))
            .transpose()?;
        let datum = match (&raw.datum, &bialgebra) {
            (Some(d), Some(b)) => Some(parse_datum(field, b, d)?),
            (Some(_), None) => return Err(format_err("a datum needs a bialgebra")),
            (None, _) => None,
        };
        let coefficient = match (&raw.coefficient, &bialgebra) {
            (Some(c), Some(b)) => Some(parse_coefficient(field, b, c)?),
            (Some(_), None) => return Err(format_err("a coefficient needs a bialgebra")),
            (None, _) => None,
        };
        let flavor = raw
            .flavor
            .as_deref()
            .map(|f| f.parse::<Flavor>().map_err(|e| format_err(e.to_string())))
            .transpose()?;
        let job = JobSpec {
            name: raw.name.clone(),
            field,
            pipeline: raw.pipeline,
            truncation: raw.truncation,
            theory: raw.theory,
            output: raw.output,
            bialgebra,
            datum,
            coefficient,
            expression: raw.expression.clone(),
            flavor,
        };
        job.check_shape()?;
        Ok(job)
    }

    /// Presence of the pieces each pipeline needs.
    pub fn check_shape(&self) -> Result<(), CliError> {
        let needs_datum = !matches!(self.pipeline, Pipeline::LambdaCalc);
        if needs_datum && (self.bialgebra.is_none() || self.datum.is_none()) {
            return Err(format_err(
                "this pipeline needs \"bialgebra\" and \"datum\"",
            ));
        }
        if self.pipeline == Pipeline::LambdaCalc && self.expression.is_none() {
            return Err(format_err("lambda-calc needs \"expression\""));
        }
        if self.pipeline == Pipeline::HopfHochschild {
            if let Some(d) = &self.datum {
                if d.kind != Kind::MA {
                    return Err(format_err("hopf-hochschild needs a datum of kind MA"));
                }
            }
        }
        Ok(())
    }

    pub fn coefficient_or_trivial(&self) -> Option<CoefficientDatum> {
        match (&self.coefficient, &self.bialgebra) {
            (Some(c), _) => Some(c.clone()),
            (None, Some(b)) => Some(CoefficientDatum::trivial(b)),
            (None, None) => None,
        }
    }

    pub fn to_raw(&self) -> RawJob {
        let f = self.field;
        let field = match f {
            FieldSpec::Rationals => RawField::Named("Q".into()),
            FieldSpec::Prime(p) => RawField::Prime { prime: p },
        };
        let bialgebra = self.bialgebra.as_ref().map(|b| RawBialgebra {
            dim: b.dim,
            mult: emit_product(f, &b.mult, b.dim),
            unit: emit_column(f, &b.unit),
            comult: emit_coproduct(f, &b.comult, b.dim),
            counit: emit_row(f, &b.counit),
            antipode: b.antipode.as_ref().map(|s| {
                s.columns()
                    .iter()
                    .enumerate()
                    .map(|(i, _)| (i, (0..b.dim).map(|r| num(f, &s.get(r, i))).collect()))
                    .collect()
            }),
        });
        let datum = self.datum.as_ref().map(|d| {
            let mut raw = RawDatum {
                kind: d.kind.name().to_string(),
                dim: d.dim,
                mult: None,
                unit: None,
                comult: None,
                counit: None,
                action: None,
                coaction: None,
            };
            if d.kind.is_algebra() {
                raw.mult = Some(emit_product(f, &d.structure, d.dim));
                raw.unit = Some(emit_column(f, &d.unit));
            } else {
                raw.comult = Some(emit_coproduct(f, &d.structure, d.dim));
                raw.counit = Some(emit_row(f, &d.unit));
            }
            if d.kind.is_module() {
                raw.action = Some(emit_product(f, &d.equivariance, d.dim));
            } else {
                raw.coaction = Some(emit_coproduct(f, &d.equivariance, d.dim));
            }
            raw
        });
        let coefficient = self.coefficient.as_ref().map(|c| RawCoefficient {
            dim: c.dim,
            action: c.action.as_ref().map(|a| emit_product(f, a, c.dim)),
            coaction: c.coaction.as_ref().map(|a| emit_coproduct(f, a, c.dim)),
        });
        RawJob {
            format: FORMAT,
            name: self.name.clone(),
            field,
            pipeline: self.pipeline,
            truncation: self.truncation,
            theory: self.theory,
            output: self.output,
            bialgebra,
            datum,
            coefficient,
            expression: self.expression.clone(),
            flavor: self.flavor.map(|f| f.name().to_string()),
        }
    }

    /// Canonical JSON text of the job.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_raw()).expect("job serializes");
        s.push('\n');
        s
    }
}
