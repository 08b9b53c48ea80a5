//! Executes a job and renders its report.

use serde::Serialize;
use sha2::{Digest, Sha256};
use unicyclic_core::approx::{equivariant_t, full_pipeline};
use unicyclic_core::homology::{
    cocyclic_cohomology, connes_total_complex, cyclic_homology, hochschild_cohomology,
    hochschild_complex, hochschild_homology, hopf_cyclic_module, hopf_hochschild, HomologyTable,
};
use unicyclic_core::hopf::{validate_symmetry, BialgebraSpec, CoefficientDatum, SymmetryDatum};
use unicyclic_core::lambda::{normal_form, parse_word, Flavor};
use unicyclic_core::paracyclic::{certify_relations, certify_with, Orientation, ParaCyclicModule};
use unicyclic_core::{Error, FieldSpec};

use crate::job::{JobSpec, OutputFormat, Pipeline, TheoryArg, FORMAT};
use crate::{oracle, CliError};

/// Command-line overrides for a job.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub degree: Option<usize>,
    pub theory: Option<TheoryArg>,
    pub flavor: Option<Flavor>,
    pub certify: bool,
    pub oracle: bool,
    pub json: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub format: u32,
    pub pipeline: Pipeline,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub job: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub datum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theory: Option<String>,
    /// Extra key/value lines, in order.
    pub facts: Vec<(String, String)>,
    pub columns: Vec<String>,
    /// One row per degree; `None` where a column has no entry.
    pub rows: Vec<Vec<Option<usize>>>,
}

impl Report {
    fn new(job: &JobSpec) -> Report {
        Report {
            format: FORMAT,
            pipeline: job.pipeline,
            job: job.name.clone(),
            field: None,
            datum: None,
            truncation: None,
            theory: None,
            facts: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.push((key.to_string(), value.to_string()));
    }

    fn table(&mut self, columns: &[(&str, Vec<usize>)]) {
        self.columns = columns.iter().map(|(c, _)| c.to_string()).collect();
        let len = columns.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        self.rows = (0..len)
            .map(|n| columns.iter().map(|(_, v)| v.get(n).copied()).collect())
            .collect();
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            OutputFormat::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = format!("format: {}\n", self.format);
        let pipeline = serde_json::to_value(self.pipeline).expect("pipeline serializes");
        out += &format!("pipeline: {}\n", pipeline.as_str().unwrap_or_default());
        let header = [
            ("job", self.job.clone()),
            ("field", self.field.clone()),
            ("datum", self.datum.clone()),
            ("truncation", self.truncation.map(|t| t.to_string())),
            ("theory", self.theory.clone()),
        ];
        for (k, v) in header {
            if let Some(v) = v {
                out += &format!("{k}: {v}\n");
            }
        }
        if !self.columns.is_empty() {
            out += "degree";
            for c in &self.columns {
                out += &format!("  {c:>8}");
            }
            out.push('\n');
            for (n, row) in self.rows.iter().enumerate() {
                out += &format!("{n:>6}");
                for cell in row {
                    match cell {
                        Some(d) => out += &format!("  {d:>8}"),
                        None => out += &format!("  {:>8}", "-"),
                    }
                }
                out.push('\n');
            }
        }
        for (k, v) in &self.facts {
            out += &format!("{k}: {v}\n");
        }
        out
    }
}

/// SHA-256 of the canonical JSON of field, bialgebra, datum and coefficient.
pub fn datum_hash(job: &JobSpec) -> String {
    let raw = job.to_raw();
    let canonical = serde_json::json!({
        "field": raw.field,
        "bialgebra": raw.bialgebra,
        "datum": raw.datum,
        "coefficient": raw.coefficient,
    });
    let digest = Sha256::digest(canonical.to_string().as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

struct Inputs<'a> {
    b: &'a BialgebraSpec,
    carrier: &'a SymmetryDatum,
    m: CoefficientDatum,
    top: usize,
}

fn inputs<'a>(job: &'a JobSpec, opts: &Options) -> Result<Inputs<'a>, CliError> {
    let b = job.bialgebra.as_ref().expect("checked when parsed");
    let carrier = job.datum.as_ref().expect("checked when parsed");
    let m = job.coefficient_or_trivial().expect("bialgebra present");
    b.validate()?.into_result()?;
    Ok(Inputs {
        b,
        carrier,
        m,
        top: opts.degree.unwrap_or(job.truncation),
    })
}

fn cyclic_certificate(family: &ParaCyclicModule) -> Result<usize, CliError> {
    let report = certify_with(family, Flavor::Lambda, &|n| 2 * (n as i64 + 1));
    let checked = report.checked;
    report.into_result()?;
    Ok(checked)
}

pub fn execute(job: &JobSpec, opts: &Options) -> Result<Report, CliError> {
    if opts.flavor.is_some() && job.pipeline != Pipeline::LambdaCalc {
        return Err(CliError::Core(Error::Configuration(
            "--flavor only applies to lambda-calc jobs".into(),
        )));
    }
    if opts.theory.is_some() && job.pipeline != Pipeline::Homology {
        return Err(CliError::Core(Error::Configuration(
            "--theory only applies to homology jobs".into(),
        )));
    }
    let mut r = Report::new(job);
    if job.pipeline == Pipeline::LambdaCalc {
        let flavor = opts.flavor.or(job.flavor).unwrap_or(Flavor::N);
        lambda_facts(
            &mut r,
            job.expression.as_deref().expect("checked when parsed"),
            flavor,
        )?;
        return Ok(r);
    }
    let inp = inputs(job, opts)?;
    r.field = Some(job.field.to_string());
    r.datum = Some(datum_hash(job));
    r.truncation = Some(inp.top);
    match job.pipeline {
        Pipeline::Validate => {
            validate_symmetry(inp.b, inp.carrier, &inp.m)?.into_result()?;
            r.fact("bialgebra", format!("dim {}, all axioms hold", inp.b.dim));
            r.fact(
                "carrier",
                format!(
                    "{} of dim {}, all axioms hold",
                    inp.carrier.kind, inp.carrier.dim
                ),
            );
            r.fact("coefficient", format!("dim {}, all axioms hold", inp.m.dim));
        }
        Pipeline::Build => {
            validate_symmetry(inp.b, inp.carrier, &inp.m)?.into_result()?;
            let t = equivariant_t(inp.b, inp.carrier, &inp.m, inp.top)?;
            let cert = certify_relations(&t.module);
            let checked = cert.checked;
            cert.into_result()?;
            r.table(&[("T", t.module.dims.clone())]);
            r.fact("orientation", orientation_name(t.module.orientation));
            if opts.certify {
                r.fact(
                    "certification",
                    format!("{checked} relation instances hold"),
                );
            }
        }
        Pipeline::Approx => {
            let out = full_pipeline(inp.b, inp.carrier, &inp.m, inp.top)?;
            r.table(&[
                ("T", out.t.module.dims.clone()),
                ("comonad", out.comonad.dims()),
                ("cyclic", out.cyclic.dims()),
            ]);
            r.fact("orientation", orientation_name(out.q().module.orientation));
            if opts.certify {
                let checked = cyclic_certificate(&out.q().module)?;
                r.fact(
                    "certification",
                    format!("{checked} cyclic relation instances hold"),
                );
            }
        }
        Pipeline::Homology => {
            let theory = opts.theory.or(job.theory).unwrap_or(TheoryArg::Hh);
            let family = hopf_cyclic_module(inp.b, inp.carrier, &inp.m, inp.top)?.family;
            let table = homology(&family, theory)?;
            r.theory = Some(table.theory.to_string());
            r.table(&[(table.theory.name(), table.dims.clone())]);
            r.fact("orientation", orientation_name(family.orientation));
            if opts.certify {
                let checked = cyclic_certificate(&family)?;
                r.fact(
                    "certification",
                    format!("{checked} cyclic relation instances hold"),
                );
            }
            if opts.oracle {
                r.fact("oracle", recheck(&family, theory, &table)?);
            }
        }
        Pipeline::HopfHochschild => {
            let table = hopf_hochschild(inp.b, inp.carrier, &inp.m, inp.top)?;
            r.theory = Some(table.theory.to_string());
            r.table(&[(table.theory.name(), table.dims.clone())]);
        }
        Pipeline::LambdaCalc => unreachable!(),
    }
    Ok(r)
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Cyclic => "cyclic",
        Orientation::Cocyclic => "cocyclic",
    }
}

fn homology(family: &ParaCyclicModule, theory: TheoryArg) -> Result<HomologyTable, CliError> {
    let t = match (theory, family.orientation) {
        (TheoryArg::Hh, Orientation::Cyclic) => hochschild_homology(family)?,
        (TheoryArg::Hh, Orientation::Cocyclic) => hochschild_cohomology(family)?,
        (TheoryArg::Hc, Orientation::Cyclic) => cyclic_homology(family)?,
        (TheoryArg::Hc | TheoryArg::Coch, Orientation::Cocyclic) => cocyclic_cohomology(family)?,
        (TheoryArg::Coch, Orientation::Cyclic) => {
            return Err(CliError::Core(Error::Configuration(
                "theory coch needs a cocyclic output; this datum produces a cyclic module".into(),
            )))
        }
    };
    Ok(t)
}

fn recheck(
    family: &ParaCyclicModule,
    theory: TheoryArg,
    table: &HomologyTable,
) -> Result<String, CliError> {
    let check = |what: &str, got: Vec<usize>| -> Result<(), CliError> {
        if got.len() < table.dims.len() || got[..table.dims.len()] != table.dims[..] {
            return Err(CliError::Oracle(format!(
                "{what} gives {got:?}, engine gives {:?}",
                table.dims
            )));
        }
        Ok(())
    };
    let cyclic = match family.orientation {
        Orientation::Cyclic => family.clone(),
        Orientation::Cocyclic => family.transpose(),
    };
    match theory {
        TheoryArg::Hh => {
            check(
                "dense b-complex",
                oracle::complex_homology(&hochschild_complex(&cyclic)?),
            )?;
            Ok("dense ranks of the b-complex agree".into())
        }
        TheoryArg::Hc | TheoryArg::Coch => {
            check(
                "dense total complex",
                oracle::complex_homology(&connes_total_complex(&cyclic)?),
            )?;
            if family.field == FieldSpec::Rationals {
                check("Connes quotient", oracle::connes_quotient(&cyclic))?;
                Ok("dense ranks of the total complex and the Connes quotient agree".into())
            } else {
                Ok("dense ranks of the total complex agree".into())
            }
        }
    }
}

fn lambda_facts(r: &mut Report, expr: &str, flavor: Flavor) -> Result<(), CliError> {
    let w = parse_word(expr, flavor)?;
    let nf = normal_form(&w);
    r.fact("flavor", flavor.name());
    r.fact("word", &w);
    r.fact("normal form", &nf);
    r.fact("source", nf.source);
    r.fact("target", nf.target);
    Ok(())
}
