//! The bundled fixture jobs, generated from the core fixtures.

use std::path::{Path, PathBuf};

use unicyclic_core::fixtures::{fixture, group_algebra, Base, Coefficient};
use unicyclic_core::hopf::{BialgebraSpec, Kind};
use unicyclic_core::{FieldSpec, Matrix};

use crate::job::{JobSpec, OutputFormat, Pipeline, TheoryArg};
use crate::CliError;

fn base_slug(base: Base) -> String {
    match base {
        Base::Ground => "k".into(),
        Base::Cyclic(n) => format!("z{n}"),
        Base::Sweedler => "h4".into(),
    }
}

fn datum_job(
    kind: Kind,
    base: Base,
    pipeline: Pipeline,
    truncation: usize,
) -> Result<JobSpec, CliError> {
    let fx = fixture(kind, base, Coefficient::Trivial, FieldSpec::Rationals)?;
    Ok(JobSpec {
        name: Some(fx.name),
        field: FieldSpec::Rationals,
        pipeline,
        truncation,
        theory: None,
        output: OutputFormat::Text,
        bialgebra: Some(fx.bialgebra),
        datum: Some(fx.carrier),
        coefficient: Some(fx.coefficient),
        expression: None,
        flavor: None,
    })
}

/// `k[Z/2]` with `Δ(g) = g ⊗ g + 1 ⊗ 1`, which is not coassociative.
fn corrupted() -> Result<JobSpec, CliError> {
    let mut job = datum_job(Kind::MC, Base::Cyclic(2), Pipeline::Validate, 2)?;
    let f = FieldSpec::Rationals;
    let good = group_algebra(f, 2);
    let one = f.one();
    let comult = Matrix::from_triplets(
        f,
        4,
        2,
        [(0, 0, one.clone()), (3, 1, one.clone()), (0, 1, one)],
    )?;
    job.bialgebra = Some(BialgebraSpec { comult, ..good });
    job.name = Some("k[Z/2] with a corrupted comultiplication".into());
    Ok(job)
}

pub fn bundled() -> Result<Vec<(String, JobSpec)>, CliError> {
    let mut out = Vec::new();
    for base in [
        Base::Ground,
        Base::Cyclic(2),
        Base::Cyclic(3),
        Base::Sweedler,
    ] {
        for kind in Kind::ALL {
            let name = format!("{}-{}.json", kind.name().to_lowercase(), base_slug(base));
            out.push((name, datum_job(kind, base, Pipeline::Validate, 3)?));
        }
    }
    let mut hc = datum_job(Kind::MA, Base::Ground, Pipeline::Homology, 5)?;
    hc.theory = Some(TheoryArg::Hc);
    hc.name = Some("cyclic homology of the ground field".into());
    out.push(("homology-ma-k-hc.json".into(), hc));
    let mut approx = datum_job(Kind::MC, Base::Cyclic(2), Pipeline::Approx, 3)?;
    approx.name = Some("approximations of k[Z/2] as a module coalgebra".into());
    out.push(("approx-mc-z2.json".into(), approx));
    let mut hopf = datum_job(Kind::MA, Base::Cyclic(2), Pipeline::HopfHochschild, 4)?;
    hopf.name = Some("functions on Z/2 under translation".into());
    out.push(("hopf-hochschild-ma-z2.json".into(), hopf));
    out.push((
        "lambda-example.json".into(),
        JobSpec {
            name: Some("a face past a twist".into()),
            field: FieldSpec::Rationals,
            pipeline: Pipeline::LambdaCalc,
            truncation: 0,
            theory: None,
            output: OutputFormat::Text,
            bialgebra: None,
            datum: None,
            coefficient: None,
            expression: Some("d1_0 * t1_1".into()),
            flavor: Some(unicyclic_core::lambda::Flavor::N),
        },
    ));
    out.push(("invalid-corrupted-comult.json".into(), corrupted()?));
    Ok(out)
}

pub fn write_all(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (name, job) in bundled()? {
        let path = dir.join(name);
        std::fs::write(&path, job.emit())
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}
