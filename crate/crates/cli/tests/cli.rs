use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_unicyclic"))
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn fixture(name: &str) -> PathBuf {
    fixture_dir().join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn table_column(report: &str) -> Vec<usize> {
    report
        .lines()
        .skip_while(|l| !l.starts_with("degree"))
        .skip(1)
        .map_while(|l| {
            let mut it = l.split_whitespace();
            it.next()?.parse::<usize>().ok()?;
            it.next()?.parse().ok()
        })
        .collect()
}

fn bundled() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    v.sort();
    v
}

#[test]
fn every_valid_fixture_runs() {
    let files = bundled();
    assert!(files.len() >= 20);
    for path in files {
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let o = run(&["run", path.to_str().unwrap()]);
        if name.starts_with("invalid-") {
            assert_eq!(o.status.code(), Some(2), "{name}");
        } else {
            assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
            assert!(stdout(&o).starts_with("format: 1\n"), "{name}");
        }
    }
}

#[test]
fn bundled_fixtures_match_the_generator() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for path in bundled() {
        let fresh = dir.path().join(path.file_name().unwrap());
        assert_eq!(
            std::fs::read(&path).unwrap(),
            std::fs::read(&fresh).unwrap(),
            "{}",
            path.display()
        );
    }
}

#[test]
fn output_is_deterministic() {
    let job = fixture("homology-ma-k-hc.json");
    let args = ["run", job.to_str().unwrap(), "--certify", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn emit_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for path in bundled() {
        let first = run(&["emit", path.to_str().unwrap()]);
        assert_eq!(first.status.code(), Some(0), "{}", path.display());
        assert_eq!(
            first.stdout,
            std::fs::read(&path).unwrap(),
            "bundled files are canonical"
        );
        let copy = dir.path().join("copy.json");
        std::fs::write(&copy, &first.stdout).unwrap();
        let second = run(&["emit", copy.to_str().unwrap()]);
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn integer_and_fraction_scalars_parse_alike() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("ma-z2.json")).unwrap();
    let ints = text.replace("\"1\"", "1").replace("\"0\"", "0");
    assert_ne!(ints, text);
    let path = dir.path().join("ints.json");
    std::fs::write(&path, ints).unwrap();
    let a = run(&["emit", path.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(stdout(&a), text);
}

#[test]
fn corrupted_comultiplication_reports_a_witness() {
    let o = run(&[
        "run",
        fixture("invalid-corrupted-comult.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("FAILED coassociativity at basis [1]"), "{err}");
}

#[test]
fn cyclic_homology_of_the_ground_field() {
    let o = run(&[
        "run",
        fixture("homology-ma-k-hc.json").to_str().unwrap(),
        "--oracle",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(table_column(&out), vec![1, 0, 1, 0]);
    assert!(out.contains("theory: HC\n"));
    assert!(out.contains("truncation: 5\n"));
    assert!(out.contains("datum: sha256:"));
}

#[test]
fn homology_overrides_and_oracle() {
    let job = fixture("mc-z2.json");
    let o = run(&[
        "run",
        job.to_str().unwrap(),
        "--pipeline",
        "homology",
        "--degree",
        "4",
        "--theory",
        "hc",
        "--oracle",
        "--certify",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(table_column(&out), vec![1, 0, 1]);
    assert!(out.contains("theory: HC^\n"));
    assert!(out.contains("oracle: "));
    assert!(out.contains("certification: "));
}

#[test]
fn json_report_carries_the_table() {
    let o = run(&[
        "run",
        fixture("approx-mc-z2.json").to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["format"], 1);
    assert_eq!(v["pipeline"], "approx");
    assert_eq!(v["columns"], serde_json::json!(["T", "comonad", "cyclic"]));
    assert_eq!(v["rows"][0][0], 2);
}

#[test]
fn hopf_hochschild_job() {
    let o = run(&[
        "run",
        fixture("hopf-hochschild-ma-z2.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(table_column(&stdout(&o)), vec![1, 0, 0, 0]);
}

#[test]
fn lambda_normal_forms() {
    for (expr, flavor, expected) in [
        ("s0_0 * d0_0", "n", "id[0]"),
        ("d1_0 * t1_1", "n", "t2^1 * d1_1"),
        ("t1_2", "lambda", "id[1]"),
    ] {
        let o = run(&["lambda", expr, "--flavor", flavor]);
        assert_eq!(o.status.code(), Some(0), "{expr}: {}", stderr(&o));
        assert!(
            stdout(&o).contains(&format!("normal form: {expected}\n")),
            "{expr}: {}",
            stdout(&o)
        );
    }
}

#[test]
fn configuration_and_format_errors_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format\": 1, \"field\": \"Q\"").unwrap();
    assert_eq!(run(&["run", bad.to_str().unwrap()]).status.code(), Some(4));
    std::fs::write(
        &bad,
        std::fs::read_to_string(fixture("mc-k.json"))
            .unwrap()
            .replace("\"format\": 1", "\"format\": 7"),
    )
    .unwrap();
    assert_eq!(run(&["run", bad.to_str().unwrap()]).status.code(), Some(4));
    let coch = run(&[
        "run",
        fixture("homology-ma-k-hc.json").to_str().unwrap(),
        "--theory",
        "coch",
    ]);
    assert_eq!(coch.status.code(), Some(4));
    assert_eq!(
        run(&[
            "run",
            fixture("mc-k.json").to_str().unwrap(),
            "--theory",
            "hh"
        ])
        .status
        .code(),
        Some(4)
    );
    assert_eq!(run(&["lambda", "x0_0"]).status.code(), Some(4));
    assert_eq!(run(&["lambda", "d0_0 * d0_0"]).status.code(), Some(4));
    assert_eq!(run(&["nonsense"]).status.code(), Some(4));
}

#[test]
fn missing_file_exits_4() {
    assert_eq!(
        run(&["run", "/nonexistent/job.json"]).status.code(),
        Some(4)
    );
}
