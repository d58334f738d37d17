use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gdq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdq")).args(args).env_remove("GDQ_FIELD").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_string_lossy().into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const EX43: &str = "vertices 1 2 3\narrow alpha 1 2\narrow beta 2 3\narrow gamma 3 1\narrow eps 1 1\n\
                    arrow eta 2 2\narrow mu 3 3\nf (alpha beta gamma) (eps) (eta) (mu)\n";

#[test]
fn validate_reports_and_exits() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.tq", EX43);
    let o = gdq(&["validate", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid kind=triangulation vertices=3"));

    let bad = write(dir.path(), "bad.tq", &EX43.replace("(alpha beta gamma) (eps)", "(alpha beta gamma eps)"));
    let o = gdq(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("f³ is not the identity on cycle (alpha beta gamma eps)"));

    let tri = write(dir.path(), "bad.tri", "edges 1 2 3\ntriangle 1 2 3\ntriangle 1 2 3\ntriangle 1 2 3\n");
    let o = gdq(&["validate", tri.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("incidence 3"));

    let o = gdq(&["validate", &data("ex7.4c.tq")]);
    assert_eq!(o.status.code(), Some(1));
    let o = gdq(&["validate", "--generalized", &data("ex7.4c.tq")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("kind=generalized"));

    let syntax = write(dir.path(), "syntax.tq", "vertices 1\narrow a 1\n");
    assert_eq!(gdq(&["validate", syntax.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn from_surface_builds_quivers() {
    let o = gdq(&["from-surface", &data("ex4.4.tri")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("arrow ")).count(), 6);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("markov.tq");
    gdq(&["from-surface", &data("ex4.4.tri"), "-o", out.to_str().unwrap()]);
    let o = gdq(&["classify", out.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "family=none det=0 strict=false growth=nonpolynomial");

    let o = gdq(&["from-surface", &data("T3.tri")]);
    assert!(stdout(&o).lines().next().unwrap().split_whitespace().count() == 10);

    let bad = write(dir.path(), "bad.tri", "edges 1 2\ntriangle 1 2 3\n");
    let target = dir.path().join("never.tq");
    let o = gdq(&["from-surface", bad.to_str().unwrap(), "-o", target.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!target.exists());
}

#[test]
fn analyze_sections() {
    let o = gdq(&["analyze", &data("lambda.tq")]);
    let text = stdout(&o);
    for section in ["ORBITS", "DIMENSION", "CARTAN", "TUBES", "SIMPLES", "WALKS", "GROWTH"] {
        assert!(text.lines().any(|l| l == section), "{section}");
    }
    assert!(text.contains("dim=10 formula=10"));
    assert!(text.contains("det=4"));
    assert!(text.contains("family=Lambda r=1 s=1 b=0"));

    let text = stdout(&gdq(&["analyze", "builtin:markov"]));
    assert!(text.contains("dim=36") && text.contains("det=0"));

    let o = gdq(&["analyze", "--format", "json", &data("ex7.4c.tq")]);
    let tubes = stdout(&o).lines().find(|l| l.contains("\"TUBES\"")).unwrap().to_string();
    assert!(tubes.contains("\"period2_pairs\":2"), "{tubes}");
    assert!(stdout(&o).contains("\"det\":\"0\""));
}

#[test]
fn contract_and_expand_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let original = fs::read_to_string(data("ex7.4c.tq")).unwrap();
    let expanded = dir.path().join("expanded.tq");
    let o = gdq(&["expand", &data("ex7.4c.tq"), "-o", expanded.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = gdq(&["contract", "--disks", "all", expanded.to_str().unwrap()]);
    assert_eq!(stdout(&o), original);

    let o = gdq(&["contract", "--disks", "D1", &data("T3.tq")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next().unwrap(), "vertices a1 a2 a3 c2 c3 d2 d3");
    assert_eq!(gdq(&["contract", "--disks", "D9", &data("T3.tq")]).status.code(), Some(1));
}

#[test]
fn field_flag_and_env() {
    let o = gdq(&["classify", "--field", "4", &data("lambda.tq")]);
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_gdq"))
        .args(["classify", &data("lambda_2_3.tq")])
        .env("GDQ_FIELD", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "family=Lambda r=2 s=3 b=0 det=24 strict=true growth=nonpolynomial");
}

#[test]
fn enumerate_sweep_dot() {
    let o = gdq(&["enumerate", "--max-vertices", "3"]);
    assert!(stdout(&o).trim_end().ends_with("total=5"));
    let o = gdq(&["enumerate", "--max-vertices", "4", "--format", "json", "--sequential"]);
    assert_eq!(stdout(&o).lines().count(), 8);
    assert_eq!(gdq(&["enumerate", "--max-vertices", "9"]).status.code(), Some(1));

    let o = gdq(&["sweep", "--max-vertices", "3", "--random", "10", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exceptions=0"));

    let o = gdq(&["export-dot", "builtin:omega"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph Q {") && dot.matches(" -> ").count() == 6);
}

#[test]
fn deterministic_json() {
    let a = gdq(&["analyze", "--format", "json", "builtin:gamma"]);
    let b = gdq(&["analyze", "--format", "json", "builtin:gamma"]);
    assert_eq!(a.stdout, b.stdout);
}
