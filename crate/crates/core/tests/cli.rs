use std::path::{Path, PathBuf};

use rough_cover::cli::{self, AnalysisReport};
use rough_cover::Covering;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("rough-cover").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn analyze_example3() {
    let (code, out, _) = run(&["analyze", &fixture("example3")]);
    assert_eq!(code, 0);
    assert!(
        out.contains("invariable: yes, partition: no, Cov(C)=C: yes"),
        "{out}"
    );
    assert!(
        out.contains("Cov(C) = {{1},{1,2},{3}} (equal to C)"),
        "{out}"
    );
}

#[test]
fn analyze_is_deterministic() {
    let file = fixture("example12");
    let first = run(&["analyze", &file, "--lambda"]);
    let second = run(&["analyze", &file, "--lambda"]);
    assert_eq!(first, second);
    assert!(first.1.contains("λ"));
}

#[test]
fn analyze_json_matches_text_verdicts() {
    for name in [
        "example3",
        "example12",
        "example14",
        "example19",
        "example20",
    ] {
        let file = fixture(name);
        let (code, json, _) = run(&["analyze", &file, "--json", "--lambda"]);
        assert_eq!(code, 0);
        let report: AnalysisReport = serde_json::from_str(&json).unwrap();
        let (_, text, _) = run(&["analyze", &file]);
        let c = &report.classification;
        assert_eq!(c.invariable, c.cov_fixed_point, "{name}");
        let yn = |b: bool| if b { "yes" } else { "no" };
        let line = format!(
            "invariable: {}, partition: {}, Cov(C)=C: {}, irreducible: {}",
            yn(c.invariable),
            yn(c.partition),
            yn(c.cov_fixed_point),
            yn(c.irreducible)
        );
        assert!(text.contains(&line), "{name}: {text}");
    }
}

#[test]
fn check_neighborhoods_verdicts() {
    let (code, out, _) = run(&["check-neighborhoods", &fixture("example20")]);
    assert_eq!(code, 0);
    assert!(out.contains("is NOT a neighborhoods"), "{out}");

    let (_, out, _) = run(&["check-neighborhoods", &fixture("example3")]);
    assert!(out.contains("IS a neighborhoods"), "{out}");

    let (_, out, _) = run(&["check-neighborhoods", &fixture("example19")]);
    assert!(
        out.contains("is NOT a neighborhoods (too many blocks (4 blocks, 3 elements))"),
        "{out}"
    );
}

#[test]
fn cov_and_reduce_print_documents() {
    let (code, out, _) = run(&["cov", &fixture("example14")]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        r#"{"universe":["1","2","3"],"blocks":[["1"],["2"],["3"]]}"#
    );

    let (code, out, _) = run(&["reduce", &fixture("example19")]);
    assert_eq!(code, 0);
    let reduced = Covering::from_json(out.trim()).unwrap();
    assert_eq!(
        reduced.labelled_blocks(),
        vec![vec!["1"], vec!["2"], vec!["3"]]
    );
}

#[test]
fn preimages_of_the_discrete_partition() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "d.json",
        r#"{"universe":["1","2","3"],"blocks":[["1"],["2"],["3"]]}"#,
    );
    let (code, json, _) = run(&["preimages", &file, "--json"]);
    assert_eq!(code, 0);
    let docs: Vec<rough_cover::CoveringFile> = serde_json::from_str(&json).unwrap();
    assert_eq!(docs.len(), 36);
    let found: Vec<Covering> = docs
        .into_iter()
        .map(|d| d.into_covering().unwrap())
        .collect();
    let d = Covering::from_json(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let ex14 =
        Covering::from_json(&std::fs::read_to_string(fixture("example14")).unwrap()).unwrap();
    assert!(found.contains(&d));
    assert!(found.contains(&ex14));

    let (_, text, _) = run(&["preimages", &file, "--limit", "2"]);
    assert_eq!(text.lines().count(), 3);
    assert!(text.ends_with("2 preimage(s)\n"));

    let (_, text, _) = run(&["preimages", &fixture("example20")]);
    assert_eq!(text, "0 preimage(s)\n");
}

#[test]
fn verify_single_element() {
    let (code, out, _) = run(&["verify", "--n", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("coverings         1\n"), "{out}");
    assert!(out.contains("violations        0\n"), "{out}");

    let (_, json, _) = run(&["verify", "--n", "2", "--json", "--parallel"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["total"], 5);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn verify_rejects_large_n() {
    let (code, _, err) = run(&["verify", "--n", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("exceeds"), "{err}");
}

#[test]
fn validation_errors_exit_one_and_name_the_block() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (
            r#"{"universe":["1","2"],"blocks":[["1"],[]]}"#,
            "block 1 is empty",
        ),
        (
            r#"{"universe":["1","2"],"blocks":[["1"],["9"]]}"#,
            "block 1: unknown element \"9\"",
        ),
        (r#"{"universe":["1","2"],"blocks":[["1"]]}"#, "missing 2"),
        (
            r#"{"universe":["1","2"],"blocks":[["1","2"],["2","1"]]}"#,
            "block 1 duplicates block 0",
        ),
        (
            r#"{"universe":["1","2"],"blocks":[["1"],"#,
            "malformed covering document",
        ),
    ];
    for (i, (body, expect)) in cases.iter().enumerate() {
        let file = write(dir.path(), &format!("bad{i}.json"), body);
        let (code, out, err) = run(&["analyze", &file]);
        assert_eq!(code, 1, "{body}");
        assert!(out.is_empty());
        assert!(err.contains(expect), "{err}");
    }
    let (code, _, err) = run(&["cov", "/nonexistent/covering.json"]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
    assert_eq!(run(&["verify", "--n", "x"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("check-neighborhoods"));
}

#[test]
fn labels_are_rendered_as_given() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "labels.json",
        r#"{"universe":["zeta","alpha"],"blocks":[["alpha","zeta"],["zeta"]]}"#,
    );
    let (_, out, _) = run(&["cov", &file]);
    assert_eq!(
        out.trim(),
        r#"{"universe":["zeta","alpha"],"blocks":[["zeta"],["zeta","alpha"]]}"#
    );
}
