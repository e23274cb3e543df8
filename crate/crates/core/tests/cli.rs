use std::process::{Command, Output};

fn pnu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pnu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("pnu-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn analyze_prints_profile() {
    let o = pnu(&["analyze", "dihedral:16"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("class      3"), "{out}");
    assert!(out.contains("coclass    1"), "{out}");
    assert!(out.contains("exponent   8"), "{out}");
}

#[test]
fn nu_prints_orders() {
    let o = pnu(&["nu", "cyclic:2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let row = out.lines().find(|l| l.starts_with("nu(G)")).expect("nu row");
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cols, ["nu(G)", "8", "4"]);
}

#[test]
fn bad_spec_exits_with_error() {
    let o = pnu(&["nu", "dihedral:12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn verify_writes_report_and_exits_zero() {
    let corpus = temp_file(
        "small.toml",
        "seed = 5\n[[group]]\nspec = \"quaternion:8\"\nsuites = [\"nu-structure\", \"hall\"]\nselectors = [\"center\"]\n",
    );
    let out = corpus.with_file_name("report.json");
    let o = pnu(&[
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--suite",
        "all",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let verdicts = report.as_array().unwrap();
    assert!(!verdicts.is_empty());
    assert!(verdicts.iter().all(|v| v["status"] == "pass"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 fail"));
}

#[test]
fn verify_suite_filter_and_empty_corpus() {
    let corpus = temp_file("empty.toml", "");
    let o = pnu(&["verify", "--corpus", corpus.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[]\n");

    let corpus = temp_file(
        "filter.toml",
        "[[group]]\nspec = \"cyclic:4\"\nsuites = [\"hall\", \"oracles\"]\n",
    );
    let o = pnu(&["verify", "--corpus", corpus.to_str().unwrap(), "--suite", "oracles"]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for v in report.as_array().unwrap() {
        assert!(v["claim"].as_str().unwrap().ends_with("agreement"), "{v}");
    }
}

#[test]
fn verify_rejects_unknown_suite_and_bad_corpus() {
    let corpus = temp_file("ok.toml", "[[group]]\nspec = \"cyclic:2\"\n");
    let o = pnu(&["verify", "--corpus", corpus.to_str().unwrap(), "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));

    let bad = temp_file("bad.toml", "[[group]]\nspec = 3\n");
    let o = pnu(&["verify", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = pnu(&["verify", "--corpus", "/nonexistent/corpus.toml"]);
    assert_eq!(o.status.code(), Some(2));
}
