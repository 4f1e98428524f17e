use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_slice-fock"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(name: &str, text: &str) -> String {
    let p = tmp(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn eval_square_at_i() {
    let f = write(
        "square.txt",
        "slice-series v1 N=2\n0 0 0 0 0\n1 0 0 0 0\n2 1 0 0 0\n",
    );
    let o = run(&["eval", &f, "0 1 0 0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1 0 0 0\n");
    let o = run(&["eval", &f, "0", "-1", "0", "0"]);
    assert_eq!(stdout(&o), "-1 0 0 0\n");
}

#[test]
fn eval_constant() {
    let f = write("one.txt", "slice-series v1 N=0\n0 1 0 0 0\n");
    let o = run(&["eval", &f, "0.3 -2 1 5"]);
    assert_eq!(stdout(&o), "1 0 0 0\n");
}

#[test]
fn eval_malformed_line() {
    let f = write("bad.txt", "slice-series v1 N=1\n0 1 0 0 0\n1 1 0 zero 0\n");
    let o = run(&["eval", &f, "1 0 0 0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn missing_file_is_io_error() {
    let o = run(&["eval", "/nonexistent/series.txt", "1 0 0 0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn empty_check_list() {
    let o = run(&["verify", "--checks", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn unknown_check_is_usage_error() {
    let o = run(&["verify", "--checks", "rep-formula,nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nope"));
}

#[test]
fn bad_flag_is_usage_error() {
    assert_eq!(run(&["verify", "--alpha", "x"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--alpha", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--domain", "torus"]).status.code(), Some(2));
}

#[test]
fn unwritable_report() {
    let o = run(&[
        "verify",
        "--checks",
        "star-unit",
        "--out",
        "/nonexistent/dir/report",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn reports_are_deterministic_and_mirrored() {
    let args = |out: &str| {
        vec![
            "verify".to_string(),
            "--seed".into(),
            "42".into(),
            "--series".into(),
            "3".into(),
            "--checks".into(),
            "rep-formula,star-pointwise,star-reciprocal,orthogonality,hermiticity".into(),
            "--out".into(),
            out.into(),
        ]
    };
    let a = tmp("det-a").display().to_string();
    let b = tmp("det-b").display().to_string();
    let oa = bin().args(args(&a)).output().unwrap();
    let ob = bin().args(args(&b)).output().unwrap();
    assert_eq!(oa.status.code(), Some(0), "{}", stderr(&oa));
    assert_eq!(ob.status.code(), Some(0));
    let ja = std::fs::read(format!("{a}.json")).unwrap();
    let jb = std::fs::read(format!("{b}.json")).unwrap();
    assert_eq!(ja, jb);
    assert_eq!(
        std::fs::read(format!("{a}.csv")).unwrap(),
        std::fs::read(format!("{b}.csv")).unwrap()
    );
    assert_eq!(stdout(&oa).as_bytes(), &ja[..]);

    let json: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    let records = json.as_array().unwrap();
    assert_eq!(records.len(), 6);
    let csv = String::from_utf8(std::fs::read(format!("{a}.csv")).unwrap()).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("check_id,paper_ref,lhs,rhs,constant,margin,pass")
    );
    for (rec, line) in records.iter().zip(lines) {
        assert!(line.starts_with(rec["check_id"].as_str().unwrap()));
        assert!(!rec["paper_ref"].as_str().unwrap().is_empty());
    }
}

#[test]
fn failing_check_exits_one() {
    let o = run(&[
        "verify",
        "--checks",
        "reproducing-plane",
        "--series",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("reproducing-plane"));
    assert!(stdout(&o).contains(",false"));
    // with a larger plane the truncation tail is negligible
    let o = run(&[
        "verify",
        "--checks",
        "reproducing-plane",
        "--series",
        "2",
        "--radius",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn config_file_and_override() {
    let cfg = write(
        "run.conf",
        "# quick\nseed=7\nchecks=star-unit,star-assoc\nseries=2\n",
    );
    let o = run(&["verify", "--config", &cfg, "--checks", "star-unit"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 1);
    let bad = write("bad.conf", "seed=7\nalpha\n");
    let o = run(&["verify", "--config", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
}

fn kernel_line(out: &str, label: &str) -> Vec<f64> {
    out.lines()
        .find(|l| l.starts_with(label))
        .unwrap()
        .split_whitespace()
        .skip(1)
        .map(|t| t.parse().unwrap())
        .collect()
}

#[test]
fn kernel_at_zero() {
    let o = run(&["kernel", "0.3 0.1 -0.2 0.4", "0 0 0 0"]);
    let out = stdout(&o);
    assert_eq!(kernel_line(&out, "kernel"), vec![1.0, 0.0, 0.0, 0.0]);
    let c = kernel_line(&out, "corrected");
    assert!((c[0] - 1.0 / (1.0 - (-1.0f64).exp())).abs() < 1e-12);
}

#[test]
fn kernel_real_points_in_the_plane() {
    let o = run(&["kernel", "0.5", "0.5", "--domain", "plane", "--radius", "8"]);
    let out = stdout(&o);
    let e = 0.25f64.exp();
    assert!((kernel_line(&out, "kernel")[0] - e).abs() < 1e-14);
    assert!((kernel_line(&out, "corrected")[0] - e).abs() < 1e-10);
}

#[test]
fn kernel_on_a_complex_slice() {
    // q = 0.3 + 0.4i, w = -0.2 + 0.5i: e^{α q w̄} as a complex number
    let o = run(&["kernel", "0.3 0.4 0 0", "-0.2 0.5 0 0", "--alpha", "2"]);
    let k = kernel_line(&stdout(&o), "kernel");
    let (a, b) = (0.3f64, 0.4f64);
    let (c, d) = (-0.2f64, -0.5f64);
    let (re, im) = (2.0 * (a * c - b * d), 2.0 * (a * d + b * c));
    let e = re.exp();
    assert!((k[0] - e * im.cos()).abs() < 1e-14);
    assert!((k[1] - e * im.sin()).abs() < 1e-14);
    assert_eq!(&k[2..], &[0.0, 0.0]);
}

#[test]
fn gram_table_columns_agree() {
    let o = run(&["gram", "--degree", "6", "--format", "csv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m,grid,closed_form,oracle,plane_limit"));
    for line in lines {
        let v: Vec<f64> = line.split(',').map(|t| t.parse().unwrap()).collect();
        assert!((v[1] - v[3]).abs() < 1e-12);
        assert!((v[2] - v[3]).abs() < 1e-12);
    }
}

#[test]
fn norm_of_constant() {
    let f = write("const.txt", "slice-series v1 N=0\n0 0 0 1 0\n");
    let o = run(&["norm", &f, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let expected = (1.0 - (-1.0f64).exp()).sqrt();
    assert!((v["norm"].as_f64().unwrap() - expected).abs() < 1e-13);
}
