use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_neighborly"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data")
        .join(name)
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

#[test]
fn construct_rejects_char_two() {
    let o = run(&["construct", "--k", "2", "--field", "F2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("characteristic is not 2"));
}

#[test]
fn construct_then_verify_odd() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.poly");
    let p = path.to_str().unwrap();
    let o = run(&["construct", "--k", "3", "--field", "Q", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# construction=odd k=3\n4 3 3 3 3 Q\n"));

    let o = run(&["verify", "--in", p, "--field", "Q"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for pair in ["{1,2}", "{1,3}", "{1,4}", "{2,3}", "{2,4}", "{3,4}"] {
        assert!(out.contains(&format!("{pair}\t9\t9\ttrue\n")), "{out}");
    }
    assert!(out.ends_with("neighborly\tyes\n"));
}

#[test]
fn construct_round_trips_for_all_k() {
    let dir = tempfile::tempdir().unwrap();
    for k in [1usize, 3, 4, 5, 6, 7, 8, 9, 10] {
        for field in ["Q", "F2", "F3", "F5"] {
            let path = dir.path().join(format!("k{k}_{field}.poly"));
            let p = path.to_str().unwrap();
            let k = k.to_string();
            let o = run(&["construct", "--k", &k, "--field", field, "--out", p]);
            assert_eq!(o.status.code(), Some(0));
            let text = std::fs::read_to_string(&path).unwrap();
            let f = neighborly::mpoly::text::parse_poly(&text, None).unwrap();
            let again = neighborly::mpoly::text::write_poly(&f, &[]);
            let body: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
            assert_eq!(again, body);
        }
    }
}

#[test]
fn verify_reports_failure_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diag.poly");
    std::fs::write(&path, "4 2 2 2 2 Q\n1 1 1 1 1\n1 2 2 2 2\n").unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["verify", "--in", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("neighborly\tno\t{1,2}\texpected 4\tachieved 2\n"));

    let o = run(&["verify", "--in", p, "--type", "2,3,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("type mismatch"));
}

#[test]
fn verify_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.poly");
    let p = path.to_str().unwrap();
    run(&["construct", "--k", "2", "--field", "F3", "--out", p]);
    let o = run(&["--format", "json", "verify", "--in", p]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["neighborly"], true);
    assert_eq!(v["field"], "F3");
    assert_eq!(v["table"].as_array().unwrap().len(), 16);
    assert_eq!(v["table"][5]["set"], serde_json::json!([1, 2]));
    assert_eq!(v["table"][5]["achieved"], 4);
}

#[test]
fn malformed_input_has_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.poly");
    std::fs::write(&path, "# c\n2 2 2 F5\n1/2 1 1\n").unwrap();
    let o = run(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3, column 1"));
}

#[test]
fn unknown_flag_is_usage_error() {
    let o = run(&["verify", "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hilbert_lists_kernel_dims() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.poly");
    let p = path.to_str().unwrap();
    run(&["construct", "--k", "2", "--field", "Q", "--out", p]);
    let o = run(&["hilbert", "--in", p]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("S\texpected\tachieved\tok\tann_dim\n{}\t1\t1\ttrue\t0\n"));
    assert!(out.contains("{1,2,3,4}\t1\t1\ttrue\t15\n"));
    assert!(out.ends_with("top_socle_dim\t1\nsocle\tpass\n"));

    std::fs::write(&path, "2 2 2 Q\n").unwrap();
    let o = run(&["hilbert", "--in", p]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_f2() {
    let o = run(&["--format", "json", "search2222", "--field", "F2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["neighborlyCount"], 0);
    assert_eq!(v["totalCandidates"], 65536);
    assert_eq!(
        v["perFlatteningNonsingularCounts"],
        serde_json::json!([20160, 20160, 20160])
    );
    let tsv = run(&["search2222", "--field", "F2"]);
    assert!(stdout(&tsv).contains("neighborly_count\t0\n"));
}

#[test]
fn output_is_independent_of_jobs() {
    let base = run(&["--jobs", "1", "search2222", "--field", "F2"]);
    for jobs in ["2", "8"] {
        let o = run(&["--jobs", jobs, "search2222", "--field", "F2"]);
        assert_eq!(o.stdout, base.stdout);
    }
    let hex = data("hexagon_join.facets");
    let h = hex.to_str().unwrap();
    let a = run(&["--jobs", "1", "sphere2poly", "--facets", h, "--field", "Q"]);
    let b = run(&["--jobs", "4", "sphere2poly", "--facets", h, "--field", "Q"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn search_rejects_large_fields() {
    let o = run(&["search2222", "--field", "F5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("candidate space too large"));
}

#[test]
fn detidentity() {
    let o = run(&["detidentity"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("determinant_terms\t24\t24\t24\n"));
    assert!(out.contains("mod2_residual_zero\ttrue\n"));
    assert!(out.contains("integer_residual_zero\tfalse\n"));
}

#[test]
fn sphere2poly_hexagon() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hex.poly");
    let hex = data("hexagon.facets");
    let o = run(&[
        "sphere2poly",
        "--facets",
        hex.to_str().unwrap(),
        "--field",
        "F5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("sphere_neighborly\tyes\n"));
    assert!(s.contains("cross_check\tpass\n"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("# source=srbridge\n2 2 2 F5\n"));

    let v = run(&["verify", "--in", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn sphere2poly_errors() {
    let tri = data("disjoint_triangles.facets");
    let o = run(&[
        "sphere2poly",
        "--facets",
        tri.to_str().unwrap(),
        "--field",
        "Q",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("top-degree quotient has dimension 0"));

    let bad = data("not_balanced.facets");
    let o = run(&[
        "sphere2poly",
        "--facets",
        bad.to_str().unwrap(),
        "--field",
        "Q",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not colorful"));

    let o = run(&["sphere2poly", "--facets", tri.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sphere2poly_join_is_not_neighborly() {
    let join = data("hexagon_join.facets");
    let o = run(&[
        "sphere2poly",
        "--facets",
        join.to_str().unwrap(),
        "--field",
        "F2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("sphere_neighborly\tno\t{1,2}\texpected 4\tachieved 1\n"));
    assert!(s.contains("cross_check\tpass\n"));
}
