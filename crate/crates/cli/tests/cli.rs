use std::path::Path;
use std::process::{Command, Output};

use operadkit::presentation::{preset, QuadraticPresentation};

const ALGEBRA4: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/algebra4.json");
const HEISENBERG: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/heisenberg.json");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_operadkit")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dims_prints_counts() {
    let o = run(&["dims", "two_as", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 2 3 4 5 6\n");
    assert_eq!(stdout(&run(&["dims", "as", "5"])), "1 1 1 1 1\n");
    assert_eq!(run(&["dims", "nope", "3"]).status.code(), Some(3));
}

#[test]
fn differential_of_m11() {
    let o = run(&["differential", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "d m[1,1] = + m[1,0](m[0,1],1) - m[1,0](1,m[0,1]) + m[0,1](m[1,0],1) - m[0,1](1,m[1,0])\n"
    );
    assert_eq!(run(&["differential", "0", "0"]).status.code(), Some(3));
}

#[test]
fn dual_of_each_preset_is_the_other() {
    let o = run(&["dual", "as_2"]);
    assert_eq!(o.status.code(), Some(0));
    let dual = QuadraticPresentation::parse_text(&stdout(&o)).unwrap();
    assert!(dual.same_relations(&preset("two_as").unwrap()));
    let dual = QuadraticPresentation::parse_text(&stdout(&run(&["dual", "two_as"]))).unwrap();
    assert!(dual.same_relations(&preset("as_2").unwrap()));
}

#[test]
fn confluence_exit_codes() {
    let o = run(&["confluence", "two_as"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verdict: confluent (12 critical monomials, 2 branch overlaps)\n"));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("flipped.txt");
    let mut text = preset("two_as").unwrap().to_text();
    text = text.replace("relator: x1*(x2•x3) - x1•(x2*x3)", "relator: x1*(x2•x3) + x1•(x2*x3)");
    assert!(text.contains("x1*(x2•x3) + x1•(x2*x3)"));
    std::fs::write(&file, text).unwrap();
    let o = run(&["confluence", path(&file)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NOT JOINABLE"));

    std::fs::write(&file, "generators: * •\nrelator: (x1*x2)*\n").unwrap();
    assert_eq!(run(&["confluence", path(&file)]).status.code(), Some(2));
}

#[test]
fn d2check_passes() {
    let o = run(&["d2check", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));
    assert_eq!(run(&["d2check", "1"]).status.code(), Some(3));
}

#[test]
fn transfer_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let again = dir.path().join("s2.json");
    let cx = dir.path().join("v.json");
    let o = run(&["transfer", "--algebra", ALGEBRA4, "--weight", "4", "--out", path(&out), "--complex-out", path(&cx)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["verify", "--structure", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("pass: relations hold up to arity 5"));
    assert_eq!(run(&["verify", "--structure", path(&out), "--complex", path(&cx)]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--structure", path(&out), "--complex", ALGEBRA4, "--arity", "4"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--structure", path(&out), "--complex", HEISENBERG]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--structure", path(&out), "--arity", "6"]).status.code(), Some(3));

    run(&["transfer", "--algebra", ALGEBRA4, "--weight", "4", "--out", path(&again)]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn tampered_structure_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.json");
    let o = run(&["transfer", "--algebra", HEISENBERG, "--weight", "3", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(run(&["verify", "--structure", path(&out)]).status.code(), Some(0));

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let coeff = &mut v["operations"]["(1,0)"][0][1][0][1];
    let flipped = match coeff.as_str().unwrap().strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None => format!("-{}", coeff.as_str().unwrap()),
    };
    *coeff = flipped.into();
    std::fs::write(&out, v.to_string()).unwrap();
    let o = run(&["verify", "--structure", path(&out)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fail: relation for m["), "{}", stdout(&o));
}

#[test]
fn malformed_input_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("a.json");
    let out = dir.path().join("s.json");
    let base = std::fs::read_to_string(ALGEBRA4).unwrap();
    let transfer = |a: &Path| run(&["transfer", "--algebra", path(a), "--weight", "2", "--out", path(&out)]);

    std::fs::write(&alg, base.replacen('{', "{\"colour\": 1,", 1)).unwrap();
    let o = transfer(&alg);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("colour"), "{}", stderr(&o));

    std::fs::write(&alg, base.replace("\"2/1\"", "\"two\"")).unwrap();
    let o = transfer(&alg);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("d[0]"), "{}", stderr(&o));

    std::fs::write(&alg, base.replace("\"ba\",\n          \"1/2\"", "\"nope\",\n          \"1/2\"")).unwrap();
    let o = transfer(&alg);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("nope"), "{}", stderr(&o));

    // b•a = b/2 breaks the Leibniz rule
    std::fs::write(&alg, base.replace("\"ba\",\n          \"1/2\"", "\"b\",\n          \"1/2\"")).unwrap();
    let o = transfer(&alg);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("Leibniz"), "{}", stderr(&o));

    assert_eq!(run(&["transfer", "--algebra", ALGEBRA4, "--weight", "9", "--out", path(&out)]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--structure", "/nonexistent/s.json"]).status.code(), Some(2));
}

#[test]
fn unknown_verbs_and_flags_are_rejected() {
    let o = run(&["frobnicate"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("Usage"));
    let o = run(&["transfer", "--algebra", ALGEBRA4, "--weight", "2", "--out", "x.json", "--fast"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("--fast"));
}
