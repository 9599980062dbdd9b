use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sweedler-rb")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_family_exit_codes() {
    let ok = run(&["verify-family", "assoc.a"]);
    assert_eq!(ok.status.code(), Some(0));
    let doc = json(&ok);
    assert_eq!(doc["verdict"], "pass");
    assert!(doc["timestamp"].is_u64());

    let bad = run(&["verify-family", "assoc.d", "--no-timestamp"]);
    assert_eq!(bad.status.code(), Some(2));
    let doc = json(&bad);
    assert_eq!(doc["discrepancy"]["family"], "assoc.d");
    assert!(doc.get("timestamp").is_none());

    assert_eq!(run(&["verify-family", "assoc.d.fixed"]).status.code(), Some(0));
    assert_eq!(run(&["verify-family", "no.such"]).status.code(), Some(1));
}

#[test]
fn sample_mode_over_a_prime_field() {
    let out = run(&["verify-family", "assoc.a", "--mode", "sample", "--field", "F7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["field"], "F7");
    let outside = run(&["verify-family", "lm2.1.10", "--mode", "sample", "--field", "F7"]);
    assert_eq!(outside.status.code(), Some(1));
}

#[test]
fn verify_operator_reads_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    std::fs::write(&path, r#"[["0","0","0","0"],["0","0","0","0"],["0","0","-1","0"],["0","0","0","-1"]]"#).unwrap();
    let out = run(&["verify-operator", "--algebra", "h4", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["kind"], "associative");

    let id = run(&["verify-operator", "--algebra", "h4", "--matrix", "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"]);
    assert_eq!(id.status.code(), Some(2));
    assert_eq!(json(&id)["verdict"], "fail");
}

#[test]
fn kind_selects_the_adjoint() {
    let zero = "[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]";
    let out = run(&["verify-operator", "--algebra", "h4", "--kind", "jordan", "--weight", "0", "--matrix", zero]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["kind"], "jordan");
    let mismatch = run(&["verify-operator", "--algebra", "lm2", "--kind", "associative", "--matrix", "[[0,0,0],[0,0,0],[0,0,0]]"]);
    assert_eq!(mismatch.status.code(), Some(1));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = run(&["verify-operator", "--algebra", "lm2", "--matrix", "[[0,0,0],[0,0 0]]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    assert_eq!(run(&["verify-operator", "--algebra", "lm2", "--matrix", "[[0,0],[0,0]]"]).status.code(), Some(1));
    assert_eq!(run(&["search", "--field", "Q"]).status.code(), Some(1));
    assert_eq!(run(&["search", "--field", "F3", "--weight", "3"]).status.code(), Some(1));
    assert_eq!(run(&["--no-such-flag"]).status.code(), Some(1));
}

#[test]
fn classify_reports_kernel() {
    let out = run(&["classify", "--algebra", "h4minus", "--matrix", "[[0,0,0,0],[0,0,0,0],[0,0,-1,0],[0,0,0,-1]]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["classification"]["kernel_dim"], 2);
}

#[test]
fn search_writes_jsonl_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lm2.jsonl");
    let out = run(&["search", "--algebra", "lm2", "--field", "F3", "--jobs", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 342);
    assert!(lines.iter().all(|l| l["matched_family"].is_string()));
}

#[test]
fn coverage_document() {
    let out = run(&["coverage", "--algebra", "lm3", "--field", "F3", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["total"], 864);
    assert_eq!(doc["unmatched"].as_array().unwrap().len(), 0);
}

#[test]
fn instantiate_needs_every_parameter() {
    let out = run(&["instantiate", "lm2.1.10", "--set", "a=1"]);
    assert_eq!(out.status.code(), Some(1));
    let listing = run(&["catalog"]);
    let families = json(&listing);
    assert!(families.as_array().unwrap().len() > 100);
    let d = run(&["discrepancies"]);
    let n = String::from_utf8_lossy(&d.stdout).lines().count();
    assert!(n >= 4);
}

#[test]
fn identity_fails_first_on_g_e() {
    let out = run(&["verify-operator", "--matrix", "[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = json(&out);
    assert_eq!(doc["report"]["residuals"][0]["pair"], serde_json::json!(["g", "e"]));
}

#[test]
fn minus_weight_identity_passes_everywhere() {
    for (algebra, n) in [("h4", 4), ("h4minus", 4), ("h4plus", 4), ("lm2", 3), ("lm3", 3)] {
        let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
        let m = serde_json::to_string(&m).unwrap();
        assert_eq!(run(&["verify-operator", "--algebra", algebra, "--matrix", &m]).status.code(), Some(0), "{algebra}");
    }
}

#[test]
fn assoc_a_kernel_is_abelian_in_h4_minus() {
    let out = run(&["classify", "--matrix", "[[0,0,0,0],[0,0,0,0],[0,0,-1,0],[0,0,0,-1]]"]);
    let c = &json(&out)["classification"];
    assert_eq!(c["kernel_dim"], 2);
    assert_eq!(c["kernel_abelian"], true);
}

#[test]
fn output_is_byte_identical_without_timestamps() {
    let args = ["coverage", "--algebra", "lm2", "--field", "F3", "--no-timestamp"];
    let a = run(&args);
    let b = run(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
}
