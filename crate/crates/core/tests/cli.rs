use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use orzech_core::cli::run_with;
use orzech_core::format::Document;
use serde_json::Value;

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("worked_examples").join(name)
}

fn orzech(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("orzech").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn charpoly_prints_coefficients() {
    let (code, out, _) = orzech(&["charpoly", example("matrix_1234.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["polynomial"], serde_json::json!([-2, -5, 1]));
    assert!(out.ends_with('\n'));
}

#[test]
fn matrix_commands() {
    let path = example("matrix_1234.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = orzech(&["det", p]);
    assert_eq!((code, json(&out)["determinant"].clone()), (0, serde_json::json!(-2)));
    let (code, out, _) = orzech(&["ch-check", p]);
    assert_eq!((code, json(&out)["cayley_hamilton"].clone()), (0, Value::Bool(true)));
    let (code, out, _) = orzech(&["hnf", p]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["hnf"]["H"]["entries"], serde_json::json!([[1, 0], [1, 2]]));
    let (code, out, _) = orzech(&["snf", p]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["snf"]["S"]["entries"], serde_json::json!([[1, 0], [0, 2]]));
    let (code, out, _) = orzech(&["kernel", p]);
    assert_eq!((code, json(&out)["kernel"]["cols"].clone()), (0, serde_json::json!(0)));
}

#[test]
fn solve_over_q_and_unsolvable_systems() {
    let (code, out, _) = orzech(&["solve", example("solve_q.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["solution"], serde_json::json!([-1, 1]));

    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "odd.json", r#"{"ring":"Z","rows":1,"cols":1,"entries":[[2]],"vector":[3]}"#);
    let (code, out, err) = orzech(&["solve", &p]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["solution"], Value::Null);
    assert!(err.contains("no solution"));
}

#[test]
fn non_surjective_map_exits_3_and_names_the_generator() {
    let (code, out, err) = orzech(&["certify", example("z_times_2.json").to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("e_1"), "{err}");
}

#[test]
fn certify_then_verify_round_trips_the_corpus() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["proper_submodule_onto_z2.json", "z4_times_3.json", "z6_times_5.json", "non_free_z6.json"] {
        let cert = dir.path().join(format!("{name}.cert"));
        let (code, _, err) = orzech(&["certify", example(name).to_str().unwrap(), "-o", cert.to_str().unwrap()]);
        assert_eq!(code, 0, "{name}: {err}");
        let text = std::fs::read_to_string(&cert).unwrap();
        assert!(text.ends_with('\n'));
        assert!(Document::parse(&text).unwrap().certificate.is_some());
        let (code, out, err) = orzech(&["verify", cert.to_str().unwrap()]);
        assert_eq!(code, 0, "{name}: {err}");
        assert_eq!(json(&out)["verified"], Value::Bool(true));
    }
}

#[test]
fn tampered_certificate_is_rejected_with_reason() {
    let (_, out, _) = orzech(&["certify", example("z4_times_3.json").to_str().unwrap()]);
    let mut doc = json(&out);
    let slot = &mut doc["certificate"]["zero_witnesses"][0][0];
    *slot = serde_json::json!(slot.as_i64().unwrap() + 1);
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "bad.json", &doc.to_string());
    let (code, out, err) = orzech(&["verify", &p]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["reason"], "witness re-multiplication failed");
    assert!(err.contains("witness re-multiplication failed"));

    let mut doc = json(&orzech(&["certify", example("z4_times_3.json").to_str().unwrap()]).1);
    doc["certificate"]["ch_coeffs"][1] = serde_json::json!(2);
    let p = write_temp(&dir, "bad2.json", &doc.to_string());
    let (code, out, _) = orzech(&["verify", &p]);
    assert_eq!((code, json(&out)["reason"].clone()), (1, Value::from("annihilator not monic")));
}

#[test]
fn invert_and_reduce() {
    let (code, out, _) = orzech(&["invert", example("z4_times_3.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    let inv = json(&out)["module"]["images"][0][0].as_i64().unwrap();
    assert_eq!((3 * inv).rem_euclid(4), 1);

    let (code, out, _) = orzech(&["invert", example("proper_submodule_onto_z2.json").to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (2, ""));

    let (code, out, _) = orzech(&["reduce", example("z4_kernel_element.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc = Document::parse(&out).unwrap();
    assert!(doc.reduction.unwrap().verify());
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("garbage.json", "{ not json"),
        ("nonsquare.json", r#"{"ring":"Z","rows":1,"cols":2,"entries":[[1,2]]}"#),
        ("ring.json", r#"{"ring":"R","rows":1,"cols":1,"entries":[[1]]}"#),
        ("illdefined.json", r#"{"ring":"Z","ambient_rank":1,"submodule_gens":[[2],[3]],"images":[[1],[1]]}"#),
    ];
    for (name, text) in cases {
        let p = write_temp(&dir, name, text);
        let cmd = if name == "illdefined.json" { "certify" } else { "charpoly" };
        let (code, out, err) = orzech(&[cmd, &p]);
        assert_eq!(code, 2, "{name}: {err}");
        assert!(out.is_empty() && err.starts_with("error:"), "{name}");
    }
    assert_eq!(orzech(&["frobnicate", "x.json"]).0, 2);
    assert_eq!(orzech(&["charpoly", "/nonexistent/file.json"]).0, 2);
    assert_eq!(orzech(&["charpoly"]).0, 2);
    let p = example("matrix_1234.json");
    assert_eq!(orzech(&["certify", p.to_str().unwrap()]).0, 2);
    assert_eq!(orzech(&["hnf", example("solve_q.json").to_str().unwrap()]).0, 2);
}

#[test]
fn deterministic_and_seed_is_accepted() {
    let p = example("non_free_z6.json");
    let a = orzech(&["certify", p.to_str().unwrap()]);
    let b = orzech(&["certify", p.to_str().unwrap(), "--seed", "17"]);
    assert_eq!(a, b);
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_orzech"))
        .args(["det", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"ring":{"mod":6},"rows":2,"cols":2,"entries":[[1,2],[3,4]]}"#).unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(json(&String::from_utf8(output.stdout).unwrap())["determinant"], serde_json::json!(4));

    let status = Command::new(env!("CARGO_BIN_EXE_orzech"))
        .args(["certify", example("z_times_2.json").to_str().unwrap()])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(3));
}
