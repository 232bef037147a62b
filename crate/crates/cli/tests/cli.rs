//! End-to-end runs of the `dgal` binary.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};

fn dgal(args: &[&Path]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dgal")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

fn run_ok(dir: &Path, problem: Value) -> Value {
    let path = write(dir, "problem.json", &problem);
    let (code, stdout) = dgal(&[Path::new("run"), &path]);
    assert_eq!(code, 0, "{stdout}");
    serde_json::from_str(&stdout).unwrap()
}

fn verify_code(dir: &Path, cert: &Value) -> i32 {
    let path = write(dir, "cert.json", cert);
    dgal(&[Path::new("verify"), &path]).0
}

fn error_of(dir: &Path, problem: Value) -> (i32, Value) {
    let path = write(dir, "problem.json", &problem);
    let (code, stdout) = dgal(&[Path::new("run"), &path]);
    (code, serde_json::from_str(&stdout).unwrap())
}

#[test]
fn telescope_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = run_ok(dir.path(), json!({"task": "telescope", "f": "1/(x-t)"}));
    assert_eq!(cert["task"], "telescope");
    assert_eq!(cert["verified"], true);
    assert_eq!(cert["result"]["L"], "Dt^1");
    assert_eq!(cert["result"]["g"], "-1/(x - t)");
    assert_eq!(verify_code(dir.path(), &cert), 0);
}

#[test]
fn edited_integral_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let mut cert = run_ok(dir.path(), json!({"task": "telescope", "f": "1/(x-t)"}));
    cert["result"]["g"] = "1/(x - t)".into();
    assert_eq!(verify_code(dir.path(), &cert), 3);
}

#[test]
fn obstruct_certificate_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cert = run_ok(dir.path(), json!({"task": "obstruct", "A": "-1/(x-t)", "B": "1/(x-t)"}));
    let r = &cert["result"];
    assert_eq!(r["L"], "Dt^1");
    assert_eq!(r["h"], "-1");
    assert_eq!(r["system"]["rows"], 9);
    assert_eq!(r["system"]["cols"], 11);
    assert_eq!(verify_code(dir.path(), &cert), 0);
    let mut bad = cert.clone();
    bad["result"]["h"] = "1".into();
    assert_eq!(verify_code(dir.path(), &bad), 3);
    let mut bad = cert;
    bad["result"]["system"]["rows"] = 8.into();
    assert_eq!(verify_code(dir.path(), &bad), 3);
}

#[test]
fn obstruct_bound_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cert = run_ok(
        dir.path(),
        json!({"task": "obstruct", "A": "-1/(x-t)", "B": "1/(x-t)", "options": {"M": 4, "N": 5}}),
    );
    assert_eq!(cert["result"]["system"]["cols"], 4 + 5 * 2 + 2);
    assert_eq!(verify_code(dir.path(), &cert), 0);
    let (code, err) = error_of(
        dir.path(),
        json!({"task": "obstruct", "A": "-1/(x-t)", "B": "1/(x-t)", "options": {"M": 2, "N": 5}}),
    );
    // well-formed values that break M > n p are a domain error
    assert_eq!(code, 2, "{err}");
    assert_eq!(err["error"]["kind"], "InvalidProblem");
}

#[test]
fn group_tasks() {
    let dir = tempfile::tempdir().unwrap();
    let cert = run_ok(
        dir.path(),
        json!({"task": "group-check", "group": {"semisimple": ["SL2"], "torus_rank": 1, "modules": []}}),
    );
    assert_eq!(cert["result"]["verdict"], "Gm-quotient");
    assert_eq!(verify_code(dir.path(), &cert), 0);

    let cert = run_ok(
        dir.path(),
        json!({"task": "group-generators", "group": {"semisimple": ["SL2"], "modules": [{"dim": 3, "action": "irreducible"}]}}),
    );
    assert_eq!(cert["verified"], true);
    assert_eq!(verify_code(dir.path(), &cert), 0);
    let mut bad = cert.clone();
    bad["result"]["generators"][0]["matrix"][0][0] = "2".into();
    assert_eq!(verify_code(dir.path(), &bad), 3);

    let cert = run_ok(
        dir.path(),
        json!({"task": "density-obstruct", "generators": [{"a": "t^2", "b": 2}, {"a": "t", "b": "1/3"}]}),
    );
    assert_eq!(verify_code(dir.path(), &cert), 0);
    let mut bad = cert;
    bad["result"]["L"] = "Dt^2".into();
    assert_eq!(verify_code(dir.path(), &bad), 3);
}

#[test]
fn analysis_tasks() {
    let dir = tempfile::tempdir().unwrap();
    for problem in [
        json!({"task": "annihilate", "alphas": ["t", "t^2", "2*t"]}),
        json!({"task": "residues", "f": "1/(x-t) + t/(x-1)^2"}),
        json!({"task": "chevalley", "f": "t/(x-t^2) + 1/(x+1)"}),
    ] {
        let cert = run_ok(dir.path(), problem);
        assert_eq!(verify_code(dir.path(), &cert), 0, "{cert}");
        let mut bad = cert.clone();
        let result = bad["result"].as_object_mut().unwrap();
        let key = result.keys().next().unwrap().clone();
        result.insert(key, json!("1"));
        assert_ne!(verify_code(dir.path(), &bad), 0, "{bad}");
    }
}

#[test]
fn verify_task_wraps_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let inner = run_ok(dir.path(), json!({"task": "telescope", "f": "t/(x-t)"}));
    let cert = run_ok(dir.path(), json!({"task": "verify", "certificate": inner}));
    assert_eq!(verify_code(dir.path(), &cert), 0);
}

#[test]
fn domain_errors_exit_2_and_name_the_value() {
    let dir = tempfile::tempdir().unwrap();
    let (code, err) = error_of(dir.path(), json!({"task": "telescope", "f": "1/(x^2+1)"}));
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "NonSplitDenominator");
    assert!(err["error"]["details"]["factor"].as_str().unwrap().contains("x^2"));

    let (code, err) = error_of(dir.path(), json!({"task": "obstruct", "A": "x", "B": "x"}));
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "IntegrabilityViolation");

    let (code, err) = error_of(dir.path(), json!({"task": "group-generators", "group": {"torus_rank": 1}}));
    assert_eq!(code, 2);
    assert_eq!(err["error"]["kind"], "CriterionFails");
}

#[test]
fn malformed_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(dgal(&[Path::new("run"), &path]).0, 1);
    for problem in [
        json!({"task": "telescope", "f": "1/(x-"}),
        json!({"task": "nope"}),
        json!({"f": "x"}),
        json!({"task": "telescope"}),
        json!({"task": "density-obstruct", "generators": [{"a": "t", "b": 0.5}]}),
    ] {
        let (code, err) = error_of(dir.path(), problem.clone());
        assert_eq!(code, 1, "{problem} gave {err}");
        assert_eq!(err["error"]["kind"], "MalformedInput");
    }
    assert_eq!(dgal(&[Path::new("run"), &dir.path().join("missing.json")]).0, 1);
}

#[test]
fn output_path_is_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let problem = write(
        dir.path(),
        "p.json",
        &json!({"task": "telescope", "f": "1/(x-t)", "options": {"output": out.to_str().unwrap()}}),
    );
    let (code, stdout) = dgal(&[Path::new("run"), &problem]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let first = std::fs::read(&out).unwrap();
    // -o takes precedence over options.output
    let other = dir.path().join("other.json");
    assert_eq!(dgal(&[Path::new("run"), &problem, Path::new("-o"), &other]).0, 0);
    assert_eq!(std::fs::read(&other).unwrap(), first);
    // no temporary files left behind
    let names: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 3, "{names:?}");
}

#[test]
fn identical_inputs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let problem = write(dir.path(), "p.json", &json!({"task": "obstruct", "A": "-1/(x-t)", "B": "1/(x-t)"}));
    let a = dgal(&[Path::new("run"), &problem]);
    let b = dgal(&[Path::new("run"), &problem]);
    assert_eq!(a, b);
    // an older certificate of the same inputs still verifies
    let cert = dir.path().join("old.json");
    std::fs::write(&cert, &a.1).unwrap();
    assert_eq!(dgal(&[Path::new("verify"), &cert]).0, 0);
}
