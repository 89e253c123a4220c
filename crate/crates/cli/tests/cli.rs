use std::path::Path;
use std::process::{Command, Output};

use mnpieri::qt::{QTMonomial, QTRational};

fn mnpieri(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mnpieri"))
        .args(args)
        .env_remove("MNPIERI_FORMAT")
        .env_remove("MNPIERI_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hook_suite_passes() {
    let o = mnpieri(&["verify", "hook-eval", "--m", "1", "--n", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("2 of 2 cases pass"));
}

#[test]
fn classical_pieri_suite_passes() {
    let o = mnpieri(&["verify", "pieri-classic", "--max", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(mnpieri(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(mnpieri(&["verify", "phi", "--m", "2", "--n", "4"]).status.code(), Some(2));
    assert_eq!(mnpieri(&["--bogus-flag"]).status.code(), Some(2));
    assert_eq!(mnpieri(&["pieri", "[2,1]"]).status.code(), Some(2));
    assert_eq!(mnpieri(&["compute", "s[1"]).status.code(), Some(2));
}

#[test]
fn negative_slopes_parse() {
    let o = mnpieri(&["verify", "phi", "--m", "-1", "--n", "2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn compute_examples() {
    assert_eq!(stdout(&mnpieri(&["compute", "nabla(M[1])"])).trim(), "M[1]");
    let p2 = stdout(&mnpieri(&["compute", "P[(2)]"]));
    assert!(p2.starts_with("m[2] + "), "{p2}");
    let o = mnpieri(&["compute", "E[1,1/2](shape [1,1]/[])"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).trim().is_empty());
}

#[test]
fn json_reports_are_deterministic_and_record_the_seed() {
    let args =
        ["verify", "wheel", "--m", "1", "--n", "3", "--k", "1", "--trials", "3", "--seed", "7", "--format", "json"];
    let a = mnpieri(&args);
    let mut with_threads = args.to_vec();
    with_threads.extend(["--threads", "2"]);
    let b = mnpieri(&with_threads);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["params"]["trials"], "3");
}

#[test]
fn flags_take_precedence_over_environment() {
    let run = |env: &str, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_mnpieri"));
        c.args(["verify", "hook-eval", "--m", "1", "--n", "2", "--k", "1"]).env("MNPIERI_FORMAT", env);
        if let Some(f) = flag {
            c.args(["--format", f]);
        }
        String::from_utf8(c.output().unwrap().stdout).unwrap()
    };
    assert!(run("json", None).trim_start().starts_with('{'));
    assert!(run("json", Some("text")).starts_with("PASS"));
}

fn tamper(path: &Path) {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["degrees"]["2"]["macdonald_p"]["[2]"]["[2]"] = serde_json::Value::String("2".into());
    std::fs::write(path, serde_json::to_string(&v).unwrap()).unwrap();
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(mnpieri(&["cache", "build", "--degree-bound", "4", "--cache-dir", d]).status.code(), Some(0));
    let v = mnpieri(&["cache", "verify", "--cache-dir", d]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout(&v).lines().count(), 4);

    tamper(&dir.path().join("macdonald_cache.json"));
    let v = mnpieri(&["cache", "verify", "--cache-dir", d]);
    assert_eq!(v.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&v.stderr).contains("checksum"));
    assert_eq!(mnpieri(&["compute", "P[2]", "--cache-dir", d]).status.code(), Some(2));

    assert_eq!(mnpieri(&["cache", "clear", "--cache-dir", d]).status.code(), Some(0));
    let o = mnpieri(&["compute", "P[2]", "--cache-dir", d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.path().join("macdonald_cache.json").exists());
}

#[test]
fn stable_validate_detects_a_broken_entry() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("basis.json");
    let o = mnpieri(&["stable", "expand", "--m", "1", "--max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&file, &o.stdout).unwrap();
    let f = file.to_str().unwrap();
    assert_eq!(mnpieri(&["stable", "validate", "--file", f]).status.code(), Some(0));

    let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let entry =
        v["entries"].as_array_mut().unwrap().iter_mut().find(|e| e["lambda"] == serde_json::json!([2, 1])).unwrap();
    let pair =
        entry["coeffs"].as_array_mut().unwrap().iter_mut().find(|p| p[0] == serde_json::json!([1, 1, 1])).unwrap();
    let c: QTRational = pair[1].as_str().unwrap().parse().unwrap();
    pair[1] = serde_json::Value::String((&c * &QTRational::monomial(QTMonomial::q(2))).to_string());
    std::fs::write(&file, serde_json::to_string(&v).unwrap()).unwrap();
    let bad = mnpieri(&["stable", "validate", "--file", f]);
    assert_eq!(bad.status.code(), Some(1), "{}", stdout(&bad));
}

#[test]
fn pieri_and_llt_commands() {
    let o = mnpieri(&["pieri", "[1]", "--k", "1", "--m", "1", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("[1,1]: "));
    assert_eq!(mnpieri(&["llt", "gamma", "[2,2]", "--n", "2", "--m", "1"]).status.code(), Some(0));
    assert_eq!(mnpieri(&["llt", "collapse", "[3,3]", "--n", "3"]).status.code(), Some(0));
    let s = stdout(&mnpieri(&["llt", "series", "[1,1]", "--n", "2", "--vars", "1"]));
    assert_eq!(s.trim(), "x^[1]: -q^{-1/2}t^{1/2}");
}

#[test]
fn acceptance_subcommand_reports_one_line() {
    let o = mnpieri(&["acceptance", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("AC5  PASS"));
    assert_eq!(mnpieri(&["acceptance", "99"]).status.code(), Some(2));
}
