use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use semilab::algebra::{a21, chain_semilattice, to_sgp};
use serde_json::Value;
use tempfile::TempDir;

fn semilab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semilab")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad json ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path: PathBuf = dir.join(name);
    fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn fixtures() -> (TempDir, String, String) {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a21.sgp", &to_sgp(&a21()));
    let c = write(dir.path(), "chain2.sgp", &to_sgp(&chain_semilattice(2).unwrap()));
    (dir, a, c)
}

#[test]
fn a21_fails_class_b() {
    let (_dir, a, _) = fixtures();
    let out = semilab(&["check", &a, "--id", "eq15.B"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "check");
    assert_eq!(r["result"]["satisfied"], false);
}

#[test]
fn check_reads_eqs_files() {
    let (dir, a, _) = fixtures();
    let eqs = write(dir.path(), "reg.eqs", "# regular\nforall a exists x : a = a x a\n");
    let r = report(&semilab(&["check", &a, &eqs]));
    assert_eq!(r["result"]["satisfied"], true);
    assert_eq!(r["inputs"]["eqs"], eqs);
}

#[test]
fn missing_eqs_exits_two() {
    let (dir, a, _) = fixtures();
    let missing = dir.path().join("missing.eqs").display().to_string();
    let out = semilab(&["check", &a, &missing]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.eqs"));
}

#[test]
fn malformed_inputs_exit_two() {
    let (dir, a, _) = fixtures();
    let bad = write(dir.path(), "bad.sgp", "2\n0 1\n0 1\n");
    assert_eq!(semilab(&["classify", &bad]).status.code(), Some(0));
    let bad = write(dir.path(), "bad.sgp", "2\n0 1\n1 0 0\n");
    assert_eq!(semilab(&["classify", &bad]).status.code(), Some(2));
    let eqs = write(dir.path(), "bad.eqs", "forall a : a =\n");
    assert_eq!(semilab(&["check", &a, &eqs]).status.code(), Some(2));
    assert_eq!(semilab(&["check", &a, "--id", "no.such"]).status.code(), Some(2));
    assert_eq!(semilab(&["check", &a]).status.code(), Some(2));
    assert_eq!(semilab(&[]).status.code(), Some(2));
}

#[test]
fn trace_replays_counterexample() {
    let (_dir, _, c) = fixtures();
    let r = report(&semilab(&["check", &c, "--id", "eq3.lg", "--trace"]));
    let result = &r["result"];
    assert_eq!(result["satisfied"], false);
    assert!(result["counterexample"].is_array());
    assert_eq!(result["trace"]["pinned"], result["counterexample"]);
    assert_eq!(result["trace"]["replayed_satisfied"], false);
}

#[test]
fn thm210_battery_is_clean() {
    let out = semilab(&["verify", "--battery", "thm2.10", "--max-order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["checked"], 218);
    assert_eq!(r["result"]["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_uses_corpus_directory() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().display().to_string();
    let out = semilab(&["--jobs", "2", "verify", "--battery", "green", "--max-order", "3", "--corpus", &corpus]);
    assert_eq!(out.status.code(), Some(0));
    let index = fs::read_to_string(dir.path().join("index.txt")).unwrap();
    assert!(index.contains("order=3 mode=iso count=24"));
    // second run reads the saved files
    let again = semilab(&["verify", "--battery", "green", "--max-order", "3", "--corpus", &corpus]);
    assert_eq!(report(&again)["result"]["checked"], report(&out)["result"]["checked"]);
    assert_eq!(semilab(&["verify", "--battery", "nope", "--max-order", "2"]).status.code(), Some(2));
}

#[test]
fn enumerate_writes_corpus() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("c");
    let out = out_dir.display().to_string();
    let r = report(&semilab(&["enumerate", "--order", "3", "--mode", "equiv", "--out", &out]));
    assert_eq!(r["result"]["count"], 18);
    let files = fs::read_dir(&out_dir)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "sgp"))
        .count();
    assert_eq!(files, 18);
    assert_eq!(semilab(&["enumerate", "--order", "9", "--out", &out]).status.code(), Some(2));
}

#[test]
fn classify_a21() {
    let (_dir, a, _) = fixtures();
    let out = semilab(&["classify", &a]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["order"], 6);
    assert_eq!(r["result"]["classes"]["regular"], true);
    assert_eq!(r["result"]["classes"]["class_b"], false);
    assert!(r["result"]["green"]["invariant_violation"].is_null());
}

#[test]
fn epsc_worked_example() {
    let (dir, _, c) = fixtures();
    let ws = write(dir.path(), "w.ws", "# top is 1, bottom is 0\nx1 = s1 A1\nx2 = A2 s1\nx3 = s0\n");
    let out = semilab(&["epsc", &c, "--id", "sec3.2.eps", "--script", &ws]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["passed"], true);
    assert_eq!(r["result"]["epsilon_c_holds"], true);
    assert_eq!(r["result"]["epsilon_c"], "exists xs1, xs0 : xs1 xs0 = xs0 xs1 & xs0 = xs0 xs0");

    let bad = write(dir.path(), "bad.ws", "x1 = A2\nx2 = A2 s1\nx3 = s0\n");
    let out = semilab(&["epsc", &c, "--id", "sec3.2.eps", "--script", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["result"]["passed"], false);
}

#[test]
fn epsc_search() {
    let (_dir, _, c) = fixtures();
    let r = report(&semilab(&["epsc", &c, "--id", "sec3.2.eps", "--search"]));
    assert_eq!(r["result"]["found"], true);
    assert!(r["result"]["script"].as_str().unwrap().contains("x3 = "));
}

#[test]
fn allsgp_verdicts() {
    let dir = TempDir::new().unwrap();
    let eqs = write(dir.path(), "comm.eqs", "forall a exists x : a x = x a\n");
    let r = report(&semilab(&["allsgp", &eqs]));
    assert_eq!(r["result"]["verdict"]["outcome"], "Holds");
    assert_eq!(r["result"]["verdict"]["witness"]["assignments"][0]["text"], "A1");
    let r = report(&semilab(&["allsgp", "--id", "exist.idem"]));
    assert_eq!(r["result"]["verdict"]["evidence"]["kind"], "ParikhInfeasible");
    let r = report(&semilab(&["allsgp", "--id", "eq22.alt", "--max-order", "2"]));
    let evidence = &r["result"]["verdict"]["evidence"];
    assert_eq!(evidence["kind"], "FiniteCounterexample");
    assert_eq!(evidence["order"], 2);
}

#[test]
fn quotients_of_chain() {
    let (_dir, _, c) = fixtures();
    let r = report(&semilab(&["quotients", &c]));
    assert_eq!(r["result"]["count"], 2);
    assert_eq!(r["result"]["quotients"][0]["order"], 2);
    assert_eq!(r["result"]["quotients"][1]["order"], 1);
}

#[test]
fn catalog_listing() {
    let r = report(&semilab(&["catalog", "--list"]));
    let ids: Vec<&str> = r["result"].as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"eq15.B") && ids.contains(&"sec3.2.eps"));
    let r = report(&semilab(&["catalog", "--id", "eq22.alt"]));
    assert_eq!(r["result"]["desugared"], "forall a exists x forall b : a x b = a b x");
}

#[test]
fn output_is_deterministic() {
    let (_dir, a, _) = fixtures();
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    for args in [vec!["classify", &a], vec!["check", &a, "--id", "eq16.V", "--trace"], vec!["quotients", &a]] {
        let one = strip(report(&semilab(&args)));
        let two = strip(report(&semilab(&args)));
        assert_eq!(one, two);
    }
}
