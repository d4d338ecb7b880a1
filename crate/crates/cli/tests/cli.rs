use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

fn gorenlab(args: &[&str]) -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gorenlab"));
    c.args(args);
    for v in ["GORENLAB_MAX_STEP_DIM", "GORENLAB_HOM_ENUM_CAP", "GORENLAB_EXT_WINDOW", "GORENLAB_DEPTH"] {
        c.env_remove(v);
    }
    c
}

fn run(args: &[&str]) -> Output {
    gorenlab(args).current_dir(data("lambda")).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&o.stderr)))
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

fn scratch(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn length_one_loop_at_s1_is_refused_by_the_lattice() {
    let o = run(&["loop", "--length", "1", "--class", "PX", "--test", "PX", "S1.mod"]);
    assert_eq!(code(&o), 0);
    let r = &json(&o)["body"]["result"];
    assert_eq!(r["outcome"], "no");
    assert_eq!(r["obstruction"]["kind"], "dimension-lattice", "{r}");
}

#[test]
fn length_two_loop_at_s1_carries_a_certificate() {
    let o = run(&["loop", "--length", "2", "--class", "PX", "S1.mod"]);
    assert_eq!(code(&o), 0);
    let r = &json(&o)["body"]["result"];
    assert_eq!(r["outcome"], "yes");
    assert_eq!(r["certificate"]["length"], 2);
}

#[test]
fn ext_over_dual_numbers() {
    let o = gorenlab(&["ext", "-i", "1", "S1.mod", "S1.mod"]).current_dir(data("dual-numbers")).output().unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["body"]["dim"], 1);
}

#[test]
fn verify_pinned_claim() {
    let o = run(&["verify", "--case", "paper-ex-3.4", "--claim", "omega-trace"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn corpus_run_is_thread_independent() {
    let one = run(&["corpus", "run", "--threads", "1"]);
    let many = run(&["corpus", "run", "--threads", "8"]);
    assert_eq!(code(&one), 0);
    assert_eq!(code(&many), 0);
    assert_eq!(without_timings(json(&one)), without_timings(json(&many)));
}

#[test]
fn saved_report_rechecks_and_tampering_is_caught() {
    let path = scratch("loop-s1.json");
    let p = path.to_str().unwrap();
    let o = run(&["--out", p, "loop", "--length", "2", "--class", "PX", "S1.mod"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["recheck", p])), 0);

    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entry = &mut v["body"]["result"]["certificate"]["monos"][0][0]["entries"][0];
    assert_eq!(*entry, 1);
    *entry = Value::from(0);
    let bad = scratch("loop-s1-tampered.json");
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(code(&run(&["recheck", bad.to_str().unwrap()])), 1);
}

#[test]
fn corpus_report_rechecks() {
    let path = scratch("corpus.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&run(&["--out", p, "corpus", "run"])), 0);
    assert_eq!(code(&run(&["recheck", p])), 0);
}

#[test]
fn input_errors_exit_two() {
    let bad = scratch("broken.mod");
    std::fs::write(&bad, "this is not a module\n").unwrap();
    assert_eq!(code(&run(&["module", "info", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["module", "info", "missing.mod"])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["verify", "--case", "no-such-case", "--claim", "gcd"])), 2);
}

#[test]
fn strict_turns_unknown_into_exit_three() {
    let args = ["--max-step-dim", "1", "--hom-enum-cap", "4", "loop", "--class", "inj", "--length", "3", "--require", "none", "S1S2.mod"];
    let lax = run(&args);
    assert_eq!(code(&lax), 0);
    assert_eq!(json(&lax)["body"]["result"]["outcome"], "unknown");
    let mut strict = vec!["--strict"];
    strict.extend(args);
    assert_eq!(code(&run(&strict)), 3);
}

#[test]
fn environment_overrides_bounds() {
    let o = gorenlab(&["loop", "--length", "2", "--class", "PX", "S1.mod"])
        .current_dir(data("lambda"))
        .env("GORENLAB_MAX_STEP_DIM", "5")
        .env("GORENLAB_EXT_WINDOW", "4")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let b = &json(&o)["bounds"];
    assert_eq!(b["max_step_dim"], 5);
    assert_eq!(b["ext_window"], 4);
    assert_eq!(b["hom_enum_cap"], 1 << 20);
    // the flag wins over the environment
    let o = gorenlab(&["--ext-window", "3", "loop", "--class", "PX", "S1.mod"])
        .current_dir(data("lambda"))
        .env("GORENLAB_EXT_WINDOW", "4")
        .output()
        .unwrap();
    assert_eq!(json(&o)["bounds"]["ext_window"], 3);
}

#[test]
fn algebra_audit_passes_on_lambda() {
    let o = run(&["algebra", "check", "Lambda.alg"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["body"]["kind"], "algebra-check");
}
