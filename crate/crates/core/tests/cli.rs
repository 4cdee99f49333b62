use std::fs;
use std::path::PathBuf;
use std::process::Command;

use omega_dontcare::cli::run;
use omega_dontcare::io::parse_native;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("omega-dc-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn omega_dc(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("omega-dc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn optimize_four_priority_dpa() {
    let (code, out, _) = omega_dc(&["optimize-priorities", &data("four_priority.aut"), "--dontcare", &data("eventually_a.aut")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("priorities: 4 -> 3\n"), "{out}");
    let written = scratch("four_priority_opt.aut");
    let w = written.to_str().unwrap();
    let (code, out, _) = omega_dc(&["optimize-priorities", &data("four_priority.aut"), "--dontcare", &data("eventually_a.aut"), "-o", w]);
    assert_eq!(code, 0);
    assert_eq!(out, "priorities: 4 -> 3\n");
    let opt = parse_native(&fs::read_to_string(&written).unwrap()).unwrap();
    assert_eq!(opt.distinct_priorities(), 3);
}

#[test]
fn check_equiv_exit_codes() {
    let (code, out, _) = omega_dc(&["check-equiv", &data("dba_a.aut"), &data("dba_b.aut"), "--dontcare", &data("eventually_b_abc.aut")]);
    assert_eq!((code, out.as_str()), (0, "equivalent\n"));
    let (code, out, _) = omega_dc(&["check-equiv", &data("dba_a.aut"), &data("dba_b.aut")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("counterexample: "), "{out}");
}

#[test]
fn trivial_rc() {
    assert_eq!(omega_dc(&["check-trivial-rc", &data("learning_dontcare.aut")]).1, "yes\n");
    let (code, out, _) = omega_dc(&["check-trivial-rc", &data("dba_a.aut")]);
    assert_eq!((code, out.as_str()), (1, "no\n"));
}

#[test]
fn learn_learning_trace() {
    let (code, out, _) = omega_dc(&[
        "learn",
        "--target",
        &data("learning_target.aut"),
        "--dontcare",
        &data("learning_dontcare.aut"),
        "--script",
        "\"(a)\",\"(ab)\"",
        "--trace",
    ]);
    assert_eq!(code, 0);
    let trace = fs::read_to_string(data("learning_trace.txt")).unwrap();
    assert!(out.starts_with(&trace), "{out}");
    for i in 1..=3 {
        let table = fs::read_to_string(data(&format!("learning_table{i}.txt"))).unwrap();
        assert!(out.contains(&table));
    }
    assert!(out.contains("learned: 5 states"));
}

#[test]
fn minimize_targets() {
    let (code, out, _) = omega_dc(&["minimize", &data("dba_a.aut"), "--target", "buchi"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("states: 3 -> 3\n"));
    // the four-priority DPA needs three priorities, so no Büchi automaton on its quotient
    let (code, out, _) = omega_dc(&["minimize", &data("four_priority.aut"), "--dontcare", &data("eventually_a.aut"), "--target", "buchi"]);
    assert_eq!((code, out.as_str()), (2, "not in class\n"));
}

#[test]
fn minimize_wdba_needs_weak_input() {
    let (code, _, err) = omega_dc(&["minimize-wdba", &data("dba_a.aut")]);
    assert_eq!(code, 65);
    assert!(err.contains("weak"), "{err}");
    let (code, out, _) = omega_dc(&["minimize-wdba", &data("learning_target.aut"), "--dontcare", &data("learning_dontcare.aut")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("states: 9 -> 5\n"), "{out}");
}

#[test]
fn reduce_and_extract() {
    let prefix = scratch("star_").to_string_lossy().into_owned();
    let (code, out, _) = omega_dc(&["reduce", "--graph", &data("star.graph"), "--out-prefix", &prefix]);
    assert_eq!(code, 0);
    assert_eq!(out, "A_G: 4 states, D_G: 10 states\n");
    assert_eq!(fs::read_to_string(format!("{prefix}A.aut")).unwrap(), fs::read_to_string(data("star_A.aut")).unwrap());
    let (code, out, _) = omega_dc(&["extract-coloring", &data("star_col.aut"), "--graph", &data("star.graph")]);
    assert_eq!((code, out.as_str()), (0, "v1=1\nv2=2\nv3=2\n"));
}

#[test]
fn malformed_and_repaired_input() {
    let (code, _, err) = omega_dc(&["check-trivial-rc", &data("four_priority_partial.aut")]);
    assert_eq!(code, 64);
    assert!(err.contains("(3, b)"), "{err}");
    let (code, _, _) = omega_dc(&["--complete-with-selfloop", "check-trivial-rc", &data("four_priority_partial.aut")]);
    assert_eq!(code, 1);
    let (code, _, err) = omega_dc(&["check-trivial-rc", "/nonexistent/file.aut"]);
    assert_eq!(code, 64);
    assert!(err.contains("cannot read"));
    assert_eq!(omega_dc(&["frobnicate"]).0, 64);
}

#[test]
fn hoa_output() {
    let (code, out, _) = omega_dc(&["--format", "hoa", "optimize-priorities", &data("four_priority.aut"), "--dontcare", &data("eventually_a.aut")]);
    assert_eq!(code, 0);
    assert!(out.contains("acc-name: parity max even 3"), "{out}");
}

#[test]
fn binary_exit_code() {
    let status = Command::new(env!("CARGO_BIN_EXE_omega-dc"))
        .args(["check-trivial-rc", &data("dba_a.aut")])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&status.stdout), "no\n");
}

#[test]
fn bogus_script_is_reported_on_stderr() {
    let (code, out, err) = omega_dc(&[
        "learn",
        "--target",
        &data("learning_target.aut"),
        "--dontcare",
        &data("learning_dontcare.aut"),
        "--script",
        "(b)",
    ]);
    assert_eq!(code, 0);
    assert!(err.contains("(b) is not genuine"), "{err}");
    assert!(out.starts_with("learned: 5 states"));
}
