use std::io::Write;
use std::process::{Command, Output};

use coadjoint::sweep::{run_sweep, Fault, Property, SweepConfig};
use coadjoint_core::int;
use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coadjoint")).args(args).output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn su3_three_halves_omega1() {
    let v = ok_json(&["orbit", "info", "SU(3)", "--weight", "3/2,0", "--basis", "fundamental"]);
    assert_eq!(v["admissible"], true);
    assert_eq!(v["integral"], false);
    assert_eq!(v["face"], "{2}");
    assert_eq!(v["qspin"], json!({"label": "1,1", "sign": 1}));
    assert_eq!(v["shift"], "1,1");
}

#[test]
fn su3_ancestors_of_rho() {
    let v = ok_json(&["ancestors", "SU(3)", "--weight", "1,1", "--basis", "fundamental"]);
    assert_eq!(v["count"], 4);
    let reps: Vec<&str> = v["ancestors"].as_array().unwrap().iter().map(|a| a["rep"].as_str().unwrap()).collect();
    assert_eq!(reps, ["1,1", "0,3/2", "3/2,0", "0,0"]);
}

#[test]
fn u7_shift_is_singular() {
    let v = ok_json(&["orbit", "info", "U(7)", "--weight", "1,0,0,0,0,0,-1"]);
    assert_eq!(v["basis"], "ambient");
    assert_eq!(v["admissible"], true);
    assert_eq!(v["shift"], "1,2,1,0,-1,-2,-1");
    assert_eq!(v["shift_dominant"], "2,1,1,0,-1,-1,-2");
    assert_eq!(v["shift_singular"], true);
    assert_eq!(v["shift_admissible"], false);
    assert_eq!(v["shift_is_dominant"], false);
    assert_eq!(v["qspin"], "zero");
}

#[test]
fn dominant_rep_round_trips() {
    for (g, w) in [("SU(3)", "-1/2,2"), ("G2", "3,-5/2"), ("U(4)", "0,3,-1,1/2"), ("Sp(2)", "-1,1")] {
        let v = ok_json(&["orbit", "info", g, "--weight", w, "--basis", "native"]);
        let rep = v["dominant"].as_str().unwrap().to_string();
        let again = ok_json(&["orbit", "info", g, "--weight", &rep, "--basis", "native"]);
        assert_eq!(again["dominant"], rep.as_str(), "{g}");
        assert_eq!(again["face"], v["face"], "{g}");
    }
}

#[test]
fn group_show_counts() {
    let v = ok_json(&["group", "show", "SU(3)"]);
    assert_eq!(v["weyl_order"], "6");
    assert_eq!(v["faces"], 4);
    assert_eq!(v["sheets"].as_array().unwrap().len(), 3);
    let v = ok_json(&["sheets", "U(4)"]);
    let n = v["sheets"].as_array().unwrap().len();
    assert_eq!(n, 5);
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["orbit", "info", "XX(3)", "--weight", "1"][..],
        &["orbit", "info", "SU(3)", "--weight", "1"],
        &["orbit", "info", "SU(3)", "--weight", "1,x"],
        &["orbit", "info", "SU(3)"],
        &["nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn math_errors_exit_3() {
    let out = run(&["qspin", "SU(3)", "--weight", "1/3,0", "--basis", "fundamental"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "NotAdmissible");
    let out = run(&["ancestors", "SU(3)", "--weight", "1,0", "--basis", "fundamental"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn pretty_output_is_the_same_document() {
    let args = ["qspin", "SU(2)", "--weight", "1,-1"];
    let compact = ok_json(&args);
    let out = run(&["--output", "pretty", "qspin", "SU(2)", "--weight", "1,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() > 1);
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), compact);
    assert_eq!(compact["qspin"], json!({"label": "2", "sign": 1}));
}

#[test]
fn lattice_file_for_so3() {
    // the root lattice of SU(2), i.e. SO(3)
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"basis": [["2"]], "coordinates": "fundamental"}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let v = ok_json(&["orbit", "info", "SU(2)", "--lattice", path, "--weight", "1", "--basis", "native"]);
    assert_eq!(v["integral"], false);
    let w = ok_json(&["orbit", "info", "SU(2)", "--weight", "1", "--basis", "native"]);
    assert_eq!(w["integral"], true);
}

#[test]
fn verify_exits_0_on_a_clean_sweep() {
    let v = ok_json(&["verify", "--groups", "SU(2),SU(3)", "--samples", "50", "--radius", "6", "--threads", "2"]);
    assert_eq!(v["counterexamples"], 0);
    assert_eq!(v["seed"], 42);
}

#[test]
fn injected_fault_is_caught() {
    let config = SweepConfig {
        samples: 100,
        radius_sq: int(12),
        groups: vec!["SU(3)".parse().unwrap(), "Sp(2)".parse().unwrap()],
        properties: vec![Property::ShiftAdmissibility],
        fault: Some(Fault::CorruptLeviRho),
        ..SweepConfig::default()
    };
    let report = run_sweep(&config).unwrap();
    assert!(!report.passed());
    assert!(report.counterexamples > 0);
    let r = report.result(Property::ShiftAdmissibility, "SU(3)").unwrap();
    assert!(!r.failures.is_empty());
}
