//! Drives the real binary: exit codes, diagnostics and JSON stability.

use std::process::Command;

use serde_json::Value;

fn modnorm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_modnorm"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_275_json() {
    let (code, stdout, _) = modnorm(&["classify", "-N", "275", "-W", "25", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["case"], "Good25");
    assert_eq!(v["sigma"]["j"], 2);
    assert_eq!(v["sigma"]["i"], 3);
    assert_eq!(v["sigma"]["matrix"], serde_json::json!([[115, -2], [-275, 5]]));
    assert_eq!(v["quotient"]["order"], 6);
    assert_eq!(v["generators"]["atkin_lehner"], serde_json::json!([1, 11, 25, 275]));
}

#[test]
fn snake_6() {
    let (code, stdout, _) = modnorm(&["snake", "-N", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "[1, 2, 3, 6]");
    let (_, json, _) = modnorm(&["snake", "-N", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["snake"], serde_json::json!([1, 2, 3, 6]));
}

#[test]
fn domain_errors_exit_2() {
    let (code, _, stderr) = modnorm(&["classify", "-N", "36", "-W", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("level divisible by 4 unsupported"));
    assert_eq!(stderr.lines().count(), 1);

    let (code, _, stderr) = modnorm(&["classify", "-N", "30", "-W", "4"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not an exact divisor"));

    let (code, _, _) = modnorm(&["sigma", "-N", "30"]);
    assert_eq!(code, 2);
    let (code, _, _) = modnorm(&["snake", "-N", "45"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["classify"][..],
        &["classify", "-N", "abc"],
        &["snake", "-N", "6", "--format", "yaml"],
        &["nonsense"],
        &[],
    ] {
        let (code, _, _) = modnorm(args);
        assert_eq!(code, 64, "{args:?}");
    }
    assert_eq!(modnorm(&["--help"]).0, 0);
    assert_eq!(modnorm(&["--version"]).0, 0);
}

#[test]
fn verify_and_checks_exit_0() {
    for n_w in [["275", "25"], ["175", "25,7"], ["30", "6"]] {
        let (code, stdout, _) = modnorm(&["verify", "-N", n_w[0], "-W", n_w[1]]);
        assert_eq!(code, 0, "{stdout}");
    }
    let (code, stdout, _) = modnorm(&["paper-checks", "--seed", "7"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn json_round_trips_byte_for_byte() {
    let commands: [&[&str]; 10] = [
        &["classify", "-N", "275", "-W", "25"],
        &["verify", "-N", "175", "-W", "25,7"],
        &["quotient", "-N", "30", "-W", "6"],
        &["snake", "-N", "275"],
        &["orbit", "-N", "6", "-W", "2,3", "--class", "2"],
        &["hyperdist", "--from", "2", "--to", "3/5:1/2"],
        &["gens", "-N", "11"],
        &["sigma", "-N", "175"],
        &["paper-checks"],
        &["xstar", "-N", "35"],
    ];
    for args in commands {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let (code, stdout, stderr) = modnorm(&full);
        assert_eq!(code, 0, "{args:?}: {stderr}");
        let v: Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(v["schema"], 1);
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(again, stdout, "{args:?}");
        assert!(!stdout.contains('.'), "no floats expected in {args:?}");
    }
}

#[test]
fn large_entries_stay_exact() {
    let (_, stdout, _) = modnorm(&["quotient", "-N", "775", "-W", "25", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["order"], 6);
    assert!(v["element_reps"].as_array().unwrap().len() == 6);
}
