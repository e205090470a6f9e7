//! End-to-end tests against the built binary: exit codes, golden output,
//! export round-trips, byte stability.

use std::process::{Command, Output};

use chaintope::{moment_hrep, HalfspaceSystem, LengthVector};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chaintope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn classify_worked_example() {
    let v = stdout_json(&["classify", "1,2,2,5,3"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["short_code_display"], "<{1,3,5}>");
    assert_eq!(v["short_code"], serde_json::json!([[1, 3, 5]]));
    assert_eq!(v["class"], "P5xI");
    assert_eq!(v["aspherical"], true);
    assert_eq!(v["dim"], 3);
}

#[test]
fn shortcode_normalizes_and_reports_permutation() {
    let v = stdout_json(&["shortcode", "2,1,2,5,3"]);
    assert_eq!(v["normalized"], serde_json::json!(["1", "2", "2", "5", "3"]));
    assert_eq!(v["permutation"], serde_json::json!([2, 1, 3, 4]));
    assert_eq!(v["short_code_display"], "<{1,3,5}>");
}

#[test]
fn exit_codes() {
    let non_generic = run(&["shortcode", "1,1,1,1"]);
    assert_eq!(non_generic.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&non_generic.stderr).contains("not generic"));

    let empty = run(&["polytope", "1,1,1,10"]);
    assert_eq!(empty.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&empty.stderr).contains("empty"));

    assert_eq!(run(&["shortcode", "1,oops,3"]).status.code(), Some(4));
    assert_eq!(run(&["shortcode", "1,-2,3"]).status.code(), Some(4));
    assert_eq!(run(&["nonsense"]).status.code(), Some(4));
    assert_eq!(run(&[]).status.code(), Some(4));

    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("selftest"));
}

#[test]
fn ine_export_reparses_to_the_same_system() {
    let out = run(&["polytope", "1,1,3,3,3", "--export", "ine"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed = HalfspaceSystem::parse_ine(&text).unwrap();
    let alpha = LengthVector::from_ints(&[1, 1, 3, 3, 3]).unwrap();
    let expect = moment_hrep(&alpha).unwrap().facet_subsystem();
    assert_eq!(parsed, expect);
    assert_eq!(parsed.to_ine(), text);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["classify", "1,3,3,3,1"],
        vec!["polytope", "1,1,3,3,3"],
        vec!["smallcover", "2,2,2,1"],
        vec!["panina", "1,1,1,1,1", "--mode", "cyclic"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn charmatrix_golden_examples() {
    let cases = [
        ("1,2,2,2", serde_json::json!([[1, 0, 1, 1], [0, 1, 0, 1]])),
        ("1,1,2,1", serde_json::json!([[1, 0, 1, 1, 0], [0, 1, 0, 1, 1]])),
        ("2,2,2,1", serde_json::json!([[1, 1, 0, 1, 1, 0], [0, 1, 1, 0, 1, 1]])),
    ];
    for (vector, expect) in cases {
        let v = stdout_json(&["charmatrix", vector]);
        assert_eq!(v["characteristic_matrix"], expect, "vector {vector}");
        assert_eq!(v["verified"], true);
    }
}

#[test]
fn smallcover_reports_cells_and_bott() {
    let v = stdout_json(&["smallcover", "1,1,3,3,3"]);
    assert_eq!(v["cells"], serde_json::json!([8, 24, 24, 8]));
    assert_eq!(v["euler"], 0);
    assert_eq!(
        v["bott"]["bott_matrix"],
        serde_json::json!([[0, 0, 1], [0, 0, 1], [0, 0, 0]])
    );
    // non-cube codes carry no Bott data
    let p5 = stdout_json(&["smallcover", "1,2,2,5,3"]);
    assert_eq!(p5["bott"], serde_json::Value::Null);
}

#[test]
fn panina_census_output() {
    let v = stdout_json(&["panina", "1,1,1,1,1"]);
    assert_eq!(v["mode"], "bicyclic");
    assert_eq!(v["cell_counts"], serde_json::json!([15, 30, 12]));
    assert_eq!(v["euler"], -3);
    assert_eq!(v["top_cells"]["count"], 12);
    assert_eq!(v["top_cells"]["facet_count_histogram"]["5"], 12);

    let cyclic = stdout_json(&["panina", "1,1,1,1,1", "--mode", "cyclic"]);
    assert_eq!(cyclic["cell_counts"], serde_json::json!([30, 60, 24]));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("selftest: all checks passed"));
    assert!(!text.contains("FAILED"));
}

#[test]
fn env_var_overrides_enumeration_cap() {
    // 26 entries: over the default cap of 24
    let big = format!("{},26", vec!["1"; 25].join(","));
    let refused = run(&["shortcode", &big]);
    assert_eq!(refused.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("CHAINTOPE_MAX_M"));

    let allowed = Command::new(env!("CARGO_BIN_EXE_chaintope"))
        .args(["shortcode", &big])
        .env("CHAINTOPE_MAX_M", "26")
        .output()
        .expect("binary runs");
    // anchor heavier than all sides: the code is empty but computable
    assert!(allowed.status.success());
    let v: serde_json::Value = serde_json::from_slice(&allowed.stdout).unwrap();
    assert_eq!(v["short_code"], serde_json::json!([]));
}

#[test]
fn timing_flag_adds_field() {
    let v = stdout_json(&["shortcode", "1,1,3,3,3", "--timing"]);
    assert!(v.get("timing_ms").is_some());
    let plain = stdout_json(&["shortcode", "1,1,3,3,3"]);
    assert!(plain.get("timing_ms").is_none());
}
