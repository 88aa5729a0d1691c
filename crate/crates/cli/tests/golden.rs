//! End-to-end runs of the binary: the documented examples, exit codes,
//! JSON schema stability, and byte-identical reruns.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .display()
        .to_string()
}

fn qtilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtilt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn info_reports_the_dimension() {
    let out = qtilt(&["info", &fixture("aus2.alg")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dimension: 5"), "{text}");
    assert!(text.contains("vertices: 3"), "{text}");
    assert!(text.contains("arrows: 2"), "{text}");
}

#[test]
fn ext_prints_the_bare_dimension() {
    let out = qtilt(&[
        "ext",
        &fixture("aus2.alg"),
        "-i",
        "2",
        "-M",
        "S(1)",
        "-N",
        "S(3)",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn precluster_check_exits_zero_on_the_documented_example() {
    let out = qtilt(&[
        "check",
        "precluster",
        &fixture("pi3.alg"),
        "-d",
        "2",
        "--modules",
        "P(*),S(1),S(3)",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn failing_check_exits_one_with_witnesses() {
    let out = qtilt(&[
        "check",
        "boundary-lemma",
        &fixture("aus2.alg"),
        "-e",
        "2",
        "-M",
        "S(3)",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("L2-at-e"), "{text}");
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn bad_input_exits_two() {
    let out = qtilt(&["ext", &fixture("aus2.alg"), "-M", "S(9)", "-N", "S(1)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown vertex"), "{err}");
}

#[test]
fn dot_export_has_the_expected_shape() {
    let out = qtilt(&["export-dot", &fixture("aus2.alg")]);
    assert!(out.status.success());
    let text = stdout(&out);
    let nodes = text.lines().filter(|l| l.trim().ends_with("\";")).count();
    let solid = text.lines().filter(|l| l.contains("label=")).count();
    let dashed = text.lines().filter(|l| l.contains("dashed")).count();
    assert_eq!((nodes, solid, dashed), (3, 2, 1), "{text}");
}

#[test]
fn json_envelope_is_schema_stable_and_deterministic() {
    let args = [
        "check",
        "theorem1",
        &fixture("aus2.alg"),
        "-e",
        "2",
        "-d",
        "2",
        "--modules",
        "S(1),S(3),P(*)",
        "--format",
        "json",
        "--seed",
        "7",
    ];
    let first = qtilt(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = qtilt(&args);
    assert_eq!(first.stdout, second.stdout, "reruns must be byte-identical");

    let raw = stdout(&first);
    let field_positions: Vec<usize> =
        ["\"command\"", "\"inputs\"", "\"verdict\"", "\"conditions\"", "\"output\"", "\"timings\""]
            .iter()
            .map(|f| raw.find(f).unwrap_or_else(|| panic!("missing {f}")))
            .collect();
    assert!(
        field_positions.windows(2).all(|w| w[0] < w[1]),
        "envelope fields out of order in {raw}"
    );

    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["inputs"]["seed"], 7);
    assert!(v["timings"].is_null());
    let conds = v["conditions"].as_array().unwrap();
    assert!(conds.iter().any(|c| c["id"] == "T1-i"));
    assert!(conds.iter().any(|c| c["id"] == "T1-conclusion"));
    for c in conds {
        let mut ckeys: Vec<&String> = c.as_object().unwrap().keys().collect();
        ckeys.sort();
        assert_eq!(ckeys, ["detail", "id", "status", "witnesses"]);
    }
}

#[test]
fn quotient_round_trips_through_the_written_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("quo.alg");
    let out = qtilt(&[
        "quotient",
        &fixture("hnak.alg"),
        "-e",
        "04",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));

    let ambient_text =
        std::fs::read_to_string(fixture("hnak.alg")).unwrap();
    let ambient = std::sync::Arc::new(
        qtilt_core::textfmt::build_from_text(
            &ambient_text,
            qtilt_core::algebra::DEFAULT_WORD_CAP,
        )
        .unwrap(),
    );
    let e = qtilt_core::algebra::VertexIdempotent::from_names(
        &ambient.quiver,
        &["04"],
    )
    .unwrap();
    let in_memory = ambient.quotient_by_idempotent_ideal(&e).unwrap();

    let reloaded_text = std::fs::read_to_string(&out_path).unwrap();
    let reloaded = qtilt_core::textfmt::build_from_text(
        &reloaded_text,
        qtilt_core::algebra::DEFAULT_WORD_CAP,
    )
    .unwrap();
    assert_eq!(reloaded.fingerprint(), in_memory.algebra.fingerprint());
    assert_eq!(reloaded.dim(), in_memory.algebra.dim());
}

#[test]
fn cluster_check_over_a_prime_field_names_the_excluded_simple() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("aus2_f2.alg");
    std::fs::write(
        &path,
        "field F 2\nvertex 1\nvertex 2\nvertex 3\n\
         arrow a : 1 -> 2\narrow b : 2 -> 3\nrel b*a\n",
    )
    .unwrap();
    let out = qtilt(&[
        "check",
        "cluster",
        path.to_str().unwrap(),
        "-d",
        "2",
        "--modules",
        "P(*),S(1),S(3)",
        "--bound",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("S(2)"), "{text}");
    assert!(text.contains("Ext^1"), "{text}");
}

#[test]
fn construct_subsets_matches_the_block_example() {
    let out = qtilt(&[
        "construct",
        "subsets",
        "--n",
        "6",
        "--sets",
        "135,136,146",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertex 135"), "{text}");
    assert!(text.contains("rel a3_136*a5_135"), "{text}");
}
