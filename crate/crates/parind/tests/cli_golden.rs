//! Golden-file tests: every CLI task has at least one frozen problem
//! file whose output bytes must never drift.

use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &str)] = &[
    ("constituents_a2", "json"),
    ("constituents_b3", "text"),
    ("lattice_a2_full", "text"),
    ("lattice_a2_dot", "dot"),
    ("lattice_b3_chain", "json"),
    ("steinberg_a2", "text"),
    ("adjoint_left_a2", "json"),
    ("adjoint_right_a2_vanish", "text"),
    ("cuspidal_g2", "json"),
    ("irreducible_c3", "text"),
    ("twist_a1xa1", "json"),
    ("geometric_lemma_b2", "text"),
    ("coset_reps_g2", "text"),
    ("double_cosets_a3", "json"),
    ("verify_lemma55_b2", "text"),
    ("verify_all_small", "text"),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn golden_outputs_are_stable() {
    let dir = golden_dir();
    for (stem, format) in CASES {
        let problem = dir.join(format!("{stem}.json"));
        let expected = std::fs::read(dir.join(format!("{stem}.expected")))
            .unwrap_or_else(|e| panic!("{stem}: missing expected file: {e}"));
        let out = Command::new(env!("CARGO_BIN_EXE_parind"))
            .arg("--file")
            .arg(&problem)
            .arg("--format")
            .arg(format)
            .output()
            .expect("binary runs");
        assert!(
            out.status.success(),
            "{stem}: exit {:?}, stderr: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(
            out.stdout,
            expected,
            "{stem}: output drifted from frozen bytes\n--- got ---\n{}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn every_task_is_covered() {
    let tasks: std::collections::BTreeSet<String> = CASES
        .iter()
        .map(|(stem, _)| {
            let text = std::fs::read_to_string(golden_dir().join(format!("{stem}.json")))
                .expect("problem file readable");
            let v: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
            v["task"].as_str().expect("task present").to_string()
        })
        .collect();
    assert_eq!(tasks.len(), 13, "corpus must cover all tasks, got {tasks:?}");
}

#[test]
fn json_reports_round_trip() {
    let dir = golden_dir();
    for (stem, format) in CASES {
        if *format != "json" {
            continue;
        }
        let text = std::fs::read_to_string(dir.join(format!("{stem}.expected"))).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).expect("report parses");
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(text, again, "{stem}: JSON report does not round-trip");
    }
}

#[test]
fn exit_codes_match_error_classes() {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_parind"))
            .args(args)
            .output()
            .expect("binary runs")
    };
    // malformed JSON: exit 2, no partial output
    let tmp = std::env::temp_dir().join("parind_bad.json");
    std::fs::write(&tmp, "{ not json").unwrap();
    let out = run(&["--file", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    // unknown payload field rejected
    let tmp2 = std::env::temp_dir().join("parind_unknown_field.json");
    std::fs::write(
        &tmp2,
        r#"{"cartan": {"type": "A2"}, "task": "cuspidal", "payload": {"P": [], "trivial_on": [], "Q": [], "bogus": 1}}"#,
    )
    .unwrap();
    let out = run(&["--file", tmp2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // infinite type: exit 2
    let out = run(&[
        "constituents",
        "--cartan-matrix",
        "[[2,-2],[-2,2]]",
        "--p",
        "",
        "--trivial-on",
        "",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // semantic violation (Q outside P(sigma)): exit 3
    let out = run(&[
        "cuspidal",
        "--cartan-type",
        "A2",
        "--p",
        "",
        "--trivial-on",
        "a1",
        "--q",
        "a2",
    ]);
    assert_eq!(out.status.code(), Some(3));

    // guard tripped via PARIND_GUARD_WEYL: exit 4
    let out = Command::new(env!("CARGO_BIN_EXE_parind"))
        .args(["weyl:coset-reps", "--cartan-type", "A3", "--q", ""])
        .env("PARIND_GUARD_WEYL", "5")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(4));

    // dot format rejected off the lattice tasks
    let out = run(&[
        "cuspidal",
        "--cartan-type",
        "A2",
        "--p",
        "",
        "--trivial-on",
        "a1",
        "--q",
        "",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
