//! Acceptance suite: eight criteria, each printed as a single pass/fail
//! line. Criteria 1-7 run the exhaustive invariant checks over every
//! rank <= 3 system; criterion 8 is the golden-file CLI determinism
//! check (see cli_golden.rs), represented here by a re-run comparison.

use std::process::Command;
use std::time::Instant;

use parind::rootsys::{build_root_system, CartanDatum, CartanType, RootSystem};
use parind::verify::{self, CheckResult};
use parind::weyl::WeylGroup;

const SYSTEMS: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"];

fn systems() -> Vec<(String, RootSystem, WeylGroup)> {
    SYSTEMS
        .iter()
        .map(|name| {
            let rs = build_root_system(CartanDatum::of_type(&CartanType::parse(name).unwrap()))
                .unwrap();
            let group = WeylGroup::generate(&rs).unwrap();
            (name.to_string(), rs, group)
        })
        .collect()
}

fn report(criterion: &str, started: Instant, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS {criterion} ({:.2?})", started.elapsed());
    } else {
        println!("FAIL {criterion}: {}", failures.join("; "));
        panic!("{criterion} failed");
    }
}

fn run_over_systems(criterion: &str, check: impl Fn(&RootSystem, &WeylGroup) -> Vec<CheckResult>) {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (name, rs, group) in systems() {
        for c in check(&rs, &group) {
            if !c.passed {
                failures.push(format!("{name} {}: {}", c.name, c.detail));
            }
        }
    }
    report(criterion, started, &failures);
}

#[test]
fn criterion_1_constituent_count_law() {
    run_over_systems("criterion 1: constituent count law", |rs, _| {
        vec![verify::check_constituent_count(rs)]
    });
}

#[test]
fn criterion_2_lattice_theorem() {
    run_over_systems("criterion 2: lattice sizes vs brute-force oracle", |rs, _| {
        vec![verify::check_lattice_sizes(rs)]
    });
}

#[test]
fn criterion_3_irreducibility_criterion() {
    run_over_systems("criterion 3: irreducibility iff lattice size 2", |rs, _| {
        vec![verify::check_irreducibility_criterion(rs)]
    });
}

#[test]
fn criterion_4_witness_roots() {
    run_over_systems("criterion 4: witness roots exhaustive", |_, group| {
        vec![verify::check_lemma55(group), verify::check_geometric_lemma(group)]
    });
}

#[test]
fn criterion_5_adjoint_rules() {
    run_over_systems("criterion 5: adjoint rules consistency", |rs, _| {
        vec![
            verify::check_adjoint_identity(rs),
            verify::check_jacquet_transitivity(rs),
            verify::check_cuspidality_cross(rs),
        ]
    });
}

#[test]
fn criterion_6_bruhat_engine() {
    run_over_systems("criterion 6: Bruhat engine", |_, group| {
        vec![
            verify::check_bruhat_axioms(group),
            verify::check_w0_reversal(group),
            verify::check_coset_count_law(group),
            verify::check_double_coset_partition(group),
        ]
    });
}

#[test]
fn criterion_7_minimalization_invariance() {
    run_over_systems("criterion 7: minimalization invariance", |rs, _| {
        vec![verify::check_minimalization_invariance(rs)]
    });
}

#[test]
fn criterion_8_cli_determinism() {
    // two runs of every golden problem file must produce identical bytes;
    // byte equality against the frozen outputs is asserted in cli_golden.rs
    let started = Instant::now();
    let mut failures = Vec::new();
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut cases: Vec<_> = std::fs::read_dir(&dir)
        .expect("golden corpus present")
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    cases.sort();
    assert!(cases.len() >= 12, "golden corpus must cover every task");
    for case in &cases {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_parind"))
                .arg("--file")
                .arg(case)
                .output()
                .expect("binary runs")
        };
        let a = run();
        let b = run();
        if a.stdout != b.stdout || a.status != b.status {
            failures.push(format!("{} is not deterministic", case.display()));
        }
    }
    report("criterion 8: CLI determinism", started, &failures);
}
