//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line. All comparisons are exact integer equalities; there are
//! no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines on success.

use std::process::Command;
use std::time::Instant;

use fatpoints_cli::suites::{run_suite, CaseResult, Status};

const SEED: u64 = 42;

fn report(criterion: &str, description: &str, pass: bool, details: String, started: Instant) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} - {description} ({details}; {:.1}s)",
        started.elapsed().as_secs_f64()
    );
    assert!(pass, "criterion {criterion} failed: {details}");
}

fn all_pass(results: &[CaseResult]) -> (bool, String) {
    let passed = results.iter().filter(|r| r.status == Status::Pass).count();
    let failed: Vec<&CaseResult> = results.iter().filter(|r| r.status == Status::Fail).collect();
    let skipped = results.iter().filter(|r| r.status == Status::Skip).count();
    if failed.is_empty() {
        (true, format!("{passed} cases passed, {skipped} skipped"))
    } else {
        let names: Vec<String> = failed
            .iter()
            .map(|r| {
                format!(
                    "{} (expected {:?}, computed {:?}{})",
                    r.case,
                    r.expected,
                    r.computed,
                    r.note.as_deref().map(|n| format!("; {n}")).unwrap_or_default()
                )
            })
            .collect();
        (false, format!("{passed} passed but failures: {}", names.join(" | ")))
    }
}

/// Criterion 1: every constructible configuration of the nine-point
/// classification reproduces its table row exactly, and the two ruled-out
/// difference functions never appear across 20 random seeds.
#[test]
fn criterion_1_table_replay() {
    let start = Instant::now();
    let results = run_suite("table3", SEED, 7).expect("suite runs");
    let config_cases = results
        .iter()
        .filter(|r| !r.case.contains("negative"))
        .count();
    let negative_cases = results
        .iter()
        .filter(|r| r.case.contains("negative"))
        .count();
    let (ok, mut details) = all_pass(&results);
    let enough = config_cases >= 15 && negative_cases == 2;
    if !enough {
        details = format!(
            "only {config_cases} configurations / {negative_cases} negative checks; {details}"
        );
    }
    report(
        "1",
        "table replay for nine double points, all variants plus negatives",
        ok && enough,
        details,
        start,
    );
}

/// Criterion 2: complete intersections on a cubic for t = 3..7, doubled and
/// reduced shapes both exact.
#[test]
fn criterion_2_complete_intersections() {
    let start = Instant::now();
    let results = run_suite("ci", SEED, 7).expect("suite runs");
    let (ok, details) = all_pass(&results);
    let enough = results.len() == 5;
    report(
        "2",
        "doubled complete intersections match the closed form for t = 3..7",
        ok && enough,
        details,
        start,
    );
}

/// Criterion 3: smooth-cubic doubling for two values of t per delta, plus
/// the 2-torsion branch.
#[test]
fn criterion_3_smooth_cubic() {
    let start = Instant::now();
    let results = run_suite("smooth-cubic", SEED, 7).expect("suite runs");
    let (ok, details) = all_pass(&results);
    let has_bii = results
        .iter()
        .any(|r| r.case.ends_with("b-ii") && r.status == Status::Pass);
    report(
        "3",
        "points on a smooth cubic match branches a/b-i, 2-torsion matches b-ii",
        ok && has_bii,
        details,
        start,
    );
}

/// Criterion 4: nodal cubic with the node among the points, t in {4, 5},
/// all deltas, both delta = 1 branches.
#[test]
fn criterion_4_singular_cubic() {
    let start = Instant::now();
    let results = run_suite("singular-cubic", SEED, 7).expect("suite runs");
    let (ok, details) = all_pass(&results);
    let ci_branches = results
        .iter()
        .filter(|r| r.case.contains("ci-rest") && r.status == Status::Pass)
        .count();
    report(
        "4",
        "node-in-support doubling matches the range tables, both delta=1 branches",
        ok && ci_branches == 2,
        details,
        start,
    );
}

/// Criterion 5: evenly distributed points for n in 9..15, m in 1..3 on all
/// four curve kinds, with the torsion corrections of lambda in {1, 2, 3}.
#[test]
fn criterion_5_uniform_counting() {
    let start = Instant::now();
    let results = run_suite("uniform", SEED, 7).expect("suite runs");
    let counting: Vec<&CaseResult> = results
        .iter()
        .filter(|r| !r.case.contains("singular-support"))
        .collect();
    let failed: Vec<&&CaseResult> = counting
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    let torsion_cases = counting
        .iter()
        .filter(|r| r.case.contains("torsion.lambda") && r.status == Status::Pass)
        .count();
    let ok = failed.is_empty() && counting.len() >= 80 && torsion_cases == 9;
    let details = if failed.is_empty() {
        format!(
            "{} counting cases passed, {} torsion cases",
            counting.len(),
            torsion_cases
        )
    } else {
        format!(
            "failures: {}",
            failed.iter().map(|r| r.case.clone()).collect::<Vec<_>>().join(", ")
        )
    };
    report(
        "5",
        "uniform counting on smooth/nodal/conic+line/three-lines with torsion",
        ok,
        details,
        start,
    );
}

/// Criterion 6: h^0 of the singular-support classes across all four ranges
/// including the boundary degrees, n in {10, 12}, m in {1, 2}.
#[test]
fn criterion_6_singular_support() {
    let start = Instant::now();
    let results = run_suite("uniform", SEED, 7).expect("suite runs");
    let support: Vec<&CaseResult> = results
        .iter()
        .filter(|r| r.case.contains("singular-support"))
        .collect();
    let ok = support.len() == 4 && support.iter().all(|r| r.status == Status::Pass);
    let details = format!(
        "{} of {} singular-support range checks passed",
        support.iter().filter(|r| r.status == Status::Pass).count(),
        support.len()
    );
    report(
        "6",
        "singular-support h^0 ranges match brute force at every degree",
        ok,
        details,
        start,
    );
}

/// Criterion 7: the property suites (degree sum, regularity doubling bound,
/// Davis conservation and geometry, chi parity/bilinearity, field
/// independence).
#[test]
fn criterion_7_property_suites() {
    let start = Instant::now();
    let results = run_suite("invariants", SEED, 7).expect("suite runs");
    let (ok, details) = all_pass(&results);
    let expected_checks = [
        "invariants.degree-sum",
        "invariants.regularity-bound",
        "invariants.davis",
        "invariants.davis-geometry",
        "invariants.chi",
        "invariants.field-independence",
    ];
    let complete = expected_checks
        .iter()
        .all(|name| results.iter().any(|r| r.case == *name));
    report(
        "7",
        "degree-sum, regularity bound, Davis, chi, field-independence properties",
        ok && complete,
        details,
        start,
    );
}

/// Criterion 8: `verify all --seed 42` exits 0 and reruns byte-identically.
#[test]
fn criterion_8_end_to_end_pipeline() {
    let start = Instant::now();
    let exe = env!("CARGO_BIN_EXE_fatpoints");
    let run = || {
        Command::new(exe)
            .args(["verify", "all", "--seed", "42"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    let ok = first.status.success()
        && second.status.success()
        && first.stdout == second.stdout
        && !first.stdout.is_empty();
    let details = format!(
        "exit {:?}, {} bytes of report, rerun identical: {}",
        first.status.code(),
        first.stdout.len(),
        first.stdout == second.stdout
    );
    report(
        "8",
        "verify all --seed 42 exits 0 with a byte-identical rerun",
        ok,
        details,
        start,
    );
}
