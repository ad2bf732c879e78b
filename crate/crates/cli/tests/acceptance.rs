//! Acceptance gate: runs every criterion at its stated tolerance and prints
//! one pass/fail line per criterion. Exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cvejoin::formulas::FormulaSet;
use cvejoin_cli::suite::{run_criteria, run_criterion, SuiteOptions, FORMULA_CRITERIA};

/// Wall-clock budgets from the criteria, where one is stated.
fn budget(id: u8) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(5)),
        4 => Some(Duration::from_secs(30)),
        _ => None,
    }
}

const VERIFY_ALL_BUDGET: Duration = Duration::from_secs(60);

fn verify_all_exit(args: &[&str]) -> (Option<i32>, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cvejoin"))
        .arg("verify-all")
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code(), start.elapsed())
}

fn criterion_8() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;

    let (code, elapsed) = verify_all_exit(&[]);
    let clean = code == Some(0) && elapsed < VERIFY_ALL_BUDGET;
    ok &= clean;
    notes.push(format!(
        "verify-all exit {code:?} in {:.2}s (budget {}s)",
        elapsed.as_secs_f64(),
        VERIFY_ALL_BUDGET.as_secs()
    ));

    let standard = FormulaSet::standard();
    let ids = standard.coefficient_ids();
    let first = ids[0].to_string();
    let (code, _) = verify_all_exit(&["--mutate", &first]);
    ok &= code == Some(1);
    notes.push(format!("verify-all --mutate {first} exit {code:?}"));

    // Every single-coefficient perturbation must be caught.
    let mut missed = Vec::new();
    for id in &ids {
        let formulas = standard.perturbed(id).expect("listed coefficient");
        let opts = SuiteOptions {
            formulas: &formulas,
            ..SuiteOptions::default()
        };
        if run_criteria(&FORMULA_CRITERIA, &opts).pass {
            missed.push(id.to_string());
        }
    }
    ok &= missed.is_empty();
    notes.push(format!(
        "{}/{} coefficient mutations detected",
        ids.len() - missed.len(),
        ids.len()
    ));
    if !missed.is_empty() {
        notes.push(format!("missed: {}", missed.join(", ")));
    }
    (ok, notes.join("; "))
}

fn main() {
    let opts = SuiteOptions::default();
    let mut all = true;
    for id in 1..=7u8 {
        let start = Instant::now();
        let result = run_criterion(id, &opts);
        let elapsed = start.elapsed();
        let in_budget = budget(id).is_none_or(|b| elapsed <= b);
        let pass = result.pass && in_budget;
        all &= pass;
        println!(
            "criterion {id}: {} - {} ({} checks, {:.2}s{})",
            if pass { "PASS" } else { "FAIL" },
            result.title,
            result.checks.len(),
            elapsed.as_secs_f64(),
            budget(id).map_or(String::new(), |b| format!(", budget {}s", b.as_secs())),
        );
        for c in result.checks.iter().filter(|c| !c.pass) {
            println!("    {}", c.line());
        }
    }
    let (pass, notes) = criterion_8();
    all &= pass;
    println!(
        "criterion 8: {} - verify-all exit status and mutation negative control ({notes})",
        if pass { "PASS" } else { "FAIL" }
    );
    if !all {
        std::process::exit(1);
    }
}
