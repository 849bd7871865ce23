//! # Driving the verification registry as a library
//!
//! The `verify` module keeps a fixed registry of named checks — algebraic
//! identities, ensemble expectations, locality conditions, bound
//! derivations, quantum agreement, and the sequential-analyzer law — each
//! with a requirement tag and a pinned tolerance. The CLI's `verify`
//! subcommand is a thin wrapper over the same entry points used here:
//! `run_suite` for the whole registry, `find` + `run_check` for one check.
//!
//! Checks draw from per-check ChaCha streams derived from one seed, so the
//! whole suite is reproducible run to run and independent of thread count.
//!
//! Run with `cargo run --example verification_suite`.

use cliffbell::sampling::DEFAULT_SEED;
use cliffbell::verify::{find, registry, run_check, run_suite};

const SAMPLES: u32 = 2_000;

fn main() {
    let result = run_suite(DEFAULT_SEED, SAMPLES, None);
    for row in &result.checks {
        println!(
            "{} {:<32} {:<9} residual={:<13e} tol={:e}",
            if row.passed { "PASS" } else { "FAIL" },
            row.name,
            row.requirement,
            row.max_residual,
            row.tolerance,
        );
    }
    let passed = result.checks.iter().filter(|r| r.passed).count();
    println!("{passed}/{} checks passed", result.checks.len());
    assert!(result.all_passed);

    // Re-running one check in isolation reproduces its row from the full
    // suite bit for bit: each check owns the ChaCha stream numbered by its
    // registry position.
    let position = registry()
        .iter()
        .position(|spec| spec.name == "joint-expectation-scalar")
        .expect("registered check");
    let spec = find("joint-expectation-scalar").expect("registered check");
    let alone = run_check(spec, DEFAULT_SEED, position as u64, SAMPLES, None);
    let in_suite = &result.checks[position];
    assert_eq!(
        alone.max_residual.to_bits(),
        in_suite.max_residual.to_bits()
    );
    assert_eq!(alone.samples, in_suite.samples);
    println!(
        "\nisolated rerun of '{}' is bitwise identical to its suite row",
        spec.name
    );

    // A tolerance override of zero keeps the enumerated, exact-arithmetic
    // checks green and fails only those that need a floating-point budget.
    let strict = run_suite(DEFAULT_SEED, 256, Some(0.0));
    let exact = strict.checks.iter().filter(|r| r.passed).count();
    println!(
        "{exact}/{} checks hold with zero tolerance",
        strict.checks.len()
    );
    assert!(!strict.all_passed);
    assert!(exact > 0);
}
