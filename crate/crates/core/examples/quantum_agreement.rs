//! # Pointwise agreement with the singlet state's predictions
//!
//! The bivector model and textbook quantum mechanics are compared on three
//! observables:
//!
//!   * the two-point correlation: `⟨σ·a ⊗ σ·b⟩ = −a·b` in the singlet
//!     state, against the model's scalar joint expectation,
//!   * the four-setting combination: `⟨B⟩` for the Bell operator against
//!     the model's `⟨F⟩`,
//!   * the ceilings: `⟨B²⟩ = 4·𝟙 + 4 σ·(a×a′) ⊗ σ·(b×b′)` gives the
//!     operator bound `sqrt(⟨B²⟩)`, against the model's closed-form bound.
//!
//! Nothing is fit: both sides are evaluated independently and subtracted.
//!
//! Run with `cargo run --example quantum_agreement`.

use std::f64::consts::SQRT_2;

use cliffbell::chsh::{chsh_value, model_bound};
use cliffbell::epr::{correlation, EnsembleMeasure};
use cliffbell::ga::Tolerance;
use cliffbell::quantum::{
    bell_operator, bell_operator_squared_check, qm_chsh_bound, singlet_correlation,
    singlet_expectation,
};
use cliffbell::{ChshConfig, Plane};

fn main() {
    let rho = EnsembleMeasure::balanced();
    let a = Plane::Xy.direction(0.0);

    // Two-point correlations across a 15° grid.
    let mut max_gap = 0.0_f64;
    for k in 0..24 {
        let b = Plane::Xy.direction(f64::from(k) * 15.0_f64.to_radians());
        let gap = (correlation(a, b, &rho) - singlet_correlation(a, b)).abs();
        max_gap = max_gap.max(gap);
    }
    println!("max |E_model - E_singlet| over 15° grid = {max_gap:e}");
    assert!(max_gap < 1e-15);

    // Four-setting combination at the extremal settings.
    let cfg = ChshConfig::maximal(Plane::Xy);
    let model = chsh_value(&cfg, &rho);
    let quantum = singlet_expectation(&bell_operator(&cfg)).unwrap();
    println!("<F>_model = {model}");
    println!("<B>_singlet = {quantum}");
    assert!((model - quantum).abs() < 1e-12);
    assert!((quantum + 2.0 * SQRT_2).abs() < 1e-12);

    // The operator-square identity, entry by entry in the 4×4 matrix.
    let sq = bell_operator_squared_check(&cfg, Tolerance::default());
    println!("B² identity residual = {:e}", sq.residual);
    assert!(sq.holds);

    // Both ceilings evaluate to 2√2 here. They are different functions of
    // the settings in general — the model's uses (a×a′)·(b′×b), the
    // operator's uses (a×a′)·(b×b′) — and the extremal geometry happens to
    // saturate both.
    let qm = qm_chsh_bound(&cfg);
    println!("model bound = {}", model_bound(&cfg));
    println!(
        "operator bound = {}  (<B²> = {})",
        qm.bound, qm.b_squared_expectation
    );
    assert!((model_bound(&cfg) - 2.0 * SQRT_2).abs() < 1e-12);
    assert!((qm.bound - 2.0 * SQRT_2).abs() < 1e-12);
    assert!((qm.b_squared_expectation - 8.0).abs() < 1e-12);
    assert!((qm.triple_b_cross_bprime + 1.0).abs() < 1e-12);
    assert!((qm.triple_bprime_cross_b - 1.0).abs() < 1e-12);
}
