//! # Sequential analyzers and the cosine law
//!
//! A polarizer prepares the beam along `p` with outcome sign `s`; an
//! analyzer along `a` then measures it. The preselected single-event value
//! is `a·p + I(a×p)`; averaging the orientation-indexed fluctuation over the
//! balanced ensemble leaves the detected expectation
//!
//! ```text
//!     ⟨A⟩_p = a·p = cos Δ,
//! ```
//!
//! exactly the quantum `tr(σ·a ρ_p)` for ρ_p = (𝟙 + σ·p)/2. The `+` channel
//! transmission probability is therefore `(1 + cos Δ)/2 = cos²(Δ/2)` — the
//! half-angle form the two-valued observable takes. A cascade is Markov:
//! each stage re-prepares the beam, so stage expectations depend only on
//! consecutive relative angles and multiply.
//!
//! Run with `cargo run --example malus_sequence`.

use cliffbell::epr::EnsembleMeasure;
use cliffbell::malus::{malus_expectation, sequential_chain, Preparation};
use cliffbell::Plane;

const STAGE_DEGREES: [f64; 4] = [30.0; 4];

fn main() {
    let rho = EnsembleMeasure::balanced();
    let plane = Plane::Xy;
    let prep = Preparation::new(plane.direction(0.0), 1).unwrap();

    // Single analyzer at angle Δ from the polarizer.
    println!(" delta   <A>_p = cos     P(+) = cos²(Δ/2)");
    for deg in [0.0_f64, 30.0, 45.0, 60.0, 90.0] {
        let delta = deg.to_radians();
        let e = malus_expectation(plane.direction(delta), &prep, &rho);
        let p_plus = 0.5 * (1.0 + e);
        println!("{deg:>6}   {e:>12.9}    {p_plus:>12.9}");
        assert!((e - delta.cos()).abs() < 1e-15);
        assert!((p_plus - (delta / 2.0).cos().powi(2)).abs() < 1e-15);
    }

    // A cascade of four analyzers, each 30° past the previous one. Every
    // stage sees only its own relative angle.
    let mut absolute = 0.0;
    let analyzers: Vec<_> = STAGE_DEGREES
        .iter()
        .map(|deg| {
            absolute += deg.to_radians();
            plane.direction(absolute)
        })
        .collect();
    let stages = sequential_chain(&analyzers, &prep, &rho).unwrap();
    println!("\ncascade of {} stages, 30° apart:", stages.len());
    let mut product = 1.0;
    for (k, e) in stages.iter().enumerate() {
        println!("  stage {k}: expectation = {e:.15}");
        // Absolute angles accumulate rounding before the relative angle is
        // recovered through the dot product, hence the looser tolerance.
        assert!((e - 30.0_f64.to_radians().cos()).abs() < 1e-14);
        product *= e;
    }
    println!(
        "  cumulative product = {product:.15} (cos⁴ 30° = {})",
        0.75 * 0.75
    );
    assert!((product - 0.5625).abs() < 1e-14);

    // Markov property: a 0° stage inserted mid-chain transmits perfectly
    // and leaves the remainder unchanged.
    let direct = sequential_chain(&[plane.direction(1.0)], &prep, &rho).unwrap();
    let padded =
        sequential_chain(&[plane.direction(0.0), plane.direction(1.0)], &prep, &rho).unwrap();
    assert_eq!(padded[0], 1.0);
    assert_eq!(padded[1], direct[0]);
    println!("\ninserting an aligned stage changes nothing: chain is Markov");
}
