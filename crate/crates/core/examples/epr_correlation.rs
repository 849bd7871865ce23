//! # Two-station correlations from a shared orientation microstate
//!
//! Each run of the experiment draws a microstate μ ∈ {+I, −I}. Station A
//! measures the bivector observable `μ·a`, station B measures `μ·b`, and the
//! joint observable is their composed product. Averaged over the balanced
//! ensemble:
//!
//!   * each station's observable averages to the exact zero multivector
//!     (no signalling in either marginal),
//!   * the joint expectation is the pure scalar `−a·b = −cos θ`, the strong
//!     singlet correlation,
//!   * at `b = a` the joint value is the constant −1 before any averaging:
//!     perfect anticorrelation event by event.
//!
//! Run with `cargo run --example epr_correlation`.

use cliffbell::epr::{
    ensemble_average, joint_expectation, joint_observable, observable, EnsembleMeasure, Orientation,
};
use cliffbell::ga::Multivector;
use cliffbell::Plane;

const GRID_DEGREES: [f64; 7] = [0.0, 30.0, 45.0, 60.0, 90.0, 135.0, 180.0];

fn main() {
    let rho = EnsembleMeasure::balanced();
    let a = Plane::Xy.direction(0.0);

    // Marginals vanish identically: the two microstate values are exact
    // negations, so the balanced average is the zero multivector, not merely
    // a small one.
    let marginal = ensemble_average(|mu| observable(a, mu), &rho);
    assert_eq!(marginal, Multivector::zero());
    println!("<mu a>            = {marginal} (exactly zero)");

    println!("\n theta      model -cos(theta)   max |higher grades|");
    for deg in GRID_DEGREES {
        let theta = deg.to_radians();
        let b = Plane::Xy.direction(theta);
        let joint = joint_expectation(a, b, &rho);
        let model = joint.scalar_part();
        let higher = (joint - Multivector::scalar(model)).max_abs();
        println!(
            "{deg:>6}   {model:>18.15}  {:>18.15}   {higher:e}",
            -theta.cos()
        );
        assert!((model + theta.cos()).abs() < 1e-15);
        assert!(higher < 1e-15, "joint expectation must be scalar");
    }

    // Perfect anticorrelation needs no averaging at all: for either
    // microstate the composed product at b = a is the scalar −1.
    for mu in Orientation::BOTH {
        assert_eq!(joint_observable(a, a, mu), Multivector::scalar(-1.0));
    }
    println!("\njoint value at b = a is -1 for every microstate, not just on average");
}
