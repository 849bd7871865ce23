//! # What the event-level readouts say, next to the algebraic average
//!
//! A detector at station A reports a number, not a bivector. The readout
//! this model can offer per event is the sense of rotation of `μ·n` about
//! its own axis — which is the handedness of μ itself, the same at both
//! stations and independent of the analyzer direction. Enumerating the two
//! microstates therefore gives
//!
//! ```text
//!     ⟨(readout A)(readout B)⟩ = ⟨ sign(μ)² ⟩ = +1      for every a, b,
//! ```
//!
//! while the composed-product prescription averages to `−a·b`. The two
//! prescriptions answer different questions, and this diagnostic prints them
//! side by side without pretending they agree: the strong correlation lives
//! in the algebraic average, not in products of the per-event scalar
//! readouts.
//!
//! Run with `cargo run --example event_diagnostic`.

use cliffbell::epr::{
    correlation, event_level_correlation, event_readout, EnsembleMeasure, Orientation,
};
use cliffbell::Plane;

fn main() {
    let rho = EnsembleMeasure::balanced();
    let a = Plane::Xy.direction(0.0);

    // The readout ignores the analyzer direction entirely.
    for mu in Orientation::BOTH {
        let at_a = event_readout(a, mu);
        let at_b = event_readout(Plane::Xy.direction(2.0), mu);
        assert_eq!(at_a, at_b, "both stations read the shared handedness");
        assert_eq!(i32::from(at_a).pow(2), 1);
    }

    println!(" theta     event-level    algebraic");
    for k in 0..=8 {
        let theta = f64::from(k) * 22.5_f64.to_radians();
        let b = Plane::Xy.direction(theta);
        let event = event_level_correlation(a, b, &rho);
        let algebraic = correlation(a, b, &rho);
        println!(
            "{:>6.1}°   {event:>+10.6}    {algebraic:>+10.6}",
            k as f64 * 22.5
        );
        assert_eq!(event, 1.0, "readout products average to +1 identically");
        assert!((algebraic + theta.cos()).abs() < 1e-15);
    }

    println!("\nevent-level column: flat at +1, no dependence on the settings");
    println!("algebraic column:   -cos(theta), the strong correlation");
}
