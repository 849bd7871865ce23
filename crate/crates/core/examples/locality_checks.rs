//! # The three locality conditions, checked inside the algebra
//!
//! Three separate statements make the model local, and each is an algebraic
//! identity here rather than a statistical estimate:
//!
//!   * **Factorizability** — the joint observable is literally the composed
//!     product of the two station observables; nothing joint is postulated.
//!   * **Parameter independence** — station A's reduced observable is
//!     unchanged when the remote setting switches from `b` to `b′`: the
//!     sandwich `B A B⁻¹`, corrected by its gauge term, collapses to `μ·a`
//!     for every remote setting.
//!   * **Outcome independence** — conditioning on station B's outcome sign
//!     cannot steer station A: all four outcome sign assignments reduce to
//!     `s_A · I a`, with the co-varying sense of the rotation axis doing the
//!     cancelling.
//!
//! Run with `cargo run --example locality_checks`.

use cliffbell::epr::{
    factorizability_check, outcome_independence_check, parameter_independence_check, Orientation,
};
use cliffbell::ga::{Direction, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let a = Direction::new(1.0, 0.0, 0.0).unwrap();
    let b = Direction::new(0.0, 1.0, 0.0).unwrap();
    let b_prime = Direction::new(0.6, 0.0, 0.8).unwrap();

    for mu in Orientation::BOTH {
        assert!(factorizability_check(a, b, mu, tol));
        assert!(factorizability_check(a, b_prime, mu, tol));
    }
    println!("factorizability: joint = A ∘ B coefficient for coefficient, both orientations");

    for mu in Orientation::BOTH {
        let pi = parameter_independence_check(a, b, b_prime, mu, tol);
        println!("\nparameter independence, mu = {mu:?}");
        println!("  side(b)      = {}", pi.side_b);
        println!("  side(b')     = {}", pi.side_b_prime);
        println!("  max residual = {:e}", pi.max_residual);
        assert!(pi.holds);
        // Each side not only matches the other; both equal the local
        // observable itself, which is the stronger statement.
        assert!(pi.local_residual_b.max_abs() <= tol.eps());
        assert!(pi.local_residual_b_prime.max_abs() <= tol.eps());
        assert!(pi.reduced_residual_b.max_abs() <= tol.eps());
        assert!(pi.reduced_residual_b_prime.max_abs() <= tol.eps());
    }

    let oi = outcome_independence_check(a, b, tol).unwrap();
    println!("\noutcome independence at 90°:");
    for case in oi.cases {
        println!(
            "  (s_A, s_B, s_C) = ({:+}, {:+}, {:+})  value = {}  residual = {:e}",
            case.signs.s_a,
            case.signs.s_b,
            case.signs.s_c,
            case.value,
            case.residual.max_abs(),
        );
    }
    assert!(oi.holds);
    assert!(oi.max_residual <= tol.eps());
    println!("every sign case reduces to s_A · (I a): B's outcome never reaches A");
}
