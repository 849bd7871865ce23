//! # The orientation-indexed bivector product identity
//!
//! The engine's central algebraic fact: for unit vectors `a` and `b`, the
//! product of the unit bivectors `μ·a` and `μ·b`, composed in the order the
//! orientation μ = ±I prescribes, splits into a scalar and a bivector,
//!
//! ```text
//!     (μ·a)(μ·b) = −a·b − μ·(a×b),
//! ```
//!
//! and its commutator collapses to the bivector part alone,
//!
//! ```text
//!     [μ·a, μ·b] = −2 μ·(a×b) = −2 (μ·z) sin θ,
//! ```
//!
//! where `z = (a×b)/|a×b|` and `sin θ = |a×b|`. Both identities hold for
//! both orientations because reversing the composition order and flipping
//! the handedness of the bivector basis compensate each other exactly.
//!
//! Run with `cargo run --example bivector_identity`.

use cliffbell::epr::{bivector_identity_residual, commutator_relation, observable, Orientation};
use cliffbell::ga::{cross, Direction, Multivector};

fn main() {
    // Two analyzer directions 60° apart in the xy plane: a·b = 1/2,
    // a×b = (0, 0, sin 60°).
    let a = Direction::new(1.0, 0.0, 0.0).unwrap();
    let b = Direction::new(0.5, 0.75_f64.sqrt(), 0.0).unwrap();

    for mu in Orientation::BOTH {
        let lhs = mu.product(observable(a, mu), observable(b, mu));
        let rhs = Multivector::scalar(-a.vec().dot(b.vec())) - mu.project(cross(a.vec(), b.vec()));
        println!("mu = {mu:?}");
        println!("  (mu a)(mu b)       = {lhs}");
        println!("  -a.b - mu (a x b)  = {rhs}");

        let residual = bivector_identity_residual(a, b, mu);
        println!("  residual           = {residual}");
        assert!(
            residual.max_abs() < 1e-15,
            "product identity failed for {mu:?}"
        );

        let rel = commutator_relation(a, b, mu).unwrap();
        println!("  [mu a, mu b]       = {}", rel.commutator);
        println!("  axis z             = {:?}", rel.axis.vec());
        println!("  sin theta          = {}", rel.sin_theta);
        assert!(rel.residual.max_abs() < 1e-15);
        assert!(rel.normalized_residual.max_abs() < 1e-15);

        // The scalar part is setting-dependent; the handedness of the
        // bivector part is microstate-dependent. Their product's grade
        // content never leaves {0, 2}.
        assert_eq!(lhs.vector_part().norm(), 0.0);
        assert_eq!(lhs.trivector_part(), 0.0);
    }

    // Parallel settings: the bivector part vanishes and the product is the
    // exact scalar −1, the perfect-anticorrelation seed.
    for mu in Orientation::BOTH {
        let square = mu.product(observable(a, mu), observable(a, mu));
        assert_eq!(square, Multivector::scalar(-1.0));
    }
    println!("\n(mu a)^2 = -1 exactly for both orientations");
}
