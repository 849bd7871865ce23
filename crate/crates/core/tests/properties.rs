//! Randomized law checking with shrinking: the library's contractual
//! invariants as properties over generated inputs, plus a bitwise
//! cross-check of the geometric product against the independent bitmask
//! oracle.

mod common;

use std::f64::consts::{PI, TAU};

use proptest::prelude::*;

use cliffbell::chsh::{angle_grid, chsh_value, model_bound};
use cliffbell::epr::{
    bivector_identity_residual, correlation, ensemble_average, event_readout, joint_expectation,
    outcome_independence_check, parameter_independence_check, EnsembleMeasure, Orientation,
};
use cliffbell::ga::{
    cross, dual, geometric_product, grade, rotate, Direction, Multivector, Tolerance, Vec3,
};
use cliffbell::malus::{malus_expectation, sequential_chain, Preparation};
use cliffbell::quantum::{bell_operator, qm_chsh_bound, singlet_correlation, singlet_expectation};
use cliffbell::ChshConfig;

use common::oracle_gp;

fn multivector() -> impl Strategy<Value = Multivector> {
    prop::array::uniform8(-1.0..1.0_f64).prop_map(Multivector)
}

fn direction() -> impl Strategy<Value = Direction> {
    prop::array::uniform3(-1.0..1.0_f64)
        .prop_filter("length bounded away from zero", |v| {
            Vec3::new(v[0], v[1], v[2]).norm() > 1e-3
        })
        .prop_map(|v| Direction::normalized(Vec3::new(v[0], v[1], v[2])).expect("length checked"))
}

fn nondegenerate_pair() -> impl Strategy<Value = (Direction, Direction)> {
    (direction(), direction()).prop_filter("well-defined rotation axis", |(a, b)| {
        cross(a.vec(), b.vec()).norm() >= 1e-3
    })
}

fn orientation() -> impl Strategy<Value = Orientation> {
    prop_oneof![Just(Orientation::Plus), Just(Orientation::Minus)]
}

fn config() -> impl Strategy<Value = ChshConfig> {
    (nondegenerate_pair(), nondegenerate_pair()).prop_map(|((a, a_prime), (b, b_prime))| {
        ChshConfig {
            a,
            a_prime,
            b,
            b_prime,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn product_matches_bitmask_oracle(x in multivector(), y in multivector()) {
        let engine = geometric_product(x, y).coeffs();
        let oracle = oracle_gp(&x.coeffs(), &y.coeffs());
        for k in 0..8 {
            prop_assert_eq!(engine[k].to_bits(), oracle[k].to_bits(), "slot {}", k);
        }
    }

    #[test]
    fn product_is_associative(x in multivector(), y in multivector(), z in multivector()) {
        let left = geometric_product(geometric_product(x, y), z);
        let right = geometric_product(x, geometric_product(y, z));
        prop_assert!((left - right).max_abs() <= 1e-10);
    }

    #[test]
    fn grade_projections_reassemble(x in multivector()) {
        let total = grade(x, 0) + grade(x, 1) + grade(x, 2) + grade(x, 3);
        prop_assert_eq!(total, x);
    }

    #[test]
    fn dual_is_left_multiplication_by_pseudoscalar(n in direction()) {
        let via_product = geometric_product(
            Multivector::pseudoscalar(),
            Multivector::vector(n.vec()),
        );
        prop_assert!((dual(n) - via_product).max_abs() <= 1e-15);
    }

    #[test]
    fn unit_bivector_squares_to_minus_one(n in direction()) {
        let square = geometric_product(dual(n), dual(n));
        prop_assert!((square - Multivector::scalar(-1.0)).max_abs() <= 4e-15);
    }

    #[test]
    fn product_identity_residual_vanishes(
        a in direction(),
        b in direction(),
        mu in orientation(),
    ) {
        prop_assert!(bivector_identity_residual(a, b, mu).max_abs() <= 1e-12);
    }

    #[test]
    fn joint_expectation_is_scalar_cosine(a in direction(), b in direction()) {
        let joint = joint_expectation(a, b, &EnsembleMeasure::balanced());
        let non_scalar = joint - Multivector::scalar(joint.scalar_part());
        prop_assert_eq!(non_scalar.max_abs(), 0.0);
        prop_assert!((joint.scalar_part() + a.vec().dot(b.vec())).abs() <= 1e-13);
    }

    #[test]
    fn odd_functions_average_to_exact_zero(m in multivector()) {
        let avg = ensemble_average(|mu| m * mu.sign(), &EnsembleMeasure::balanced());
        prop_assert_eq!(avg, Multivector::zero());
    }

    #[test]
    fn locality_checks_hold(
        a in direction(),
        (b, b_prime) in nondegenerate_pair(),
        mu in orientation(),
    ) {
        let tol = Tolerance::default();
        prop_assert!(parameter_independence_check(a, b, b_prime, mu, tol).holds);
        let oi = outcome_independence_check(b, b_prime, tol).expect("nondegenerate pair");
        prop_assert!(oi.holds);
    }

    #[test]
    fn combination_is_linear_in_pairwise_cosines(cfg in config()) {
        let value = chsh_value(&cfg, &EnsembleMeasure::balanced());
        let expected = -cfg.a.vec().dot(cfg.b.vec())
            - cfg.a.vec().dot(cfg.b_prime.vec())
            - cfg.a_prime.vec().dot(cfg.b.vec())
            + cfg.a_prime.vec().dot(cfg.b_prime.vec());
        prop_assert!((value - expected).abs() <= 1e-12);
    }

    #[test]
    fn bound_is_symmetric_under_station_exchange(cfg in config()) {
        let swapped = ChshConfig {
            a: cfg.b_prime,
            a_prime: cfg.b,
            b: cfg.a_prime,
            b_prime: cfg.a,
        };
        prop_assert_eq!(model_bound(&cfg).to_bits(), model_bound(&swapped).to_bits());
    }

    #[test]
    fn bound_is_rotation_invariant(
        cfg in config(),
        axis in direction(),
        angle in 0.0..TAU,
    ) {
        let turn = |d: Direction| {
            Direction::normalized(rotate(d.vec(), axis, angle)).expect("rotation preserves norm")
        };
        let rotated = ChshConfig {
            a: turn(cfg.a),
            a_prime: turn(cfg.a_prime),
            b: turn(cfg.b),
            b_prime: turn(cfg.b_prime),
        };
        prop_assert!((model_bound(&cfg) - model_bound(&rotated)).abs() <= 1e-10);
    }

    #[test]
    fn quantum_and_model_correlations_agree(a in direction(), b in direction()) {
        let quantum = singlet_correlation(a, b);
        prop_assert!((quantum + a.vec().dot(b.vec())).abs() <= 1e-12);
        let model = correlation(a, b, &EnsembleMeasure::balanced());
        prop_assert!((quantum - model).abs() <= 1e-12);
    }

    #[test]
    fn operator_variance_is_nonnegative(cfg in config()) {
        let mean = singlet_expectation(&bell_operator(&cfg)).expect("Hermitian");
        let square = qm_chsh_bound(&cfg).b_squared_expectation;
        prop_assert!(square >= mean * mean - 1e-10);
    }

    #[test]
    fn detected_expectation_is_cosine_for_both_outcomes(
        a in direction(),
        p in direction(),
    ) {
        let rho = EnsembleMeasure::balanced();
        let up = malus_expectation(a, &Preparation::new(p, 1).expect("valid sign"), &rho);
        let down = malus_expectation(a, &Preparation::new(p, -1).expect("valid sign"), &rho);
        prop_assert!((up - a.vec().dot(p.vec())).abs() <= 1e-12);
        prop_assert_eq!(up.to_bits(), down.to_bits());
    }

    #[test]
    fn cascade_stages_depend_only_on_consecutive_analyzers(
        first in direction(),
        second in direction(),
        x in direction(),
        y in direction(),
    ) {
        let rho = EnsembleMeasure::balanced();
        let prep = Preparation::new(Direction::new(1.0, 0.0, 0.0).expect("unit"), 1)
            .expect("valid sign");
        let one = sequential_chain(&[first, x, y], &prep, &rho).expect("nonempty");
        let other = sequential_chain(&[second, x, y], &prep, &rho).expect("nonempty");
        prop_assert_eq!(one[2].to_bits(), other[2].to_bits());
    }

    #[test]
    fn readout_ignores_the_analyzer(n in direction(), mu in orientation()) {
        let expected: i8 = match mu {
            Orientation::Plus => 1,
            Orientation::Minus => -1,
        };
        prop_assert_eq!(event_readout(n, mu), expected);
    }

    #[test]
    fn grids_reject_invalid_steps(
        step in prop_oneof![
            Just(0.0),
            -10.0..0.0,
            (PI + 1e-6)..50.0,
            Just(f64::NAN),
            Just(f64::INFINITY),
        ],
    ) {
        prop_assert!(angle_grid(step).is_err());
    }
}
