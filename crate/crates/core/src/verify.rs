//! The check registry: every verifiable statement the library makes, named,
//! tagged with the requirement it supports, tolerance-pinned, and runnable
//! in one deterministic pass.
//!
//! Each check owns an independent seeded random stream (stream index =
//! registry position), so the suite's numbers depend only on the seed and
//! sample count — never on thread scheduling or on which subset of checks
//! runs. Checks report their worst residual; pass/fail is the comparison
//! against the pinned tolerance (or a blanket override).
//!
//! Requirement tags: R1 representation, R2 dichotomic values, R3 vanishing
//! single-station averages, R4 the pairwise correlation, R5 factorizability
//! (R5a remote-parameter / R5b remote-outcome independence), R6
//! setting-independent ensemble measure, R7 the four-setting bound, R8 the
//! sequential cosine law; "identity" marks the algebraic lemmas the rest
//! stand on.

use std::f64::consts::{FRAC_PI_4, SQRT_2, TAU};
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chsh::{
    chsh_sweep, chsh_value, cross_commutator, model_bound, seevinck_average, seevinck_product,
    ChshConfig, Plane,
};
use crate::epr::{
    bivector_identity_residual, commutator_relation, commutator_relation_residual, correlation,
    ensemble_average, joint_expectation, joint_observable, observable, outcome_independence_check,
    parameter_independence_check, EnsembleMeasure, Orientation,
};
use crate::ga::{
    cross, dual, geometric_product, grade, norm, rotate, versor_inverse, Direction, Multivector,
    Tolerance, Vec3,
};
use crate::malus::{malus_expectation, sequential_chain, Preparation};
use crate::quantum::{
    bell_operator, bell_operator_squared_check, pauli_projection, qm_chsh_bound,
    singlet_correlation, singlet_expectation, tensor, ComplexMatrix,
};
use crate::sampling::{
    random_direction, random_multivector, random_nondegenerate_pair, random_orientation, stream_rng,
};

/// Mutable state handed to a check: the sample budget and the check's own
/// random stream.
pub struct CheckCtx {
    pub samples: u32,
    pub rng: ChaCha8Rng,
}

/// What a runner reports back: its worst residual and how many sampled (or
/// enumerated) cases it actually evaluated.
#[derive(Debug, Clone, Copy)]
pub struct RunOutput {
    pub max_residual: f64,
    pub samples_used: u32,
}

type Runner = fn(&mut CheckCtx) -> RunOutput;

/// A registry entry: a named check with its requirement tag, a one-line
/// description, and the tolerance its residual is held to by default.
pub struct CheckSpec {
    pub name: &'static str,
    pub requirement: &'static str,
    pub summary: &'static str,
    pub default_tol: f64,
    runner: Runner,
}

/// One executed check, as serialized into suite output.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: &'static str,
    pub requirement: &'static str,
    pub passed: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub samples: u32,
}

/// The whole suite's outcome. `elapsed` is for human-facing text only and is
/// excluded from serialization so reruns stay byte-identical.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub checks: Vec<CheckRow>,
    pub all_passed: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Runs every registered check. Checks execute in parallel but their rows
/// come back in registry order, and each check's stream index is its
/// registry position, so output bytes depend only on `(seed, samples,
/// tol_override)`.
pub fn run_suite(seed: u64, samples: u32, tol_override: Option<f64>) -> SuiteResult {
    let start = Instant::now();
    let checks: Vec<CheckRow> = registry()
        .par_iter()
        .enumerate()
        .map(|(index, spec)| run_check(spec, seed, index as u64, samples, tol_override))
        .collect();
    let all_passed = checks.iter().all(|row| row.passed);
    SuiteResult {
        checks,
        all_passed,
        elapsed: start.elapsed(),
    }
}

/// Runs a single check on its own stream.
pub fn run_check(
    spec: &CheckSpec,
    seed: u64,
    stream: u64,
    samples: u32,
    tol_override: Option<f64>,
) -> CheckRow {
    let mut ctx = CheckCtx {
        samples,
        rng: stream_rng(seed, stream),
    };
    let out = (spec.runner)(&mut ctx);
    let tolerance = tol_override.unwrap_or(spec.default_tol);
    CheckRow {
        name: spec.name,
        requirement: spec.requirement,
        passed: out.max_residual <= tolerance,
        max_residual: out.max_residual,
        tolerance,
        samples: out.samples_used,
    }
}

/// Looks a check up by name.
pub fn find(name: &str) -> Option<&'static CheckSpec> {
    registry().iter().find(|spec| spec.name == name)
}

macro_rules! checks {
    ($(($name:literal, $req:literal, $tol:expr, $runner:path, $summary:literal),)*) => {
        &[$(CheckSpec {
            name: $name,
            requirement: $req,
            summary: $summary,
            default_tol: $tol,
            runner: $runner,
        },)*]
    };
}

/// The full registry, in stable order. Stream indices, `--list` output, and
/// row order all follow this table.
pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

static REGISTRY: &[CheckSpec] = checks![
    (
        "algebra-associativity",
        "R1",
        1e-10,
        run_associativity,
        "(xy)z equals x(yz) for random multivectors"
    ),
    (
        "algebra-anticommutation",
        "R1",
        0.0,
        run_anticommutation,
        "basis vectors square to 1 and anticommute"
    ),
    (
        "algebra-grade-completeness",
        "R1",
        0.0,
        run_grade_completeness,
        "the four grade projections reassemble every multivector"
    ),
    (
        "algebra-pseudoscalar-central",
        "R1",
        0.0,
        run_pseudoscalar_central,
        "the unit trivector commutes with everything and squares to -1"
    ),
    (
        "algebra-duality",
        "R1",
        1e-15,
        run_duality,
        "dual(n) equals I n, and applying I twice negates"
    ),
    (
        "algebra-bivector-inverse",
        "R1",
        1e-12,
        run_bivector_inverse,
        "unit bivectors invert to their reverses"
    ),
    (
        "rotational-invariance",
        "R1",
        1e-10,
        run_rotational_invariance,
        "correlations depend only on relative angles"
    ),
    (
        "unit-norm-observables",
        "R2",
        1e-15,
        run_unit_norm_observables,
        "observable values are unit bivectors squaring to -1"
    ),
    (
        "single-average-zero",
        "R3",
        0.0,
        run_single_average_zero,
        "single-station observables average to the exact zero multivector"
    ),
    (
        "odd-function-average",
        "R3",
        0.0,
        run_odd_function_average,
        "orientation-odd functions cancel exactly under the balanced measure"
    ),
    (
        "quantum-single-zero",
        "R3",
        1e-15,
        run_quantum_single_zero,
        "singlet marginals vanish station by station"
    ),
    (
        "joint-expectation-scalar",
        "R4",
        1e-13,
        run_joint_expectation_scalar,
        "the joint expectation's scalar part is -a.b"
    ),
    (
        "joint-expectation-higher-grades",
        "R4",
        1e-15,
        run_joint_higher_grades,
        "non-scalar grades of the joint expectation cancel"
    ),
    (
        "perfect-correlation",
        "R4",
        0.0,
        run_perfect_correlation_axes,
        "E(n,n) is exactly -1 at coordinate axes"
    ),
    (
        "perfect-correlation-generic",
        "R4",
        4e-15,
        run_perfect_correlation_generic,
        "E(n,n) reaches -1 within float rounding everywhere"
    ),
    (
        "quantum-joint-agreement",
        "R4",
        1e-12,
        run_quantum_joint_agreement,
        "model and singlet correlations coincide"
    ),
    (
        "bivector-product-identity",
        "identity",
        1e-12,
        run_bivector_product_identity,
        "(mu a)(mu b) = -a.b - mu (a x b) for both orientations"
    ),
    (
        "commutator-relation",
        "identity",
        1e-12,
        run_commutator_relation,
        "[mu a, mu b] = -2 mu (a x b), raw and axis-normalized"
    ),
    (
        "factorizability",
        "R5",
        0.0,
        run_factorizability,
        "joint values factor into station values at every microstate"
    ),
    (
        "parameter-independence",
        "R5a",
        1e-12,
        run_parameter_independence,
        "each station's relation is untouched by the remote setting"
    ),
    (
        "outcome-independence",
        "R5b",
        1e-12,
        run_outcome_independence,
        "the co-rotating sign rule reduces every outcome case to the local observable"
    ),
    (
        "measure-setting-independence",
        "R6",
        0.0,
        run_measure_setting_independence,
        "the ensemble measure never references analyzer settings"
    ),
    (
        "chsh-linearity",
        "R7",
        1e-13,
        run_chsh_linearity,
        "the four-setting combination equals the sum of pairwise correlations"
    ),
    (
        "seevinck-product-identity",
        "R7",
        1e-12,
        run_seevinck_product_identity,
        "the commutator product matches its closed form per orientation"
    ),
    (
        "seevinck-average",
        "R7",
        1e-15,
        run_seevinck_average,
        "the averaged commutator product is the scalar -4 (a x a') . (b' x b)"
    ),
    (
        "cross-commutator-average",
        "R7",
        0.0,
        run_cross_commutator_average,
        "cross-station commutators average to exact zero"
    ),
    (
        "model-bound-range",
        "R7",
        1e-12,
        run_model_bound_range,
        "the model bound stays within [2, 2*sqrt(2)]"
    ),
    (
        "chsh-extremum",
        "R7",
        1e-9,
        run_chsh_extremum,
        "a 45-degree sweep attains 2*sqrt(2) at the expected settings"
    ),
    (
        "bell-squared-identity",
        "R7",
        1e-10,
        run_bell_squared_identity,
        "B^2 equals 4 + 4 sigma(a x a') (x) sigma(b x b') entrywise"
    ),
    (
        "bell-expectation-agreement",
        "R7",
        1e-12,
        run_bell_expectation_agreement,
        "the singlet expectation of B equals the model's combination average"
    ),
    (
        "qm-bound-consistency",
        "R7",
        1e-10,
        run_qm_bound_consistency,
        "<B^2> matches 4 - 4 (a x a') . (b x b') and caps the bound at 2*sqrt(2)"
    ),
    (
        "malus-expectation",
        "R8",
        1e-12,
        run_malus_expectation,
        "sequential transmission follows the cosine law"
    ),
    (
        "malus-sequential-chain",
        "R8",
        1e-12,
        run_malus_chain,
        "cascaded analyzers obey stagewise cosines"
    ),
];

fn balanced() -> EnsembleMeasure {
    EnsembleMeasure::balanced()
}

fn random_config(ctx: &mut CheckCtx) -> ChshConfig {
    ChshConfig {
        a: random_direction(&mut ctx.rng),
        a_prime: random_direction(&mut ctx.rng),
        b: random_direction(&mut ctx.rng),
        b_prime: random_direction(&mut ctx.rng),
    }
}

fn run_associativity(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let x = random_multivector(&mut ctx.rng);
        let y = random_multivector(&mut ctx.rng);
        let z = random_multivector(&mut ctx.rng);
        let left = geometric_product(geometric_product(x, y), z);
        let right = geometric_product(x, geometric_product(y, z));
        max = max.max((left - right).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_anticommutation(_ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    let mut used = 0;
    for i in 1..=3 {
        for j in 1..=3 {
            used += 1;
            let ei = Multivector::basis(i);
            let ej = Multivector::basis(j);
            let anti = geometric_product(ei, ej) + geometric_product(ej, ei);
            let expected = if i == j {
                Multivector::scalar(2.0)
            } else {
                Multivector::zero()
            };
            max = max.max((anti - expected).max_abs());
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: used,
    }
}

fn run_grade_completeness(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let x = random_multivector(&mut ctx.rng);
        let reassembled = grade(x, 0) + grade(x, 1) + grade(x, 2) + grade(x, 3);
        max = max.max((reassembled - x).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_pseudoscalar_central(ctx: &mut CheckCtx) -> RunOutput {
    let i = Multivector::pseudoscalar();
    let mut max = (geometric_product(i, i) + Multivector::scalar(1.0)).max_abs();
    for _ in 0..ctx.samples {
        let x = random_multivector(&mut ctx.rng);
        max = max.max((geometric_product(i, x) - geometric_product(x, i)).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_duality(ctx: &mut CheckCtx) -> RunOutput {
    let i = Multivector::pseudoscalar();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let n = random_direction(&mut ctx.rng);
        let v = Multivector::vector(n.vec());
        max = max.max((dual(n) - geometric_product(i, v)).max_abs());
        // I(I n) = -n: duality applied twice is negation.
        max = max.max((geometric_product(i, dual(n)) + v).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_bivector_inverse(ctx: &mut CheckCtx) -> RunOutput {
    let one = Multivector::scalar(1.0);
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let b = dual(random_direction(&mut ctx.rng));
        match versor_inverse(b) {
            Ok(inv) => {
                max = max.max((geometric_product(b, inv) - one).max_abs());
                max = max.max((geometric_product(inv, b) - one).max_abs());
            }
            Err(_) => max = f64::INFINITY,
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_rotational_invariance(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        let axis = random_direction(&mut ctx.rng);
        let angle = ctx.rng.random_range(0.0..TAU);
        let (ra, rb) = match (
            Direction::normalized(rotate(a.vec(), axis, angle)),
            Direction::normalized(rotate(b.vec(), axis, angle)),
        ) {
            (Ok(ra), Ok(rb)) => (ra, rb),
            _ => {
                max = f64::INFINITY;
                continue;
            }
        };
        max = max.max((correlation(ra, rb, &rho) - correlation(a, b, &rho)).abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_unit_norm_observables(ctx: &mut CheckCtx) -> RunOutput {
    let one = Multivector::scalar(1.0);
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let n = random_direction(&mut ctx.rng);
        for mu in Orientation::BOTH {
            let value = observable(n, mu);
            max = max.max((norm(value) - 1.0).abs());
            max = max.max((mu.product(value, value) + one).max_abs());
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_single_average_zero(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let n = random_direction(&mut ctx.rng);
        max = max.max(ensemble_average(|mu| observable(n, mu), &rho).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_odd_function_average(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let v = Vec3::new(
            ctx.rng.random_range(-2.0..=2.0),
            ctx.rng.random_range(-2.0..=2.0),
            ctx.rng.random_range(-2.0..=2.0),
        );
        let c = random_multivector(&mut ctx.rng);
        max = max.max(rho.average(|mu| mu.project(v)).max_abs());
        max = max.max(rho.average(|mu| c * mu.sign()).max_abs());
        max = max.max(rho.average(|mu| mu.trivector()).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_quantum_single_zero(ctx: &mut CheckCtx) -> RunOutput {
    let id = ComplexMatrix::identity(2);
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let n = random_direction(&mut ctx.rng);
        let first = tensor(&pauli_projection(n), &id);
        let second = tensor(&id, &pauli_projection(n));
        for op in [first, second] {
            match singlet_expectation(&op) {
                Ok(e) => max = max.max(e.abs()),
                Err(_) => max = f64::INFINITY,
            }
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_joint_expectation_scalar(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        let e = joint_expectation(a, b, &rho);
        max = max.max((e.scalar_part() + a.vec().dot(b.vec())).abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_joint_higher_grades(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        let e = joint_expectation(a, b, &rho);
        max = max.max((e - grade(e, 0)).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_perfect_correlation_axes(_ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let minus_one = Multivector::scalar(-1.0);
    let mut max = 0.0_f64;
    let mut used = 0;
    for (x, y, z) in [
        (1.0, 0.0, 0.0),
        (-1.0, 0.0, 0.0),
        (0.0, 1.0, 0.0),
        (0.0, -1.0, 0.0),
        (0.0, 0.0, 1.0),
        (0.0, 0.0, -1.0),
    ] {
        used += 1;
        let n = Direction::new(x, y, z).expect("axes are unit");
        max = max.max((joint_expectation(n, n, &rho) - minus_one).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: used,
    }
}

fn run_perfect_correlation_generic(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let n = random_direction(&mut ctx.rng);
        max = max.max((correlation(n, n, &rho) + 1.0).abs());
        let antipode = Direction::normalized(n.vec().scale(-1.0))
            .expect("antipode of a unit vector stays unit");
        max = max.max((correlation(n, antipode, &rho) - 1.0).abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_quantum_joint_agreement(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        max = max.max((singlet_correlation(a, b) - correlation(a, b, &rho)).abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_bivector_product_identity(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        for mu in Orientation::BOTH {
            max = max.max(bivector_identity_residual(a, b, mu).max_abs());
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_commutator_relation(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let (a, b) = random_nondegenerate_pair(&mut ctx.rng);
        for mu in Orientation::BOTH {
            max = max.max(commutator_relation_residual(a, b, mu).max_abs());
            match commutator_relation(a, b, mu) {
                Ok(rel) => max = max.max(rel.normalized_residual.max_abs()),
                Err(_) => max = f64::INFINITY,
            }
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_factorizability(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        let mu = random_orientation(&mut ctx.rng);
        let joint = joint_observable(a, b, mu);
        let factored = mu.product(observable(a, mu), observable(b, mu));
        max = max.max((joint - factored).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_parameter_independence(ctx: &mut CheckCtx) -> RunOutput {
    let tol = Tolerance::default();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        let b_prime = random_direction(&mut ctx.rng);
        for mu in Orientation::BOTH {
            let check = parameter_independence_check(a, b, b_prime, mu, tol);
            max = max.max(check.max_residual);
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_outcome_independence(ctx: &mut CheckCtx) -> RunOutput {
    let tol = Tolerance::default();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let (a, b) = random_nondegenerate_pair(&mut ctx.rng);
        match outcome_independence_check(a, b, tol) {
            Ok(check) => max = max.max(check.max_residual),
            Err(_) => max = f64::INFINITY,
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_measure_setting_independence(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        // Drawing settings must leave the measure's weights untouched, and
        // averaging a settings-independent constant must return it exactly.
        let _a = random_direction(&mut ctx.rng);
        let _b = random_direction(&mut ctx.rng);
        max = max.max((rho.weight(Orientation::Plus) - 0.5).abs());
        max = max.max((rho.weight(Orientation::Minus) - 0.5).abs());
        let c = random_multivector(&mut ctx.rng);
        max = max.max((rho.average(|_| c) - c).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_chsh_linearity(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let cfg = random_config(ctx);
        let sum = correlation(cfg.a, cfg.b, &rho)
            + correlation(cfg.a, cfg.b_prime, &rho)
            + correlation(cfg.a_prime, cfg.b, &rho)
            - correlation(cfg.a_prime, cfg.b_prime, &rho);
        max = max.max((chsh_value(&cfg, &rho) - sum).abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_seevinck_product_identity(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let cfg = random_config(ctx);
        for mu in Orientation::BOTH {
            let product = seevinck_product(&cfg, mu);
            let closed = mu.product(
                mu.project(cross(cfg.a.vec(), cfg.a_prime.vec())),
                mu.project(cross(cfg.b_prime.vec(), cfg.b.vec())),
            ) * 4.0;
            max = max.max((product - closed).max_abs());
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_seevinck_average(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let cfg = random_config(ctx);
        let avg = seevinck_average(&cfg, &rho);
        let expected =
            -4.0 * cross(cfg.a.vec(), cfg.a_prime.vec()).dot(cross(cfg.b_prime.vec(), cfg.b.vec()));
        max = max.max((avg.scalar_part() - expected).abs());
        max = max.max((avg - grade(avg, 0)).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_cross_commutator_average(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let b = random_direction(&mut ctx.rng);
        max = max.max(rho.average(|mu| cross_commutator(a, b, mu)).max_abs());
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_model_bound_range(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let cfg = random_config(ctx);
        let bound = model_bound(&cfg);
        max = max.max((2.0 - bound).max(0.0));
        max = max.max((bound - 2.0 * SQRT_2).max(0.0));
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_chsh_extremum(_ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    match chsh_sweep(Plane::Xy, FRAC_PI_4, &rho) {
        Ok(sweep) => RunOutput {
            max_residual: (sweep.summary.max_abs_chsh - 2.0 * SQRT_2).abs(),
            samples_used: sweep.rows.len() as u32,
        },
        Err(_) => RunOutput {
            max_residual: f64::INFINITY,
            samples_used: 0,
        },
    }
}

fn run_bell_squared_identity(ctx: &mut CheckCtx) -> RunOutput {
    let tol = Tolerance::default();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let cfg = random_config(ctx);
        max = max.max(bell_operator_squared_check(&cfg, tol).residual);
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_bell_expectation_agreement(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let cfg = random_config(ctx);
        match singlet_expectation(&bell_operator(&cfg)) {
            Ok(quantum) => max = max.max((quantum - chsh_value(&cfg, &rho)).abs()),
            Err(_) => max = f64::INFINITY,
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_qm_bound_consistency(ctx: &mut CheckCtx) -> RunOutput {
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let cfg = random_config(ctx);
        let qb = qm_chsh_bound(&cfg);
        let closed = 4.0 - 4.0 * qb.triple_b_cross_bprime;
        max = max.max((qb.b_squared_expectation - closed).abs());
        max = max.max((qb.bound - 2.0 * SQRT_2).max(0.0));
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_malus_expectation(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let a = random_direction(&mut ctx.rng);
        let p = random_direction(&mut ctx.rng);
        for s in [1, -1] {
            let prep = Preparation::new(p, s).expect("signs are valid");
            let e = malus_expectation(a, &prep, &rho);
            max = max.max((e - a.vec().dot(p.vec())).abs());
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}

fn run_malus_chain(ctx: &mut CheckCtx) -> RunOutput {
    let rho = balanced();
    let mut max = 0.0_f64;
    for _ in 0..ctx.samples {
        let p = random_direction(&mut ctx.rng);
        let analyzers = [
            random_direction(&mut ctx.rng),
            random_direction(&mut ctx.rng),
            random_direction(&mut ctx.rng),
        ];
        let prep = Preparation::new(p, 1).expect("signs are valid");
        match sequential_chain(&analyzers, &prep, &rho) {
            Ok(values) => {
                let mut previous = p;
                for (value, analyzer) in values.iter().zip(analyzers) {
                    max = max.max((value - analyzer.vec().dot(previous.vec())).abs());
                    previous = analyzer;
                }
            }
            Err(_) => max = f64::INFINITY,
        }
    }
    RunOutput {
        max_residual: max,
        samples_used: ctx.samples,
    }
}
