//! The four-setting correlation combination, its square, the commutator-based
//! decomposition of that square, and the resulting upper bound on the
//! combination's ensemble average.
//!
//! Everything here is exact two-point averaging over the orientation
//! microstate; the only approximation anywhere is f64 rounding, and the pass
//! tolerances are sized for that.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::epr::{joint_observable, observable, scalar_only, EnsembleMeasure, Orientation};
use crate::error::Error;
use crate::ga::{cross, norm, Direction, Multivector, Tolerance, Vec3};

/// Angles at and beyond `2π − SWEEP_WRAP_GUARD` are treated as a full turn
/// and excluded from sweep grids, so a grid never contains both 0 and 2π.
pub const SWEEP_WRAP_GUARD: f64 = 1e-9;

/// Cutoff for the non-scalar remnant of averages that must be scalar.
pub const SCALAR_CUTOFF: f64 = 1e-13;

/// A coordinate plane for coplanar analyzer configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Plane {
    Xy,
    Yz,
    Zx,
}

impl Plane {
    /// The unit direction at angle `theta`, measured from the plane's first
    /// axis toward its second.
    pub fn direction(self, theta: f64) -> Direction {
        let (c, s) = (theta.cos(), theta.sin());
        let v = match self {
            Plane::Xy => Vec3::new(c, s, 0.0),
            Plane::Yz => Vec3::new(0.0, c, s),
            Plane::Zx => Vec3::new(s, 0.0, c),
        };
        Direction::new(v.x, v.y, v.z).expect("cos/sin pairs are unit triples")
    }

    pub const fn as_str(self) -> &'static str {
        match self {
            Plane::Xy => "xy",
            Plane::Yz => "yz",
            Plane::Zx => "zx",
        }
    }
}

/// The four analyzer settings of one correlation experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshConfig {
    pub a: Direction,
    pub a_prime: Direction,
    pub b: Direction,
    pub b_prime: Direction,
}

impl ChshConfig {
    /// A coplanar configuration with the first station pinned at 0 and π/2
    /// and the second station's settings free.
    pub fn coplanar(plane: Plane, theta_b: f64, theta_b_prime: f64) -> Self {
        Self {
            a: plane.direction(0.0),
            a_prime: plane.direction(FRAC_PI_2),
            b: plane.direction(theta_b),
            b_prime: plane.direction(theta_b_prime),
        }
    }

    /// The analyzer configuration that maximizes the correlation combination:
    /// second-station settings midway between and opposite-midway between the
    /// first station's.
    pub fn maximal(plane: Plane) -> Self {
        Self::coplanar(plane, PI / 4.0, 7.0 * PI / 4.0)
    }
}

/// The value of the combination
/// `A_a B_b + A_a B_b′ + A_a′ B_b − A_a′ B_b′` at one microstate, every
/// product composed in the orientation's algebra.
///
/// The result is always a scalar plus a bivector: the scalar collects the
/// four `−x·y` terms and is the same for both orientations, while the
/// bivector is odd in μ and cancels from ensemble averages exactly.
pub fn f_cv(cfg: &ChshConfig, mu: Orientation) -> Multivector {
    joint_observable(cfg.a, cfg.b, mu)
        + joint_observable(cfg.a, cfg.b_prime, mu)
        + joint_observable(cfg.a_prime, cfg.b, mu)
        - joint_observable(cfg.a_prime, cfg.b_prime, mu)
}

/// The ensemble average of the combination, returned as a plain number after
/// asserting the non-scalar grades cancelled (to [`SCALAR_CUTOFF`]).
pub fn chsh_value(cfg: &ChshConfig, rho: &EnsembleMeasure) -> f64 {
    scalar_only(rho.average(|mu| f_cv(cfg, mu)), SCALAR_CUTOFF)
}

/// The exact square of the combination in the orientation's algebra.
pub fn f_squared_exact(cfg: &ChshConfig, mu: Orientation) -> Multivector {
    let f = f_cv(cfg, mu);
    mu.product(f, f)
}

/// The commutator of the two observables of one station at one microstate:
/// `[μ·p, μ·q] = −2 μ·(p×q)` in the orientation's algebra.
pub fn cross_commutator(p: Direction, q: Direction, mu: Orientation) -> Multivector {
    mu.commutator(observable(p, mu), observable(q, mu))
}

/// The square of the combination as decomposed through station commutators:
/// `4 + [A_a, A_a′][B_b′, B_b]`, all products in the orientation's algebra.
///
/// This decomposition treats the two stations' observables as mutually
/// commuting. In the one-algebra representation they do not commute, so this
/// generally differs from [`f_squared_exact`]; the gap is
/// [`decomposition_residual`] and is reported verbatim, never assumed zero.
pub fn f_squared_paper_decomposition(cfg: &ChshConfig, mu: Orientation) -> Multivector {
    let alice = cross_commutator(cfg.a, cfg.a_prime, mu);
    let bob = cross_commutator(cfg.b_prime, cfg.b, mu);
    Multivector::scalar(4.0) + mu.product(alice, bob)
}

/// `f_squared_exact − f_squared_paper_decomposition` at one microstate.
pub fn decomposition_residual(cfg: &ChshConfig, mu: Orientation) -> Multivector {
    f_squared_exact(cfg, mu) - f_squared_paper_decomposition(cfg, mu)
}

/// The product of the two station commutators at one microstate.
///
/// Internally cross-checked against its closed form
/// `4 (μ·(a×a′)) ∘ (μ·(b′×b))`.
pub fn seevinck_product(cfg: &ChshConfig, mu: Orientation) -> Multivector {
    let alice = cross_commutator(cfg.a, cfg.a_prime, mu);
    let bob = cross_commutator(cfg.b_prime, cfg.b, mu);
    let product = mu.product(alice, bob);
    let closed = mu.product(
        mu.project(cross(cfg.a.vec(), cfg.a_prime.vec())),
        mu.project(cross(cfg.b_prime.vec(), cfg.b.vec())),
    ) * 4.0;
    let gap = (product - closed).max_abs();
    assert!(
        gap <= 1e-12,
        "commutator product drifted from closed form: {gap}"
    );
    product
}

/// The ensemble average of the commutator product. Its scalar part is
/// `−4 (a×a′)·(b′×b)`; all other grades cancel exactly.
pub fn seevinck_average(cfg: &ChshConfig, rho: &EnsembleMeasure) -> Multivector {
    rho.average(|mu| seevinck_product(cfg, mu))
}

/// The model's upper bound on the absolute combination average:
/// `√(4 + 4 |(a×a′)·(b′×b)|)`, which lies in [2, 2√2] for unit settings.
pub fn model_bound(cfg: &ChshConfig) -> f64 {
    let u = cross(cfg.a.vec(), cfg.a_prime.vec());
    let v = cross(cfg.b_prime.vec(), cfg.b.vec());
    (4.0 + 4.0 * u.dot(v).abs()).sqrt()
}

/// Whether `⟨F⟩² ≤ ⟨F²⟩₀ + tol` holds for this configuration — the
/// non-negative-variance premise of the bound derivation.
///
/// This is diagnostic output: reports carry the verdict but nothing asserts
/// it, because the exact square's scalar average drops below `⟨F⟩²` whenever
/// the four pairwise cross terms fail to cancel.
pub fn variance_inequality_check(cfg: &ChshConfig, rho: &EnsembleMeasure, tol: Tolerance) -> bool {
    let mean = chsh_value(cfg, rho);
    let square = rho.average(|mu| f_squared_exact(cfg, mu)).scalar_part();
    mean * mean <= square + tol.eps()
}

/// Everything the harness reports about one analyzer configuration.
///
/// Field order here is the serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChshReport {
    /// Ensemble average of the combination.
    pub chsh_value: f64,
    /// `√(4 + 4 |(a×a′)·(b′×b)|)`.
    pub model_bound: f64,
    /// Ensemble average of the exact square (all eight coefficients).
    pub f2_exact_avg: Multivector,
    /// Scalar ensemble average of the commutator decomposition of the square.
    pub f2_paper_avg: f64,
    /// Ensemble average of (exact square − decomposed square), verbatim.
    pub residual: Multivector,
    /// Norms of the ensemble-averaged cross-station commutators for the
    /// pairs (a,b), (a,b′), (a′,b), (a′,b′).
    pub cross_comm_norms: [f64; 4],
    /// Verdict of [`variance_inequality_check`].
    pub variance_check: bool,
}

/// Runs the full battery on one configuration.
pub fn chsh_report(cfg: &ChshConfig, rho: &EnsembleMeasure, tol: Tolerance) -> ChshReport {
    let station_pairs = [
        (cfg.a, cfg.b),
        (cfg.a, cfg.b_prime),
        (cfg.a_prime, cfg.b),
        (cfg.a_prime, cfg.b_prime),
    ];
    let cross_comm_norms = station_pairs
        .map(|(p, q)| norm(rho.average(|mu| mu.commutator(observable(p, mu), observable(q, mu)))));
    ChshReport {
        chsh_value: chsh_value(cfg, rho),
        model_bound: model_bound(cfg),
        f2_exact_avg: rho.average(|mu| f_squared_exact(cfg, mu)),
        f2_paper_avg: scalar_only(
            rho.average(|mu| f_squared_paper_decomposition(cfg, mu)),
            SCALAR_CUTOFF,
        ),
        residual: rho.average(|mu| decomposition_residual(cfg, mu)),
        cross_comm_norms,
        variance_check: variance_inequality_check(cfg, rho, tol),
    }
}

/// One grid point of a coplanar sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub b_rad: f64,
    pub b_prime_rad: f64,
    pub report: ChshReport,
}

/// The location and size of the largest absolute combination average found.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepSummary {
    pub max_abs_chsh: f64,
    pub at_b_rad: f64,
    pub at_b_prime_rad: f64,
    pub a_rad: f64,
    pub a_prime_rad: f64,
}

/// A full coplanar sweep: the grid is `θ_k = k·step` for all `k ≥ 0` with
/// `θ_k < 2π − SWEEP_WRAP_GUARD`, in row-major (b outer, b′ inner) order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChshSweep {
    pub plane: Plane,
    pub step_rad: f64,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

/// The sweep grid for a step: `θ_k = k·step` while `θ_k < 2π − guard`.
/// `step` must be finite, positive, and at most π, so every grid has at
/// least two angles.
pub fn angle_grid(step: f64) -> Result<Vec<f64>, Error> {
    if !step.is_finite() || step <= 0.0 || step > PI {
        return Err(Error::InvalidStep { step });
    }
    let mut angles = Vec::new();
    for k in 0u32.. {
        let theta = f64::from(k) * step;
        if theta >= TAU - SWEEP_WRAP_GUARD {
            break;
        }
        angles.push(theta);
    }
    Ok(angles)
}

/// Sweeps both second-station settings over the grid with the first station
/// pinned at 0 and π/2 in the plane.
///
/// Rows are computed in parallel but collected in grid order, and the
/// argmax scan is sequential first-wins, so output is independent of thread
/// count. `step` must be finite, positive, and at most π.
pub fn chsh_sweep(plane: Plane, step: f64, rho: &EnsembleMeasure) -> Result<ChshSweep, Error> {
    let angles = angle_grid(step)?;
    let grid: Vec<(f64, f64)> = angles
        .iter()
        .flat_map(|&b| angles.iter().map(move |&bp| (b, bp)))
        .collect();
    let tol = Tolerance::default();
    let rho = *rho;
    let rows: Vec<SweepRow> = grid
        .par_iter()
        .map(|&(b_rad, b_prime_rad)| {
            let cfg = ChshConfig::coplanar(plane, b_rad, b_prime_rad);
            SweepRow {
                b_rad,
                b_prime_rad,
                report: chsh_report(&cfg, &rho, tol),
            }
        })
        .collect();

    let mut best = 0usize;
    for (i, row) in rows.iter().enumerate() {
        if row.report.chsh_value.abs() > rows[best].report.chsh_value.abs() {
            best = i;
        }
    }
    let summary = SweepSummary {
        max_abs_chsh: rows[best].report.chsh_value.abs(),
        at_b_rad: rows[best].b_rad,
        at_b_prime_rad: rows[best].b_prime_rad,
        a_rad: 0.0,
        a_prime_rad: FRAC_PI_2,
    };
    Ok(ChshSweep {
        plane,
        step_rad: step,
        rows,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn dir(x: f64, y: f64, z: f64) -> Direction {
        Direction::normalized(Vec3::new(x, y, z)).unwrap()
    }

    fn maximal_exact() -> ChshConfig {
        ChshConfig {
            a: dir(1.0, 0.0, 0.0),
            a_prime: dir(0.0, 1.0, 0.0),
            b: dir(1.0, 1.0, 0.0),
            b_prime: dir(1.0, -1.0, 0.0),
        }
    }

    #[test]
    fn maximal_configuration_report() {
        let rho = EnsembleMeasure::balanced();
        let report = chsh_report(&maximal_exact(), &rho, Tolerance::default());

        assert!((report.chsh_value + 2.0 * SQRT_2).abs() < 1e-12);
        assert!((report.model_bound - 2.0 * SQRT_2).abs() < 1e-12);
        assert!((report.f2_exact_avg.scalar_part() - 8.0).abs() < 1e-12);
        let nonscalar = report.f2_exact_avg - crate::ga::grade(report.f2_exact_avg, 0);
        assert_eq!(nonscalar.max_abs(), 0.0);
        assert!(report.f2_paper_avg.abs() < 1e-12);
        assert!((report.residual.scalar_part() - 8.0).abs() < 1e-12);
        assert_eq!(report.cross_comm_norms, [0.0; 4]);
        assert!(report.variance_check);
    }

    #[test]
    fn coincident_settings_report() {
        let rho = EnsembleMeasure::balanced();
        let x = dir(1.0, 0.0, 0.0);
        let cfg = ChshConfig {
            a: x,
            a_prime: x,
            b: x,
            b_prime: x,
        };
        let report = chsh_report(&cfg, &rho, Tolerance::default());
        assert_eq!(report.chsh_value, -2.0);
        assert_eq!(report.f2_exact_avg, Multivector::scalar(4.0));
        assert_eq!(report.f2_paper_avg, 4.0);
        assert_eq!(report.residual, Multivector::zero());
        assert_eq!(report.model_bound, 2.0);
        assert!(report.variance_check);
    }

    #[test]
    fn combination_is_scalar_plus_bivector() {
        let cfg = ChshConfig {
            a: dir(0.3, -0.5, 0.81),
            a_prime: dir(0.9, 0.1, -0.4),
            b: dir(-0.2, 0.7, 0.69),
            b_prime: dir(0.5, 0.5, -0.7),
        };
        for mu in Orientation::BOTH {
            let f = f_cv(&cfg, mu);
            assert_eq!(f.vector_part().norm(), 0.0);
            assert_eq!(f.trivector_part(), 0.0);
        }
        // The two orientations share the scalar and negate the bivector.
        let plus = f_cv(&cfg, Orientation::Plus);
        let minus = f_cv(&cfg, Orientation::Minus);
        assert_eq!(plus.scalar_part(), minus.scalar_part());
        assert_eq!(plus.bivector_part() + minus.bivector_part(), Vec3::zero());
    }

    #[test]
    fn seevinck_product_and_average() {
        let rho = EnsembleMeasure::balanced();
        let cfg = ChshConfig {
            a: dir(1.0, 0.0, 0.0),
            a_prime: dir(0.0, 1.0, 0.0),
            b: dir(1.0, 0.0, 0.0),
            b_prime: dir(0.0, 1.0, 0.0),
        };
        let avg = seevinck_average(&cfg, &rho);
        // −4 (x̂×ŷ)·(ŷ×x̂) = +4, with every other grade cancelling exactly.
        assert_eq!(avg, Multivector::scalar(4.0));

        let skew = ChshConfig {
            a: dir(0.6, 0.0, 0.8),
            a_prime: dir(0.0, 1.0, 0.0),
            b: dir(0.0, 0.6, 0.8),
            b_prime: dir(1.0, 0.0, 0.0),
        };
        let avg = seevinck_average(&skew, &rho);
        let expected = -4.0
            * cross(skew.a.vec(), skew.a_prime.vec()).dot(cross(skew.b_prime.vec(), skew.b.vec()));
        assert!((avg.scalar_part() - expected).abs() < 1e-14);
        assert_eq!((avg - crate::ga::grade(avg, 0)).max_abs(), 0.0);
    }

    #[test]
    fn cross_commutator_example() {
        let x = dir(1.0, 0.0, 0.0);
        let y = dir(0.0, 1.0, 0.0);
        let comm = cross_commutator(x, y, Orientation::Plus);
        assert_eq!(comm, Multivector::basis(6) * -2.0);
        assert_eq!(norm(comm), 2.0);
        // Opposite orientation flips the commutator's sense.
        assert_eq!(
            cross_commutator(x, y, Orientation::Minus),
            Multivector::basis(6) * 2.0
        );
    }

    #[test]
    fn model_bound_range() {
        let bound = model_bound(&maximal_exact());
        assert!((bound - 2.0 * SQRT_2).abs() < 1e-12);
        let x = dir(1.0, 0.0, 0.0);
        let degenerate = ChshConfig {
            a: x,
            a_prime: x,
            b: x,
            b_prime: x,
        };
        assert_eq!(model_bound(&degenerate), 2.0);
    }

    #[test]
    fn sweep_quarter_turn() {
        let rho = EnsembleMeasure::balanced();
        let sweep = chsh_sweep(Plane::Xy, FRAC_PI_2, &rho).unwrap();
        assert_eq!(sweep.rows.len(), 16);

        // The all-orthogonal row: b at 0, b′ at π.
        let row = sweep
            .rows
            .iter()
            .find(|r| r.b_rad == 0.0 && (r.b_prime_rad - PI).abs() < 1e-12)
            .expect("grid contains (0, π)");
        assert!(row.report.chsh_value.abs() < 1e-15);

        // On this coarse grid the extremum is ±2, first reached at (0, 0).
        assert!((sweep.summary.max_abs_chsh - 2.0).abs() < 1e-12);
        assert_eq!(sweep.summary.at_b_rad, 0.0);
        assert_eq!(sweep.summary.at_b_prime_rad, 0.0);
        assert_eq!(sweep.summary.a_rad, 0.0);
        assert_eq!(sweep.summary.a_prime_rad, FRAC_PI_2);
    }

    #[test]
    fn sweep_step_validation() {
        let rho = EnsembleMeasure::balanced();
        for bad in [0.0, -0.5, PI + 0.1, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                chsh_sweep(Plane::Xy, bad, &rho),
                Err(Error::InvalidStep { .. })
            ));
        }
        let sweep = chsh_sweep(Plane::Yz, PI, &rho).unwrap();
        assert_eq!(sweep.rows.len(), 4);
    }

    #[test]
    fn maximal_constructor_matches_handpicked() {
        let rho = EnsembleMeasure::balanced();
        let via_angles = chsh_report(&ChshConfig::maximal(Plane::Xy), &rho, Tolerance::default());
        let via_coords = chsh_report(&maximal_exact(), &rho, Tolerance::default());
        assert!((via_angles.chsh_value - via_coords.chsh_value).abs() < 1e-12);
        assert!(via_angles.variance_check);
    }
}
