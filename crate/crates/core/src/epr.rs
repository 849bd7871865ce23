//! The local model: orientation microstates μ = ±I, bivector observables
//! μ·n, the two-point ensemble measure, and the locality-condition verifiers.
//!
//! A microstate is the handedness of the unit volume element. Values of
//! observables are full multivectors; expectation values are exact two-term
//! weighted sums over the two orientations, so "averaging" here is closed-form
//! arithmetic, not Monte Carlo estimation.
//!
//! # Composition order
//!
//! The handedness of μ fixes more than a sign: it selects which of the two
//! mutually opposite algebras the observables multiply in. Words of
//! observables compose left-to-right for μ = +I and right-to-left for μ = −I
//! ([`Orientation::product`]). This is what makes the product identity
//!
//! ```text
//! (μ·a)(μ·b) = −a·b − μ·(a×b)
//! ```
//!
//! and the commutator relation `[μ·a, μ·b] = −2 μ·(a×b)` hold per microstate
//! for both orientations, and it is why the non-scalar grades of every
//! ensemble average cancel exactly rather than approximately.

use crate::error::Error;
use crate::ga::{
    cross, dual, geometric_product, grade, versor_inverse, Direction, Multivector, Tolerance, Vec3,
};

/// Cross-product norm below which a pair of directions is treated as parallel
/// and the normalized rotation axis is refused.
pub const DEGENERACY_CUTOFF: f64 = 1e-9;

/// The microstate μ ∈ {+I, −I}, stored as the sign of its handedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Plus, Orientation::Minus];

    pub const fn sign(self) -> f64 {
        match self {
            Orientation::Plus => 1.0,
            Orientation::Minus => -1.0,
        }
    }

    pub const fn flip(self) -> Orientation {
        match self {
            Orientation::Plus => Orientation::Minus,
            Orientation::Minus => Orientation::Plus,
        }
    }

    /// The trivector μ itself.
    pub fn trivector(self) -> Multivector {
        Multivector::trivector(self.sign())
    }

    /// The projection μ·v for an arbitrary (not necessarily unit) vector:
    /// the bivector `sign(μ) · I v`.
    pub fn project(self, v: Vec3) -> Multivector {
        Multivector::bivector(v.scale(self.sign()))
    }

    /// Composes two observable values in the order induced by this
    /// orientation's handedness: `x y` for +I, `y x` for −I.
    pub fn product(self, x: Multivector, y: Multivector) -> Multivector {
        match self {
            Orientation::Plus => geometric_product(x, y),
            Orientation::Minus => geometric_product(y, x),
        }
    }

    /// Composes a word of observable values: left-to-right for +I,
    /// right-to-left for −I. Empty words compose to 1.
    pub fn product_all(self, factors: &[Multivector]) -> Multivector {
        let fold = |acc: Multivector, f: &Multivector| geometric_product(acc, *f);
        match self {
            Orientation::Plus => factors.iter().fold(Multivector::scalar(1.0), fold),
            Orientation::Minus => factors.iter().rev().fold(Multivector::scalar(1.0), fold),
        }
    }

    /// The commutator in the orientation's algebra.
    pub fn commutator(self, x: Multivector, y: Multivector) -> Multivector {
        self.product(x, y) - self.product(y, x)
    }
}

/// The probability measure over the two orientations: the averaging contract
/// for every ensemble expectation in the model.
///
/// Defaults to the balanced two-point measure {+I: ½, −I: ½}; unbalanced
/// weights are accepted for sensitivity experiments but never used by the
/// shipped checks.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EnsembleMeasure {
    w_plus: f64,
    w_minus: f64,
}

impl EnsembleMeasure {
    /// The uniform two-point measure.
    pub const fn balanced() -> Self {
        Self {
            w_plus: 0.5,
            w_minus: 0.5,
        }
    }

    pub fn new(w_plus: f64, w_minus: f64) -> Result<Self, Error> {
        let valid = w_plus.is_finite()
            && w_minus.is_finite()
            && w_plus >= 0.0
            && w_minus >= 0.0
            && (w_plus + w_minus - 1.0).abs() <= 1e-12;
        if !valid {
            return Err(Error::InvalidWeights { w_plus, w_minus });
        }
        Ok(Self { w_plus, w_minus })
    }

    pub const fn weight(&self, mu: Orientation) -> f64 {
        match mu {
            Orientation::Plus => self.w_plus,
            Orientation::Minus => self.w_minus,
        }
    }

    /// The weighted two-term average of a multivector-valued function of μ.
    ///
    /// Under the balanced measure, any function odd in μ averages to the
    /// exact zero multivector: the two coefficient arrays are exact
    /// negations, and `w·c + w·(−c)` is +0.0 in IEEE arithmetic.
    pub fn average<F>(&self, f: F) -> Multivector
    where
        F: Fn(Orientation) -> Multivector,
    {
        let p = f(Orientation::Plus);
        let m = f(Orientation::Minus);
        Multivector(std::array::from_fn(|k| {
            self.w_plus * p.0[k] + self.w_minus * m.0[k]
        }))
    }

    /// Same contract for plain scalar functions of μ.
    pub fn average_scalar<F>(&self, f: F) -> f64
    where
        F: Fn(Orientation) -> f64,
    {
        self.w_plus * f(Orientation::Plus) + self.w_minus * f(Orientation::Minus)
    }
}

impl Default for EnsembleMeasure {
    fn default() -> Self {
        Self::balanced()
    }
}

/// A spin observable along an analyzer direction: its value at a microstate
/// is the unit bivector μ·n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observable {
    pub direction: Direction,
}

impl Observable {
    pub const fn new(direction: Direction) -> Self {
        Self { direction }
    }

    /// `sign(μ) · I n`: a pure bivector of unit norm squaring to −1.
    pub fn value_at(&self, mu: Orientation) -> Multivector {
        observable(self.direction, mu)
    }
}

/// The observable value μ·n.
pub fn observable(n: Direction, mu: Orientation) -> Multivector {
    dual(n) * mu.sign()
}

/// The two-point weighted average of `f` over the orientations.
pub fn ensemble_average<F>(f: F, rho: &EnsembleMeasure) -> Multivector
where
    F: Fn(Orientation) -> Multivector,
{
    rho.average(f)
}

/// The value of the joint observable at one microstate: the composed product
/// of the two station observables.
pub fn joint_observable(a: Direction, b: Direction, mu: Orientation) -> Multivector {
    mu.product(observable(a, mu), observable(b, mu))
}

/// The ensemble average of (μ·a)(μ·b). Its grade-0 part equals −a·b; the
/// μ·(a×b) term is odd in μ and cancels exactly across the two orientations.
pub fn joint_expectation(a: Direction, b: Direction, rho: &EnsembleMeasure) -> Multivector {
    rho.average(|mu| joint_observable(a, b, mu))
}

/// Residual of the central product identity:
/// `(μ·a)(μ·b) − (−a·b − μ·(a×b))`. Zero for both orientations.
pub fn bivector_identity_residual(a: Direction, b: Direction, mu: Orientation) -> Multivector {
    let lhs = joint_observable(a, b, mu);
    let rhs = Multivector::scalar(-a.vec().dot(b.vec())) - mu.project(cross(a.vec(), b.vec()));
    lhs - rhs
}

/// Residual of the unnormalized commutator relation:
/// `[μ·a, μ·b] + 2 μ·(a×b)`. Zero for both orientations, including parallel
/// pairs (where both terms vanish).
pub fn commutator_relation_residual(a: Direction, b: Direction, mu: Orientation) -> Multivector {
    let comm = mu.commutator(observable(a, mu), observable(b, mu));
    comm + mu.project(cross(a.vec(), b.vec())) * 2.0
}

/// The commutator relation in normalized form, with the rotation axis
/// `z = (a×b)/sin θ` and the factor `sin θ` exposed.
#[derive(Debug, Clone, Copy)]
pub struct CommutatorRelation {
    /// `[μ·a, μ·b]` in the orientation's algebra.
    pub commutator: Multivector,
    /// Unnormalized residual `[μ·a, μ·b] + 2 μ·(a×b)`.
    pub residual: Multivector,
    /// The unit axis `(a×b) / sin θ`.
    pub axis: Direction,
    /// `sin θ = |a×b|` for unit inputs.
    pub sin_theta: f64,
    /// Residual of the normalized form `[μ·a, μ·b] + 2 (μ·z) sin θ`.
    pub normalized_residual: Multivector,
}

/// Computes the commutator relation with the normalized axis form.
///
/// Fails with [`Error::DegenerateDirections`] when `|a×b|` is below the
/// cutoff; the unnormalized residual is still available through
/// [`commutator_relation_residual`] in that case.
pub fn commutator_relation(
    a: Direction,
    b: Direction,
    mu: Orientation,
) -> Result<CommutatorRelation, Error> {
    let axb = cross(a.vec(), b.vec());
    let sin_theta = axb.norm();
    if sin_theta < DEGENERACY_CUTOFF {
        return Err(Error::DegenerateDirections {
            cross_norm: sin_theta,
        });
    }
    let axis = Direction::normalized(axb)?;
    let comm = mu.commutator(observable(a, mu), observable(b, mu));
    Ok(CommutatorRelation {
        commutator: comm,
        residual: comm + mu.project(axb) * 2.0,
        axis,
        sin_theta,
        normalized_residual: comm + mu.project(axis.vec()) * (2.0 * sin_theta),
    })
}

/// Both sides of the remote-parameter-independence equality, plus the reduced
/// vector identity, evaluated entirely inside the algebra.
#[derive(Debug, Clone, Copy)]
pub struct ParameterIndependence {
    /// `B_b A_a B_b⁻¹ − 2{μ·(a×b)} B_b⁻¹` composed in the orientation's algebra.
    pub side_b: Multivector,
    /// The same expression with `b` replaced by `b′`.
    pub side_b_prime: Multivector,
    /// `side_b′ − side_b`; zero when the remote setting cannot matter.
    pub equality_residual: Multivector,
    /// `side_b − μ·a`: each side reduces to the local observable itself.
    pub local_residual_b: Multivector,
    pub local_residual_b_prime: Multivector,
    /// Residual of `x a x − 2 x(a·x) + a` for x = b and x = b′ (both sides of
    /// the reduced identity equal −a).
    pub reduced_residual_b: Multivector,
    pub reduced_residual_b_prime: Multivector,
    pub max_residual: f64,
    pub holds: bool,
}

fn parameter_independence_side(a: Direction, x: Direction, mu: Orientation) -> Multivector {
    let a_obs = observable(a, mu);
    let b_obs = observable(x, mu);
    let b_inv = versor_inverse(b_obs).expect("unit bivectors are invertible");
    let sandwich = mu.product_all(&[b_obs, a_obs, b_inv]);
    let gauge = mu.product(mu.project(cross(a.vec(), x.vec())), b_inv);
    sandwich - gauge * 2.0
}

fn reduced_reflection_residual(a: Direction, x: Direction) -> Multivector {
    let av = Multivector::vector(a.vec());
    let xv = Multivector::vector(x.vec());
    let reflected = geometric_product(geometric_product(xv, av), xv);
    let projection = Multivector::vector(x.vec().scale(2.0 * a.vec().dot(x.vec())));
    reflected - projection + av
}

/// Verifies that changing the remote setting from `b` to `b_prime` leaves the
/// local observable's defining relation untouched, and that the underlying
/// reduced identity `x a x − 2 x(a·x) = −a` holds for both settings.
pub fn parameter_independence_check(
    a: Direction,
    b: Direction,
    b_prime: Direction,
    mu: Orientation,
    tol: Tolerance,
) -> ParameterIndependence {
    let side_b = parameter_independence_side(a, b, mu);
    let side_b_prime = parameter_independence_side(a, b_prime, mu);
    let local = observable(a, mu);
    let equality_residual = side_b_prime - side_b;
    let local_residual_b = side_b - local;
    let local_residual_b_prime = side_b_prime - local;
    let reduced_residual_b = reduced_reflection_residual(a, b);
    let reduced_residual_b_prime = reduced_reflection_residual(a, b_prime);
    let max_residual = [
        equality_residual,
        local_residual_b,
        local_residual_b_prime,
        reduced_residual_b,
        reduced_residual_b_prime,
    ]
    .iter()
    .fold(0.0_f64, |m, r| m.max(r.max_abs()));
    ParameterIndependence {
        side_b,
        side_b_prime,
        equality_residual,
        local_residual_b,
        local_residual_b_prime,
        reduced_residual_b,
        reduced_residual_b_prime,
        max_residual,
        holds: max_residual <= tol.eps(),
    }
}

/// The senses of rotation of the three bivectors in the outcome-independence
/// analysis. The third sign is never free: the axis bivector co-rotates with
/// the product of the other two senses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignTriple {
    pub s_a: i8,
    pub s_b: i8,
    pub s_c: i8,
}

impl SignTriple {
    /// Builds the triple from the two outcome signs; `s_c = s_a · s_b`.
    ///
    /// # Panics
    /// Panics unless both inputs are ±1.
    pub fn new(s_a: i8, s_b: i8) -> Self {
        assert!(s_a == 1 || s_a == -1, "s_a must be +1 or -1");
        assert!(s_b == 1 || s_b == -1, "s_b must be +1 or -1");
        Self {
            s_a,
            s_b,
            s_c: s_a * s_b,
        }
    }

    pub const ALL: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
}

/// One sign case of the outcome-independence equality.
#[derive(Debug, Clone, Copy)]
pub struct OutcomeCase {
    pub signs: SignTriple,
    /// `−B A B + 2 C B sin θ` with the signed observables.
    pub value: Multivector,
    /// `value − A`: the expression reduces to the local observable alone.
    pub residual: Multivector,
}

/// All four sign cases of the outcome-independence analysis.
#[derive(Debug, Clone, Copy)]
pub struct OutcomeIndependence {
    pub cases: [OutcomeCase; 4],
    pub max_residual: f64,
    pub holds: bool,
}

/// Evaluates `−B^(sB) A^(sA) B^(sB) + 2 C^(sC) B^(sB) sin θ` for all four
/// outcome sign assignments, with `C`'s sense co-varying as `sC = sA·sB`.
///
/// The signed observables are outcome-labelled rather than tied to a single
/// global microstate, so the products here are ordinary fixed-order products;
/// the geometric sign rule on `C` is exactly what makes every case reduce to
/// `sA · I a`, independent of `B`'s outcome.
pub fn outcome_independence_check(
    a: Direction,
    b: Direction,
    tol: Tolerance,
) -> Result<OutcomeIndependence, Error> {
    let axb = cross(a.vec(), b.vec());
    let sin_theta = axb.norm();
    if sin_theta < DEGENERACY_CUTOFF {
        return Err(Error::DegenerateDirections {
            cross_norm: sin_theta,
        });
    }
    let z = Direction::normalized(axb)?;
    let mut cases = [OutcomeCase {
        signs: SignTriple::new(1, 1),
        value: Multivector::zero(),
        residual: Multivector::zero(),
    }; 4];
    let mut max_residual = 0.0_f64;
    for (slot, (s_a, s_b)) in SignTriple::ALL.iter().enumerate() {
        let signs = SignTriple::new(*s_a, *s_b);
        let a_signed = dual(a) * f64::from(signs.s_a);
        let b_signed = dual(b) * f64::from(signs.s_b);
        let c_signed = dual(z) * f64::from(signs.s_c);
        let value = -geometric_product(geometric_product(b_signed, a_signed), b_signed)
            + geometric_product(c_signed, b_signed) * (2.0 * sin_theta);
        let residual = value - a_signed;
        max_residual = max_residual.max(residual.max_abs());
        cases[slot] = OutcomeCase {
            signs,
            value,
            residual,
        };
    }
    Ok(OutcomeIndependence {
        cases,
        max_residual,
        holds: max_residual <= tol.eps(),
    })
}

/// Verifies that the joint observable — defined as the composed product —
/// equals the product of the separately constructed station observables,
/// coefficient for coefficient.
pub fn factorizability_check(a: Direction, b: Direction, mu: Orientation, tol: Tolerance) -> bool {
    let joint = joint_observable(a, b, mu);
    let alice = Observable::new(a).value_at(mu);
    let bob = Observable::new(b).value_at(mu);
    let factored = mu.product(alice, bob);
    (joint - factored).max_abs() <= tol.eps()
}

/// The binary readout of μ·n: the sense of rotation of the bivector about
/// its own axis, which is the handedness of μ regardless of `n`.
pub fn event_readout(_n: Direction, mu: Orientation) -> i8 {
    match mu {
        Orientation::Plus => 1,
        Orientation::Minus => -1,
    }
}

/// The event-level correlation from exact enumeration of the two-point
/// measure: `Σ_μ w(μ) · readout(a, μ) · readout(b, μ)`.
///
/// Diagnostic only. Reports juxtapose this number with the grade-0 part of
/// [`joint_expectation`]; the two follow different prescriptions and are not
/// asserted to agree.
pub fn event_level_correlation(a: Direction, b: Direction, rho: &EnsembleMeasure) -> f64 {
    rho.average_scalar(|mu| f64::from(event_readout(a, mu)) * f64::from(event_readout(b, mu)))
}

/// Grade-0 part of the joint expectation as a plain number.
pub fn correlation(a: Direction, b: Direction, rho: &EnsembleMeasure) -> f64 {
    joint_expectation(a, b, rho).scalar_part()
}

/// Convenience: asserts the non-scalar grades of an average vanished.
pub fn scalar_only(x: Multivector, cutoff: f64) -> f64 {
    let rest = x - grade(x, 0);
    assert!(
        rest.max_abs() <= cutoff,
        "non-scalar grades failed to cancel: {} > {cutoff}",
        rest.max_abs()
    );
    x.scalar_part()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::approx_eq;

    fn dir(x: f64, y: f64, z: f64) -> Direction {
        Direction::normalized(Vec3::new(x, y, z)).unwrap()
    }

    #[test]
    fn observable_values() {
        let z = dir(0.0, 0.0, 1.0);
        assert_eq!(observable(z, Orientation::Plus), Multivector::basis(6));
        assert_eq!(observable(z, Orientation::Minus), -Multivector::basis(6));
        let n = dir(0.3, -0.7, 0.2);
        for mu in Orientation::BOTH {
            assert!((crate::ga::norm(observable(n, mu)) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn single_observable_averages_to_zero() {
        let rho = EnsembleMeasure::balanced();
        let n = dir(0.2, 0.5, -0.8);
        let avg = ensemble_average(|mu| observable(n, mu), &rho);
        assert_eq!(avg, Multivector::zero());
        assert_eq!(avg.max_abs(), 0.0);
    }

    #[test]
    fn odd_functions_average_to_exact_zero() {
        let rho = EnsembleMeasure::balanced();
        let a = dir(1.0, 2.0, 3.0);
        let b = dir(-2.0, 0.4, 1.1);
        let w = cross(a.vec(), b.vec());
        assert_eq!(
            ensemble_average(|mu| mu.trivector(), &rho),
            Multivector::zero()
        );
        assert_eq!(
            ensemble_average(|mu| mu.project(w), &rho),
            Multivector::zero()
        );
    }

    #[test]
    fn constant_functions_average_to_themselves() {
        let rho = EnsembleMeasure::balanced();
        let c = Multivector::scalar(0.25) + Multivector::basis(5) * -1.5;
        assert_eq!(ensemble_average(|_| c, &rho), c);
    }

    #[test]
    fn joint_expectation_is_minus_cosine() {
        let rho = EnsembleMeasure::balanced();
        let a = dir(1.0, 0.0, 0.0);
        let b60 = dir(0.5, 3.0_f64.sqrt() / 2.0, 0.0);
        let e = joint_expectation(a, b60, &rho);
        assert!((e.scalar_part() + 0.5).abs() < 1e-15);
        assert_eq!((e - grade(e, 0)).max_abs(), 0.0);

        let perp = dir(0.0, 1.0, 0.0);
        assert!(joint_expectation(a, perp, &rho).scalar_part().abs() < 1e-15);

        // Perfect correlation, bitwise at an exactly-unit setting.
        assert_eq!(joint_expectation(a, a, &rho), Multivector::scalar(-1.0));
    }

    #[test]
    fn product_identity_holds_for_both_orientations() {
        let a = dir(0.3, -0.2, 0.93);
        let b = dir(-0.5, 0.72, 0.1);
        for mu in Orientation::BOTH {
            let r = bivector_identity_residual(a, b, mu);
            assert!(r.max_abs() <= 1e-15, "mu {mu:?}: {}", r.max_abs());
        }
        // The orthogonal basis case lands exactly on a table entry.
        let ex = dir(1.0, 0.0, 0.0);
        let ey = dir(0.0, 1.0, 0.0);
        assert_eq!(
            joint_observable(ex, ey, Orientation::Plus),
            -Multivector::basis(6)
        );
        assert_eq!(
            bivector_identity_residual(ex, ey, Orientation::Plus),
            Multivector::zero()
        );
        // a = b reduces to the unit-bivector square.
        for mu in Orientation::BOTH {
            let r = bivector_identity_residual(ex, ex, mu);
            assert_eq!(r, Multivector::zero());
        }
    }

    #[test]
    fn commutator_relation_values() {
        let ex = dir(1.0, 0.0, 0.0);
        let ey = dir(0.0, 1.0, 0.0);
        let rel = commutator_relation(ex, ey, Orientation::Plus).unwrap();
        assert_eq!(rel.commutator, Multivector::basis(6) * -2.0);
        assert_eq!(rel.residual, Multivector::zero());
        assert_eq!(rel.normalized_residual, Multivector::zero());
        assert!((rel.sin_theta - 1.0).abs() < 1e-15);

        let a = dir(0.1, 0.9, -0.4);
        let b = dir(0.8, -0.3, 0.5);
        for mu in Orientation::BOTH {
            assert!(commutator_relation_residual(a, b, mu).max_abs() <= 1e-15);
            let rel = commutator_relation(a, b, mu).unwrap();
            assert!(rel.normalized_residual.max_abs() <= 1e-14);
        }

        // Parallel settings: commutator vanishes, normalized form errors out.
        assert_eq!(
            commutator_relation_residual(ex, ex, Orientation::Plus),
            Multivector::zero()
        );
        assert!(matches!(
            commutator_relation(ex, ex, Orientation::Minus),
            Err(Error::DegenerateDirections { .. })
        ));
    }

    #[test]
    fn parameter_independence_reduces_to_local_observable() {
        let tol = Tolerance::default();
        let a = dir(1.0, 0.0, 0.0);
        let b = dir(0.0, 1.0, 0.0);
        let b_prime = dir(0.0, 0.6, 0.8);
        for mu in Orientation::BOTH {
            let check = parameter_independence_check(a, b, b_prime, mu, tol);
            assert!(check.holds, "mu {mu:?}: max {}", check.max_residual);
            assert!(approx_eq(check.side_b, observable(a, mu), tol));
        }
        // The orthogonal reflection case: b a b = -a exactly.
        let refl = geometric_product(
            geometric_product(Multivector::basis(2), Multivector::basis(1)),
            Multivector::basis(2),
        );
        assert_eq!(refl, -Multivector::basis(1));
        // Parallel case: a = b gives a - 2a = -a through the projection term.
        let same = parameter_independence_check(a, a, b, Orientation::Plus, tol);
        assert!(same.holds);
    }

    #[test]
    fn outcome_independence_sign_rule() {
        assert_eq!(SignTriple::new(1, -1).s_c, -1);
        assert_eq!(SignTriple::new(-1, -1).s_c, 1);

        let tol = Tolerance::default();
        let ex = dir(1.0, 0.0, 0.0);
        let ey = dir(0.0, 1.0, 0.0);
        let check = outcome_independence_check(ex, ey, tol).unwrap();
        assert!(check.holds);
        for case in check.cases {
            assert_eq!(case.residual, Multivector::zero());
        }

        let a = dir(3.0_f64.sqrt() / 2.0, 0.5, 0.0); // 30 degrees from x
        let check = outcome_independence_check(a, ex, tol).unwrap();
        assert!(check.holds, "max {}", check.max_residual);

        assert!(matches!(
            outcome_independence_check(ex, ex, tol),
            Err(Error::DegenerateDirections { .. })
        ));
    }

    #[test]
    fn factorizability_is_definitional() {
        let tol = Tolerance::default();
        let a = dir(0.6, -0.3, 0.74);
        let b = dir(-0.1, 0.98, 0.2);
        for mu in Orientation::BOTH {
            assert!(factorizability_check(a, b, mu, tol));
        }
        let ex = dir(1.0, 0.0, 0.0);
        let ey = dir(0.0, 1.0, 0.0);
        assert_eq!(
            joint_observable(ex, ey, Orientation::Plus),
            -Multivector::basis(6)
        );
        assert_eq!(
            joint_observable(ex, ex, Orientation::Plus),
            Multivector::scalar(-1.0)
        );
    }

    #[test]
    fn event_readout_and_correlation() {
        let n = dir(0.48, 0.6, 0.64);
        assert_eq!(event_readout(n, Orientation::Plus), 1);
        assert_eq!(event_readout(n, Orientation::Minus), -1);

        let rho = EnsembleMeasure::balanced();
        let a = dir(1.0, 0.0, 0.0);
        assert_eq!(event_level_correlation(a, a, &rho), 1.0);
        assert_eq!(event_level_correlation(a, n, &rho), 1.0);
        // Juxtaposed algebraic value at a = b.
        assert_eq!(correlation(a, a, &rho), -1.0);
    }

    #[test]
    fn measure_validation() {
        assert!(EnsembleMeasure::new(0.7, 0.3).is_ok());
        assert!(matches!(
            EnsembleMeasure::new(0.7, 0.4),
            Err(Error::InvalidWeights { .. })
        ));
        assert!(matches!(
            EnsembleMeasure::new(-0.1, 1.1),
            Err(Error::InvalidWeights { .. })
        ));
        let rho = EnsembleMeasure::balanced();
        assert_eq!(
            rho.weight(Orientation::Plus) + rho.weight(Orientation::Minus),
            1.0
        );
    }

    #[test]
    fn unbalanced_measure_keeps_odd_term() {
        let rho = EnsembleMeasure::new(0.75, 0.25).unwrap();
        let a = dir(1.0, 0.0, 0.0);
        let b = dir(0.0, 1.0, 0.0);
        let e = joint_expectation(a, b, &rho);
        // Scalar part is still -cos, but the bivector remnant survives.
        assert!(e.scalar_part().abs() < 1e-15);
        assert!((e.bivector_part().z + 0.5).abs() < 1e-15);
    }
}
