//! Dense arithmetic for the eight-dimensional real Clifford algebra Cl(3,0).
//!
//! Values are [`Multivector`]s: eight coefficients over the blade basis
//!
//! ```text
//! index:  0    1    2    3    4     5     6     7
//! blade:  1    e1   e2   e3   e23   e31   e12   e123
//! ```
//!
//! The bivector slots use the cyclic order `{e23, e31, e12}` so that the dual
//! of a unit vector `n` is the bivector whose components are literally
//! `(n.x, n.y, n.z)`. The pseudoscalar `I = e123` squares to −1 and commutes
//! with everything; Cl(3,0) has signature (+,+,+), so `e_i e_i = 1` and
//! `e_i e_j = −e_j e_i` for distinct vector generators.
//!
//! Products are computed from a precomputed 8×8 sign/index table, the single
//! audited source of structure constants in the crate. Every operation is a
//! pure function over immutable values.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Human-readable blade labels in coefficient order.
pub const BLADE_LABELS: [&str; 8] = ["1", "e1", "e2", "e3", "e23", "e31", "e12", "e123"];

/// Grade of each blade slot: scalar, three vectors, three bivectors, trivector.
pub const BLADE_GRADES: [usize; 8] = [0, 1, 1, 1, 2, 2, 2, 3];

/// Product table for the blade basis: `TABLE[i][j] = (sign, k)` means
/// `blade_i * blade_j = sign * blade_k`.
///
/// Rows/columns follow the coefficient order `[1, e1, e2, e3, e23, e31, e12,
/// e123]`. The entries are fixed by `e_i e_i = 1` and anticommutation of
/// distinct generators; see the unit tests for an exhaustive cross-check
/// against first principles.
const TABLE: [[(i8, usize); 8]; 8] = [
    [
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
    ],
    [
        (1, 1),
        (1, 0),
        (1, 6),
        (-1, 5),
        (1, 7),
        (-1, 3),
        (1, 2),
        (1, 4),
    ],
    [
        (1, 2),
        (-1, 6),
        (1, 0),
        (1, 4),
        (1, 3),
        (1, 7),
        (-1, 1),
        (1, 5),
    ],
    [
        (1, 3),
        (1, 5),
        (-1, 4),
        (1, 0),
        (-1, 2),
        (1, 1),
        (1, 7),
        (1, 6),
    ],
    [
        (1, 4),
        (1, 7),
        (-1, 3),
        (1, 2),
        (-1, 0),
        (-1, 6),
        (1, 5),
        (-1, 1),
    ],
    [
        (1, 5),
        (1, 3),
        (1, 7),
        (-1, 1),
        (1, 6),
        (-1, 0),
        (-1, 4),
        (-1, 2),
    ],
    [
        (1, 6),
        (-1, 2),
        (1, 1),
        (1, 7),
        (-1, 5),
        (1, 4),
        (-1, 0),
        (-1, 3),
    ],
    [
        (1, 7),
        (1, 4),
        (1, 5),
        (1, 6),
        (-1, 1),
        (-1, 2),
        (-1, 3),
        (-1, 0),
    ],
];

/// A plain 3-vector with the usual Euclidean operations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, c: f64) -> Vec3 {
        Vec3::new(c * self.x, c * self.y, c * self.z)
    }
}

impl std::ops::Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Right-handed vector cross product.
///
/// ```
/// use cliffbell::ga::{cross, Vec3};
/// let z = cross(Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0));
/// assert_eq!(z, Vec3::new(0.0, 0.0, 1.0));
/// ```
pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    Vec3::new(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )
}

/// A unit 3-vector: the parameter type for analyzers and polarizers.
///
/// Construction renormalizes inputs whose norm deviates from 1 by at most
/// `1e-9` (forgiving decimal angle entry) and rejects anything worse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Direction(Vec3);

/// Maximum tolerated deviation of an input norm from 1 before rejection.
pub const DIRECTION_NORM_SLACK: f64 = 1e-9;

impl Direction {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        let v = Vec3::new(x, y, z);
        let norm = v.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > DIRECTION_NORM_SLACK {
            return Err(Error::NonUnitDirection { x, y, z, norm });
        }
        Ok(Self(v.scale(1.0 / norm)))
    }

    /// Normalizes an arbitrary non-tiny vector into a direction.
    pub fn normalized(v: Vec3) -> Result<Self, Error> {
        let norm = v.norm();
        if !norm.is_finite() || norm < 1e-12 {
            return Err(Error::NonUnitDirection {
                x: v.x,
                y: v.y,
                z: v.z,
                norm,
            });
        }
        Ok(Self(v.scale(1.0 / norm)))
    }

    pub const fn vec(self) -> Vec3 {
        self.0
    }

    pub const fn x(self) -> f64 {
        self.0.x
    }

    pub const fn y(self) -> f64 {
        self.0.y
    }

    pub const fn z(self) -> f64 {
        self.0.z
    }
}

/// Absolute comparison threshold for identity residuals. Defaults to `1e-12`:
/// every quantity in the crate is a short chain of double-precision
/// multiply-adds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    eps: f64,
}

impl Tolerance {
    pub fn new(eps: f64) -> Result<Self, Error> {
        if !eps.is_finite() || eps < 0.0 {
            return Err(Error::InvalidTolerance { eps });
        }
        Ok(Self { eps })
    }

    pub const fn eps(self) -> f64 {
        self.eps
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: 1e-12 }
    }
}

/// An element of Cl(3,0): eight real coefficients in blade order
/// `[1, e1, e2, e3, e23, e31, e12, e123]`.
///
/// Serializes as a plain 8-element array in that order.
///
/// ```
/// use cliffbell::ga::Multivector;
/// let x = Multivector::basis(1) * Multivector::basis(2);
/// assert_eq!(x, Multivector::basis(6)); // e1 e2 = e12
/// let i = Multivector::pseudoscalar();
/// assert_eq!(i * i, Multivector::scalar(-1.0)); // I^2 = -1
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Multivector(pub [f64; 8]);

impl Multivector {
    pub const fn zero() -> Self {
        Self([0.0; 8])
    }

    pub const fn scalar(c: f64) -> Self {
        Self([c, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
    }

    /// The grade-1 element with the given vector components.
    pub const fn vector(v: Vec3) -> Self {
        Self([0.0, v.x, v.y, v.z, 0.0, 0.0, 0.0, 0.0])
    }

    /// The grade-2 element with components `(v.x, v.y, v.z)` on `{e23, e31, e12}`.
    pub const fn bivector(v: Vec3) -> Self {
        Self([0.0, 0.0, 0.0, 0.0, v.x, v.y, v.z, 0.0])
    }

    pub const fn trivector(c: f64) -> Self {
        Self([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, c])
    }

    /// The unit pseudoscalar `I = e123`.
    pub const fn pseudoscalar() -> Self {
        Self::trivector(1.0)
    }

    /// The k-th basis blade (see [`BLADE_LABELS`]).
    ///
    /// # Panics
    /// Panics if `k > 7`.
    pub fn basis(k: usize) -> Self {
        assert!(k < 8, "blade index {k} out of range 0..8");
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Self(c)
    }

    pub const fn coeffs(&self) -> [f64; 8] {
        self.0
    }

    /// Grade-0 coefficient.
    pub const fn scalar_part(&self) -> f64 {
        self.0[0]
    }

    /// Grade-1 part as a plain vector.
    pub const fn vector_part(&self) -> Vec3 {
        Vec3::new(self.0[1], self.0[2], self.0[3])
    }

    /// Grade-2 part as the dual vector components on `{e23, e31, e12}`.
    pub const fn bivector_part(&self) -> Vec3 {
        Vec3::new(self.0[4], self.0[5], self.0[6])
    }

    /// Grade-3 coefficient.
    pub const fn trivector_part(&self) -> f64 {
        self.0[7]
    }

    /// Largest coefficient magnitude; the residual norm used by the checks.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }
}

impl Default for Multivector {
    fn default() -> Self {
        Self::zero()
    }
}

impl std::ops::Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        Multivector(std::array::from_fn(|k| self.0[k] + rhs.0[k]))
    }
}

impl std::ops::Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        Multivector(std::array::from_fn(|k| self.0[k] - rhs.0[k]))
    }
}

impl std::ops::Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector(std::array::from_fn(|k| -self.0[k]))
    }
}

impl std::ops::Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        geometric_product(self, rhs)
    }
}

impl std::ops::Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, c: f64) -> Multivector {
        Multivector(std::array::from_fn(|k| c * self.0[k]))
    }
}

impl std::fmt::Display for Multivector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (c, label) in self.0.iter().zip(BLADE_LABELS) {
            if *c == 0.0 {
                continue;
            }
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if *c < 0.0 {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if label != "1" {
                write!(f, " {label}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The geometric (Clifford) product, bilinear and associative under the
/// Cl(3,0) structure constants.
///
/// ```
/// use cliffbell::ga::{geometric_product, Multivector, Vec3};
/// let one_plus_e1 = Multivector::scalar(1.0) + Multivector::basis(1);
/// let sq = geometric_product(one_plus_e1, one_plus_e1);
/// assert_eq!(sq, Multivector::scalar(2.0) + Multivector::basis(1) * 2.0);
/// ```
pub fn geometric_product(x: Multivector, y: Multivector) -> Multivector {
    let mut out = [0.0; 8];
    for (row, xi) in TABLE.iter().zip(x.0) {
        if xi == 0.0 {
            continue;
        }
        for (&(sign, k), yj) in row.iter().zip(y.0) {
            out[k] += f64::from(sign) * xi * yj;
        }
    }
    Multivector(out)
}

/// Projects onto grade `k`, zeroing every other coefficient.
///
/// # Panics
/// Panics if `k > 3`.
pub fn grade(x: Multivector, k: usize) -> Multivector {
    assert!(k <= 3, "grade index {k} out of range 0..=3");
    let mut out = [0.0; 8];
    for (slot, g) in BLADE_GRADES.iter().enumerate() {
        if *g == k {
            out[slot] = x.0[slot];
        }
    }
    Multivector(out)
}

/// The commutator `x y − y x`.
pub fn commutator(x: Multivector, y: Multivector) -> Multivector {
    geometric_product(x, y) - geometric_product(y, x)
}

/// The unit bivector `I n` dual to a unit vector, carried on `{e23, e31, e12}`
/// with components literally equal to `n`'s.
///
/// ```
/// use cliffbell::ga::{dual, Direction, Multivector, Vec3};
/// let n = Direction::new(1.0, 0.0, 0.0).unwrap();
/// assert_eq!(dual(n), Multivector::basis(4)); // I e1 = e23
/// ```
pub fn dual(n: Direction) -> Multivector {
    Multivector::bivector(n.vec())
}

/// Reversion: flips the sign of the grade-2 and grade-3 parts.
pub fn reverse(x: Multivector) -> Multivector {
    let c = x.0;
    Multivector([c[0], c[1], c[2], c[3], -c[4], -c[5], -c[6], -c[7]])
}

/// Euclidean coefficient norm `sqrt(sum c_k^2)`.
pub fn norm(x: Multivector) -> f64 {
    x.0.iter().map(|c| c * c).sum::<f64>().sqrt()
}

/// Inverse of a versor (a product of invertible vectors) or unit bivector,
/// via `x⁻¹ = reverse(x) / (x reverse(x))`.
///
/// For a unit bivector this returns its negation; for a nonzero scalar, the
/// reciprocal. Inputs whose `x·reverse(x)` is not a scalar are rejected as
/// non-versors, and inputs with tiny norm as non-invertible.
///
/// ```
/// use cliffbell::ga::{versor_inverse, Multivector};
/// let b = Multivector::basis(4); // e23
/// assert_eq!(versor_inverse(b).unwrap(), -b);
/// assert_eq!(
///     versor_inverse(Multivector::scalar(2.0)).unwrap(),
///     Multivector::scalar(0.5),
/// );
/// ```
pub fn versor_inverse(x: Multivector) -> Result<Multivector, Error> {
    let n = norm(x);
    if n.is_nan() || n <= 1e-12 {
        return Err(Error::NonInvertible { norm: n });
    }
    let rev = reverse(x);
    let p = geometric_product(x, rev);
    let scalar = p.scalar_part();
    let residual = (p - Multivector::scalar(scalar)).max_abs();
    if residual > 1e-9 * n * n {
        return Err(Error::NotVersor { residual });
    }
    if scalar.abs() <= 1e-12 {
        return Err(Error::NonInvertible { norm: scalar.abs() });
    }
    Ok(rev * (1.0 / scalar))
}

/// True iff every coefficient of `x − y` has magnitude at most `tol`.
pub fn approx_eq(x: Multivector, y: Multivector, tol: Tolerance) -> bool {
    (x - y).max_abs() <= tol.eps()
}

/// Rotates `v` by `angle` radians about `axis` (right-hand rule), using the
/// rotor `R = cos(θ/2) − sin(θ/2) I axis` and the sandwich `R v reverse(R)`.
pub fn rotate(v: Vec3, axis: Direction, angle: f64) -> Vec3 {
    let half = 0.5 * angle;
    let rotor = Multivector::scalar(half.cos()) - dual(axis) * half.sin();
    let sandwich = geometric_product(
        geometric_product(rotor, Multivector::vector(v)),
        reverse(rotor),
    );
    sandwich.vector_part()
}
