//! The reference predictions: spin-½ singlet correlations computed from
//! ordinary complex linear algebra, with no geometric-algebra machinery
//! anywhere in the path.
//!
//! This module exists to be compared against, so it deliberately shares
//! nothing with the bivector model beyond [`Direction`] inputs: operators are
//! dense complex matrices, states are amplitude vectors, and expectations are
//! inner products.

use num_complex::Complex64;

use crate::chsh::ChshConfig;
use crate::error::Error;
use crate::ga::{cross, Direction, Tolerance, Vec3};

/// Hermiticity slack for operators fed to [`singlet_expectation`].
pub const HERMITICITY_CUTOFF: f64 = 1e-10;

/// Largest imaginary remnant tolerated in a Hermitian expectation value.
pub const IMAGINARY_CUTOFF: f64 = 1e-12;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A dense complex matrix. Dimension mismatches are programmer errors and
/// panic; only physics-level problems (non-Hermitian inputs) surface as
/// [`Error`] values.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c(1.0, 0.0));
        }
        m
    }

    /// Builds a matrix from row-major entries.
    ///
    /// # Panics
    /// Panics if the rows are empty or ragged.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "matrix needs at least one column");
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub const fn nrows(&self) -> usize {
        self.rows
    }

    pub const fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> Complex64 {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of bounds"
        );
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, col: usize, val: Complex64) {
        self.data[r * self.cols + col] = val;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Complex64::ZERO;
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// The Kronecker product, with `self`'s indices major.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let factor = self.at(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            factor * other.at(k, l),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols, "trace needs a square matrix");
        (0..self.rows).map(|i| self.at(i, i)).sum()
    }

    /// Largest modulus of `M − M†` over all entries.
    pub fn hermiticity_residual(&self) -> f64 {
        assert_eq!(self.rows, self.cols, "hermiticity needs a square matrix");
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, cutoff: f64) -> bool {
        self.hermiticity_residual() <= cutoff
    }

    /// Largest modulus of the entrywise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// Applies a 4×4 operator to a two-qubit state.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        assert_eq!(
            (self.rows, self.cols),
            (4, 4),
            "two-qubit operators are 4×4"
        );
        let mut amps = [Complex64::ZERO; 4];
        for (i, amp) in amps.iter_mut().enumerate() {
            let mut acc = Complex64::ZERO;
            for j in 0..4 {
                acc += self.at(i, j) * v.amps[j];
            }
            *amp = acc;
        }
        StateVector { amps }
    }
}

/// A two-qubit state in the product basis |00⟩, |01⟩, |10⟩, |11⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    pub amps: [Complex64; 4],
}

impl StateVector {
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ⟨self|other⟩ with the conjugate on `self`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(x, y)| x.conj() * y)
            .sum()
    }
}

/// `σ·v` for an arbitrary (not necessarily unit) vector.
pub fn pauli_linear(v: Vec3) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![c(v.z, 0.0), c(v.x, -v.y)],
        vec![c(v.x, v.y), c(-v.z, 0.0)],
    ])
}

/// The spin projection operator `σ·n` along a unit direction.
pub fn pauli_projection(n: Direction) -> ComplexMatrix {
    pauli_linear(n.vec())
}

/// The singlet state `(|01⟩ − |10⟩)/√2`.
pub fn singlet() -> StateVector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    StateVector {
        amps: [c(0.0, 0.0), c(s, 0.0), c(-s, 0.0), c(0.0, 0.0)],
    }
}

/// The two-station operator `x ⊗ y`.
pub fn tensor(x: &ComplexMatrix, y: &ComplexMatrix) -> ComplexMatrix {
    x.kron(y)
}

/// ⟨ψ|op|ψ⟩ on the singlet, for a Hermitian 4×4 operator.
///
/// Returns [`Error::NotHermitian`] when the operator strays from its adjoint
/// by more than [`HERMITICITY_CUTOFF`]; the imaginary part of the expectation
/// is asserted below [`IMAGINARY_CUTOFF`] and discarded.
pub fn singlet_expectation(op: &ComplexMatrix) -> Result<f64, Error> {
    assert_eq!(
        (op.nrows(), op.ncols()),
        (4, 4),
        "two-qubit operators are 4×4"
    );
    let residual = op.hermiticity_residual();
    if residual > HERMITICITY_CUTOFF {
        return Err(Error::NotHermitian { residual });
    }
    let psi = singlet();
    let value = psi.inner(&op.apply(&psi));
    assert!(
        value.im.abs() <= IMAGINARY_CUTOFF,
        "Hermitian expectation grew an imaginary part: {}",
        value.im
    );
    Ok(value.re)
}

/// The singlet correlation `⟨σ·a ⊗ σ·b⟩`, which equals `−a·b`.
pub fn singlet_correlation(a: Direction, b: Direction) -> f64 {
    let op = tensor(&pauli_projection(a), &pauli_projection(b));
    singlet_expectation(&op).expect("pauli tensor products are Hermitian")
}

/// The four-setting combination as an operator:
/// `σa⊗σb + σa⊗σb′ + σa′⊗σb − σa′⊗σb′`.
pub fn bell_operator(cfg: &ChshConfig) -> ComplexMatrix {
    let sa = pauli_projection(cfg.a);
    let sa_p = pauli_projection(cfg.a_prime);
    let sb = pauli_projection(cfg.b);
    let sb_p = pauli_projection(cfg.b_prime);
    tensor(&sa, &sb)
        .add(&tensor(&sa, &sb_p))
        .add(&tensor(&sa_p, &sb))
        .sub(&tensor(&sa_p, &sb_p))
}

/// Outcome of checking `B² = 4·𝟙 + 4·σ(a×a′) ⊗ σ(b×b′)` entrywise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellSquaredCheck {
    /// Largest entry modulus of `B² − (4𝟙 + 4σ(a×a′)⊗σ(b×b′))`.
    pub residual: f64,
    pub holds: bool,
}

/// Verifies the operator identity behind the Tsirel'son bound.
pub fn bell_operator_squared_check(cfg: &ChshConfig, tol: Tolerance) -> BellSquaredCheck {
    let b = bell_operator(cfg);
    let squared = b.mul(&b);
    let u = cross(cfg.a.vec(), cfg.a_prime.vec());
    let v = cross(cfg.b.vec(), cfg.b_prime.vec());
    let reference = ComplexMatrix::identity(4)
        .scale(c(4.0, 0.0))
        .add(&tensor(&pauli_linear(u), &pauli_linear(v)).scale(c(4.0, 0.0)));
    let residual = squared.max_abs_diff(&reference);
    BellSquaredCheck {
        residual,
        holds: residual <= tol.eps(),
    }
}

/// The quantum ceiling for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QmBound {
    /// `√⟨B²⟩`, the largest the combination's expectation can be.
    pub bound: f64,
    pub b_squared_expectation: f64,
    /// `(a×a′)·(b×b′)`, the triple product that sets `⟨B²⟩`.
    pub triple_b_cross_bprime: f64,
    /// `(a×a′)·(b′×b)`, the opposite-order triple the model bound uses.
    pub triple_bprime_cross_b: f64,
}

/// Computes `⟨B²⟩` from the matrices and cross-checks it against the closed
/// form `4 − 4(a×a′)·(b×b′)` before taking the square root.
pub fn qm_chsh_bound(cfg: &ChshConfig) -> QmBound {
    let b = bell_operator(cfg);
    let b_squared_expectation = singlet_expectation(&b.mul(&b)).expect("B² is Hermitian");
    let u = cross(cfg.a.vec(), cfg.a_prime.vec());
    let triple_b_cross_bprime = u.dot(cross(cfg.b.vec(), cfg.b_prime.vec()));
    let triple_bprime_cross_b = u.dot(cross(cfg.b_prime.vec(), cfg.b.vec()));
    let closed = 4.0 - 4.0 * triple_b_cross_bprime;
    assert!(
        (b_squared_expectation - closed).abs() <= 1e-10,
        "⟨B²⟩ strayed from its closed form: {b_squared_expectation} vs {closed}"
    );
    QmBound {
        bound: b_squared_expectation.max(0.0).sqrt(),
        b_squared_expectation,
        triple_b_cross_bprime,
        triple_bprime_cross_b,
    }
}
