//! A dense numeric kernel for the real Clifford algebra Cl(3,0) together with a
//! verification harness for a local hidden-variable model of the EPR-Bohm
//! correlations built on bivector observables.
//!
//! The crate has three layers:
//!
//! * [`ga`] — the algebra itself: eight-coefficient multivectors over the blade
//!   basis `[1, e1, e2, e3, e23, e31, e12, e123]`, with products driven by a
//!   precomputed sign/index table.
//! * [`epr`], [`chsh`], [`malus`] — the model: orientation microstates μ = ±I,
//!   observables μ·n, the two-point ensemble measure, locality-condition
//!   checks, the CHSH string and its bound, and the polarizer-preparation law.
//! * [`quantum`] — an independent reference route: two-qubit singlet state,
//!   Pauli projections, and the Bell operator, computed with dense complex
//!   matrices so the model's numbers can be compared against a second
//!   implementation that shares no code with the algebra.
//!
//! Everything is deterministic: random inputs come from seeded generators,
//! ensemble averages are exact two-term sums, and report serialization has a
//! fixed key order, so identical inputs produce identical bytes.
//!
//! The [`verify`] module hosts the named check registry behind the `verify`
//! subcommand of the bundled binary; [`report`] holds the JSON/CSV/text
//! writers; [`cli`] wires it all to a command line. Start with the runnable
//! programs under `examples/` for a tour of the library surface.

pub mod chsh;
pub mod cli;
pub mod epr;
pub mod ga;
pub mod malus;
pub mod quantum;
pub mod report;
pub mod sampling;
pub mod verify;

mod error;

pub use chsh::{ChshConfig, ChshReport, Plane};
pub use epr::{EnsembleMeasure, Observable, Orientation, SignTriple};
pub use error::Error;
pub use ga::{Direction, Multivector, Tolerance, Vec3};
