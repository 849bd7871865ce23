//! Sequential spin analysis: a preparation (polarizer) stage followed by an
//! analyzer, with the ensemble reduced to the sub-ensemble the preparation
//! selects.
//!
//! The single-event value of "analyzer after polarizer" is a weighted sum of
//! signed observable products over the four outcome sign pairs. A pure
//! preparation concentrates all weight on one pair, and the weighted value
//! collapses to `a·p + I(a×p)`: the scalar part is the spin-½ analog of the
//! Malus cosine law, and the bivector fluctuation averages away over the
//! orientation ensemble exactly.

use crate::epr::{observable, scalar_only, EnsembleMeasure, Orientation};
use crate::error::Error;
use crate::ga::{dual, geometric_product, Direction, Multivector};

/// Cutoff for the fluctuation remnant that must cancel from expectations.
pub const FLUCTUATION_CUTOFF: f64 = 1e-13;

/// A preparation stage: the polarizer direction and the selected outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preparation {
    pub p: Direction,
    pub s: i8,
}

impl Preparation {
    /// `s` must be +1 or −1.
    pub fn new(p: Direction, s: i8) -> Result<Self, Error> {
        if s != 1 && s != -1 {
            return Err(Error::InvalidPreselection);
        }
        Ok(Self { p, s })
    }
}

/// A distribution over the four (analyzer sign, polarizer sign) pairs,
/// ordered (+,+), (+,−), (−,+), (−,−).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreselectionWeights {
    w: [f64; 4],
}

impl PreselectionWeights {
    pub const PAIR_ORDER: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

    /// Weights must be finite, non-negative, and sum to 1.
    pub fn new(w: [f64; 4]) -> Result<Self, Error> {
        let sum: f64 = w.iter().sum();
        let valid = w.iter().all(|x| x.is_finite() && *x >= 0.0) && (sum - 1.0).abs() <= 1e-12;
        if !valid {
            return Err(Error::InvalidPreselection);
        }
        Ok(Self { w })
    }

    /// The pure preparation for outcome `s`: all weight on the single pair
    /// whose signs are opposite on the analyzer and aligned with `s` on the
    /// polarizer — (−,+) for `s = +1`, (+,−) for `s = −1`.
    pub fn pure(s: i8) -> Result<Self, Error> {
        match s {
            1 => Ok(Self {
                w: [0.0, 0.0, 1.0, 0.0],
            }),
            -1 => Ok(Self {
                w: [0.0, 1.0, 0.0, 0.0],
            }),
            _ => Err(Error::InvalidPreselection),
        }
    }

    pub const fn weights(&self) -> [f64; 4] {
        self.w
    }
}

/// The raw two-stage product at one microstate, composed in the
/// orientation's algebra — identical in form to a two-station joint value.
pub fn sequential_observable(a: Direction, p: Direction, mu: Orientation) -> Multivector {
    mu.product(observable(a, mu), observable(p, mu))
}

fn signed_pair_value(a: Direction, p: Direction, s_a: i8, s_p: i8) -> Multivector {
    geometric_product(dual(a) * f64::from(s_a), dual(p) * f64::from(s_p))
}

/// The preselected single-event value: the weighted sum of signed products
/// over the four sign pairs. For either pure preparation this is exactly
/// `a·p + I(a×p)`.
pub fn sequential_value(a: Direction, prep: &Preparation) -> Multivector {
    let weights = PreselectionWeights::pure(prep.s)
        .expect("Preparation construction validates the outcome sign");
    weighted_sequential_value(a, prep.p, &weights)
}

/// The same weighted sum for an arbitrary preselection distribution.
pub fn weighted_sequential_value(
    a: Direction,
    p: Direction,
    weights: &PreselectionWeights,
) -> Multivector {
    let mut out = Multivector::zero();
    for (w, (s_a, s_p)) in weights
        .weights()
        .into_iter()
        .zip(PreselectionWeights::PAIR_ORDER)
    {
        out = out + signed_pair_value(a, p, s_a, s_p) * w;
    }
    out
}

/// The detected expectation: the scalar part of the preselected value plus
/// the ensemble average of its orientation-indexed fluctuation `μ·(a×p)`.
///
/// Under the balanced measure the fluctuation term cancels exactly and the
/// result is `a·p`.
pub fn malus_expectation(a: Direction, prep: &Preparation, rho: &EnsembleMeasure) -> f64 {
    let value = sequential_value(a, prep);
    let wedge = value.bivector_part();
    let fluctuation = rho.average(|mu| mu.project(wedge));
    scalar_only(
        Multivector::scalar(value.scalar_part()) + fluctuation,
        FLUCTUATION_CUTOFF,
    )
}

/// Runs a cascade of analyzers, each stage repreparing the beam for the
/// next: the k-th expectation is `a_k · a_{k−1}` (with `a_0 = p`).
pub fn sequential_chain(
    analyzers: &[Direction],
    prep: &Preparation,
    rho: &EnsembleMeasure,
) -> Result<Vec<f64>, Error> {
    if analyzers.is_empty() {
        return Err(Error::EmptyChain);
    }
    let mut stage = *prep;
    let mut out = Vec::with_capacity(analyzers.len());
    for &a in analyzers {
        out.push(malus_expectation(a, &stage, rho));
        stage = Preparation { p: a, s: stage.s };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epr::joint_observable;
    use crate::ga::{cross, Vec3};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn dir(x: f64, y: f64, z: f64) -> Direction {
        Direction::normalized(Vec3::new(x, y, z)).unwrap()
    }

    fn balanced() -> EnsembleMeasure {
        EnsembleMeasure::balanced()
    }

    #[test]
    fn aligned_analyzer_transmits_fully() {
        let p = dir(1.0, 0.0, 0.0);
        let prep = Preparation::new(p, 1).unwrap();
        assert_eq!(malus_expectation(p, &prep, &balanced()), 1.0);

        // Exact transmission is guaranteed only at coordinate axes; generic
        // unit directions round to 1 within a couple of ulp.
        let tilted = dir(0.0, 0.6, 0.8);
        let prep = Preparation::new(tilted, -1).unwrap();
        assert!((malus_expectation(tilted, &prep, &balanced()) - 1.0).abs() < 4e-16);
    }

    #[test]
    fn crossed_analyzer_blocks() {
        let p = dir(1.0, 0.0, 0.0);
        let a = dir(0.0, 1.0, 0.0);
        let prep = Preparation::new(p, 1).unwrap();
        assert_eq!(malus_expectation(a, &prep, &balanced()), 0.0);
    }

    #[test]
    fn sixty_degree_cosine() {
        let p = dir(1.0, 0.0, 0.0);
        let a = dir(0.5, 3.0_f64.sqrt() / 2.0, 0.0);
        let prep = Preparation::new(p, 1).unwrap();
        let e = malus_expectation(a, &prep, &balanced());
        assert!((e - 0.5).abs() < 1e-15);
    }

    #[test]
    fn both_outcomes_give_the_same_law() {
        let p = dir(0.3, -0.8, 0.52);
        let a = dir(-0.6, 0.2, 0.77);
        let plus = Preparation::new(p, 1).unwrap();
        let minus = Preparation::new(p, -1).unwrap();
        assert_eq!(
            malus_expectation(a, &plus, &balanced()),
            malus_expectation(a, &minus, &balanced())
        );
        // And both values equal a·p + I(a×p) coefficient for coefficient.
        let want = Multivector::scalar(a.vec().dot(p.vec()))
            + Multivector::bivector(cross(a.vec(), p.vec()));
        assert_eq!(sequential_value(a, &plus), want);
        assert_eq!(sequential_value(a, &minus), want);
    }

    #[test]
    fn raw_product_matches_joint_form() {
        let a = dir(0.2, 0.9, -0.39);
        let p = dir(0.7, -0.1, 0.7);
        for mu in Orientation::BOTH {
            assert_eq!(sequential_observable(a, p, mu), joint_observable(a, p, mu));
        }
    }

    #[test]
    fn chain_values_are_pairwise_cosines() {
        let p = dir(1.0, 0.0, 0.0);
        let prep = Preparation::new(p, 1).unwrap();

        let single = sequential_chain(&[p], &prep, &balanced()).unwrap();
        assert_eq!(single, vec![1.0]);

        // Two analyzers at 45° and 90°: each stage sees a 45° rotation.
        let a1 = dir(FRAC_PI_4.cos(), FRAC_PI_4.sin(), 0.0);
        let a2 = dir(0.0, 1.0, 0.0);
        let chain = sequential_chain(&[a1, a2], &prep, &balanced()).unwrap();
        assert_eq!(chain.len(), 2);
        assert!((chain[0] - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((chain[1] - FRAC_1_SQRT_2).abs() < 1e-15);

        // A crossed pair passes nothing at the second stage.
        let crossed = sequential_chain(&[p, a2], &prep, &balanced()).unwrap();
        assert_eq!(crossed, vec![1.0, 0.0]);
    }

    #[test]
    fn chain_is_markov() {
        let p = dir(0.1, 0.3, 0.95);
        let a1 = dir(0.8, -0.5, 0.33);
        let a2 = dir(-0.2, 0.6, 0.76);
        let prep = Preparation::new(p, 1).unwrap();
        let chain = sequential_chain(&[a1, a2], &prep, &balanced()).unwrap();
        let restarted = Preparation::new(a1, 1).unwrap();
        assert_eq!(chain[1], malus_expectation(a2, &restarted, &balanced()));
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let p = dir(1.0, 0.0, 0.0);
        assert!(matches!(
            Preparation::new(p, 0),
            Err(Error::InvalidPreselection)
        ));
        assert!(matches!(
            Preparation::new(p, 2),
            Err(Error::InvalidPreselection)
        ));
        assert!(matches!(
            PreselectionWeights::pure(3),
            Err(Error::InvalidPreselection)
        ));
        assert!(matches!(
            PreselectionWeights::new([0.5, 0.5, 0.5, 0.5]),
            Err(Error::InvalidPreselection)
        ));
        assert!(matches!(
            PreselectionWeights::new([-0.5, 0.5, 0.5, 0.5]),
            Err(Error::InvalidPreselection)
        ));
        assert!(PreselectionWeights::new([0.25; 4]).is_ok());

        let prep = Preparation::new(p, 1).unwrap();
        assert!(matches!(
            sequential_chain(&[], &prep, &balanced()),
            Err(Error::EmptyChain)
        ));
    }

    #[test]
    fn uniform_weights_average_the_signs_away() {
        // An unfiltered beam carries no orientation information: the four
        // sign pairs contribute ±ap in cancelling pairs.
        let a = dir(0.6, 0.0, 0.8);
        let p = dir(0.0, 1.0, 0.0);
        let uniform = PreselectionWeights::new([0.25; 4]).unwrap();
        let value = weighted_sequential_value(a, p, &uniform);
        assert_eq!(value.max_abs(), 0.0);
    }
}
