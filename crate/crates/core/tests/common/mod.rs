//! A from-scratch oracle for cross-checking the engine.
//!
//! Nothing here reuses the engine's structure constants. Blades are bitmasks
//! over the three generators, blade products are XOR, and signs come from
//! counting the transpositions needed to merge two ascending-index words.
//! Microstates are enumerated by hand as a boolean handedness, with the
//! left-handed branch composing words in reversed order — the same
//! convention the engine documents, re-derived independently.
//!
//! Where a comparison is meant to be bitwise, the helpers mirror the
//! engine's expression shapes operation for operation (same accumulation
//! order, same association, same sign placement), so any disagreement is a
//! structure-constant bug and not floating-point noise.

// Shared by several integration-test targets, each using its own subset.
#![allow(dead_code)]

pub type Coeffs = [f64; 8];

/// Canonical slot order [1, e1, e2, e3, e23, e31, e12, e123] as bitmasks,
/// paired with the sign of each canonical blade relative to the
/// ascending-index product of its generators (e31 = −e1e3; all others
/// ascend already).
const SLOTS: [(u8, i8); 8] = [
    (0b000, 1),
    (0b001, 1),
    (0b010, 1),
    (0b100, 1),
    (0b110, 1),
    (0b101, -1),
    (0b011, 1),
    (0b111, 1),
];

fn slot_of_mask(mask: u8) -> usize {
    SLOTS
        .iter()
        .position(|(m, _)| *m == mask)
        .expect("every 3-bit mask names a slot")
}

/// Sign of merging the ascending word of `a` with the ascending word of `b`:
/// each generator of `a` hops over every strictly lower generator of `b`.
/// The metric is Euclidean, so repeated generators square to +1 and
/// contribute no further sign.
fn transposition_sign(a: u8, b: u8) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The naive geometric product: loop over all 64 slot pairs, resolve each
/// through the bitmask representation, and accumulate in the same
/// (row-ascending, column-ascending, zero-rows-skipped) order the engine
/// uses, so matching inputs produce bit-identical outputs.
pub fn oracle_gp(x: &Coeffs, y: &Coeffs) -> Coeffs {
    let mut out = [0.0; 8];
    for (i, &(mask_i, canon_i)) in SLOTS.iter().enumerate() {
        let xi = x[i];
        if xi == 0.0 {
            continue;
        }
        for (j, &(mask_j, canon_j)) in SLOTS.iter().enumerate() {
            let k = slot_of_mask(mask_i ^ mask_j);
            let sign = transposition_sign(mask_i, mask_j) * canon_i * canon_j * SLOTS[k].1;
            out[k] += f64::from(sign) * xi * y[j];
        }
    }
    out
}

pub fn oracle_add(a: &Coeffs, b: &Coeffs) -> Coeffs {
    std::array::from_fn(|k| a[k] + b[k])
}

pub fn oracle_sub(a: &Coeffs, b: &Coeffs) -> Coeffs {
    std::array::from_fn(|k| a[k] - b[k])
}

pub fn oracle_scale(a: &Coeffs, c: f64) -> Coeffs {
    std::array::from_fn(|k| c * a[k])
}

pub fn oracle_scalar(c: f64) -> Coeffs {
    let mut out = [0.0; 8];
    out[0] = c;
    out
}

pub fn oracle_basis(slot: usize) -> Coeffs {
    let mut out = [0.0; 8];
    out[slot] = 1.0;
    out
}

/// The observable value at a microstate: the handedness sign scaling the
/// bivector whose components copy the direction's. The scale runs over all
/// eight slots, exactly as the engine's scalar multiplication does, so the
/// signed zeros land in the same places.
pub fn oracle_observable(n: [f64; 3], plus: bool) -> Coeffs {
    let bivector: Coeffs = [0.0, 0.0, 0.0, 0.0, n[0], n[1], n[2], 0.0];
    oracle_scale(&bivector, if plus { 1.0 } else { -1.0 })
}

/// Composition order induced by the microstate: as written for the
/// right-handed branch, reversed for the left-handed one.
pub fn oracle_compose(x: &Coeffs, y: &Coeffs, plus: bool) -> Coeffs {
    if plus {
        oracle_gp(x, y)
    } else {
        oracle_gp(y, x)
    }
}

pub fn oracle_joint(a: [f64; 3], b: [f64; 3], plus: bool) -> Coeffs {
    let oa = oracle_observable(a, plus);
    let ob = oracle_observable(b, plus);
    oracle_compose(&oa, &ob, plus)
}

pub fn oracle_commutator(x: &Coeffs, y: &Coeffs, plus: bool) -> Coeffs {
    oracle_sub(&oracle_compose(x, y, plus), &oracle_compose(y, x, plus))
}

/// Four settings in the order [a, a′, b, b′].
pub type Settings = [[f64; 3]; 4];

pub fn oracle_f_cv(s: &Settings, plus: bool) -> Coeffs {
    let j_ab = oracle_joint(s[0], s[2], plus);
    let j_abp = oracle_joint(s[0], s[3], plus);
    let j_apb = oracle_joint(s[1], s[2], plus);
    let j_apbp = oracle_joint(s[1], s[3], plus);
    oracle_sub(&oracle_add(&oracle_add(&j_ab, &j_abp), &j_apb), &j_apbp)
}

/// Exact square minus the commutator decomposition `4 + [A,A′][B′,B]`,
/// assembled entirely from oracle products.
pub fn oracle_decomposition_residual(s: &Settings, plus: bool) -> Coeffs {
    let f = oracle_f_cv(s, plus);
    let exact = oracle_compose(&f, &f, plus);
    let alice = oracle_commutator(
        &oracle_observable(s[0], plus),
        &oracle_observable(s[1], plus),
        plus,
    );
    let bob = oracle_commutator(
        &oracle_observable(s[3], plus),
        &oracle_observable(s[2], plus),
        plus,
    );
    let paper = oracle_add(&oracle_scalar(4.0), &oracle_compose(&alice, &bob, plus));
    oracle_sub(&exact, &paper)
}

/// The two-point weighted average, mirroring the engine's
/// `w₊·f(+) + w₋·f(−)` per coefficient.
pub fn oracle_average(w_plus: f64, w_minus: f64, p: &Coeffs, m: &Coeffs) -> Coeffs {
    std::array::from_fn(|k| w_plus * p[k] + w_minus * m[k])
}

/// The event-level column: per-event readouts are the handedness sign at
/// both stations regardless of settings, so the weighted product average is
/// `w₊·(+1)(+1) + w₋·(−1)(−1)`.
pub fn oracle_event_correlation(w_plus: f64, w_minus: f64) -> f64 {
    w_plus * (1.0 * 1.0) + w_minus * (-1.0 * -1.0)
}

/// The algebraic column: the scalar slot of the averaged joint product.
pub fn oracle_algebraic_correlation(a: [f64; 3], b: [f64; 3]) -> f64 {
    oracle_average(
        0.5,
        0.5,
        &oracle_joint(a, b, true),
        &oracle_joint(a, b, false),
    )[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_defining_relations() {
        // Generators square to +1; distinct generators anticommute.
        for i in 1..4 {
            for j in 1..4 {
                let anti = oracle_add(
                    &oracle_gp(&oracle_basis(i), &oracle_basis(j)),
                    &oracle_gp(&oracle_basis(j), &oracle_basis(i)),
                );
                let expected = oracle_scalar(if i == j { 2.0 } else { 0.0 });
                assert_eq!(anti, expected, "generators {i}, {j}");
            }
        }
        // The pseudoscalar squares to −1 and the bivector slots multiply
        // cyclically: e23 e31 = −e12, e31 e23 = +e12.
        assert_eq!(
            oracle_gp(&oracle_basis(7), &oracle_basis(7)),
            oracle_scalar(-1.0)
        );
        assert_eq!(oracle_gp(&oracle_basis(4), &oracle_basis(5))[6], -1.0);
        assert_eq!(oracle_gp(&oracle_basis(5), &oracle_basis(4))[6], 1.0);
    }
}
