//! Narrow-state-space side of the mirror comparison for the one-variable
//! quintic singularity.
//!
//! The state space is four-dimensional with basis `phi_1, ..., phi_4`,
//! pairing `(phi_i, phi_j) = (1/5) delta_{i+j,5}`, and unit `phi_1`.  This
//! module provides:
//! - the hypergeometric series attached to that state space, whose
//!   `phi_m`-component carries the fixed power `z^(2-m)`,
//! - the mirror change of variables `s = I_1/I_0` and its compositional
//!   inverse,
//! - extraction of the narrow invariants with all insertions `phi_2`,
//! - reassembly of the big generating series at the mirror change of
//!   variables, using only the extracted invariants together with the
//!   string and dilaton equations, and a componentwise comparison against
//!   the series itself,
//! - degree and rank bookkeeping for the five-fold line-bundle data that
//!   controls which moduli of marked spin curves are nonempty.
//!
//! Everything is exact: coefficients are [`Rat`] throughout.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{QSeries, Rat};

/// Number of state-space basis directions (`phi_1` through `phi_4`).
pub const STATE_DIM: usize = 4;

/// Exact vector in the four-dimensional narrow state space.
///
/// Coordinates are stored against the basis `phi_1, ..., phi_4`; index
/// arguments below are 1-based to match that naming.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FjrwVector {
    coeffs: [Rat; 4],
}

impl FjrwVector {
    /// Builds a vector from coordinates against `phi_1, ..., phi_4`.
    pub fn new(coeffs: [Rat; 4]) -> Self {
        FjrwVector { coeffs }
    }

    /// The basis vector `phi_i` for `i` in `1..=4`.
    pub fn basis(i: usize) -> Self {
        assert!((1..=4).contains(&i), "basis index {i} outside 1..=4");
        let mut coeffs = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        coeffs[i - 1] = Rat::one();
        FjrwVector { coeffs }
    }

    /// Coordinate of `phi_i` for `i` in `1..=4`.
    pub fn coeff(&self, i: usize) -> &Rat {
        assert!((1..=4).contains(&i), "coefficient index {i} outside 1..=4");
        &self.coeffs[i - 1]
    }

    /// The pairing `(1/5) sum_{i+j=5} v_i w_j`.
    pub fn pairing(&self, other: &FjrwVector) -> Rat {
        let mut sum = Rat::zero();
        for i in 0..4 {
            sum = sum + &self.coeffs[i] * &other.coeffs[3 - i];
        }
        sum * Rat::frac(1, 5)
    }

    /// The metric dual: `phi_i` maps to `5 phi_{5-i}`, extended linearly,
    /// so that `(phi_i, dual(phi_j)) = delta_{ij}`.
    pub fn dual(&self) -> FjrwVector {
        let mut coeffs = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for i in 0..4 {
            coeffs[3 - i] = &self.coeffs[i] * Rat::from_int(5);
        }
        FjrwVector { coeffs }
    }
}

/// Hypergeometric series with one exact `q`-series per basis direction.
///
/// The `phi_m`-component multiplies the fixed power `z^(2-m)`, so the
/// four directions carry `z^1, z^0, z^-1, z^-2` respectively.
#[derive(Clone, Debug, PartialEq)]
pub struct FjrwIFunction {
    components: Vec<QSeries<Rat>>,
}

impl FjrwIFunction {
    /// The `q`-series multiplying `phi_{k+1} z^(1-k)` for `k` in `0..4`.
    pub fn component(&self, k: usize) -> &QSeries<Rat> {
        &self.components[k]
    }

    /// Shared truncation order of the component series.
    pub fn truncation(&self) -> usize {
        self.components[0].truncation()
    }

    /// Power of `z` carried by component `k`.
    pub fn z_power(&self, k: usize) -> i64 {
        assert!(k < STATE_DIM, "component index {k} outside 0..4");
        1 - k as i64
    }
}

/// Component index (0-based) and coefficient of the order-`d` term, or
/// `None` when the term vanishes identically.
///
/// Writing `d + 1 = 5a + m` with `m` in `0..5`: for `m == 0` the term is
/// killed by a vanishing factor, and otherwise the coefficient
/// `(1/d!) * prod_{i<a} ((5i+m)/5)^5` lands in direction `phi_m`.  The
/// accompanying `z`-power `1 - d + 5a` always equals `2 - m`, which is the
/// fixed power attached to that direction.
fn fjrw_term(d: usize) -> Option<(usize, Rat)> {
    let m = (d + 1) % 5;
    if m == 0 {
        return None;
    }
    let a = (d + 1) / 5;
    debug_assert_eq!(1 + 5 * a as i64 - d as i64, 2 - m as i64);
    let mut value = Rat::factorial(d as u64).recip();
    for i in 0..a {
        value = value * Rat::frac((5 * i + m) as i64, 5).pow(5);
    }
    Some((m - 1, value))
}

/// The hypergeometric series to the given `q`-order (inclusive).
///
/// Each order-`d` term populates exactly one component, determined by
/// `d mod 5`; orders congruent to `4 mod 5` vanish outright.
pub fn fjrw_i_function(order: usize) -> FjrwIFunction {
    let mut coeffs = vec![vec![Rat::zero(); order + 1]; STATE_DIM];
    #[allow(clippy::needless_range_loop)]
    for d in 0..=order {
        if let Some((k, value)) = fjrw_term(d) {
            coeffs[k][d] = value;
        }
    }
    FjrwIFunction {
        components: coeffs
            .into_iter()
            .map(|c| QSeries::new(order, c))
            .collect(),
    }
}

/// The mirror change of variables `s(q) = I_1/I_0` together with its
/// compositional inverse `q(s)`.
///
/// `s = q + O(q^6)`, so the inverse exists as an exact series.
pub fn fjrw_mirror_map(order: usize) -> Result<(QSeries<Rat>, QSeries<Rat>)> {
    let i = fjrw_i_function(order);
    let s = i.component(1).mul(&i.component(0).invert()?);
    let q_of_s = s.compositional_inverse()?;
    Ok((s, q_of_s))
}

/// Invariants with `n` insertions of `phi_2`, for `n` in `3..=max_insertions`.
///
/// The value with `n + 1` insertions is `(n!/5)` times the `s^n`-coefficient
/// of `(I_2/I_0)` re-expanded in the flat variable `s`.  Nonzero entries
/// occur exactly when `n` is congruent to `3 mod 5`.
pub fn extract_phi2_invariants(max_insertions: usize) -> Result<Vec<(usize, Rat)>> {
    assert!(max_insertions >= 3, "need at least three insertions");
    let order = max_insertions;
    let i = fjrw_i_function(order);
    let i0_inv = i.component(0).invert()?;
    let s = i.component(1).mul(&i0_inv);
    let q_of_s = s.compositional_inverse()?;
    let ratio_in_s = i.component(2).mul(&i0_inv).compose(&q_of_s);
    let mut table = Vec::new();
    for n in 3..=max_insertions {
        let value = Rat::factorial(n as u64 - 1) * Rat::frac(1, 5) * ratio_in_s.c(n - 1);
        table.push((n, value));
    }
    Ok(table)
}

/// Reduces `<(phi_1 psi)^k phi_2^n phi_m psi^a>` to the all-`phi_2` table.
///
/// Order of the gates:
/// - the count congruence for nonempty moduli (multiplicity sum congruent
///   to the mark count plus three, mod five) sends mismatches to zero,
/// - the dimension gate `a = 2 - m` sends off-dimension terms to zero,
/// - each `phi_1 psi` insertion is removed by the dilaton equation,
///   contributing a factor (marks - 3),
/// - a plain `phi_1` insertion would be removed by the string equation,
///   but with all other entries free of `psi` it differentiates to zero,
/// - what remains is an all-`phi_2` lookup; a missing table entry reports
///   [`Error::ReductionIncomplete`].
fn reduce_correlator(
    dilatons: usize,
    phi2: usize,
    m_last: usize,
    psi_last: usize,
    table: &BTreeMap<usize, Rat>,
) -> Result<Rat> {
    let marks = dilatons + phi2 + 1;
    let mult_sum = dilatons + 2 * phi2 + m_last;
    if mult_sum % 5 != (marks + 3) % 5 {
        return Ok(Rat::zero());
    }
    if psi_last + m_last != 2 {
        return Ok(Rat::zero());
    }
    if dilatons > 0 {
        let factor = Rat::from_int(marks as i64 - 3);
        if factor.is_zero() {
            return Ok(Rat::zero());
        }
        return Ok(factor * reduce_correlator(dilatons - 1, phi2, m_last, psi_last, table)?);
    }
    if m_last == 1 && psi_last == 1 {
        // The final slot is itself a dilaton insertion.
        let factor = Rat::from_int(marks as i64 - 3);
        if factor.is_zero() {
            return Ok(Rat::zero());
        }
        let inner = table.get(&phi2).ok_or_else(|| Error::ReductionIncomplete {
            detail: format!("no table entry for {phi2} insertions"),
        })?;
        return Ok(factor * inner);
    }
    if m_last == 2 && psi_last == 0 {
        let total = phi2 + 1;
        return table
            .get(&total)
            .cloned()
            .ok_or_else(|| Error::ReductionIncomplete {
                detail: format!("no table entry for {total} insertions"),
            });
    }
    Err(Error::ReductionIncomplete {
        detail: format!("insertion phi_{m_last} psi^{psi_last} outside the reduction closure"),
    })
}

/// Result of reassembling the big generating series at the mirror change
/// of variables and comparing it against the hypergeometric series.
#[derive(Clone, Debug)]
pub struct FjrwMirrorCheck {
    /// Componentwise reassembly from extracted invariants.
    pub assembled: Vec<QSeries<Rat>>,
    /// The hypergeometric series components at the same order.
    pub expected: FjrwIFunction,
    /// Componentwise equality of the two.
    pub pass: bool,
}

/// Reassembles the big generating series at the change of variables
/// `(1 - I_0) z phi_1 + I_1 phi_2` and compares it with the series itself.
///
/// The expansion produces correlators of the shape
/// `<(phi_1 psi)^k phi_2^n phi_m psi^a>`; the dimension gate keeps only
/// `(m, a) = (2, 0)` and `(1, 1)`, which land in the `phi_3` and `phi_4`
/// directions after dualizing.  All values come from
/// [`extract_phi2_invariants`] plus the string and dilaton equations, so
/// agreement is a genuine consistency check, not a tautology.
pub fn assemble_j_at_mirror_tau(order: usize) -> Result<FjrwMirrorCheck> {
    let expected = fjrw_i_function(order);
    let one = QSeries::constant(Rat::one(), order);
    // Change of variables: a(q) multiplies z phi_1, b(q) multiplies phi_2.
    let a = one.sub(expected.component(0));
    let b = expected.component(1).clone();

    let table: BTreeMap<usize, Rat> = extract_phi2_invariants((order + 1).max(3))?
        .into_iter()
        .collect();

    // a = O(q^5) and b = O(q), so a^k b^n contributes only when 5k + n <= order.
    let max_k = order / 5;
    let mut a_pows = vec![one.clone()];
    for _ in 0..max_k {
        a_pows.push(a.mul(&a_pows.last().unwrap().clone()));
    }
    let mut b_pows = vec![one.clone()];
    for _ in 0..order {
        b_pows.push(b.mul(&b_pows.last().unwrap().clone()));
    }

    // Leading unstable terms: z phi_1 from the series seed plus the change
    // of variables evaluated at -z, whose phi_1-part cancels against a(q).
    let mut assembled = vec![
        one.sub(&a),
        b.clone(),
        QSeries::zero(order),
        QSeries::zero(order),
    ];

    // Stable terms: the last slot carries phi_m psi^a with a = 2 - m, and
    // pairs into direction phi_{5-m} with a factor 5 from the dual basis.
    for (m_last, psi_last, target) in [(2usize, 0usize, 2usize), (1, 1, 3)] {
        let mut sum = QSeries::zero(order);
        #[allow(clippy::needless_range_loop)]
        for k in 0..=max_k {
            for n in 0..=(order - 5 * k) {
                if k + n < 2 {
                    continue;
                }
                let value = reduce_correlator(k, n, m_last, psi_last, &table)?;
                if value.is_zero() {
                    continue;
                }
                let weight = value
                    * Rat::from_int(5)
                    * Rat::factorial(k as u64).recip()
                    * Rat::factorial(n as u64).recip();
                sum = sum.add(&a_pows[k].mul(&b_pows[n]).scale(&weight));
            }
        }
        assembled[target] = sum;
    }

    let pass = (0..STATE_DIM).all(|k| assembled[k] == *expected.component(k));
    Ok(FjrwMirrorCheck {
        assembled,
        expected,
        pass,
    })
}

/// Multiplicity vector attached to the marked points of a spin curve.
///
/// Entries are required to lie in `1..=4` (narrow sectors only) and at
/// least three marks are required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityVector(Vec<u32>);

impl MultiplicityVector {
    /// Validates entries in `1..=4` and length at least three.
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(entries.len() >= 3, "need at least three marks");
        assert!(
            entries.iter().all(|&m| (1..=4).contains(&m)),
            "multiplicities must lie in 1..=4"
        );
        MultiplicityVector(entries)
    }

    /// Number of marks.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false: the constructor requires at least three marks.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the multiplicities.
    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Whether the corresponding moduli space is nonempty: the sum must be
    /// congruent to the mark count plus three, mod five.
    pub fn is_nonempty(&self) -> bool {
        (self.sum() as usize) % 5 == (self.len() + 3) % 5
    }

    /// Entries as a slice.
    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// Degree and rank bookkeeping for the five-fold bundle over a genus-zero
/// spin curve with the given multiplicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinData {
    /// Integer degree of the rounded-down line bundle.
    pub rounded_degree: i64,
    /// Rank of the obstruction: five times `h^1` of the rounded bundle.
    pub obstruction_rank: i64,
    /// Virtual dimension: mark count minus three, minus the obstruction rank.
    pub virtual_dim: i64,
}

/// Computes the rounded bundle degree, obstruction rank, and virtual
/// dimension for a multiplicity vector, or [`Error::EmptyModuli`] when the
/// degree fails to be an integer (equivalently, when the count congruence
/// fails).
pub fn spin_rank(m: &MultiplicityVector) -> Result<SpinData> {
    let n = m.len() as i64;
    let sum = m.sum() as i64;
    let numerator = n - 2 - sum;
    if numerator.rem_euclid(5) != 0 {
        return Err(Error::EmptyModuli {
            detail: format!(
                "degree ({n} - 2 - {sum})/5 is not an integer; the moduli space is empty"
            ),
        });
    }
    let rounded_degree = numerator / 5;
    // Entries are at least one, so the degree is negative, h^0 vanishes,
    // and h^1 is read off from the degree alone.
    debug_assert!(rounded_degree < 0);
    let obstruction_rank = 5 * (-rounded_degree - 1);
    let virtual_dim = n - 3 - obstruction_rank;
    debug_assert_eq!(virtual_dim, 2 * n - sum);
    Ok(SpinData {
        rounded_degree,
        obstruction_rank,
        virtual_dim,
    })
}

/// Degree report for the rounded bundle, allowing zero multiplicities when
/// `allow_zero` is set (the regime where the vanishing of `h^0` can fail).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcavityReport {
    /// Exact degree `(n - 2 - sum)/5` of the underlying fractional bundle.
    pub degree: Rat,
    /// Whether `h^0` of the rounded bundle is forced to vanish.
    pub h0_vanishes: bool,
}

/// Reports the bundle degree for a raw multiplicity list.
///
/// With every entry at least one, the degree is at most `-2/5`, so `h^0`
/// vanishes on every component.  Allowing zero entries breaks this: seven
/// marks of multiplicity zero give degree one.
pub fn concavity_witness(entries: &[u32], allow_zero: bool) -> ConcavityReport {
    assert!(entries.len() >= 3, "need at least three marks");
    assert!(
        entries.iter().all(|&m| m <= 4),
        "multiplicities must lie in 0..=4"
    );
    if !allow_zero {
        assert!(
            entries.iter().all(|&m| m >= 1),
            "zero multiplicities need allow_zero"
        );
    }
    let n = entries.len() as i64;
    let sum: u32 = entries.iter().sum();
    let degree = Rat::frac(n - 2 - sum as i64, 5);
    ConcavityReport {
        h0_vanishes: degree.is_negative(),
        degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_and_dual_are_biorthogonal() {
        for i in 1..=4 {
            for j in 1..=4 {
                let pairing = FjrwVector::basis(i).pairing(&FjrwVector::basis(j));
                let expected = if i + j == 5 {
                    Rat::frac(1, 5)
                } else {
                    Rat::zero()
                };
                assert_eq!(pairing, expected);
                let against_dual = FjrwVector::basis(i).pairing(&FjrwVector::basis(j).dual());
                let delta = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(against_dual, delta);
            }
        }
        let twice = FjrwVector::basis(2).dual().dual();
        assert_eq!(twice.coeff(2), &Rat::from_int(25));
        assert_eq!(twice.coeff(3), &Rat::zero());
    }

    #[test]
    fn series_components_match_hand_values() {
        let i = fjrw_i_function(11);
        assert_eq!(i.component(0).c(0), &Rat::one());
        assert_eq!(i.component(0).c(5), &Rat::frac(1, 375000));
        assert_eq!(i.component(1).c(1), &Rat::one());
        assert_eq!(i.component(1).c(6), &Rat::frac(2, 140625));
        assert_eq!(i.component(1).c(11), &Rat::frac(2401, 1740234375000));
        assert_eq!(i.component(2).c(2), &Rat::frac(1, 2));
        assert_eq!(i.component(2).c(7), &Rat::frac(27, 1750000));
        assert_eq!(i.component(3).c(3), &Rat::frac(1, 6));
        assert_eq!(i.component(3).c(8), &Rat::frac(8, 984375));
    }

    #[test]
    fn each_order_feeds_one_component_with_aligned_z_power() {
        let order = 25;
        let i = fjrw_i_function(order);
        for d in 0..=order {
            let m = (d + 1) % 5;
            for k in 0..STATE_DIM {
                let coeff = i.component(k).c(d);
                if m != 0 && k == m - 1 {
                    assert!(!coeff.is_zero(), "component {k} should be fed at order {d}");
                } else {
                    assert!(coeff.is_zero(), "component {k} should vanish at order {d}");
                }
            }
            if m != 0 {
                // The raw z-power of the order-d term is 1 - d + 5a, and it
                // must agree with the fixed power attached to direction m.
                let a = (d + 1) / 5;
                assert_eq!(1 - (d as i64) + 5 * a as i64, i.z_power(m - 1));
            }
        }
        let powers: Vec<i64> = (0..STATE_DIM).map(|k| i.z_power(k)).collect();
        assert_eq!(powers, vec![1, 0, -1, -2]);
    }

    #[test]
    fn mirror_map_is_tangent_to_identity_and_round_trips() {
        let (s, q_of_s) = fjrw_mirror_map(10).unwrap();
        assert_eq!(s.c(0), &Rat::zero());
        assert_eq!(s.c(1), &Rat::one());
        for k in 2..=5 {
            assert_eq!(s.c(k), &Rat::zero());
        }
        assert_eq!(s.c(6), &Rat::frac(13, 1125000));
        let round_trip = s.compose(&q_of_s);
        let identity = QSeries::monomial(Rat::one(), 1, 10);
        assert_eq!(round_trip, identity);
        let other_way = q_of_s.compose(&s);
        assert_eq!(other_way, identity);
    }

    #[test]
    fn extracted_invariants_match_frozen_values() {
        let table = extract_phi2_invariants(13).unwrap();
        let lookup: BTreeMap<usize, Rat> = table.into_iter().collect();
        assert_eq!(lookup[&3], Rat::frac(1, 5));
        assert_eq!(lookup[&8], Rat::frac(8, 3125));
        for (n, value) in &lookup {
            if n % 5 == 3 {
                assert!(!value.is_zero(), "{n} insertions should be nonzero");
            } else {
                assert!(value.is_zero(), "{n} insertions should vanish");
            }
        }
    }

    #[test]
    fn three_point_value_matches_point_count() {
        // The three-pointed moduli space with all multiplicities two is a
        // single point with an automorphism group of order five and zero
        // obstruction rank, so the invariant is exactly 1/5.
        let data = spin_rank(&MultiplicityVector::new(vec![2, 2, 2])).unwrap();
        assert_eq!(data.rounded_degree, -1);
        assert_eq!(data.obstruction_rank, 0);
        assert_eq!(data.virtual_dim, 0);
        let table = extract_phi2_invariants(3).unwrap();
        assert_eq!(table, vec![(3, Rat::frac(1, 5))]);
    }

    #[test]
    fn extraction_reassembles_the_defining_ratio() {
        let order = 9;
        let i = fjrw_i_function(order);
        let i0_inv = i.component(0).invert().unwrap();
        let s = i.component(1).mul(&i0_inv);
        let q_of_s = s.compositional_inverse().unwrap();
        let ratio_in_s = i.component(2).mul(&i0_inv).compose(&q_of_s);
        let table = extract_phi2_invariants(order + 1).unwrap();
        let mut reassembled = QSeries::zero(order);
        for (total, value) in table {
            let n = total - 1;
            if n > order {
                continue;
            }
            let weight = Rat::from_int(5) * Rat::factorial(n as u64).recip() * value;
            reassembled = reassembled.add(&QSeries::monomial(weight, n, order));
        }
        assert_eq!(reassembled, ratio_in_s);
    }

    #[test]
    fn dilaton_reduction_spot_check() {
        let table: BTreeMap<usize, Rat> = extract_phi2_invariants(8).unwrap().into_iter().collect();
        // <phi_2^3 phi_1 psi> reduces to 1 * <phi_2^3> = 1/5.
        let value = reduce_correlator(0, 3, 1, 1, &table).unwrap();
        assert_eq!(value, Rat::frac(1, 5));
        // The same correlator with the dilaton insertion counted up front.
        let value = reduce_correlator(1, 2, 2, 0, &table).unwrap();
        assert_eq!(value, Rat::frac(1, 5));
        // <phi_1 psi phi_2^8> removes with factor (marks - 3) = 6.
        let value = reduce_correlator(1, 7, 2, 0, &table).unwrap();
        assert_eq!(value, Rat::from_int(6) * Rat::frac(8, 3125));
        // Count congruence failure: <phi_1 psi phi_2^3 phi_2> has sum 9
        // against marks + 3 = 8, so it vanishes.
        let value = reduce_correlator(1, 3, 2, 0, &table).unwrap();
        assert!(value.is_zero());
        // Two marks only: also killed by the count congruence.
        let value = reduce_correlator(1, 0, 1, 1, &table).unwrap();
        assert!(value.is_zero());
    }

    #[test]
    fn assembly_matches_series_to_order_four() {
        let check = assemble_j_at_mirror_tau(4).unwrap();
        assert!(check.pass);
        for k in 0..STATE_DIM {
            assert_eq!(check.assembled[k], *check.expected.component(k));
        }
    }

    #[test]
    fn assembly_matches_series_past_the_first_nontrivial_unit_correction() {
        // At order six the change of variables picks up the q^5 term of
        // 1 - I_0, so the dilaton-insertion branch is genuinely exercised.
        let check = assemble_j_at_mirror_tau(6).unwrap();
        assert!(check.pass);
    }

    #[test]
    fn spin_rank_examples() {
        let data = spin_rank(&MultiplicityVector::new(vec![2, 2, 2])).unwrap();
        assert_eq!(
            data,
            SpinData {
                rounded_degree: -1,
                obstruction_rank: 0,
                virtual_dim: 0
            }
        );
        assert!(matches!(
            spin_rank(&MultiplicityVector::new(vec![1, 1, 1])),
            Err(Error::EmptyModuli { .. })
        ));
        assert!(matches!(
            spin_rank(&MultiplicityVector::new(vec![2, 2, 2, 2])),
            Err(Error::EmptyModuli { .. })
        ));
        let data = spin_rank(&MultiplicityVector::new(vec![4, 4, 3])).unwrap();
        assert_eq!(data.rounded_degree, -2);
        assert_eq!(data.obstruction_rank, 5);
        assert_eq!(data.virtual_dim, -5);
    }

    #[test]
    fn virtual_dimension_identity_holds_exhaustively() {
        // Every multiplicity vector with at most twelve marks: the degree
        // is integral exactly when the count congruence holds, and then
        // the virtual dimension equals 2n - sum.
        for n in 3..=12usize {
            let mut entries = vec![1u32; n];
            loop {
                let sum: u32 = entries.iter().sum();
                let congruent = (sum as usize) % 5 == (n + 3) % 5;
                let vector = MultiplicityVector::new(entries.clone());
                assert_eq!(vector.is_nonempty(), congruent);
                match spin_rank(&vector) {
                    Ok(data) => {
                        assert!(congruent);
                        assert_eq!(data.virtual_dim, 2 * n as i64 - sum as i64);
                        assert_eq!(data.virtual_dim, n as i64 - 3 - data.obstruction_rank);
                    }
                    Err(Error::EmptyModuli { .. }) => assert!(!congruent),
                    Err(other) => panic!("unexpected error {other:?}"),
                }
                // Odometer over entries in 1..=4.
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    if entries[pos] < 4 {
                        entries[pos] += 1;
                        break;
                    }
                    entries[pos] = 1;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn concavity_witness_examples() {
        let report = concavity_witness(&[2, 2, 2], false);
        assert_eq!(report.degree, Rat::from_int(-1));
        assert!(report.h0_vanishes);
        let report = concavity_witness(&[1, 1, 1], false);
        assert_eq!(report.degree, Rat::frac(-2, 5));
        assert!(report.h0_vanishes);
        // Seven marks of multiplicity zero: degree one, sections survive.
        let report = concavity_witness(&[0; 7], true);
        assert_eq!(report.degree, Rat::one());
        assert!(!report.h0_vanishes);
    }
}
