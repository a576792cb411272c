//! The quintic degree-counting series, its torus-fixed-point restrictions,
//! and the order-by-order checks tying the localization graph sum to the
//! closed hypergeometric form.
//!
//! * [`gw_i_function`]: the series in the hyperplane class H, organized into
//!   four components paired with z-powers 1, 0, -1, -2.
//! * [`mirror_tau`]: the change of variables built from the first two
//!   components.
//! * [`i_fixed`]: the closed fixed-point restriction, one exact rational
//!   function of z per q-order.
//! * [`residue_identity_check`]: each simple pole of a restriction carries an
//!   edge factor times a lower-order restriction evaluated at the pole.
//! * [`solve_recursion`]: rebuilds the restrictions from the mirror map alone
//!   by walking q-orders and transporting pole data along edges.
//! * [`verify_pole_reassembly`]: extracts the pole data of the closed
//!   restriction by partial fractions and reassembles the whole function
//!   through vertex integrals.
//! * [`compare_with_localization`]: evaluates the same restriction as a
//!   decorated-tree graph sum with series-valued legs.
//!
//! At generic weights the fixed-point change of variables carries, besides
//! the z- and hyperplane components, a constant component proportional to
//! the sum of the weights (it vanishes for weight-balanced specs and drops
//! out of every weight-independent output). All three components feed the
//! recursion, the reassembly and the graph-sum comparison.

use std::collections::BTreeMap;

use crate::equivariant::AlphaSpec;
use crate::error::{Error, Result};
use crate::exact::{Poly, QSeries, Rat, RatFn, ZLaurent};
use crate::graphsum::{self, compositions};
use crate::psi::{vertex_integral, VertexIntegrand};

/// Number of hyperplane-power components kept (the quintic kills H^4).
pub const COMPONENTS: usize = 4;

/// The degree-counting series split by hyperplane powers: component k is the
/// q-series multiplying H^k z^{1-k}.
#[derive(Clone, Debug, PartialEq)]
pub struct GwIFunction {
    components: Vec<QSeries<Rat>>,
}

impl GwIFunction {
    /// Component `k` (the coefficient series of H^k z^{1-k}), `k < 4`.
    pub fn component(&self, k: usize) -> &QSeries<Rat> {
        &self.components[k]
    }

    /// z-power paired with the H^k component.
    pub fn z_power(k: usize) -> i64 {
        1 - k as i64
    }

    pub fn truncation(&self) -> usize {
        self.components[0].truncation()
    }
}

/// One factor-by-factor product step in Q(z)[H]/(H^4).
fn hmul(a: &[RatFn; COMPONENTS], b: &[RatFn; COMPONENTS]) -> [RatFn; COMPONENTS] {
    let mut out = [RatFn::zero(), RatFn::zero(), RatFn::zero(), RatFn::zero()];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (k, bk) in b.iter().enumerate() {
            if i + k < COMPONENTS && !bk.is_zero() {
                out[i + k] = &out[i + k] + &(ai * bk);
            }
        }
    }
    out
}

/// The q^d term of the degree-counting series as raw H-components over Q(z):
/// `z * prod_{k=1}^{5d}(5H + kz) / prod_{k=1}^{d}(H + kz)^5` modulo H^4.
fn gw_term_raw(d: usize) -> [RatFn; COMPONENTS] {
    let constant = |r: Rat| {
        let mut v = [RatFn::zero(), RatFn::zero(), RatFn::zero(), RatFn::zero()];
        v[0] = RatFn::from_rat(r);
        v
    };
    let mut num = constant(Rat::one());
    num[0] = RatFn::var();
    for k in 1..=5 * d {
        let mut factor = constant(Rat::zero());
        factor[0] = &RatFn::var() * &RatFn::from_rat(Rat::from_int(k as i64));
        factor[1] = RatFn::from_rat(Rat::from_int(5));
        num = hmul(&num, &factor);
    }
    let mut den = constant(Rat::one());
    for k in 1..=d {
        let mut factor = constant(Rat::zero());
        factor[0] = &RatFn::var() * &RatFn::from_rat(Rat::from_int(k as i64));
        factor[1] = RatFn::one();
        for _ in 0..5 {
            den = hmul(&den, &factor);
        }
    }
    // invert den = c0 (1 + u) with u nilpotent: 1/den = (1 - u + u^2 - u^3)/c0
    let c0_inv = &RatFn::one() / &den[0];
    let mut u = constant(Rat::zero());
    for k in 1..COMPONENTS {
        u[k] = &den[k] * &c0_inv;
    }
    let u2 = hmul(&u, &u);
    let u3 = hmul(&u2, &u);
    let mut inv = constant(Rat::one());
    for k in 0..COMPONENTS {
        inv[k] = &(&(&inv[k] - &u[k]) + &u2[k]) - &u3[k];
        inv[k] = &inv[k] * &c0_inv;
    }
    hmul(&num, &inv)
}

/// Expands the degree-counting series to the given q-order. Each q^d term is
/// jointly homogeneous of degree one in (z, H), so the H^k component is a
/// pure rational multiple of z^{1-k}; the scalars are collected per
/// component.
pub fn gw_i_function(order: usize) -> GwIFunction {
    let mut comps: Vec<Vec<Rat>> = (0..COMPONENTS)
        .map(|_| Vec::with_capacity(order + 1))
        .collect();
    for d in 0..=order {
        let raw = gw_term_raw(d);
        for (k, raw_k) in raw.iter().enumerate() {
            let normalized = if k == 0 {
                raw_k / &RatFn::var()
            } else {
                raw_k * &RatFn::from_poly(Poly::monomial(Rat::one(), k - 1))
            };
            let c = normalized
                .as_constant()
                .expect("each term is jointly homogeneous of degree one in (z, H)");
            comps[k].push(c);
        }
    }
    GwIFunction {
        components: comps
            .into_iter()
            .map(|v| QSeries::new(order, v))
            .collect(),
    }
}

/// The change of variables `tau(z) = z_part(q) z + h_part(q) H`; both parts
/// vanish at q = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct MirrorTau {
    /// Coefficient of z: one minus the unit component of the series.
    pub z_part: QSeries<Rat>,
    /// Coefficient of the hyperplane class: the H-component of the series.
    pub h_part: QSeries<Rat>,
}

impl MirrorTau {
    pub fn truncation(&self) -> usize {
        self.z_part.truncation()
    }

    /// q^m coefficient of the unit component of the series this map was
    /// built from (1 at m = 0, minus the z-part coefficient after that).
    pub fn unit_coefficient(&self, m: usize) -> Rat {
        if m == 0 {
            Rat::one()
        } else {
            -self.z_part.c(m)
        }
    }
}

/// Builds the mirror change of variables from the degree-counting series.
pub fn mirror_tau(order: usize) -> MirrorTau {
    let i = gw_i_function(order);
    MirrorTau {
        z_part: QSeries::one(order).sub(i.component(0)),
        h_part: i.component(1).clone(),
    }
}

fn harmonic(n: usize) -> Rat {
    let mut acc = Rat::zero();
    for k in 1..=n {
        acc = acc + Rat::frac(1, k as i64);
    }
    acc
}

/// Constant component of the fixed-point change of variables: coefficient m
/// is (sum of the weights) times the m-th harmonic number times the unit
/// coefficient at order m. Identically zero for weight-balanced specs, and
/// it cancels out of every weight-independent quantity.
fn fixed_point_constant(tau: &MirrorTau, alpha: &AlphaSpec, order: usize) -> Vec<Rat> {
    let mut weight_sum = Rat::zero();
    for w in alpha.weights() {
        weight_sum = weight_sum + w.clone();
    }
    (0..=order)
        .map(|m| {
            if m == 0 {
                Rat::zero()
            } else {
                tau.unit_coefficient(m) * harmonic(m) * weight_sum.clone()
            }
        })
        .collect()
}

/// Closed fixed-point restriction of the degree-counting series: the q^m
/// coefficient is
/// `z * prod_{k=0}^{5m}(5 a_j + kz) / prod_{(l,k) != (j,0)}(a_j - a_l + kz)`
/// with l over all fixed points and k from 0 to m, as a reduced rational
/// function of z. The AlphaSpec invariants (distinct, nonzero) make every
/// retained factor nonzero, so this cannot degenerate.
pub fn i_fixed(j: usize, alpha: &AlphaSpec, order: usize) -> Vec<RatFn> {
    (0..=order).map(|m| i_fixed_term(j, alpha, m)).collect()
}

fn i_fixed_term(j: usize, alpha: &AlphaSpec, m: usize) -> RatFn {
    let mut num = Poly::x();
    for k in 0..=5 * m {
        num = &num
            * &Poly::new(vec![
                Rat::from_int(5) * alpha.weight(j).clone(),
                Rat::from_int(k as i64),
            ]);
    }
    let mut den = Poly::one();
    for l in 0..alpha.len() {
        for k in 0..=m {
            if (l, k) == (j, 0) {
                continue;
            }
            den = &den * &Poly::new(vec![alpha.diff(j, l), Rat::from_int(k as i64)]);
        }
    }
    RatFn::new(num, den)
}

/// Both sides of a residue comparison at the first failing q-order.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueWitness {
    pub q_order: usize,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Checks, per q-order up to `order`, that the residue of the restriction at
/// fixed point `j` at the pole z = (a_jp - a_j)/d equals the degree-d edge
/// factor times the far flag factor times the restriction at `jp` evaluated
/// at that same pole location, shifted down d q-orders. Returns the first
/// failing order with both sides, or `None` when every order agrees.
pub fn residue_identity_check(
    d: u32,
    j: usize,
    jp: usize,
    alpha: &AlphaSpec,
    order: usize,
) -> Result<Option<ResidueWitness>> {
    assert_ne!(j, jp);
    let restriction_j = i_fixed(j, alpha, order);
    let restriction_jp = i_fixed(jp, alpha, order);
    residue_pair_check(d, j, jp, alpha, order, &restriction_j, &restriction_jp)
}

/// One sweep entry: degree, near and far fixed points, first failure if any.
pub type ResidueSweepEntry = (u32, usize, usize, Option<ResidueWitness>);

/// Runs the residue comparison for every ordered pair of fixed points and
/// every degree up to `max_d`, building each closed restriction once and
/// sharing it across all pairs.
pub fn residue_identity_sweep(
    max_d: u32,
    alpha: &AlphaSpec,
    order: usize,
) -> Result<Vec<ResidueSweepEntry>> {
    let restrictions: Vec<Vec<RatFn>> = (0..alpha.len())
        .map(|j| i_fixed(j, alpha, order))
        .collect();
    let mut results = Vec::new();
    for d in 1..=max_d {
        for j in 0..alpha.len() {
            for jp in 0..alpha.len() {
                if j == jp {
                    continue;
                }
                let witness = residue_pair_check(
                    d,
                    j,
                    jp,
                    alpha,
                    order,
                    &restrictions[j],
                    &restrictions[jp],
                )?;
                results.push((d, j, jp, witness));
            }
        }
    }
    Ok(results)
}

#[allow(clippy::too_many_arguments)]
fn residue_pair_check(
    d: u32,
    j: usize,
    jp: usize,
    alpha: &AlphaSpec,
    order: usize,
    restriction_j: &[RatFn],
    restriction_jp: &[RatFn],
) -> Result<Option<ResidueWitness>> {
    let p = alpha.diff(jp, j) / Rat::from_int(d as i64);
    let e = graphsum::edge_term(d, j, jp, alpha)?;
    let f = graphsum::flag_term(jp, alpha)?;
    for m in 0..=order {
        let lhs = restriction_j[m].residue(&p)?;
        let rhs = if m as u32 >= d {
            let val = restriction_jp[m - d as usize].eval(&p).ok_or_else(|| {
                Error::DegenerateAlpha {
                    detail: format!(
                        "restriction at fixed point {jp} has a pole at the comparison point {p}"
                    ),
                }
            })?;
            &(&e * &f) * &val
        } else {
            Rat::zero()
        };
        if lhs != rhs {
            return Ok(Some(ResidueWitness { q_order: m, lhs, rhs }));
        }
    }
    Ok(None)
}

/// Per-fixed-point pole coefficients: key (d, jp) holds the q-series of the
/// simple pole at z = (a_jp - a_j)/d, zero below q-order d.
type PoleData = BTreeMap<(u32, usize), Vec<Rat>>;

/// Restrictions rebuilt from the mirror map, with the pole data the walk
/// produced.
#[derive(Clone, Debug)]
pub struct RecursionRun {
    j_series: Vec<Vec<RatFn>>,
    pole_data: Vec<PoleData>,
}

impl RecursionRun {
    /// Rebuilt restriction at fixed point `j`, indexed by q-order.
    pub fn restriction(&self, j: usize) -> &[RatFn] {
        &self.j_series[j]
    }

    /// q^m coefficient of the pole series at (d, jp) for fixed point `j`;
    /// zero when the walk never produced that pole.
    pub fn pole_coefficient(&self, j: usize, d: u32, jp: usize, m: usize) -> Rat {
        self.pole_data[j]
            .get(&(d, jp))
            .and_then(|v| v.get(m))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Large-z expansion of the q^m coefficient down to z^{-z_tail}.
    pub fn large_z_profile(&self, j: usize, m: usize, z_tail: u32) -> ZLaurent {
        self.j_series[j][m].expand_at_infinity(-(z_tail as i64))
    }
}

/// Evaluates the series-leg polynomial in the cotangent class for q-power
/// `i` at a vertex with the given hyperplane restriction, including the
/// geometric tails of the pole terms up to degree `maxdeg`.
fn leg_polynomial(
    j: usize,
    i: usize,
    maxdeg: usize,
    pole_data: &PoleData,
    tau: &MirrorTau,
    consts: &[Rat],
    alpha: &AlphaSpec,
) -> Poly {
    let mut coeffs = vec![Rat::zero(); maxdeg + 1];
    coeffs[0] = tau.h_part.c(i) * alpha.weight(j) + consts[i].clone();
    if maxdeg >= 1 {
        coeffs[1] = tau.z_part.c(i).clone();
    }
    for ((d, jp), tail) in pole_data {
        let t = match tail.get(i) {
            Some(t) if !t.is_zero() => t,
            _ => continue,
        };
        let p = alpha.diff(*jp, j) / Rat::from_int(*d as i64);
        // 1/(-psi - p) expanded: coefficient of psi^k is (-1)^{k+1} / p^{k+1}
        let mut inv_pow = p.recip();
        for (k, c) in coeffs.iter_mut().enumerate() {
            let signed = if k % 2 == 0 {
                -(t * &inv_pow)
            } else {
                t * &inv_pow
            };
            *c = &*c + &signed;
            inv_pow = inv_pow * p.recip();
        }
    }
    Poly::new(coeffs)
}

/// Assembles the q^m coefficient of a restriction from its pole data: the
/// bracket times (linear part + simple poles + symmetrized vertex integrals
/// of the leg polynomials against the open slot).
fn assemble_restriction(
    j: usize,
    m: usize,
    pole_data: &PoleData,
    tau: &MirrorTau,
    consts: &[Rat],
    alpha: &AlphaSpec,
) -> Result<RatFn> {
    let br = graphsum::bracket(j, alpha)?;
    let constant = tau.h_part.c(m) * alpha.weight(j) + consts[m].clone();
    let mut acc = RatFn::from_poly(Poly::new(vec![constant, tau.unit_coefficient(m)]));
    for ((d, jp), tail) in pole_data {
        let t = match tail.get(m) {
            Some(t) if !t.is_zero() => t.clone(),
            _ => continue,
        };
        let p = alpha.diff(*jp, j) / Rat::from_int(*d as i64);
        acc = &acc + &RatFn::new(Poly::constant(t), Poly::new(vec![-&p, Rat::one()]));
    }
    for n in 2..=m {
        let weight = RatFn::from_rat(Rat::factorial(n as u64).recip());
        for comp in compositions(m as u32, n) {
            let insertions: Vec<Poly> = comp
                .iter()
                .map(|&i| leg_polynomial(j, i as usize, n - 2, pole_data, tau, consts, alpha))
                .collect();
            let integral = vertex_integral(&VertexIntegrand {
                insertions,
                flag_weights: vec![],
                open_slot: true,
            })?
            .expect_of_z();
            acc = &acc + &(&weight * &integral);
        }
    }
    Ok(&RatFn::from_rat(br) * &acc)
}

/// Walks q-orders: at order m, transports order-(m-d) restriction values
/// along degree-d edges into pole coefficients, then assembles the order-m
/// restriction at every fixed point. Requires the change of variables to at
/// least the requested order.
pub fn solve_recursion(
    alpha: &AlphaSpec,
    tau: &MirrorTau,
    q_order: usize,
) -> Result<RecursionRun> {
    if tau.truncation() < q_order {
        return Err(Error::TruncationExceeded {
            needed: q_order,
            available: tau.truncation(),
        });
    }
    let np = alpha.len();
    let consts = fixed_point_constant(tau, alpha, q_order);
    let mut j_series: Vec<Vec<RatFn>> = (0..np)
        .map(|_| Vec::with_capacity(q_order + 1))
        .collect();
    let mut pole_data: Vec<PoleData> = vec![BTreeMap::new(); np];
    for (j, series) in j_series.iter_mut().enumerate() {
        series.push(assemble_restriction(j, 0, &pole_data[j], tau, &consts, alpha)?);
    }
    for m in 1..=q_order {
        for (j, poles) in pole_data.iter_mut().enumerate() {
            for (jp, transported) in j_series.iter().enumerate() {
                if jp == j {
                    continue;
                }
                for d in 1..=m as u32 {
                    let p = alpha.diff(jp, j) / Rat::from_int(d as i64);
                    let prev = &transported[m - d as usize];
                    let val = prev.eval(&p).ok_or_else(|| Error::DegenerateAlpha {
                        detail: format!(
                            "restriction at fixed point {jp} has a pole at the transport point {p}"
                        ),
                    })?;
                    let coeff = &(&(&graphsum::edge_term(d, j, jp, alpha)?
                        * &graphsum::flag_term(j, alpha)?)
                        * &graphsum::flag_term(jp, alpha)?)
                        * &val;
                    poles
                        .entry((d, jp))
                        .or_insert_with(|| vec![Rat::zero(); q_order + 1])[m] = coeff;
                }
            }
        }
        for ((j, poles), series) in pole_data.iter().enumerate().zip(j_series.iter_mut()) {
            let term = assemble_restriction(j, m, poles, tau, &consts, alpha)?;
            series.push(term);
        }
    }
    Ok(RecursionRun { j_series, pole_data })
}

/// One fixed-point, one q-order comparison of two rational functions.
#[derive(Clone, Debug)]
pub struct ComparisonRecord {
    pub j: usize,
    pub q_order: usize,
    pub pass: bool,
    pub lhs: RatFn,
    pub rhs: RatFn,
}

/// Outcome of an order-by-order comparison across all fixed points.
#[derive(Clone, Debug)]
pub struct ComparisonOutcome {
    pub pass: bool,
    pub records: Vec<ComparisonRecord>,
}

impl ComparisonOutcome {
    fn from_records(records: Vec<ComparisonRecord>) -> Self {
        ComparisonOutcome {
            pass: records.iter().all(|r| r.pass),
            records,
        }
    }

    /// First failing record, if any.
    pub fn first_failure(&self) -> Option<&ComparisonRecord> {
        self.records.iter().find(|r| !r.pass)
    }
}

/// Runs the recursion and compares its output with the closed restriction,
/// per fixed point and q-order, as reduced rational functions.
pub fn recursion_matches_closed_form(
    alpha: &AlphaSpec,
    q_order: usize,
) -> Result<ComparisonOutcome> {
    let tau = mirror_tau(q_order);
    let run = solve_recursion(alpha, &tau, q_order)?;
    let mut records = Vec::new();
    for j in 0..alpha.len() {
        let closed = i_fixed(j, alpha, q_order);
        for (m, rhs) in closed.into_iter().enumerate() {
            let lhs = run.restriction(j)[m].clone();
            records.push(ComparisonRecord {
                j,
                q_order: m,
                pass: lhs == rhs,
                lhs,
                rhs,
            });
        }
    }
    Ok(ComparisonOutcome::from_records(records))
}

/// Extracts the simple-pole data of the closed restriction by partial
/// fractions against the predicted pole set, reassembles the function from
/// that data through vertex integrals, and compares with the closed form per
/// q-order. A pole outside the predicted set or a higher-order pole away
/// from z = 0 is a `PartialFractionMismatch`.
pub fn verify_pole_reassembly(alpha: &AlphaSpec, q_order: usize) -> Result<ComparisonOutcome> {
    let tau = mirror_tau(q_order);
    let consts = fixed_point_constant(&tau, alpha, q_order);
    let np = alpha.len();
    let mut records = Vec::new();
    for j in 0..np {
        let closed = i_fixed(j, alpha, q_order);
        let br = graphsum::bracket(j, alpha)?;
        // map each predicted pole location to its (d, jp) key
        let mut location: BTreeMap<Rat, (u32, usize)> = BTreeMap::new();
        for jp in 0..np {
            if jp == j {
                continue;
            }
            for d in 1..=q_order as u32 {
                let p = alpha.diff(jp, j) / Rat::from_int(d as i64);
                if location.insert(p.clone(), (d, jp)).is_some() {
                    return Err(Error::DegenerateAlpha {
                        detail: format!("two predicted poles of the restriction at {j} coincide at {p}"),
                    });
                }
            }
        }
        let mut pole_data: PoleData = BTreeMap::new();
        for (m, term) in closed.iter().enumerate() {
            let mut candidates: Vec<Rat> = vec![Rat::zero()];
            candidates.extend(location.keys().cloned());
            let (_, parts) = term.partial_fractions(&candidates).map_err(|e| match e {
                Error::UnsplitDenominator { remainder_degree } => Error::PartialFractionMismatch {
                    detail: format!(
                        "restriction at {j}, q-order {m}: pole outside the predicted set \
                         (unsplit cofactor of degree {remainder_degree})"
                    ),
                },
                other => other,
            })?;
            for (p, coeffs) in &parts {
                if p.is_zero() {
                    continue;
                }
                if coeffs.len() > 1 && coeffs[1..].iter().any(|c| !c.is_zero()) {
                    return Err(Error::PartialFractionMismatch {
                        detail: format!(
                            "restriction at {j}, q-order {m}: pole at {p} is not simple"
                        ),
                    });
                }
                let (d, jp) = location[p];
                pole_data
                    .entry((d, jp))
                    .or_insert_with(|| vec![Rat::zero(); q_order + 1])[m] =
                    &coeffs[0] / &br;
            }
        }
        for (m, lhs) in closed.into_iter().enumerate() {
            let rhs = assemble_restriction(j, m, &pole_data, &tau, &consts, alpha)?;
            records.push(ComparisonRecord {
                j,
                q_order: m,
                pass: lhs == rhs,
                lhs,
                rhs,
            });
        }
    }
    Ok(ComparisonOutcome::from_records(records))
}

/// Evaluates the restriction as a localization graph sum with
/// series-valued legs (linear part plus the restricted correlator with the
/// open slot pinned to label j) and compares with the closed form per
/// q-order. Cost grows quickly with the q-order; orders up to 2 stay cheap.
pub fn compare_with_localization(alpha: &AlphaSpec, q_order: usize) -> Result<ComparisonOutcome> {
    let tau = mirror_tau(q_order);
    let consts = fixed_point_constant(&tau, alpha, q_order);
    let mut records = Vec::new();
    for j in 0..alpha.len() {
        let br = graphsum::bracket(j, alpha)?;
        let closed = i_fixed(j, alpha, q_order);
        let restricted = graphsum::restricted_correlator_at_fixed_point(
            j,
            q_order,
            |q_power, label| {
                Poly::new(vec![
                    tau.h_part.c(q_power) * alpha.weight(label) + consts[q_power].clone(),
                    tau.z_part.c(q_power).clone(),
                ])
            },
            alpha,
        )?;
        for m in 0..=q_order {
            let constant = tau.h_part.c(m) * alpha.weight(j) + consts[m].clone();
            let linear = RatFn::from_poly(Poly::new(vec![constant, tau.unit_coefficient(m)]));
            let lhs = &(&RatFn::from_rat(br.clone()) * &linear) + &restricted[m];
            let rhs = closed[m].clone();
            records.push(ComparisonRecord {
                j,
                q_order: m,
                pass: lhs == rhs,
                lhs,
                rhs,
            });
        }
    }
    Ok(ComparisonOutcome::from_records(records))
}
