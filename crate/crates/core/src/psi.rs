//! Cotangent-line integrals on genus-zero moduli of marked curves, plus the
//! vertex integral evaluator used by every localization sum.
//!
//! For `n >= 3` marks the integrals have the multinomial closed form
//! `integral psi_1^{a_1} ... psi_n^{a_n} = (n-3)! / (a_1! ... a_n!)` when the
//! exponents sum to `n - 3` and vanish otherwise. Valence one and two do not
//! have moduli; their values are fixed by the conventions
//!
//! * one mark against `1/(z - psi)` gives `z`,
//! * `psi_1^k` against `1/(z - psi_2)` gives `(-z)^k`,
//! * two flag factors `1/(w_1 - psi_1) * 1/(w_2 - psi_2)` compose to
//!   `1/(w_1 + w_2)`, and a flag against the open slot gives `1/(w + z)`,
//!
//! which are exactly the values that make edge-removal surgeries on the graph
//! sum consistent. Nilpotency (`psi^k = 0` above degree `n - 3`) keeps every
//! geometric expansion finite.

use crate::error::{Error, Result};
use crate::exact::{Poly, Rat, RatFn};

/// `integral psi_1^{a_1}...psi_n^{a_n}` over the moduli of genus-zero curves
/// with `n = exps.len()` marks. `UnstableSpace` below three marks.
pub fn psi_integral(exps: &[u64]) -> Result<Rat> {
    let n = exps.len();
    if n < 3 {
        return Err(Error::UnstableSpace { marks: n });
    }
    let total: u64 = exps.iter().sum();
    if total != n as u64 - 3 {
        return Ok(Rat::zero());
    }
    let mut acc = Rat::factorial(total);
    for &a in exps {
        acc = &acc / &Rat::factorial(a);
    }
    Ok(acc)
}

/// Independent evaluation of the same integrals by removing a mark with
/// exponent zero and redistributing, down to the three-mark base case. Kept
/// deliberately free of the closed form so it can serve as its cross-check.
pub fn psi_integral_string_oracle(exps: &[u64]) -> Result<Rat> {
    let n = exps.len();
    if n < 3 {
        return Err(Error::UnstableSpace { marks: n });
    }
    let total: u64 = exps.iter().sum();
    if total != n as u64 - 3 {
        return Ok(Rat::zero());
    }
    fn rec(exps: &mut Vec<u64>) -> Rat {
        let n = exps.len();
        if n == 3 {
            // base: all exponents zero, single point class
            return Rat::one();
        }
        // some exponent is zero because the total n-3 is below n
        let pos = exps.iter().position(|&a| a == 0).expect("zero exponent exists");
        let removed = exps.remove(pos);
        debug_assert_eq!(removed, 0);
        let mut acc = Rat::zero();
        for i in 0..exps.len() {
            if exps[i] == 0 {
                continue;
            }
            exps[i] -= 1;
            acc = &acc + &rec(exps);
            exps[i] += 1;
        }
        exps.insert(pos, 0);
        acc
    }
    Ok(rec(&mut exps.to_vec()))
}

/// Data of one vertex integral: insertion polynomials in the cotangent class
/// (one per leg), flag weights `w` contributing `1/(w - psi)` each, and an
/// optional open slot contributing `1/(z - psi)` with `z` kept symbolic.
#[derive(Clone, Debug)]
pub struct VertexIntegrand {
    pub insertions: Vec<Poly>,
    pub flag_weights: Vec<Rat>,
    pub open_slot: bool,
}

/// Value of a vertex integral: a scalar without the open slot, a rational
/// function of the slot variable with it.
#[derive(Clone, Debug, PartialEq)]
pub enum VertexValue {
    Scalar(Rat),
    OfZ(RatFn),
}

impl VertexValue {
    pub fn expect_scalar(self) -> Rat {
        match self {
            VertexValue::Scalar(r) => r,
            VertexValue::OfZ(f) => panic!("expected scalar vertex value, got {f}"),
        }
    }

    pub fn expect_of_z(self) -> RatFn {
        match self {
            VertexValue::OfZ(f) => f,
            VertexValue::Scalar(r) => RatFn::from_rat(r),
        }
    }
}

/// Evaluates the integral over the vertex moduli, applying the stable
/// multinomial form at valence three and up and the fixed conventions below.
///
/// `ZeroFlagWeight` rejects vanishing flag weights (the label is not known
/// here, so 0 is reported); `UnhandledUnstableShape` rejects low-valence
/// shapes outside the conventions.
pub fn vertex_integral(v: &VertexIntegrand) -> Result<VertexValue> {
    for w in &v.flag_weights {
        if w.is_zero() {
            return Err(Error::ZeroFlagWeight { label: 0 });
        }
    }
    let nl = v.insertions.len();
    let ne = v.flag_weights.len();
    let val = nl + ne + usize::from(v.open_slot);
    match val {
        0 => Err(Error::UnhandledUnstableShape {
            legs: 0,
            flags: 0,
            slot: false,
        }),
        1 => {
            if v.open_slot {
                // integral of 1/(z - psi) with one mark
                Ok(VertexValue::OfZ(RatFn::var()))
            } else if ne == 1 {
                // same convention with the slot specialized to the flag weight
                Ok(VertexValue::Scalar(v.flag_weights[0].clone()))
            } else {
                Err(Error::UnhandledUnstableShape {
                    legs: nl,
                    flags: ne,
                    slot: false,
                })
            }
        }
        2 => match (nl, ne, v.open_slot) {
            (0, 1, true) => {
                // geometric sum over psi powers resums to 1/(w + z)
                let den = Poly::new(vec![v.flag_weights[0].clone(), Rat::one()]);
                Ok(VertexValue::OfZ(RatFn::new(Poly::one(), den)))
            }
            (1, 0, true) => {
                // psi^k against the slot contributes (-z)^k
                let u = &v.insertions[0];
                let mut acc = RatFn::zero();
                for (k, c) in u.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let sign = if k % 2 == 0 { c.clone() } else { -c };
                    acc = &acc + &RatFn::from_poly(Poly::monomial(sign, k));
                }
                Ok(VertexValue::OfZ(acc))
            }
            (1, 1, false) => {
                // psi^k against a flag: evaluate the slot convention at z = w
                let u = &v.insertions[0];
                let w = &v.flag_weights[0];
                Ok(VertexValue::Scalar(u.eval(&-w)))
            }
            (0, 2, false) => {
                // two flags compose to 1/(w1 + w2)
                let s = &v.flag_weights[0] + &v.flag_weights[1];
                if s.is_zero() {
                    return Err(Error::DegenerateAlpha {
                        detail: format!(
                            "flag weights {} and {} cancel at a two-flag vertex",
                            v.flag_weights[0], v.flag_weights[1]
                        ),
                    });
                }
                Ok(VertexValue::Scalar(s.recip()))
            }
            _ => Err(Error::UnhandledUnstableShape {
                legs: nl,
                flags: ne,
                slot: v.open_slot,
            }),
        },
        _ => stable_vertex_integral(v, val),
    }
}

/// Stable case: expand every `1/(w - psi)` and `1/(z - psi)` geometrically up
/// to the nilpotency cutoff `val - 3` and integrate term by term.
fn stable_vertex_integral(v: &VertexIntegrand, val: usize) -> Result<VertexValue> {
    let cutoff = val - 3;
    // by-slot-exponent accumulator: index a holds the coefficient of z^-(a+1)
    let mut by_slot_exp = vec![Rat::zero(); cutoff + 1];
    let mut no_slot_acc = Rat::zero();

    // distribute `cutoff` among insertion legs, flags and the optional slot
    fn rec(
        v: &VertexIntegrand,
        slot_idx: usize,
        remaining: u64,
        coeff: Rat,
        exps: &mut Vec<u64>,
        sink: &mut dyn FnMut(u64, Rat, &[u64]),
    ) {
        let nl = v.insertions.len();
        let ne = v.flag_weights.len();
        if slot_idx == nl + ne {
            sink(remaining, coeff, exps);
            return;
        }
        for a in 0..=remaining {
            let c = if slot_idx < nl {
                v.insertions[slot_idx].coeff(a as usize)
            } else {
                // 1/(w - psi) contributes psi^a / w^(a+1)
                v.flag_weights[slot_idx - nl].pow(-(a as i64) - 1)
            };
            if c.is_zero() {
                continue;
            }
            exps.push(a);
            rec(v, slot_idx + 1, remaining - a, &coeff * &c, exps, sink);
            exps.pop();
        }
    }

    let total = cutoff as u64;
    let mut exps = Vec::new();
    if v.open_slot {
        rec(
            v,
            0,
            total,
            Rat::one(),
            &mut exps,
            &mut |slot_exp, coeff, exps| {
                let mut all: Vec<u64> = exps.to_vec();
                all.push(slot_exp);
                debug_assert_eq!(all.len(), val);
                let integral = psi_integral(&all).expect("stable space");
                if integral.is_zero() {
                    return;
                }
                by_slot_exp[slot_exp as usize] =
                    &by_slot_exp[slot_exp as usize] + &(&coeff * &integral);
            },
        );
        // assemble sum_a c_a z^-(a+1) as a single rational function
        let mut num = Poly::zero();
        for (a, c) in by_slot_exp.iter().enumerate() {
            num = &num + &Poly::monomial(c.clone(), cutoff - a);
        }
        let den = Poly::monomial(Rat::one(), cutoff + 1);
        Ok(VertexValue::OfZ(RatFn::new(num, den)))
    } else {
        rec(
            v,
            0,
            total,
            Rat::one(),
            &mut exps,
            &mut |leftover, coeff, exps| {
                // without a slot every unit of degree must be consumed
                if leftover != 0 {
                    return;
                }
                debug_assert_eq!(exps.len(), val);
                let integral = psi_integral(exps).expect("stable space");
                if integral.is_zero() {
                    return;
                }
                no_slot_acc = &no_slot_acc + &(&coeff * &integral);
            },
        );
        Ok(VertexValue::Scalar(no_slot_acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        assert_eq!(psi_integral(&[0, 0, 0]).unwrap(), Rat::one());
        assert_eq!(psi_integral(&[1, 0, 0, 0]).unwrap(), Rat::one());
        assert_eq!(psi_integral(&[1, 1, 0, 0, 0]).unwrap(), Rat::from_int(2));
        assert_eq!(psi_integral(&[2, 0, 0, 0, 0]).unwrap(), Rat::one());
        assert_eq!(psi_integral(&[3, 0, 0, 0, 0, 0]).unwrap(), Rat::one());
        assert_eq!(psi_integral(&[1, 1, 1, 0, 0, 0]).unwrap(), Rat::from_int(6));
        // wrong total degree vanishes
        assert_eq!(psi_integral(&[1, 0, 0]).unwrap(), Rat::zero());
        assert_eq!(psi_integral(&[0, 0, 0, 0]).unwrap(), Rat::zero());
    }

    #[test]
    fn unstable_space_is_rejected() {
        assert!(matches!(
            psi_integral(&[0, 0]),
            Err(Error::UnstableSpace { marks: 2 })
        ));
        assert!(matches!(
            psi_integral_string_oracle(&[0]),
            Err(Error::UnstableSpace { marks: 1 })
        ));
    }

    #[test]
    fn oracle_agrees_with_closed_form_exhaustively() {
        // every exponent vector with the right total, up to eight marks
        fn vectors(n: usize, total: u64) -> Vec<Vec<u64>> {
            if n == 1 {
                return vec![vec![total]];
            }
            let mut out = Vec::new();
            for first in 0..=total {
                for mut rest in vectors(n - 1, total - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for n in 3..=8usize {
            for exps in vectors(n, n as u64 - 3) {
                assert_eq!(
                    psi_integral(&exps).unwrap(),
                    psi_integral_string_oracle(&exps).unwrap(),
                    "exponents {exps:?}"
                );
            }
        }
    }

    #[test]
    fn symmetry_under_permutation() {
        let a = psi_integral(&[2, 1, 0, 0, 0, 0]).unwrap();
        let b = psi_integral(&[0, 0, 1, 0, 2, 0]).unwrap();
        assert_eq!(a, b);
    }

    fn c(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn slot_only_vertex_gives_z() {
        let v = VertexIntegrand {
            insertions: vec![],
            flag_weights: vec![],
            open_slot: true,
        };
        assert_eq!(vertex_integral(&v).unwrap(), VertexValue::OfZ(RatFn::var()));
    }

    #[test]
    fn flag_only_vertex_gives_weight() {
        let v = VertexIntegrand {
            insertions: vec![],
            flag_weights: vec![Rat::frac(5, 3)],
            open_slot: false,
        };
        assert_eq!(
            vertex_integral(&v).unwrap(),
            VertexValue::Scalar(Rat::frac(5, 3))
        );
    }

    #[test]
    fn slot_and_flag_resums() {
        let w = Rat::from_int(4);
        let v = VertexIntegrand {
            insertions: vec![],
            flag_weights: vec![w.clone()],
            open_slot: true,
        };
        let expect = RatFn::new(Poly::one(), Poly::new(vec![w, Rat::one()]));
        assert_eq!(vertex_integral(&v).unwrap(), VertexValue::OfZ(expect));
    }

    #[test]
    fn two_flags_compose() {
        let v = VertexIntegrand {
            insertions: vec![],
            flag_weights: vec![Rat::from_int(2), Rat::from_int(6)],
            open_slot: false,
        };
        assert_eq!(
            vertex_integral(&v).unwrap(),
            VertexValue::Scalar(Rat::frac(1, 8))
        );
    }

    #[test]
    fn leg_against_slot_alternates_sign() {
        // insertion psi^2 gives (-z)^2 = z^2
        let v = VertexIntegrand {
            insertions: vec![Poly::monomial(Rat::one(), 2)],
            flag_weights: vec![],
            open_slot: true,
        };
        let expect = RatFn::from_poly(Poly::monomial(c(1), 2));
        assert_eq!(vertex_integral(&v).unwrap(), VertexValue::OfZ(expect));
    }

    #[test]
    fn stable_two_flags_and_slot() {
        // valence 3, cutoff 0: 1/(w1 w2 z)
        let v = VertexIntegrand {
            insertions: vec![],
            flag_weights: vec![c(2), c(3)],
            open_slot: true,
        };
        let expect = RatFn::new(
            Poly::constant(Rat::frac(1, 6)),
            Poly::monomial(Rat::one(), 1),
        );
        assert_eq!(vertex_integral(&v).unwrap(), VertexValue::OfZ(expect));
    }

    #[test]
    fn stable_no_slot_matches_hand_expansion() {
        // valence 4, cutoff 1: insertions 1 and (3 + 2 psi), flags w=2, w=5:
        //   integral (3 + 2 psi_2)/( (2-psi_3)(5-psi_4) )
        // = 3*(1/2)*(1/5)*(psi choices summing to 1) expanded by hand:
        //   psi on leg2: 2 * 1/2 * 1/5 = 1/5
        //   psi on flag w=2: 3 * 1/4 * 1/5 = 3/20
        //   psi on flag w=5: 3 * 1/2 * 1/25 = 3/50
        let v = VertexIntegrand {
            insertions: vec![Poly::one(), Poly::new(vec![c(3), c(2)])],
            flag_weights: vec![c(2), c(5)],
            open_slot: false,
        };
        let expect = Rat::frac(1, 5) + Rat::frac(3, 20) + Rat::frac(3, 50);
        assert_eq!(vertex_integral(&v).unwrap(), VertexValue::Scalar(expect));
    }

    #[test]
    fn zero_flag_weight_is_rejected() {
        let v = VertexIntegrand {
            insertions: vec![],
            flag_weights: vec![Rat::zero(), c(1)],
            open_slot: true,
        };
        assert!(matches!(
            vertex_integral(&v),
            Err(Error::ZeroFlagWeight { .. })
        ));
    }

    #[test]
    fn uncovered_unstable_shapes_error() {
        let leg_only = VertexIntegrand {
            insertions: vec![Poly::one()],
            flag_weights: vec![],
            open_slot: false,
        };
        assert!(matches!(
            vertex_integral(&leg_only),
            Err(Error::UnhandledUnstableShape { .. })
        ));
        let two_legs = VertexIntegrand {
            insertions: vec![Poly::one(), Poly::one()],
            flag_weights: vec![],
            open_slot: false,
        };
        assert!(matches!(
            vertex_integral(&two_legs),
            Err(Error::UnhandledUnstableShape { .. })
        ));
    }
}
