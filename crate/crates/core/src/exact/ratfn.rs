//! Rational functions in one variable over the exact rationals.
//!
//! Canonical form: numerator and denominator coprime, denominator monic and
//! nonzero. With that invariant structural equality is mathematical equality,
//! which is what the order-by-order mirror checks compare.
//!
//! Factoring happens only against caller-supplied candidate pole sets; there
//! is deliberately no general root-finding engine here. Every pole the engine
//! meets is predicted in advance by the recursion structure, and a leftover
//! factor is reported as `UnsplitDenominator` instead of being hunted down.

use super::laurent::ZLaurent;
use super::poly::Poly;
use super::rat::Rat;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// Builds `num/den` in canonical form. Panics on a zero denominator,
    /// which is always a programming error upstream.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator polynomial");
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let lead = den.leading().unwrap().recip();
        RatFn {
            num: num.scale(&lead),
            den: den.monic(),
        }
    }

    pub fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFn::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        RatFn::from_poly(Poly::constant(r))
    }

    /// The variable itself.
    pub fn var() -> Self {
        RatFn::from_poly(Poly::x())
    }

    /// `1 / (z - pole)`.
    pub fn simple_pole(pole: &Rat) -> Self {
        RatFn {
            num: Poly::one(),
            den: Poly::new(vec![-pole, Rat::one()]),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().is_none_or(|d| d == 0) && self.den.degree() == Some(0)
    }

    /// Constant value when the function is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Evaluation; `None` exactly at poles.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(&self.num.eval(x) / &d)
        }
    }

    /// Order of the pole at `x`; zero when the function is regular there.
    /// The canonical form guarantees numerator and denominator share no root.
    pub fn pole_order(&self, x: &Rat) -> usize {
        self.den.root_multiplicity(x)
    }

    /// Residue at a simple pole. Regular points give zero,
    /// higher-order poles give `PoleOrderTooHigh`.
    pub fn residue(&self, pole: &Rat) -> Result<Rat> {
        let lin = Poly::new(vec![-pole, Rat::one()]);
        let (q, r) = self.den.divrem(&lin);
        if !r.is_zero() {
            return Ok(Rat::zero());
        }
        let qv = q.eval(pole);
        if qv.is_zero() {
            return Err(Error::PoleOrderTooHigh {
                pole: pole.to_string(),
                order: self.pole_order(pole),
            });
        }
        Ok(&self.num.eval(pole) / &qv)
    }

    /// Partial fraction decomposition against a caller-supplied candidate
    /// pole set: returns the polynomial part and, per pole `p` of
    /// multiplicity `m`, coefficients `c_1..c_m` of `c_k / (z - p)^k`.
    /// `UnsplitDenominator` when a nonconstant cofactor survives all candidates.
    pub fn partial_fractions(
        &self,
        candidate_poles: &[Rat],
    ) -> Result<(Poly, BTreeMap<Rat, Vec<Rat>>)> {
        let (poly_part, rem) = self.num.divrem(&self.den);
        let mut cofactor = self.den.clone();
        let mut mults: Vec<(Rat, usize)> = Vec::new();
        for p in candidate_poles {
            if mults.iter().any(|(q, _)| q == p) {
                continue;
            }
            let lin = Poly::new(vec![-p, Rat::one()]);
            let mut m = 0;
            loop {
                let (q, r) = cofactor.divrem(&lin);
                if r.is_zero() {
                    m += 1;
                    cofactor = q;
                } else {
                    break;
                }
            }
            if m > 0 {
                mults.push((p.clone(), m));
            }
        }
        if cofactor.degree() != Some(0) {
            return Err(Error::UnsplitDenominator {
                remainder_degree: cofactor.degree().unwrap_or(0),
            });
        }
        let mut parts = BTreeMap::new();
        for (p, m) in &mults {
            // den = (z - p)^m * q with q(p) != 0; the principal coefficients are
            // the leading Taylor coefficients of rem/q at p, read off in reverse.
            let lin = Poly::new(vec![-p, Rat::one()]);
            let mut q = self.den.clone();
            for _ in 0..*m {
                q = q.divrem(&lin).0;
            }
            let num_at = rem.compose_shift(p);
            let den_at = q.compose_shift(p);
            let taylor = series_div(&num_at, &den_at, *m);
            let mut coeffs = vec![Rat::zero(); *m];
            for (i, t) in taylor.into_iter().enumerate() {
                // x^i term of the local expansion feeds 1/(z-p)^(m-i)
                coeffs[*m - 1 - i] = t;
            }
            parts.insert(p.clone(), coeffs);
        }
        Ok((poly_part, parts))
    }

    /// Recombines a decomposition; inverse of `partial_fractions`.
    pub fn from_partial_fractions(poly_part: &Poly, parts: &BTreeMap<Rat, Vec<Rat>>) -> RatFn {
        let mut acc = RatFn::from_poly(poly_part.clone());
        for (p, coeffs) in parts {
            let lin = Poly::new(vec![-p, Rat::one()]);
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = RatFn::new(Poly::constant(c.clone()), lin.pow(k as u32 + 1));
                acc = &acc + &term;
            }
        }
        acc
    }

    /// Expansion around `z = infinity` with powers `z^k` for
    /// `min_pow <= k <= max_pow`. `max_pow` must not cut off genuine positive
    /// powers, so it is clamped up to the polynomial degree gap automatically.
    pub fn expand_at_infinity(&self, min_pow: i64) -> ZLaurent {
        if self.is_zero() {
            return ZLaurent::zero(min_pow, 0);
        }
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        let top = dn - dd;
        // substitute z = 1/u: f = u^(dd-dn) * rev(num)(u) / rev(den)(u)
        let rev = |p: &Poly, d: i64| {
            let mut v: Vec<Rat> = (0..=d as usize).map(|k| p.coeff(d as usize - k)).collect();
            while v.last().is_some_and(Rat::is_zero) {
                v.pop();
            }
            Poly::new(v)
        };
        let order = (top - min_pow).max(0) as usize;
        let taylor = series_div(&rev(&self.num, dn), &rev(&self.den, dd), order + 1);
        // u^k term corresponds to z^(top - k)
        let mut coeffs = vec![Rat::zero(); (top - min_pow + 1).max(1) as usize];
        for (k, c) in taylor.into_iter().enumerate() {
            let pw = top - k as i64;
            if pw < min_pow {
                break;
            }
            coeffs[(pw - min_pow) as usize] = c;
        }
        ZLaurent::new(min_pow, coeffs)
    }
}

/// First `order` Taylor coefficients of `num/den` at 0; `den` must be a unit there.
fn series_div(num: &Poly, den: &Poly, order: usize) -> Vec<Rat> {
    let d0 = den.coeff(0);
    assert!(!d0.is_zero(), "series division by non-unit");
    let inv = d0.recip();
    let mut out = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = num.coeff(k);
        for (i, prev) in out.iter().enumerate().take(k) {
            acc = &acc - &(&den.coeff(k - i) * prev);
        }
        out.push(&acc * &inv);
    }
    out
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::iter::Sum for RatFn {
    fn sum<I: Iterator<Item = RatFn>>(iter: I) -> RatFn {
        iter.fold(RatFn::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&n| Rat::from_int(n)).collect())
    }

    #[test]
    fn canonical_form_makes_equality_structural() {
        // (z^2 - 1)/(z - 1) == z + 1
        let a = RatFn::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        let b = RatFn::from_poly(p(&[1, 1]));
        assert_eq!(a, b);
        // 2z/2 normalizes the denominator to monic 1
        let c = RatFn::new(p(&[0, 2]), p(&[2]));
        assert_eq!(c, RatFn::var());
    }

    #[test]
    fn residue_examples() {
        let f = RatFn::new(p(&[1]), p(&[-3, 1]));
        assert_eq!(f.residue(&Rat::from_int(3)).unwrap(), Rat::one());

        let g = RatFn::new(p(&[1]), &p(&[-3, 1]) * &p(&[-5, 1]));
        assert_eq!(g.residue(&Rat::from_int(3)).unwrap(), Rat::frac(-1, 2));

        let h = RatFn::new(p(&[0, 0, 1]), p(&[-2, 1]));
        assert_eq!(h.residue(&Rat::from_int(7)).unwrap(), Rat::zero());

        let d = RatFn::new(p(&[1]), p(&[1, -2, 1]));
        assert!(matches!(
            d.residue(&Rat::one()),
            Err(Error::PoleOrderTooHigh { order: 2, .. })
        ));
    }

    #[test]
    fn partial_fractions_simple_pair() {
        // 1/((z-1)(z+1)) = (1/2)/(z-1) - (1/2)/(z+1)
        let f = RatFn::new(p(&[1]), &p(&[-1, 1]) * &p(&[1, 1]));
        let (q, parts) = f
            .partial_fractions(&[Rat::from_int(1), Rat::from_int(-1)])
            .unwrap();
        assert!(q.is_zero());
        assert_eq!(parts[&Rat::from_int(1)], vec![Rat::frac(1, 2)]);
        assert_eq!(parts[&Rat::from_int(-1)], vec![Rat::frac(-1, 2)]);
    }

    #[test]
    fn partial_fractions_higher_multiplicity_round_trip() {
        // (z^3 + 2)/((z-1)^2 (z+2)) with a polynomial part
        let den = &p(&[1, -2, 1]) * &p(&[2, 1]);
        let f = RatFn::new(p(&[2, 0, 0, 1]), den);
        let (q, parts) = f
            .partial_fractions(&[Rat::one(), Rat::from_int(-2)])
            .unwrap();
        let back = RatFn::from_partial_fractions(&q, &parts);
        assert_eq!(back, f);
        assert_eq!(parts[&Rat::one()].len(), 2);
    }

    #[test]
    fn partial_fractions_rejects_unknown_factor() {
        let f = RatFn::new(p(&[1]), &p(&[-1, 1]) * &p(&[-7, 1]));
        let err = f.partial_fractions(&[Rat::one()]).unwrap_err();
        assert!(matches!(err, Error::UnsplitDenominator { remainder_degree: 1 }));
    }

    #[test]
    fn expansion_at_infinity() {
        // z^2/(z-1) = z + 1 + 1/z + 1/z^2 + ...
        let f = RatFn::new(p(&[0, 0, 1]), p(&[-1, 1]));
        let e = f.expand_at_infinity(-3);
        for k in [-3i64, -2, -1, 0, 1] {
            assert_eq!(e.coeff(k), Rat::one(), "power {k}");
        }
        assert_eq!(e.coeff(2), Rat::zero());
    }

    #[test]
    fn arithmetic_keeps_invariants() {
        let f = RatFn::simple_pole(&Rat::from_int(2));
        let g = RatFn::simple_pole(&Rat::from_int(-2));
        let s = &f * &g;
        assert_eq!(s.den().leading().unwrap(), &Rat::one());
        let diff = &(&f + &g) - &f;
        assert_eq!(diff, g);
        let q = &f / &f;
        assert_eq!(q, RatFn::one());
    }
}
