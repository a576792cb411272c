//! Truncated Laurent expansions in one variable.
//!
//! Carries finitely many powers `z^k` with `min_pow <= k <= max_pow` and an
//! explicit floor: everything below `min_pow` has been discarded. Mixing two
//! expansions keeps the coarser floor, mirroring how truncation orders
//! propagate for power series.

use super::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZLaurent {
    min_pow: i64,
    /// coefficient of `z^(min_pow + i)` at index `i`; highest entry nonzero
    /// unless the expansion is identically zero within the window
    coeffs: Vec<Rat>,
}

impl ZLaurent {
    pub fn new(min_pow: i64, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        ZLaurent { min_pow, coeffs }
    }

    pub fn zero(min_pow: i64, _max_pow: i64) -> Self {
        ZLaurent {
            min_pow,
            coeffs: vec![],
        }
    }

    pub fn monomial(c: Rat, pow: i64, min_pow: i64) -> Self {
        if pow < min_pow || c.is_zero() {
            return ZLaurent::zero(min_pow, pow);
        }
        let mut v = vec![Rat::zero(); (pow - min_pow + 1) as usize];
        *v.last_mut().unwrap() = c;
        ZLaurent { min_pow, coeffs: v }
    }

    pub fn min_pow(&self) -> i64 {
        self.min_pow
    }

    /// Largest power carried with a nonzero coefficient, `None` when zero.
    pub fn max_nonzero_pow(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min_pow + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, pow: i64) -> Rat {
        if pow < self.min_pow {
            return Rat::zero();
        }
        self.coeffs
            .get((pow - self.min_pow) as usize)
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when every carried power lies in `[lo, hi]`.
    pub fn powers_within(&self, lo: i64, hi: i64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (lo..=hi).contains(&(self.min_pow + i as i64)))
    }
}

impl Add for &ZLaurent {
    type Output = ZLaurent;
    fn add(self, rhs: &ZLaurent) -> ZLaurent {
        let floor = self.min_pow.max(rhs.min_pow);
        let top = self
            .max_nonzero_pow()
            .unwrap_or(floor)
            .max(rhs.max_nonzero_pow().unwrap_or(floor));
        let mut v = Vec::new();
        for p in floor..=top {
            v.push(&self.coeff(p) + &rhs.coeff(p));
        }
        ZLaurent::new(floor, v)
    }
}

impl Sub for &ZLaurent {
    type Output = ZLaurent;
    fn sub(self, rhs: &ZLaurent) -> ZLaurent {
        self + &(-rhs)
    }
}

impl Neg for &ZLaurent {
    type Output = ZLaurent;
    fn neg(self) -> ZLaurent {
        ZLaurent {
            min_pow: self.min_pow,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ZLaurent {
    type Output = ZLaurent;
    fn mul(self, rhs: &ZLaurent) -> ZLaurent {
        let floor = self.min_pow.max(rhs.min_pow);
        if self.is_zero() || rhs.is_zero() {
            return ZLaurent::zero(floor, floor);
        }
        let top = self.max_nonzero_pow().unwrap() + rhs.max_nonzero_pow().unwrap();
        if top < floor {
            return ZLaurent::zero(floor, floor);
        }
        let mut v = vec![Rat::zero(); (top - floor + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let pw = self.min_pow + i as i64 + rhs.min_pow + j as i64;
                if pw < floor {
                    continue;
                }
                let idx = (pw - floor) as usize;
                if idx < v.len() {
                    let t = &v[idx] + &(a * b);
                    v[idx] = t;
                }
            }
        }
        ZLaurent::new(floor, v)
    }
}

impl fmt::Display for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "O(z^{})", self.min_pow);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let p = self.min_pow + i as i64;
            match p {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{p}")?,
            }
        }
        write!(f, " + O(z^{})", self.min_pow - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_floor_propagates() {
        let a = ZLaurent::new(-2, vec![Rat::one(), Rat::one(), Rat::one()]); // z^-2+z^-1+1
        let b = ZLaurent::new(-1, vec![Rat::one(), Rat::one()]); // z^-1+1
        let s = &a + &b;
        assert_eq!(s.min_pow(), -1);
        assert_eq!(s.coeff(-2), Rat::zero());
        assert_eq!(s.coeff(-1), Rat::from_int(2));
    }

    #[test]
    fn product_drops_below_floor() {
        // (z^-1)(z^-1) = z^-2 which is below the floor -1, so it vanishes
        let a = ZLaurent::monomial(Rat::one(), -1, -1);
        let p = &a * &a;
        assert!(p.is_zero());
        // but z * z^-1 = 1 survives
        let z = ZLaurent::monomial(Rat::one(), 1, -1);
        let q = &z * &a;
        assert_eq!(q.coeff(0), Rat::one());
    }

    #[test]
    fn window_check() {
        let a = ZLaurent::new(-2, vec![Rat::one(), Rat::zero(), Rat::zero(), Rat::from_int(3)]);
        assert!(a.powers_within(-2, 1));
        assert!(!a.powers_within(-1, 1));
    }
}
