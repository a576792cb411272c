//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and `degree` is `None` for it.

use super::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Poly { coeffs: v }
    }

    /// Monic product of `(x - r)` over the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Poly::one();
        for r in roots {
            p = &p * &Poly::new(vec![-r, Rat::one()]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division, panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = &rem[k + i] - &(c * &factor);
                    rem[k + i] = t;
                }
            }
            quot[k] = factor;
            rem.pop();
            while rem.last().is_some_and(Rat::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Substitutes `x -> x + shift`, the Taylor recentering used by partial fractions.
    pub fn compose_shift(&self, shift: &Rat) -> Poly {
        let mut acc = Poly::zero();
        let lin = Poly::new(vec![shift.clone(), Rat::one()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicity of `root`, zero when it is not a root.
    pub fn root_multiplicity(&self, root: &Rat) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::new(vec![-root, Rat::one()]);
        let mut mult = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(&lin);
            if r.is_zero() {
                mult += 1;
                cur = q;
            } else {
                return mult;
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Poly::new(v)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Poly::new(v)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = &v[i + j] + &(a * b);
                v[i + j] = t;
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Poly {
        Poly::new(v.iter().map(|&n| Rat::from_int(n)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let q = Poly::new(vec![Rat::one(), Rat::zero(), Rat::zero()]);
        assert_eq!(q.degree(), Some(0));
        assert!(Poly::new(vec![Rat::zero()]).is_zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let a = p(&[1, 0, -3, 2, 5]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_products() {
        let g = p(&[1, 2, 1]); // (x+1)^2
        let a = &g * &p(&[3, 1]);
        let b = &g * &p(&[-5, 0, 1]);
        assert_eq!(a.gcd(&b), g.monic());
    }

    #[test]
    fn from_roots_and_multiplicity() {
        let roots = vec![Rat::from_int(2), Rat::from_int(2), Rat::frac(-1, 3)];
        let q = Poly::from_roots(&roots);
        assert_eq!(q.root_multiplicity(&Rat::from_int(2)), 2);
        assert_eq!(q.root_multiplicity(&Rat::frac(-1, 3)), 1);
        assert_eq!(q.root_multiplicity(&Rat::from_int(7)), 0);
        assert!(q.eval(&Rat::from_int(2)).is_zero());
    }

    #[test]
    fn compose_shift_is_evaluation_consistent() {
        let q = p(&[4, -1, 0, 2]);
        let s = Rat::frac(3, 2);
        let shifted = q.compose_shift(&s);
        let x = Rat::frac(-7, 5);
        assert_eq!(shifted.eval(&x), q.eval(&(&x + &s)));
    }
}
