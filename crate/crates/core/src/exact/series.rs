//! Truncated power series with an explicit truncation order.
//!
//! A `QSeries<C>` stores coefficients `c_0..c_N` and the order `N` itself;
//! every binary operation propagates the minimum truncation order of its
//! operands, so precision loss is always visible in the type's data and never
//! silent. Coefficients form a commutative ring through the `Coeff` trait;
//! scalars and rational functions both qualify.

use super::rat::Rat;
use super::ratfn::RatFn;
use crate::error::{Error, Result};
use std::fmt;

/// Commutative ring with decidable zero and partial inverses, as needed for
/// Cauchy products, geometric inversion and triangular solves.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_inv(&self) -> Option<Self>;
}

impl Coeff for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        self.try_recip()
    }
}

impl Coeff for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(&RatFn::one() / self)
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct QSeries<C: Coeff = Rat> {
    trunc: usize,
    /// exactly `trunc + 1` entries, index = power of the series variable
    coeffs: Vec<C>,
}

impl<C: Coeff> QSeries<C> {
    /// Builds a series truncated at order `trunc`; extra coefficients are
    /// dropped, missing ones padded with zero.
    pub fn new(trunc: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.truncate(trunc + 1);
        coeffs.resize(trunc + 1, C::zero());
        QSeries { trunc, coeffs }
    }

    pub fn zero(trunc: usize) -> Self {
        QSeries::new(trunc, vec![])
    }

    pub fn one(trunc: usize) -> Self {
        QSeries::new(trunc, vec![C::one()])
    }

    pub fn constant(c: C, trunc: usize) -> Self {
        QSeries::new(trunc, vec![c])
    }

    pub fn monomial(c: C, k: usize, trunc: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        if k <= trunc {
            v[k] = c;
        }
        QSeries::new(trunc, v)
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient extraction honouring the truncation order.
    pub fn coefficient(&self, k: usize) -> Result<&C> {
        if k > self.trunc {
            return Err(Error::IndexOutOfRange {
                index: k,
                truncation: self.trunc,
            });
        }
        Ok(&self.coeffs[k])
    }

    /// Infallible access for indices already known to be in range.
    pub fn c(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    /// Restricts to a smaller truncation order.
    pub fn truncate(&self, trunc: usize) -> Self {
        QSeries::new(trunc.min(self.trunc), self.coeffs.clone())
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.trunc.min(rhs.trunc);
        QSeries::new(
            n,
            (0..=n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.trunc.min(rhs.trunc);
        let mut v = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        QSeries { trunc: n, coeffs: v }
    }

    pub fn scale(&self, s: &C) -> Self {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    /// Multiplicative inverse by the geometric-series recursion.
    /// Requires an invertible constant term.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inv().ok_or(Error::NonUnitConstantTerm)?;
        let mut out = Vec::with_capacity(self.trunc + 1);
        out.push(inv0.clone());
        for k in 1..=self.trunc {
            let mut acc = C::zero();
            for (i, prev) in out.iter().enumerate().take(k) {
                acc = acc.add(&self.coeffs[k - i].mul(prev));
            }
            out.push(acc.neg().mul(&inv0));
        }
        Ok(QSeries {
            trunc: self.trunc,
            coeffs: out,
        })
    }
}

impl QSeries<Rat> {
    /// Substitutes `inner` (which must have zero constant term) for the variable.
    pub fn compose(&self, inner: &QSeries<Rat>) -> QSeries<Rat> {
        assert!(
            inner.coeffs[0].is_zero(),
            "composition requires zero constant term"
        );
        let n = self.trunc.min(inner.trunc);
        let mut acc = QSeries::zero(n);
        for c in self.coeffs.iter().take(n + 1).rev() {
            acc = acc.mul(&inner.truncate(n));
            acc.coeffs[0] = &acc.coeffs[0] + c;
        }
        acc
    }

    /// Compositional inverse `g` with `self(g(x)) = x`, by a triangular solve
    /// order by order. Requires zero constant term and a unit linear term.
    pub fn compositional_inverse(&self) -> Result<QSeries<Rat>> {
        if self.trunc == 0 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotInvertibleSeries);
        }
        let a1inv = self.coeffs[1].recip();
        let n = self.trunc;
        let mut g = QSeries::zero(n);
        g.coeffs[1] = a1inv.clone();
        for k in 2..=n {
            // with g known below order k, [x^k] self(g) depends linearly on g_k
            let partial = self.compose(&g);
            let excess = partial.coeffs[k].clone();
            g.coeffs[k] = &g.coeffs[k] - &(&excess * &a1inv);
        }
        Ok(g)
    }
}

impl fmt::Display for QSeries<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc + 1)
    }
}
