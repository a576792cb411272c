//! Truncated graded ring for twisted Euler class computations.
//!
//! Cohomology classes of a space of complex dimension `dim` are modelled as
//! polynomials in formal generators of assigned degrees, truncated above
//! total degree `dim`. Positive-degree elements are nilpotent, which makes
//! the inverse Euler class of a twisted bundle a finite geometric sum.

use crate::error::{Error, Result};
use crate::exact::Rat;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ambient ring data: generator degrees and the truncation dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NilpotentRing {
    gen_degrees: Vec<usize>,
    dim: usize,
}

impl NilpotentRing {
    pub fn new(gen_degrees: Vec<usize>, dim: usize) -> Arc<Self> {
        assert!(gen_degrees.iter().all(|&d| d > 0), "generators must have positive degree");
        Arc::new(NilpotentRing { gen_degrees, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> usize {
        self.gen_degrees.len()
    }
}

/// Monomial = exponent vector over the generators.
type Mono = Vec<u32>;

fn mono_degree(ring: &NilpotentRing, m: &Mono) -> usize {
    m.iter()
        .zip(&ring.gen_degrees)
        .map(|(&e, &d)| e as usize * d)
        .sum()
}

#[derive(Clone, Debug)]
pub struct NilpotentClass {
    ring: Arc<NilpotentRing>,
    terms: BTreeMap<Mono, Rat>,
}

impl PartialEq for NilpotentClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl NilpotentClass {
    pub fn zero(ring: &Arc<NilpotentRing>) -> Self {
        NilpotentClass {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<NilpotentRing>, c: Rat) -> Self {
        let mut out = Self::zero(ring);
        if !c.is_zero() {
            out.terms.insert(vec![0; ring.generators()], c);
        }
        out
    }

    pub fn one(ring: &Arc<NilpotentRing>) -> Self {
        Self::constant(ring, Rat::one())
    }

    /// The i-th generator as a class.
    pub fn generator(ring: &Arc<NilpotentRing>, i: usize) -> Self {
        let mut mono = vec![0; ring.generators()];
        mono[i] = 1;
        let mut out = Self::zero(ring);
        if mono_degree(ring, &mono) <= ring.dim {
            out.terms.insert(mono, Rat::one());
        }
        out
    }

    pub fn ring(&self) -> &Arc<NilpotentRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree-zero coefficient.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0; self.ring.generators()])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(self.ring == rhs.ring, "mixed rings");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *entry = &*entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        NilpotentClass {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        NilpotentClass {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        NilpotentClass {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Product, truncating every monomial above the ring dimension.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert!(self.ring == rhs.ring, "mixed rings");
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Mono = ma.iter().zip(mb).map(|(&a, &b)| a + b).collect();
                if mono_degree(&self.ring, &m) > self.ring.dim {
                    continue;
                }
                let entry = terms.entry(m).or_insert_with(Rat::zero);
                *entry = &*entry + &(ca * cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        NilpotentClass {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for NilpotentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    write!(f, "*c{}", i + 1)?;
                } else if e > 1 {
                    write!(f, "*c{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Euler class of a rank-`r` bundle with Chern classes `c_1..c_r`, twisted by
/// a line with weight `alpha`: `sum_k c_k * alpha^(r-k)` with `c_0 = 1`.
pub fn twisted_euler(chern: &[NilpotentClass], alpha: &Rat) -> Result<NilpotentClass> {
    if alpha.is_zero() {
        return Err(Error::ZeroTwist);
    }
    let ring = chern
        .first()
        .map(|c| c.ring().clone())
        .expect("need at least one Chern class");
    let r = chern.len() as i64;
    let mut acc = NilpotentClass::constant(&ring, alpha.pow(r));
    for (k, c) in chern.iter().enumerate() {
        acc = acc.add(&c.scale(&alpha.pow(r - 1 - k as i64)));
    }
    Ok(acc)
}

/// Inverse of the twisted Euler class, as the finite geometric sum
/// `alpha^(-r) * sum_k (-(c_1/alpha + ... + c_r/alpha^r))^k` truncated at the
/// ring dimension. `ZeroTwist` when `alpha` vanishes.
pub fn twisted_euler_inverse(chern: &[NilpotentClass], alpha: &Rat) -> Result<NilpotentClass> {
    if alpha.is_zero() {
        return Err(Error::ZeroTwist);
    }
    let ring = chern
        .first()
        .map(|c| c.ring().clone())
        .expect("need at least one Chern class");
    let r = chern.len() as i64;
    let mut tail = NilpotentClass::zero(&ring);
    for (k, c) in chern.iter().enumerate() {
        tail = tail.add(&c.scale(&alpha.pow(-(k as i64) - 1)));
    }
    let neg_tail = tail.neg();
    let mut acc = NilpotentClass::one(&ring);
    let mut power = NilpotentClass::one(&ring);
    for _ in 1..=ring.dim() {
        power = power.mul(&neg_tail);
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power);
    }
    Ok(acc.scale(&alpha.pow(-r)))
}
