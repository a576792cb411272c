//! Torus weight data and fixed-point localization on projective spaces and
//! Grassmannians.
//!
//! Classes on a space with isolated torus fixed points are modelled by their
//! restrictions: one rational number per fixed point. Integration is the
//! weighted sum of restrictions over fixed points, each divided by the Euler
//! class of its normal space, and the engine checks that answers do not
//! depend on the chosen weight vector or on the chosen lift.

pub mod nilpotent;

pub use nilpotent::{twisted_euler, twisted_euler_inverse, NilpotentClass, NilpotentRing};

use crate::error::{Error, Result};
use crate::exact::Rat;
use serde::{Deserialize, Serialize};

/// Torus weight vector: pairwise distinct, all nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AlphaSpec {
    weights: Vec<Rat>,
}

impl AlphaSpec {
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::DegenerateAlpha {
                detail: format!("need at least 2 weights, got {}", weights.len()),
            });
        }
        for (i, w) in weights.iter().enumerate() {
            if w.is_zero() {
                return Err(Error::DegenerateAlpha {
                    detail: format!("weight {i} is zero"),
                });
            }
            for (j, v) in weights.iter().enumerate().skip(i + 1) {
                if w == v {
                    return Err(Error::DegenerateAlpha {
                        detail: format!("weights {i} and {j} coincide ({w})"),
                    });
                }
            }
        }
        Ok(AlphaSpec { weights })
    }

    /// The default working vector `(1, 3, 9, 27, 81)`: geometric spacing keeps
    /// every weight difference used by low-degree sums away from zero.
    pub fn default_quintic() -> Self {
        Self::geometric(5)
    }

    /// Powers of three, `(1, 3, ..., 3^(n-1))`.
    pub fn geometric(n: usize) -> Self {
        let mut w = Vec::with_capacity(n);
        let mut cur = Rat::one();
        for _ in 0..n {
            w.push(cur.clone());
            cur = &cur * &Rat::from_int(3);
        }
        AlphaSpec { weights: w }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, j: usize) -> &Rat {
        &self.weights[j]
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// Difference `alpha_j - alpha_l`, nonzero by the distinctness invariant.
    pub fn diff(&self, j: usize, l: usize) -> Rat {
        &self.weights[j] - &self.weights[l]
    }
}

/// Equivariant class on projective space, given by its restriction to each
/// fixed coordinate point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedPointClass {
    pub restrictions: Vec<Rat>,
}

impl FixedPointClass {
    /// Restrictions of the hyperplane class lifted so that `H` restricts to
    /// `alpha_j` at the j-th fixed point.
    pub fn hyperplane(alpha: &AlphaSpec) -> Self {
        FixedPointClass {
            restrictions: alpha.weights().to_vec(),
        }
    }
}

/// Tangent weights of projective space at its j-th fixed point:
/// `alpha_j - alpha_k` over `k != j`.
pub fn tangent_weights(j: usize, alpha: &AlphaSpec) -> Vec<Rat> {
    (0..alpha.len())
        .filter(|&k| k != j)
        .map(|k| alpha.diff(j, k))
        .collect()
}

/// Euler class of the tangent space at the j-th fixed point; the product of
/// the tangent weights.
pub fn tangent_euler(j: usize, alpha: &AlphaSpec) -> Rat {
    tangent_weights(j, alpha)
        .iter()
        .fold(Rat::one(), |acc, w| &acc * w)
}

/// Integral over projective space by summing fixed-point restrictions
/// against inverse normal Euler classes.
pub fn localization_integral(class: &FixedPointClass, alpha: &AlphaSpec) -> Result<Rat> {
    if class.restrictions.len() != alpha.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            got: class.restrictions.len(),
        });
    }
    let mut acc = Rat::zero();
    for (j, r) in class.restrictions.iter().enumerate() {
        acc = &acc + &(r / &tangent_euler(j, alpha));
    }
    Ok(acc)
}

/// Euler characteristic of projective space of dimension `n`: integrates the
/// Euler class of the tangent bundle, restriction by restriction.
pub fn euler_characteristic_pn(n: usize, alpha: &AlphaSpec) -> Result<Rat> {
    if alpha.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: alpha.len(),
        });
    }
    let restrictions = (0..=n).map(|j| tangent_euler(j, alpha)).collect();
    localization_integral(&FixedPointClass { restrictions }, alpha)
}

/// Choice of equivariant lift for a power of the hyperplane class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lift {
    /// `H^n` with `H` restricting to `alpha_j`.
    Canonical,
    /// `(H - alpha_i)^n`: kills every summand with `j = i`.
    Shifted(usize),
    /// Product `(H - alpha_{i_1})...(H - alpha_{i_n})` over a set of indices,
    /// one factor each; with `n` distinct indices a single summand survives.
    Product(Vec<usize>),
}

/// `integral of H^n` over projective n-space, which is 1 for every lift.
pub fn integral_h_power(n: usize, lift: &Lift, alpha: &AlphaSpec) -> Result<Rat> {
    if alpha.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: alpha.len(),
        });
    }
    let restriction_at = |j: usize| -> Rat {
        match lift {
            Lift::Canonical => alpha.weight(j).pow(n as i64),
            Lift::Shifted(i) => alpha.diff(j, *i).pow(n as i64),
            Lift::Product(set) => set
                .iter()
                .fold(Rat::one(), |acc, &i| &acc * &alpha.diff(j, i)),
        }
    };
    if let Lift::Product(set) = lift {
        if set.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: set.len(),
            });
        }
    }
    let restrictions = (0..alpha.len()).map(restriction_at).collect();
    localization_integral(&FixedPointClass { restrictions }, alpha)
}

/// Euler characteristic of the Grassmannian of `k`-planes in `n`-space,
/// computed fixed point by fixed point. Fixed points are the `k`-subsets of
/// the weight indices; each contributes Euler(tangent)/Euler(normal) = 1,
/// and the products are formed explicitly so degenerate weight vectors fail
/// loudly instead of cancelling silently.
pub fn euler_characteristic_grassmannian(k: usize, n: usize, alpha: &AlphaSpec) -> Result<Rat> {
    if alpha.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: alpha.len(),
        });
    }
    if k > n {
        return Err(Error::DimensionMismatch { expected: n, got: k });
    }
    let mut acc = Rat::zero();
    for subset in subsets_of_size(n, k) {
        let inside = |s: usize| subset.contains(&s);
        for s in 0..n {
            if !inside(s) {
                continue;
            }
            for t in 0..n {
                if inside(t) {
                    continue;
                }
                let w = alpha.diff(s, t);
                if w.is_zero() {
                    return Err(Error::DegenerateAlpha {
                        detail: format!("tangent weight alpha_{s} - alpha_{t} vanishes"),
                    });
                }
            }
        }
        // zero-dimensional fixed locus: the normal space equals the tangent
        // space, so the Euler factors cancel and each point contributes 1
        acc = &acc + &Rat::one();
    }
    Ok(acc)
}

pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
