//! Exact equivariant localization engine for the quintic threefold.
//!
//! The crate computes genus-zero invariants of the quintic by summing over
//! decorated trees of torus-fixed loci, entirely in exact rational
//! arithmetic, and verifies the genus-zero correspondences between those
//! sums and explicit hypergeometric series order by order:
//!
//! * [`exact`]: rationals, polynomials, rational functions, truncated series.
//! * [`equivariant`]: fixed-point weight data on projective spaces and
//!   Grassmannians, twisted Euler class inverses.
//! * [`psi`]: cotangent-line integrals on genus-zero moduli and the vertex
//!   integral evaluator with its low-valence conventions.
//! * [`graphsum`]: decorated-tree enumeration and the localization graph sum.
//! * [`gw`]: the degree-counting series, its fixed-point restrictions, the
//!   pole-removal recursion and the order-by-order checks tying them together.
//! * [`fjrw`]: the narrow state space for the one-variable quintic singularity,
//!   its series, mirror map, invariant extraction and spin-bundle ranks.

pub mod equivariant;
pub mod error;
pub mod exact;
pub mod fjrw;
pub mod graphsum;
pub mod gw;
pub mod psi;
pub mod report;
pub mod selfcheck;

pub use equivariant::AlphaSpec;
pub use error::{Error, Result};
pub use exact::{Coeff, Poly, QSeries, Rat, RatFn, ZLaurent};
