//! Exact arithmetic foundation: rationals, polynomials, rational functions,
//! truncated power series and truncated Laurent expansions.

pub mod laurent;
pub mod poly;
pub mod rat;
pub mod ratfn;
pub mod series;

pub use laurent::ZLaurent;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfn::RatFn;
pub use series::{Coeff, QSeries};
