//! Error type shared by every module of the engine.
//!
//! All arithmetic is exact, so errors never signal numerical trouble; they
//! signal structural facts (a pole of order two where a simple pole was
//! required, a moduli space that is empty, a degenerate weight vector, ...).

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A residue was requested at a pole of order two or higher.
    #[error("pole at {pole} has order {order}, only simple poles are supported")]
    PoleOrderTooHigh { pole: String, order: usize },

    /// A denominator does not split into the supplied candidate linear factors.
    #[error("denominator does not split over the candidate pole set; cofactor of degree {remainder_degree} remains")]
    UnsplitDenominator { remainder_degree: usize },

    /// Series inversion needs an invertible constant term.
    #[error("series has a non-unit constant term")]
    NonUnitConstantTerm,

    /// Compositional inversion needs zero constant term and unit linear term.
    #[error("series is not invertible under composition (need zero constant term and unit linear term)")]
    NotInvertibleSeries,

    /// A series coefficient beyond the truncation order was requested.
    #[error("coefficient index {index} exceeds truncation order {truncation}")]
    IndexOutOfRange { index: usize, truncation: usize },

    /// The weight vector is degenerate for the requested computation.
    #[error("degenerate weight vector: {detail}")]
    DegenerateAlpha { detail: String },

    /// A twist by the zero character has no invertible Euler class.
    #[error("twist weight is zero")]
    ZeroTwist,

    /// A moduli of curves with fewer than three marks has no fundamental class
    /// outside the dedicated low-valence conventions.
    #[error("moduli of genus-zero curves with {marks} marks is unstable")]
    UnstableSpace { marks: usize },

    /// A flag weight vanished, so the geometric expansion of 1/(w - psi) is undefined.
    #[error("flag weight is zero at vertex labelled {label}")]
    ZeroFlagWeight { label: usize },

    /// A vertex of valence one or two whose shape none of the conventions cover.
    #[error("unstable vertex shape not covered by any convention: {legs} legs, {flags} flags, slot={slot}")]
    UnhandledUnstableShape { legs: usize, flags: usize, slot: bool },

    /// Insertion degrees do not match the virtual dimension.
    #[error("insertion degree total {got} does not match virtual dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Requested order exceeds the truncation the data was built with.
    #[error("order {needed} requested but data is truncated at order {available}")]
    TruncationExceeded { needed: usize, available: usize },

    /// A pole appeared outside the predicted pole set.
    #[error("partial fraction data disagrees with the predicted pole structure: {detail}")]
    PartialFractionMismatch { detail: String },

    /// The moduli of spin curves with the given multiplicities is empty.
    #[error("empty moduli: {detail}")]
    EmptyModuli { detail: String },

    /// Correlator reduction hit an insertion pattern outside the closure of
    /// the string and dilaton moves.
    #[error("correlator reduction incomplete: {detail}")]
    ReductionIncomplete { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
