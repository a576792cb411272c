//! Machine-readable record types for every pipeline output.
//!
//! Records serialize with serde; the command-line surface renders them as
//! line-delimited JSON or CSV rows.  All numeric payloads stay exact:
//! rationals travel as decimal numerator/denominator strings, never as
//! floats.  Field layouts are flat so the same struct serializes cleanly
//! under both formats.

use serde::{Deserialize, Serialize};

use crate::exact::{QSeries, Rat};
use crate::fjrw::SpinData;
use crate::graphsum::DecoratedTree;

/// Exact rational split into decimal numerator and denominator strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatRecord {
    pub num: String,
    pub den: String,
}

impl RatRecord {
    pub fn new(value: &Rat) -> Self {
        RatRecord {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
        }
    }
}

/// Truncated power series with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub variable: String,
    pub truncation: usize,
    pub coefficients: Vec<RatRecord>,
}

impl SeriesRecord {
    pub fn new(variable: &str, series: &QSeries<Rat>) -> Self {
        SeriesRecord {
            variable: variable.to_string(),
            truncation: series.truncation(),
            coefficients: series.coeffs().iter().map(RatRecord::new).collect(),
        }
    }
}

/// One vertex of a census record: its fixed-point label and the marked
/// points it carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusVertex {
    pub label: usize,
    pub legs: Vec<usize>,
}

/// One edge of a census record with its covering degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEdge {
    pub u: usize,
    pub v: usize,
    pub degree: u32,
}

/// One isomorphism class of decorated tree together with the order of its
/// automorphism group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub vertices: Vec<CensusVertex>,
    pub edges: Vec<CensusEdge>,
    pub aut_order: u64,
}

impl CensusRecord {
    pub fn new(tree: &DecoratedTree, aut_order: u64) -> Self {
        let vertices = (0..tree.vertex_count())
            .map(|v| CensusVertex {
                label: tree.label(v),
                legs: tree
                    .legs()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &home)| home == v)
                    .map(|(leg, _)| leg)
                    .collect(),
            })
            .collect();
        let edges = tree
            .edges()
            .iter()
            .map(|&(u, v, degree)| CensusEdge { u, v, degree })
            .collect();
        CensusRecord {
            vertices,
            edges,
            aut_order,
        }
    }
}

/// Status value shared by all check records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One verification step: which identity was checked, at which fixed point
/// and degree (when applicable), and both sides on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub j: Option<usize>,
    pub d: Option<u32>,
    pub status: CheckStatus,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl CheckRecord {
    /// A passing step; sides are omitted to keep the happy path compact.
    pub fn pass(check: &str, j: Option<usize>, d: Option<u32>) -> Self {
        CheckRecord {
            check: check.to_string(),
            j,
            d,
            status: CheckStatus::Pass,
            lhs: None,
            rhs: None,
        }
    }

    /// A failing step carrying printable renderings of both sides.
    pub fn fail(check: &str, j: Option<usize>, d: Option<u32>, lhs: String, rhs: String) -> Self {
        CheckRecord {
            check: check.to_string(),
            j,
            d,
            status: CheckStatus::Fail,
            lhs: Some(lhs),
            rhs: Some(rhs),
        }
    }
}

/// One exact invariant value keyed by degree and insertion list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub degree: u32,
    pub insertions: String,
    pub value_num: String,
    pub value_den: String,
}

impl InvariantRecord {
    pub fn new(degree: u32, insertions: &str, value: &Rat) -> Self {
        InvariantRecord {
            degree,
            insertions: insertions.to_string(),
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
        }
    }
}

/// One narrow-theory invariant with `n` insertions of `phi_2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FjrwInvariantRecord {
    pub n: usize,
    pub insertions: String,
    pub value_num: String,
    pub value_den: String,
}

impl FjrwInvariantRecord {
    pub fn new(n: usize, value: &Rat) -> Self {
        FjrwInvariantRecord {
            n,
            insertions: format!("phi_2^{n}"),
            value_num: value.numer().to_string(),
            value_den: value.denom().to_string(),
        }
    }
}

/// Spin-bundle bookkeeping for one multiplicity vector.  Empty moduli are
/// reported with `status = "empty"` and no degree/rank/dimension data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinRecord {
    pub multiplicities: String,
    pub marks: usize,
    pub status: String,
    pub rounded_degree: Option<i64>,
    pub obstruction_rank: Option<i64>,
    pub virtual_dim: Option<i64>,
}

impl SpinRecord {
    pub fn nonempty(entries: &[u32], data: &SpinData) -> Self {
        SpinRecord {
            multiplicities: join_entries(entries),
            marks: entries.len(),
            status: "nonempty".to_string(),
            rounded_degree: Some(data.rounded_degree),
            obstruction_rank: Some(data.obstruction_rank),
            virtual_dim: Some(data.virtual_dim),
        }
    }

    pub fn empty(entries: &[u32]) -> Self {
        SpinRecord {
            multiplicities: join_entries(entries),
            marks: entries.len(),
            status: "empty".to_string(),
            rounded_degree: None,
            obstruction_rank: None,
            virtual_dim: None,
        }
    }
}

fn join_entries(entries: &[u32]) -> String {
    entries
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One attempt at deriving a weight vector from a seed; degenerate draws
/// are recorded and retried with the next seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedAttempt {
    pub seed: u64,
    pub status: String,
}

/// Machine-readable error surface for the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub error: String,
}
