use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed partition `{input}`: {reason}")]
    MalformedPartition { input: String, reason: String },

    #[error("partitions of different totals are incomparable ({left} vs {right})")]
    IncomparableTotals { left: u32, right: u32 },

    #[error("no partition of {n} has exactly {t} parts")]
    EmptyLattice { n: u32, t: u32 },

    #[error("edge {a}-{b} is not an edge of the host graph")]
    EdgeNotInHost { a: usize, b: usize },

    #[error("malformed edge list `{input}`: {reason}")]
    MalformedEdgeList { input: String, reason: String },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 line {line}: expected {expected} vertices, found {found}")]
    VertexCountMismatch { line: usize, expected: usize, found: usize },

    #[error("refusing to run: {what} exceeds guard ({value} > {limit})")]
    GuardExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("six-edge check requires exactly 6 edges, got {0}")]
    NotSixEdges(usize),

    #[error("residue {0} is outside the supported cases (0 or 1)")]
    UnsupportedResidue(u32),

    #[error("q = {0} is below the supported minimum of 4")]
    UnsupportedQ(u32),

    #[error("cache I/O: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
