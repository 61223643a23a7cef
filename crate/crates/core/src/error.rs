use thiserror::Error;

/// Errors produced by group construction, orbit enumeration and classification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group descriptor `{input}`: {reason}")]
    Descriptor { input: String, reason: String },

    #[error("dihedral group needs r >= 3, got {0}")]
    DihedralTooSmall(u64),

    #[error("group order exceeds cap {cap} (reached {reached})")]
    OrderCap { cap: usize, reached: usize },

    #[error("state space of {states} exceeds cap {cap}")]
    StateCap { states: u128, cap: u64 },

    #[error("vector length must be at least 1")]
    ZeroLength,

    #[error("move {0} is not valid for vectors of length {1}")]
    InvalidMove(String, usize),

    #[error("malformed marked vector `{input}`: {reason}")]
    MarkedVector { input: String, reason: String },

    #[error("element index {index} out of range for group of order {order}")]
    ElementIndex { index: usize, order: usize },

    #[error("entries do not generate the group")]
    NotGenerating,

    #[error("group {0} is not abelian")]
    NotAbelian(String),

    #[error("genus {genus} is not of the form 1 + {order}(n - 1) with n >= 1")]
    Genus { genus: u64, order: usize },

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Short stable identifier used in one-line CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Descriptor { .. } | Error::DihedralTooSmall(_) => "bad-descriptor",
            Error::OrderCap { .. } => "order-cap",
            Error::StateCap { .. } => "state-cap",
            Error::ZeroLength => "bad-n",
            Error::InvalidMove(..) => "bad-move",
            Error::MarkedVector { .. } | Error::ElementIndex { .. } => "bad-vector",
            Error::NotGenerating => "not-generating",
            Error::NotAbelian(_) => "not-abelian",
            Error::Genus { .. } => "bad-genus",
            Error::Inconsistent(_) => "inconsistent",
        }
    }

    /// True for errors caused by a configured cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::OrderCap { .. } | Error::StateCap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
