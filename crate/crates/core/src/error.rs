use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {family}{rank}; supported: A_r (r>=1), B_r (r>=2), C_r (r>=2), D_r (r>=4), G_2, F_4, E_6 (opt-in)")]
    UnsupportedType { family: String, rank: usize },

    #[error("E_6 requires the opt-in flag (--enable-e6)")]
    E6Disabled,

    #[error("group enumeration exceeded the cap of {cap} elements")]
    ResourceCap { cap: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("class functions live on different groups")]
    GroupMismatch,

    #[error("subgroup is not embedded in this group")]
    NotEmbedded,

    #[error("inexact division: {context}")]
    InexactDivision { context: String },

    #[error("series is not invertible: degree-0 term must be 1")]
    NotInvertible,

    #[error("non-integral multiplicity {value} for {partition}")]
    NonIntegral { partition: String, value: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root system data is inconsistent: {0}")]
    Inconsistent(String),
}
