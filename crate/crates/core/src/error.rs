use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{field}: not a bijection ({detail})")]
    NotBijective { field: String, detail: String },

    #[error("{field}: entry {value} out of range 1..={n}")]
    OutOfRange { field: String, value: i64, n: usize },

    #[error("frozen-pair uniqueness violated at atom {0}")]
    FrozenUniquenessViolated(usize),

    #[error("equivalence class exceeds {bound} words")]
    ClassTooLarge { bound: usize },

    #[error("group closure exceeds {bound} elements")]
    ClosureTooLarge { bound: usize },

    #[error("property (C) does not hold (frozen pair ({0},{1}))")]
    PropertyCViolated(usize, usize),

    #[error("section/property (C) equivalence violated: is_section={is_section}, property_c={property_c}")]
    EquivalenceViolated { is_section: bool, property_c: bool },

    #[error("census size n={0} exceeds the supported maximum of 4")]
    NTooLarge(usize),

    #[error("invalid solution: {0}")]
    InvalidSolution(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
