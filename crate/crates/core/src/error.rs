use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("group of order {order} is too large to enumerate (bound {bound})")]
    TooLargeToEnumerate { order: u64, bound: u64 },

    #[error("element {0} is not a member of the group")]
    NotAMember(String),

    #[error("subgroup is not contained in the group")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("coset index {index} exceeds bound {bound}")]
    IndexTooLarge { index: u64, bound: u64 },

    #[error("group is not {p}-solvable: upper {p}-series stabilizes below the group")]
    NotPSolvable { p: u64 },

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("residue subgroup has index {0}, expected 2")]
    NotIndexTwo(u64),

    #[error("order of class representative is not a power of 3")]
    NotThreePower,

    #[error("coset enumeration exceeded bound of {0} cosets")]
    CosetBoundExceeded(usize),

    #[error("no suitable prime p = 1 mod {e} with p > {min} below search bound")]
    NoModulusPrime { e: u64, min: u64 },

    #[error("character table eigenspace splitting failed to fully diagonalize")]
    SplitFailure,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("catalog entry {id}: realized order {got}, declared {want}")]
    OrderMismatch { id: String, got: u64, want: u64 },

    #[error("catalog order {order} declares {want} entries, found {got}")]
    SectionCountMismatch { order: u64, want: usize, got: usize },

    #[error("order {0} is not marked complete in the catalog")]
    IncompleteOrder(u64),

    #[error("unknown catalog id {0:?}")]
    UnknownId(String),

    #[error("invalid semidirect action: relation not preserved")]
    InvalidAction,

    #[error("invalid constructor: {0}")]
    InvalidConstructor(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
