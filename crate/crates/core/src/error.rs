use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cayley table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },

    #[error("table entry {value} at ({row}, {col}) is outside 0..{order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("semigroup must have at least one element")]
    EmptySemigroup,

    #[error("associativity fails: ({0}*{1})*{2} != {0}*({1}*{2})")]
    AssociativityViolation(usize, usize, usize),

    #[error("{got} labels supplied for {order} elements")]
    LabelCount { got: usize, order: usize },

    #[error("declared {field} {declared:?} does not match the table (detected {detected:?})")]
    DeclaredElementMismatch {
        field: &'static str,
        declared: Option<usize>,
        detected: Option<usize>,
    },

    #[error("malformed label {label:?} for family {family}")]
    BadLabel { family: String, label: String },

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not an inverse semigroup")]
    NotInverseSemigroup,

    #[error("map is not a permutation of the element indices")]
    NotAPermutation,

    #[error("map is not a bijection between the vertex sets")]
    NotABijection,

    #[error("vertex map is not surjective: codomain vertex {0} has no preimage")]
    NotSurjective(usize),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("vertex map is not a skeletal homomorphism (witness pair {0}, {1})")]
    NotSkeletal(usize, usize),

    #[error("quotient is inconsistent: blocks {0} and {1} are joined by some but not all cross pairs")]
    InconsistentQuotient(usize, usize),

    #[error("graph has no vertices (the semigroup consists of its zero only)")]
    EmptyVertexSet,

    #[error("isomorphism check failed for the pair ({0}, {1})")]
    IsomorphismCheckFailed(usize, usize),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
