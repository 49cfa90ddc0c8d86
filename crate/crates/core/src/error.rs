use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("entry ({row}, {col}) is {value}, expected +1 or -1")]
    NonPmOne { row: usize, col: usize, value: i64 },
    #[error("columns {a} and {b} are not orthogonal (dot product {dot})")]
    NotOrthogonal { a: usize, b: usize, dot: i64 },
    #[error("order {0} is not 1, 2 or a multiple of 4")]
    BadOrder(usize),
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("order {order} exceeds the supported maximum of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("an order-1 matrix has no core")]
    OrderOne,
    #[error("index {index} out of range for order {order}")]
    BadIndex { index: usize, order: usize },
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("matrix is not normalized")]
    NotNormalized,
    #[error("connection set is not closed under negation")]
    NotSymmetricSet,
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("H^T L H has nonzero off-diagonal entry at ({row}, {col})")]
    NotDiagonal { row: usize, col: usize },
    #[error("diagonal entry {index} of H^T L H is not divisible by n")]
    NotDivisible { index: usize },
    #[error("assignment is not a Laplacian: combination {row} sums to {sum} (scaled by n)")]
    NotALaplacian { row: usize, sum: i64 },
    #[error("search aborted after {nodes} nodes (budget exhausted)")]
    Aborted { nodes: u64 },
    #[error("catalog inputs have mixed orders ({expected} and {found})")]
    MixedOrders { expected: usize, found: usize },
    #[error("order {order} is not congruent to {residue} mod {modulus}")]
    WrongResidue { order: usize, modulus: usize, residue: usize },
    #[error("line {line}: row length {len} differs from {expected}")]
    RaggedRows { line: usize, len: usize, expected: usize },
    #[error("line {line}: unexpected character {ch:?}")]
    BadChar { line: usize, ch: char },
    #[error("matrix {index} in input is not Hadamard: {source}")]
    NotHadamard {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("bad graph6 string: {0}")]
    Graph6(String),
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
