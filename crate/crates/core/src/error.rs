use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus below 2^63")]
    InvalidModulus(u64),
    #[error("denominator vanishes in the field")]
    ZeroDenominator,
    #[error("basis index {index} is not valid for {algebra}")]
    InvalidIndex { index: String, algebra: String },
    #[error("algebra has no unit")]
    NoUnit,
    #[error("structure constant table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("declared unit fails the unit law on basis slot e{slot}")]
    UnitLaw { slot: usize },
    #[error("bracket constants are not alternating at ({i}, {j})")]
    NotAlternating { i: usize, j: usize },
    #[error("Jacobi identity fails on generators ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("generator order is not a permutation of 0..{dim}")]
    InvalidOrder { dim: usize },
    #[error("scalar from {found} used in an algebra over {expected}")]
    FieldMismatch { expected: String, found: String },
    #[error("matrix cell ({row}, {col}) is outside the 1-indexed range")]
    InvalidCell { row: i64, col: i64 },
    #[error("growth functions are defined for n >= 1, got n_max = {0}")]
    InvalidLength(usize),
    #[error("brute-force span requested at n = {n}, above the cap {cap}")]
    BruteForceCap { n: usize, cap: usize },
    #[error("growth table has {have} entries, comparison needs {needed}")]
    InsufficientTable { needed: usize, have: usize },
    #[error("oracle truncation {input} too small for window {window}, need at least {needed}")]
    OracleTruncation {
        window: usize,
        input: usize,
        needed: usize,
    },
    #[error("embedding scenario needs at least one element a_i")]
    NoElements,
}
