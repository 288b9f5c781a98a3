use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a partition needs at least one part")]
    EmptyPartition,
    #[error("part at index {index} is not positive")]
    NonPositivePart { index: usize },
    #[error("parts at index {index} and {} increase", index + 1)]
    NonIncreasingViolation { index: usize },
    #[error("part {part} exceeds the bound {bound}")]
    BoundViolation { part: u32, bound: u32 },
    #[error("appended part {value} is outside 1..={last}")]
    AppendTooLarge { value: u32, last: u32 },
    #[error("dropping the last part would leave the empty partition")]
    TooShort,
    #[error("expected {expected} parts, found {found}")]
    PartCountMismatch { expected: usize, found: usize },
    #[error("{partition} is not a square partition of size {k}")]
    NotSquare { partition: String, k: usize },
    #[error("level {level} is below the root size {k}")]
    LevelBelowRoot { level: usize, k: usize },
    #[error("{what} must be at least 1")]
    NonPositive { what: &'static str },
    #[error("roots differ in τ-fixedness; the two cases are not comparable")]
    MixedFixedness,
    #[error("ballot number index out of range: ℓ={l}, m={m}")]
    BallotIndex { l: i64, m: i64 },
    #[error("variable indices {a} and {b} must be distinct and below {r}")]
    VariableIndex { a: usize, b: usize, r: usize },
    #[error("shape has {parts} parts but only {r} variables exist")]
    TooManyParts { parts: usize, r: usize },
    #[error(
        "degree {degree} matrix has {cells} cells, over the budget of {budget}; \
         retry with a smaller dmax (at most {suggested_dmax})"
    )]
    CellBudget {
        degree: usize,
        cells: u128,
        budget: u128,
        suggested_dmax: usize,
    },
    #[error("dmax {dmax} is below the largest basis degree {needed}")]
    DegreeCutoff { dmax: usize, needed: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
