use thiserror::Error;

/// Errors raised by graph construction, parsing and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph on {0} vertices exceeds the universe bound of {bound}", bound = crate::MAX_VERTICES)]
    UniverseExceeded(usize),
    #[error("malformed graph6 input at byte {0}")]
    MalformedGraph6(usize),
    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
    #[error("graph has parallel edges; operation needs a simple graph")]
    NotSimple,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not 4-regular")]
    NotFourRegular,
    #[error("edge count {edges} is not divisible by {k}")]
    SizeNotDivisible { edges: usize, k: usize },
    #[error("maximum degree {max_degree} exceeds 2k-1 = {limit}")]
    MaxDegreeTooLarge { max_degree: usize, limit: usize },
    #[error("star size {0} is below 3")]
    StarSizeTooSmall(usize),
    #[error("|E| = {edges} is not congruent to sum p = {sum} modulo {k}")]
    ParityMismatch { edges: usize, sum: usize, k: usize },
    #[error("search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("vertex {0} violates the precondition")]
    PreconditionViolated(usize),
    #[error("budget map has {got} entries for {n} vertices")]
    BudgetLength { got: usize, n: usize },
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("block invariant violated: {0}")]
    BlockInvariantViolated(String),
    #[error("k = {0} is too small for the product family (need k >= 4)")]
    KTooSmall(usize),
    #[error("n*d must be even and d < n (n = {n}, d = {d})")]
    ParityImpossible { n: usize, d: usize },
    #[error("order {0} is not divisible by three")]
    NotDivisibleByThree(usize),
    #[error("order {0} is beyond desk scale; pass the override to run it")]
    RefusedScale(usize),
    #[error("brute force limited to {limit} vertices, got {n}")]
    UniverseTooLarge { n: usize, limit: usize },
    #[error("no transcription available for known graph {0:?}")]
    TranscriptionMissing(String),
    #[error("unknown graph name {0:?}")]
    UnknownGraph(String),
    #[error("malformed graph file at line {line}: {reason}")]
    MalformedGraphFile { line: usize, reason: String },
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("claim failed: {0}")]
    ClaimFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
