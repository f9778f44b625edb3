//! Error types shared across the crate.
//!
//! Structural errors double as diagnostics: several of them certify that an
//! input promise (class membership) was violated rather than signalling an
//! internal bug, and the CLI maps them onto distinct exit codes.

use std::fmt;

/// Rejection reasons for a 2-join split, plus the parity diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitError {
    NotAPartition,
    EmptyCorner,
    /// Lists one offending edge between the sides.
    CrossEdgeViolation(usize, usize),
    SideTooSmall(usize),
    /// A side is a path of length 2 with ends in the corners and its interior
    /// in C, the shape the definition excludes.
    ForbiddenP2Shape(usize),
    SideDisconnected(usize),
    /// Paths from A to B through C on one side disagree in parity. Signals an
    /// input outside the same-parity class.
    MixedParity(usize),
}

impl fmt::Display for SplitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitError::NotAPartition => write!(f, "corner sets do not fit the side partition"),
            SplitError::EmptyCorner => write!(f, "a corner set is empty"),
            SplitError::CrossEdgeViolation(u, v) => {
                write!(f, "edge {u}-{v} crosses the sides outside the corner pairs")
            }
            SplitError::SideTooSmall(i) => write!(f, "side {i} has fewer than 3 vertices"),
            SplitError::ForbiddenP2Shape(i) => {
                write!(f, "side {i} is the excluded length-2 path shape")
            }
            SplitError::SideDisconnected(i) => {
                write!(f, "side {i} has no corner-to-corner path through C")
            }
            SplitError::MixedParity(i) => {
                write!(f, "side {i} has corner-to-corner paths of both parities")
            }
        }
    }
}

impl std::error::Error for SplitError {}

/// Errors from the brute-force oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The instance exceeds the configured exhaustive-search cap.
    CapExceeded { n: usize, cap: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CapExceeded { n, cap } => {
                write!(f, "instance has {n} vertices, oracle cap is {cap}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Errors from block construction and solution lifting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockError {
    /// The (a,b,c,d) inequalities failed; the oracle or split is wrong.
    StatsInequalityViolated(String),
    /// The block requires an inequality between a+b and c+d that does not hold.
    PreconditionViolated(String),
    /// A block optimum intersects its gadget in a way no case allows.
    CaseMismatch(String),
    Split(SplitError),
}

impl fmt::Display for BlockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockError::StatsInequalityViolated(s) => write!(f, "stats inequality violated: {s}"),
            BlockError::PreconditionViolated(s) => write!(f, "block precondition violated: {s}"),
            BlockError::CaseMismatch(s) => write!(f, "gadget case mismatch: {s}"),
            BlockError::Split(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for BlockError {}

impl From<SplitError> for BlockError {
    fn from(e: SplitError) -> Self {
        BlockError::Split(e)
    }
}

/// Errors from recognition and the extension channel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionError {
    /// Marked vertices do not assemble into valid claws/vaults.
    MalformedMark(String),
}

impl fmt::Display for RecognitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognitionError::MalformedMark(s) => write!(f, "malformed extension marks: {s}"),
        }
    }
}

impl std::error::Error for RecognitionError {}

/// Errors from the basic-class solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    NotBipartite,
    NotLineExtension(String),
    /// The supplied certificate does not match the graph.
    CertificateMismatch(String),
    Recognition(RecognitionError),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NotBipartite => write!(f, "graph is not bipartite"),
            SolveError::NotLineExtension(s) => write!(f, "not an extension of a line graph: {s}"),
            SolveError::CertificateMismatch(s) => write!(f, "certificate mismatch: {s}"),
            SolveError::Recognition(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SolveError {}

impl From<RecognitionError> for SolveError {
    fn from(e: RecognitionError) -> Self {
        SolveError::Recognition(e)
    }
}

/// Errors from tree construction and the optimization pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineError {
    /// A star cutset appeared where the class forbids one; the witness is the
    /// cutset as (center, cutset vertices) in the ids of the offending graph.
    OutOfClass { center: usize, cutset: Vec<usize> },
    /// The graph is neither basic nor decomposable, so the class promise fails.
    NotDecomposable,
    /// A tree leaf that must be basic failed recognition.
    BasicRecognitionFailed(String),
    /// The depth measure did not strictly decrease along the spine.
    MeasureNotDecreasing,
    /// Tree depth exceeded the vertex count.
    DepthExceeded,
    /// The coloring loop observed non-perfect behaviour; the input promise
    /// was violated.
    NonPerfectWitness(String),
    /// The coloring loop exceeded its documented oracle-call budget.
    OracleCallBudgetExceeded,
    Block(BlockError),
    Solve(SolveError),
    Split(SplitError),
    /// The input graph is disconnected where a connected one is required.
    Disconnected,
    /// Marked non-basic inputs cannot be decomposed.
    MarkedInput,
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::OutOfClass { center, cutset } => {
                write!(f, "star cutset centered at {center} ({cutset:?}): input out of class")
            }
            PipelineError::NotDecomposable => {
                write!(f, "graph is neither basic nor decomposable by a non-path 2-join")
            }
            PipelineError::BasicRecognitionFailed(s) => {
                write!(f, "basic recognition failed on a tree leaf: {s}")
            }
            PipelineError::MeasureNotDecreasing => {
                write!(f, "decomposition measure failed to decrease")
            }
            PipelineError::DepthExceeded => write!(f, "decomposition tree deeper than n"),
            PipelineError::NonPerfectWitness(s) => write!(f, "non-perfect behaviour: {s}"),
            PipelineError::OracleCallBudgetExceeded => {
                write!(f, "coloring exceeded its oracle-call budget")
            }
            PipelineError::Block(e) => write!(f, "{e}"),
            PipelineError::Solve(e) => write!(f, "{e}"),
            PipelineError::Split(e) => write!(f, "{e}"),
            PipelineError::Disconnected => write!(f, "input graph is disconnected"),
            PipelineError::MarkedInput => {
                write!(f, "marked input is not an extension of a basic graph")
            }
        }
    }
}

impl std::error::Error for PipelineError {}

impl From<BlockError> for PipelineError {
    fn from(e: BlockError) -> Self {
        PipelineError::Block(e)
    }
}

impl From<SolveError> for PipelineError {
    fn from(e: SolveError) -> Self {
        PipelineError::Solve(e)
    }
}

impl From<SplitError> for PipelineError {
    fn from(e: SplitError) -> Self {
        PipelineError::Split(e)
    }
}

/// Generator failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    /// Seed budget exhausted without an instance passing the filters.
    FilterExhausted,
    BadParts(String),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::FilterExhausted => write!(f, "no instance passed the filters"),
            GenError::BadParts(s) => write!(f, "invalid generator parts: {s}"),
        }
    }
}

impl std::error::Error for GenError {}
