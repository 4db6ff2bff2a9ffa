use thiserror::Error;

/// Errors raised while reading or building graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::bits::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} lists {neighbour} but {neighbour} does not list {vertex}")]
    AsymmetricInput { vertex: usize, neighbour: usize },
    #[error("vertex {0} lists itself as a neighbour")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists neighbour {neighbour} more than once")]
    DuplicateNeighbour { vertex: usize, neighbour: usize },
    #[error("label {label} on line {line} is outside 1..={n}")]
    LabelOutOfRange { line: usize, label: usize, n: usize },
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}

/// Errors raised by edge switchings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("switching {0:?} is not feasible in this graph")]
    InfeasibleSwitching(crate::moves::Switching),
    #[error("no feasible switching found after {attempts} draws")]
    NoFeasibleSwitching { attempts: usize },
}

/// Errors raised by the regular-graph generator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("no {r}-regular graph on {n} vertices exists")]
    NoSuchRegularGraph { n: usize, r: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

/// Arithmetic errors from the complement identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("3r(n-r-1)/2 is not an integer for n={n}, r={r}")]
    NonIntegerResult { n: usize, r: usize },
    #[error("identity gives a negative triangle-degree for n={n}, r={r}, t={t}")]
    NegativeResult { n: usize, r: usize, t: u64 },
}

/// Errors raised by the search front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

/// Errors raised while scanning graph streams or loading fixtures.
#[derive(Debug, Error)]
pub enum ScanError {
    #[error("line {line}: {source}")]
    Malformed { line: usize, source: GraphError },
    #[error("unknown fixture {0}; ids run from 1 to {max}", max = crate::scan::FIXTURE_COUNT)]
    UnknownFixture(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
