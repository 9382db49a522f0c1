use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    InvalidEdge(usize, usize, usize),
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex {0} outside 0..{1}")]
    InvalidVertex(usize, usize),
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("projective plane: block graph is complete on {0} vertices")]
    CompleteGraph(u64),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("partition is not a Hoffman coloring: {0}")]
    NotHoffman(String),
    #[error("partition is not a spread: {0}")]
    NotSpread(String),
    #[error("complement is a disjoint union of {count} cliques of odd order {size}")]
    DisjointCliques { count: usize, size: usize },
    #[error("certificate does not belong to this graph")]
    GraphMismatch,
    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
