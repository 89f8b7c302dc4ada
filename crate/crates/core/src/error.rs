use thiserror::Error;

/// Errors produced by map construction, parsing and the exact searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("map has no vertices")]
    Empty,

    #[error("vertex {vertex} has a self-loop")]
    SelfLoop { vertex: usize },

    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },

    #[error("vertex {vertex} names neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: usize, neighbor: usize },

    #[error("adjacency is not symmetric: {from} lists {to} but not vice versa")]
    AsymmetricAdjacency { from: usize, to: usize },

    #[error("vertex {vertex} has degree {degree}, at least 2 is required")]
    LowDegree { vertex: usize, degree: usize },

    #[error("map is disconnected")]
    Disconnected,

    #[error("rotation system is not planar: V - E + F = {euler}, expected 2")]
    EulerViolation { euler: i64 },

    #[error("outer dart ({0}, {1}) is not an edge of the map")]
    UnknownDart(usize, usize),

    #[error("dual is not simple: {0}")]
    DualNotSimple(String),

    #[error("not a simple cycle: {0}")]
    NotSimpleCycle(String),

    #[error("not a Hamiltonian cycle: {0}")]
    NotHamiltonian(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{count} faces exceed the exhaustive ceiling of {ceiling}; raise the ceiling or pass a limit")]
    CeilingExceeded { count: usize, ceiling: usize },

    #[error("no nontrivial cut of size at most {ceiling} exists; quasi-connectivity is inconclusive")]
    CutCeilingReached { ceiling: usize },

    #[error("search budget of {budget} node expansions exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("map is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },

    #[error("{0}")]
    InvalidParams(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("faces {0} and {1} share an edge but have the same colour")]
    ImproperColouring(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
