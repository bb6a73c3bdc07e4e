use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("dual is the void complex: the graph has no edges")]
    VoidDual,

    #[error("face {0:#x} is not a face of the complex")]
    NotAFace(u64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{what}: size {actual} exceeds the guard of {limit}; {hint}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("facet list parse error on line {line}: {message}")]
    FacetParse { line: usize, message: String },

    #[error("torsion witness found: {g6} (primes {primes:?})")]
    WitnessFound { g6: String, primes: Vec<u64> },

    #[error("journal error: {0}")]
    Journal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
