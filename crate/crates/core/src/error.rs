use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("unsupported vertex count {0} (expected 1..=64)")]
    TooManyVertices(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("a line needs two distinct vertices, got {0} twice")]
    EqualVertices(usize),

    #[error("graph has diameter {found}, expected {expected}")]
    WrongDiameter { expected: u32, found: u32 },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("{what} supports n <= {max}, got {n}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    #[error("invalid graph6 string: {0}")]
    Graph6(String),

    #[error("invalid edge list: {0}")]
    EdgeList(String),

    #[error("bad graph stream at line {line}: {source}")]
    BadStream {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown family tag {0:?}")]
    UnknownFamily(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
