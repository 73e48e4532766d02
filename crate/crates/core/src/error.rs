use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate arc ({u}, {v})")]
    DuplicateArc { u: usize, v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("digon: arc ({u}, {v}) and its reverse are both present")]
    Digon { u: usize, v: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("orientation code has {got} bits, base graph has {expected} edges")]
    CodeLength { expected: usize, got: usize },
    #[error("orientation index {index} does not fit {edges} edges")]
    CodeIndex { index: u64, edges: usize },
    #[error("not a bitstring: {0:?}")]
    BadBitstring(String),
    #[error("digraph is not an orientation of the base graph")]
    NotAnOrientation,
    #[error("{what} needs at least {min} vertices, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("{what} limited to {max}, got {got}")]
    TooLarge {
        what: &'static str,
        max: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring covers {coloring} vertices, digraph has {digraph}")]
    SizeMismatch { coloring: usize, digraph: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("assignment is not in restricted-growth form")]
    NotCanonical,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("search supports at most {max} vertices, got {got}")]
    TooManyVertices { max: usize, got: usize },
    #[error("oracle enumeration limited to {max} vertices, got {got}")]
    OracleTooLarge { max: usize, got: usize },
    #[error("sweep limited to {max} edges, base graph has {got}")]
    TooManyEdges { max: usize, got: usize },
    #[error("no orientation admits a dominator coloring in this mode")]
    NoFeasibleOrientation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {kind}: {reason}")]
    InvalidParams { kind: &'static str, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("digraph has no dominator coloring in this mode")]
    Infeasible,
    #[error("embedding maps {got} vertices, sub-digraph has {expected}")]
    MapSizeMismatch { expected: usize, got: usize },
    #[error("embedding target {vertex} out of range for {n} vertices")]
    TargetOutOfRange { vertex: usize, n: usize },
    #[error("embedding is not injective or does not preserve arcs")]
    InvalidEmbedding,
    #[error("no closed form for n = {n}")]
    OutOfRange { n: usize },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// A text-format error at a 1-based line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("malformed header, expected `{expected}`")]
    Header { expected: &'static str },
    #[error("not a non-negative integer: {0:?}")]
    NotAnInteger(String),
    #[error("expected {expected} fields, found {got}")]
    FieldCount { expected: usize, got: usize },
    #[error("edge must be written with u < v")]
    EdgeOrder,
    #[error("vertex {vertex} colored twice")]
    DuplicateVertex { vertex: usize },
    #[error("vertex {vertex} has no color")]
    MissingVertex { vertex: usize },
    #[error("color {color} out of range for {k} colors")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("header declares {declared} colors, {used} are used")]
    ColorCount { declared: usize, used: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
