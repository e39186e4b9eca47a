use core::fmt;

/// Errors shared by all modules. Vertices and matrix indices are 0-based;
/// block indices are 1-based (see [`crate::tensor`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Vertex label outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Edge endpoints coincide.
    SelfLoop { vertex: usize },
    /// Edge pair given as `(u, v)` with `u >= v`; the canonical order is `u < v`.
    UnorderedEdgePair { u: usize, v: usize },
    /// The same edge listed twice.
    DuplicateEdge { u: usize, v: usize },
    /// Graph has fewer than two vertices.
    TooFewVertices { n: usize },
    /// Graph exceeds the construction cap.
    TooManyVertices { n: usize, max: usize },
    /// Edge bitmask has bits set beyond the `n(n-1)/2` valid positions.
    MaskOutOfRange { n: usize },
    /// Enumeration interval extends past `2^(n(n-1)/2)`.
    IntervalOutOfRange { n: usize },
    /// Matrix rows and columns differ.
    NotSquare { rows: usize, cols: usize },
    /// Matrix entry `(row, col)` differs from `(col, row)`.
    NotSymmetric { row: usize, col: usize },
    /// Factor dimensions must both be at least 2.
    InvalidShape { p: usize, q: usize },
    /// Matrix dimension is not the product of the factor dimensions.
    ShapeMismatch { p: usize, q: usize, n: usize },
    /// Block index outside `1..=p`.
    BlockIndexOutOfRange { i: usize, j: usize, p: usize },
    /// The vertex whose edges are being counted belongs to the target group.
    VertexInGroup { vertex: usize },
    /// Zero-trace matrix cannot be scaled to a density matrix.
    ZeroTrace,
    /// Operation requires a matrix with zero row sums.
    NonzeroRowSums { row: usize },
    /// 0-1 matrix enumeration cap exceeded.
    NsCapExceeded { n: usize, max: usize },
    /// Census cap on the vertex count exceeded.
    CensusCapExceeded { n: usize, max: usize },
    /// Positive-semidefiniteness column of the census capped at a smaller size.
    PptCapExceeded { n: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::UnorderedEdgePair { u, v } => {
                write!(f, "edge pair ({u}, {v}) not in canonical order u < v")
            }
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            Error::TooFewVertices { n } => write!(f, "need at least 2 vertices, got {n}"),
            Error::TooManyVertices { n, max } => {
                write!(f, "{n} vertices exceeds the cap of {max}")
            }
            Error::MaskOutOfRange { n } => {
                write!(f, "edge bitmask has bits beyond the {} valid positions", n * (n - 1) / 2)
            }
            Error::IntervalOutOfRange { n } => {
                write!(f, "enumeration interval extends past 2^{}", n * (n - 1) / 2)
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square: {rows} x {cols}"),
            Error::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            Error::InvalidShape { p, q } => {
                write!(f, "factor dimensions must both be >= 2, got ({p}, {q})")
            }
            Error::ShapeMismatch { p, q, n } => {
                write!(f, "matrix dimension {n} does not equal {p} * {q}")
            }
            Error::BlockIndexOutOfRange { i, j, p } => {
                write!(f, "block index ({i}, {j}) outside 1..={p}")
            }
            Error::VertexInGroup { vertex } => {
                write!(f, "vertex {vertex} is a member of the target group")
            }
            Error::ZeroTrace => {
                write!(f, "zero-trace matrix (empty graph) cannot be a density matrix")
            }
            Error::NonzeroRowSums { row } => {
                write!(f, "matrix has a nonzero sum in row {row}; zero row sums required")
            }
            Error::NsCapExceeded { n, max } => {
                write!(f, "0-1 matrix enumeration capped at n = {max} (2^{} matrices); got n = {n}", max * max)
            }
            Error::CensusCapExceeded { n, max } => {
                write!(f, "census capped at {max} vertices; got {n}")
            }
            Error::PptCapExceeded { n, max } => {
                write!(f, "census with the PSD column capped at {max} vertices; got {n} (skip it to proceed)")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
