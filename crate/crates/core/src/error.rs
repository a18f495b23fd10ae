//! Shared error type for the whole crate.
//!
//! Three broad families matter to callers:
//!
//! * input problems (parse failures, malformed matrices) — recoverable,
//! * refusals (an enumeration bound would be exceeded) — recoverable by
//!   raising the bound,
//! * invariant violations (a certificate failed re-verification) — these
//!   signal a bug in the library itself and are never expected in practice.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the matroid, digraph and linear
/// algebra layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A matrix entry fell outside `{-1, 0, 1}`.
    #[error("matrix entry {value} at ({row}, {col}) is outside {{-1, 0, 1}}")]
    EntryOutOfRange { row: usize, col: usize, value: i64 },

    /// Matrix constructor was handed the wrong number of entries.
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    /// A column index was out of range.
    #[error("column {col} is out of range for a matrix with {cols} columns")]
    ColumnOutOfRange { col: usize, cols: usize },

    /// An element position was out of range for the ground set.
    #[error("element {element} is out of range for a ground set of {elements} elements")]
    ElementOutOfRange { element: usize, elements: usize },

    /// Tried to pivot on an all-zero column.
    #[error("cannot pivot on all-zero column {col}")]
    ZeroColumnPivot { col: usize },

    /// A pivot or kernel computation escaped `{-1, 0, 1}`, which cannot
    /// happen for a totally unimodular input.
    #[error("computation left {{-1, 0, 1}} during {stage}: the input matrix is not totally unimodular")]
    NotTotallyUnimodular { stage: &'static str },

    /// The representation is too large for the bitmask ground-set encoding.
    #[error("representation of {rows}x{cols} exceeds the supported maximum of {max} rows/columns")]
    RepresentationTooLarge { rows: usize, cols: usize, max: usize },

    /// An enumeration was refused because the ground set exceeds the
    /// configured bound.
    #[error("enumeration over {elements} elements exceeds the configured bound of {bound}")]
    EnumerationBoundExceeded { elements: usize, bound: usize },

    /// A digraph enumeration was refused because the vertex count exceeds
    /// the configured bound.
    #[error("enumeration over {vertices} vertices exceeds the configured bound of {bound}")]
    VertexBoundExceeded { vertices: usize, bound: usize },

    /// `directed_circuit_through` was queried for an element that lies in
    /// no directed circuit.
    #[error("element {element} lies in no directed circuit")]
    NoDirectedCircuit { element: usize },

    /// An operation that requires a totally cyclic host was handed one
    /// that is not.
    #[error("the oriented matroid is not totally cyclic (element {element} lies in no directed circuit)")]
    NotTotallyCyclic { element: usize },

    /// The marked set handed to `basis_with_marked_set` is not coindependent.
    #[error("the marked set is not coindependent")]
    NotCoindependent,

    /// Deleting this edge is not a legal cut-minor operation.
    #[error("edge {edge} is not deletable (no alternative directed path from its tail to its head)")]
    NotDeletable { edge: usize },

    /// Dropping this vertex is not a legal cut-minor operation.
    #[error("vertex {vertex} is not isolated")]
    NotIsolated { vertex: usize },

    /// An edge index was out of range.
    #[error("edge {edge} is out of range for a digraph with {edges} edges")]
    EdgeOutOfRange { edge: usize, edges: usize },

    /// A text input could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A certificate failed re-verification, or an internal consistency
    /// check failed. This indicates a bug.
    #[error("internal invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    /// Convenience constructor for parse errors.
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Convenience constructor for invariant violations.
    pub fn invariant(message: impl Into<String>) -> Self {
        Error::Invariant(message.into())
    }
}
