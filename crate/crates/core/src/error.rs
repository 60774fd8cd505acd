use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex label does not belong to the ground set in use.
    #[error("unknown vertex `{label}`")]
    UnknownVertex { label: String },

    /// More vertices than the type can hold.
    #[error("ground set has {count} vertices, cap is {cap}")]
    TooManyVertices { count: usize, cap: usize },

    /// Duplicate label while building a ground set.
    #[error("duplicate vertex label `{label}`")]
    DuplicateLabel { label: String },

    /// A pivot was requested on a set whose principal minor is singular.
    #[error("singular principal minor on {set} (det = 0)")]
    SingularPrincipalMinor { set: String },

    /// A graph pivot is not applicable: `det G[X] = 0`.
    #[error("pivot on {set} undefined: det of the principal submatrix is 0")]
    UndefinedPivot { set: String },

    /// Local complementation needs a loop on the vertex.
    #[error("local complementation on `{vertex}` undefined: no loop on `{vertex}`")]
    NotALoop { vertex: String },

    /// Edge complementation needs an edge between two loop-free vertices.
    #[error("edge complementation on {{{u},{v}}} undefined: {reason}")]
    NotAValidEdge { u: String, v: String, reason: String },

    /// The set system is not the induced system of any graph.
    #[error("set system is not graphic: {reason}")]
    NotGraphic { reason: String },

    /// A group/normal-form facility was given a singular 2x2 flip matrix.
    #[error("flip matrix is not invertible")]
    NonInvertibleFlip,

    /// Malformed input text (word, graph file or set-system file).
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A graph or set-system file declares the same item twice.
    #[error("duplicate declaration on line {line}: {item}")]
    DuplicateDeclaration { line: usize, item: String },

    /// Orbit enumeration hit the configured node cap.
    #[error("orbit exceeds the node cap of {cap}")]
    OrbitTooLarge { cap: usize },

    /// A word step failed when applied to a graph.
    #[error("step {step} ({token}): {source}")]
    StepFailed {
        step: usize,
        token: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
