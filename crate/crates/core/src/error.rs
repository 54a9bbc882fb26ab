use thiserror::Error;

use crate::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set [1..={m}]")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("ground set of {0} vertices exceeds the 64-vertex bitmask limit")]
    TooManyVertices(usize),

    #[error("vertex {0} lies in no facet")]
    IsolatedVertex(usize),

    #[error("facets must be nonempty")]
    EmptyFacet,

    #[error("label {0} is already used by the complex")]
    LabelCollision(usize),

    #[error("{0} is not a facet of the complex")]
    NotAFacet(VertexSet),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("staged construction disagrees with the facet list: {0}")]
    ConstructionMismatch(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("complex is not a sphere candidate: {0}")]
    NotASphereCandidate(String),

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("not a subcomplex: {0}")]
    NotASubcomplex(String),

    #[error("{m} vertices exceeds the enumeration cap of {cap}; raise it with --max-vertices")]
    CapExceeded { m: usize, cap: usize },

    #[error("{count} missing faces exceeds the Taylor complex cap of {cap}")]
    TooManyMissingFaces { count: usize, cap: usize },

    #[error("methods disagree at {location}: {detail}")]
    MethodDisagreement { location: String, detail: String },

    #[error("torsion present: {0}")]
    TorsionPresent(String),

    #[error("model grammar error: {0}")]
    GrammarError(String),

    #[error("summands have unequal total dimension ({0} vs {1})")]
    UnequalTotalDimension(usize, usize),

    #[error("sphere dimension {0} is below 3")]
    SphereDimBelow3(usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
