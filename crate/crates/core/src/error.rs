use thiserror::Error;

use crate::lattice::VertexId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension {0} is too small")]
    DimTooSmall(usize),
    #[error("facet {0:?} appears more than once")]
    DuplicateFacet(Vec<VertexId>),
    #[error("not a graded face lattice: {0}")]
    NonGraded(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("antiprism needs k >= 3, got {0}")]
    KTooSmall(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("rotation system is invalid: {0}")]
    InvalidRotation(String),
    #[error("embedding is not spherical: n - e + f = {0}")]
    NotSphere(i64),
    #[error("graph is not polyhedral (3-connected planar)")]
    NotPolyhedral,
    #[error("graph has {0} vertices, the limit is 255")]
    TooManyVertices(usize),
    #[error("planar_code stream: {0}")]
    Format(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OctahedriteError {
    #[error("parameter {requested} outside supported range {min}..={max}")]
    LimitExceeded { requested: usize, min: usize, max: usize },
    #[error("no {k}-gon witness found with at most {max_n} vertices")]
    SearchLimitExceeded { k: usize, max_n: usize },
    #[error("catalog: {0}")]
    Catalog(String),
    #[error(transparent)]
    Planar(#[from] PlanarError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("invalid pattern: {0}")]
    Invalid(String),
    #[error("host graph is not polyhedral")]
    HostNotPolyhedral,
    #[error("catalog covers n <= {have}, need n <= {need}")]
    IncompleteCatalog { have: usize, need: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("expected a 4-dimensional lattice, got dimension {0}")]
    NotFourDimensional(usize),
    #[error("identity violated: {0}")]
    IdentityViolation(String),
    #[error("stabilizer order {0} is not allowed here")]
    BadStabilizerOrder(u64),
    #[error("missing stabilizer for {0}")]
    MissingStabilizer(String),
    #[error("volume {q} pi^2/3 is not minimal (f0 - f3 = {excess})")]
    NotMinimal { q: String, excess: i64 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CircuitError {
    #[error("perpendicular lengths must be positive and finite with cosh > 1, got ({0}, {1})")]
    NonPositiveRho(f64, f64),
    #[error("a circuit needs at least 3 facets, got k + l = {0}")]
    TooShort(usize),
    #[error(transparent)]
    Identity(#[from] IdentityError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("rank query (k = {k}, l = {l}) is outside 0 <= l < k <= {max}")]
    RankOutOfRange { k: usize, l: usize, max: usize },
}
