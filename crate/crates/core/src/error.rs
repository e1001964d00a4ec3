use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arity must be at least 1")]
    ZeroArity,

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("tuple {tuple:?} has length {len}, expected arity {arity}")]
    TupleLength {
        tuple: Vec<String>,
        len: usize,
        arity: usize,
    },

    #[error("tuple {tuple:?} mentions undeclared vertex `{vertex}`")]
    UnknownVertex { tuple: Vec<String>, vertex: String },

    #[error("unknown vertex `{0}`")]
    NoSuchVertex(String),

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    /// An enumeration would exceed a configured cap. This signals an instance
    /// that is too large, not a defect.
    #[error("guard `{guard}` exceeded: needed more than {limit}")]
    GuardExceeded { guard: &'static str, limit: u64 },

    #[error("assignment is not total: {got} images for {expected} vertices")]
    NotTotal { expected: usize, got: usize },

    #[error("image index {index} out of range for codomain of size {size}")]
    ImageOutOfRange { index: usize, size: usize },

    #[error("codomain has {0} vertices; value sets are limited to 64")]
    CodomainTooLarge(usize),

    #[error("not a map of r-sets: tuple {0:?} is sent outside the target relation")]
    NotAMap(Vec<String>),

    #[error("not a multi-map")]
    NotAMultiMap,

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("index {index} out of range for a {dim}-simplex")]
    FaceIndex { index: usize, dim: usize },

    #[error("dimension {dim} exceeds the bound {bound}")]
    DimensionBound { dim: usize, bound: usize },

    #[error("`{point}` is not a beat point with witness `{witness}`")]
    InvalidWitness { point: String, witness: String },

    #[error("complex of dimension {dim} cannot be encoded with arity {arity} (need arity > dimension)")]
    ComplexEncoding { dim: usize, arity: usize },

    #[error("not a preorder: {0}")]
    NotPreorder(String),

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("homology in degree {requested} requested, but only degrees below {bound} are trustworthy")]
    BeyondValidity { requested: usize, bound: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}
