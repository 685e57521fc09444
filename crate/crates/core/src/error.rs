use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0:?} is not irreducible")]
    Reducible(Vec<u32>),
    #[error("unsupported field: {0}")]
    Unsupported(String),
    #[error("division by zero")]
    DivisionByZero,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{0} is not a power of the characteristic")]
    NotCharPower(u64),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero polynomial has no initial term")]
    ZeroPolynomial,

    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("generators do not share a common degree")]
    NotEquigenerated,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("the ideal has no nonzero generators")]
    ZeroIdeal,
    #[error("the ideal is not contained in the homogeneous maximal ideal")]
    NotInMaximalIdeal,
    #[error("the ideal is not primary to the maximal ideal")]
    NotMPrimary,

    #[error("polytope is unbounded")]
    Unbounded,
    #[error("polytope is degenerate (zero volume)")]
    Degenerate,
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("centroid does not lie on the cutting hyperplane")]
    CentroidOffHyperplane,
    #[error("degree slice {0} of the monomial ideal is empty")]
    EmptySlice(u32),

    #[error("linear forms are linearly dependent")]
    DependentForms,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
