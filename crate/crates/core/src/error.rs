use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("unsupported genus {0} (supported: 1..=3)")]
    UnsupportedGenus(usize),
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("subspace is not a Göpel group: {0}")]
    NotGopel(&'static str),
    #[error("imaginary part is not positive definite")]
    NotPositiveDefinite,
    #[error("requested precision unachievable at truncation cap")]
    PrecisionUnachievable,
    #[error("no small-integer vector within tolerance; increase precision")]
    RationalizationFailure,
    #[error("numerical rank indeterminate (gap below threshold)")]
    RankIndeterminate,
    #[error("no sign assignment vanishes; relation type misidentified")]
    NoVanishingSigns,
    #[error("variable {0} missing from substitution map")]
    MissingVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("reducible modulus for extension field")]
    ReducibleModulus,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("separating linear form not found within retry budget")]
    NoSeparatingForm,
    #[error("point does not lie on the variety")]
    PointNotOnVariety,
    #[error("coefficient blow-up guard exceeded; switch to a prime field")]
    CoefficientBlowup,
    #[error("{0}")]
    Invariant(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
