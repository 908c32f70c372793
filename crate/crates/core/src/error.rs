use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("invalid coefficient `{0}`")]
    Coefficient(String),
    #[error("invalid term `{0}`")]
    Term(String),
    #[error("generator index {index} out of range for an algebra on {dim} generators")]
    GeneratorOutOfRange { index: usize, dim: usize },
    #[error("empty expression")]
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliffordError {
    #[error("signature ({p},{q}) exceeds the supported 64 generators")]
    TooManyGenerators { p: usize, q: usize },
    #[error("signature mismatch: ({0},{1}) vs ({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element is not in the Clifford group: {0}")]
    NotInCliffordGroup(String),
    #[error("volume element undefined for the zero-dimensional algebra")]
    ZeroDimensional,
    #[error("vector is null (g(v,v) = 0)")]
    NullVector,
    #[error("operation requires {0}")]
    Unsupported(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FormError {
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("square root of a form requires unit constant term, found {0}")]
    NotUnipotent(String),
    #[error("unknown characteristic class `{0}`")]
    UnknownGenus(String),
    #[error("invalid curvature model: {0}")]
    Model(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CechError {
    #[error("invalid nerve: {0}")]
    Nerve(String),
    #[error("invalid cochain data: {0}")]
    Cochain(String),
    #[error("triple overlap ({0},{1},{2}) does not close to ±1: got {3}")]
    CocycleNotSign(usize, usize, usize, String),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IndexError {
    #[error("unknown spectral model `{0}`")]
    UnknownModel(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
}
