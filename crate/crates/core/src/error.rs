use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("symbol `{0}` is not bound")]
    UnboundSymbol(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("braided Yang-Baxter equation fails")]
    NotYangBaxter,
    #[error("Hecke condition (qI-R)(q^-1 I+R)=0 fails")]
    NotHecke,
    #[error("braiding is not skew-invertible")]
    NotSkewInvertible,
    #[error("Poincare series did not stabilise by depth {0}")]
    InconclusiveDepth(usize),
    #[error("bad deformation parameter: {0}")]
    BadDeformationParameter(String),
    #[error("factorized form does not match: {0}")]
    FactorizationMismatch(String),
    #[error("degenerate eigenvalue profile: {0}")]
    DegenerateProfile(String),
    #[error("shift isomorphism is unavailable at q = 1")]
    ShiftUnavailable,
    #[error("Cayley-Hamilton check failed: {0}")]
    ChFailed(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("power-sum recurrence mismatch at k = {0}")]
    RecurrenceMismatch(usize),
    #[error("profile lies in the exceptional set: {0}")]
    ExceptionalProfile(String),
    #[error("projector axiom failed: {0}")]
    ProjectorAxiomFailed(String),
    #[error("conjecture check failed: {0}")]
    ConjectureFailed(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
