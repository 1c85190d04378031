use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operands belong to different algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("element is singular (smallest |eigenvalue| {smallest:e})")]
    Singular { smallest: f64 },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    #[error("scalar function undefined at eigenvalue {eigenvalue}")]
    DomainError { eigenvalue: f64 },

    #[error("element is not idempotent (residual {residual:e})")]
    NotIdempotent { residual: f64 },

    #[error("element does not lie in the Peirce 1-space of the idempotent (residual {residual:e})")]
    NotInSubalgebra { residual: f64 },

    #[error("element is not invertible inside the subalgebra")]
    SingularInSubalgebra,

    #[error("element is outside the cone of squares (min eigenvalue {min_eigenvalue:e})")]
    NotInCone { min_eigenvalue: f64 },

    #[error("element is not in the interior of the cone (min eigenvalue {min_eigenvalue:e})")]
    NotInteriorCone { min_eigenvalue: f64 },

    #[error("invalid boundary point: {0}")]
    InvalidBoundaryPoint(String),

    #[error("element is outside the order interval [-1, 1]")]
    OutOfInterval,

    #[error("vector is not in the order ideal of the point")]
    NotMember,

    #[error("parameter {value} outside {range}")]
    ParameterOutOfRange { value: f64, range: &'static str },

    #[error("invariant violated: {0}")]
    InvariantViolated(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("sampler gave up after {0} rejections")]
    RetryExhausted(usize),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
