use core::fmt;

/// Errors reported by the analysis kernel.
///
/// Validation failures carry the measured residual or eigenvalue so that
/// callers can report which invariant was violated and by how much.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A square matrix was required.
    NonSquare { rows: usize, cols: usize },
    /// Dimensions of two operands do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// A matrix entry is NaN or infinite.
    NonFiniteEntry { row: usize, col: usize },
    /// An entry buffer does not match the declared shape.
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    /// The weight operator is not Hermitian within tolerance.
    NotHermitian { residual: f64 },
    /// The weight operator has a decisively negative eigenvalue.
    NotPositive { min_eigenvalue: f64 },
    /// The weight operator is zero.
    ZeroOperator,
    /// The operator does not leave the null space of A invariant, so no
    /// A-adjoint exists and seminorm quantities are undefined for it.
    NotAdjointable { residual: f64 },
    /// An iteration failed to converge within its sweep budget.
    ConvergenceFailure { what: &'static str, residual: f64 },
    /// A tolerance configuration field is out of range.
    InvalidConfig(&'static str),
    /// The operator tuple for a joint radius was empty.
    EmptyTuple,
    /// A demo was requested with a size below its minimum.
    InvalidDemoParameter { name: &'static str, minimum: usize, got: usize },
    /// A proven class implication failed numerically; this signals a
    /// tolerance or implementation bug, not a mathematical outcome.
    ChainViolation(String),
    /// Independent certificates for one predicate decisively disagree.
    CertificateMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Self::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Self::NonFiniteEntry { row, col } => {
                write!(f, "non-finite entry at ({row}, {col})")
            }
            Self::ShapeMismatch { rows, cols, len } => {
                write!(f, "entry buffer of length {len} does not fill a {rows}x{cols} matrix")
            }
            Self::NotHermitian { residual } => {
                write!(f, "matrix is not Hermitian (relative residual {residual:.3e})")
            }
            Self::NotPositive { min_eigenvalue } => {
                write!(f, "matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")
            }
            Self::ZeroOperator => write!(f, "the weight operator A must be nonzero"),
            Self::NotAdjointable { residual } => write!(
                f,
                "operator does not leave N(A) invariant (residual {residual:.3e}); no A-adjoint exists"
            ),
            Self::ConvergenceFailure { what, residual } => {
                write!(f, "{what} failed to converge (residual {residual:.3e})")
            }
            Self::InvalidConfig(msg) => write!(f, "invalid tolerance configuration: {msg}"),
            Self::EmptyTuple => write!(f, "operator tuple must contain at least one matrix"),
            Self::InvalidDemoParameter { name, minimum, got } => {
                write!(f, "demo parameter {name} must be at least {minimum}, got {got}")
            }
            Self::ChainViolation(msg) => write!(f, "class implication chain violated: {msg}"),
            Self::CertificateMismatch(msg) => write!(f, "certificate disagreement: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
