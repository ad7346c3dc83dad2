use std::fmt;

/// Errors from packet construction, series evaluation, and quadrature.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside a function's domain (e.g. alpha not in (0, 2]).
    Domain(String),
    /// Series hit the term cap before the stopping rule triggered.
    Convergence { terms: usize },
    /// Quadrature could not reach the requested tolerance.
    ToleranceNotMet { achieved: f64, requested: f64 },
    /// The alpha = 1, beta != 0 packet branch is not constructed.
    UnsupportedBranch(String),
    /// Evaluator method incompatible with the packet parameters.
    MethodMismatch(String),
    /// Imaginary residue of a nominally real transform exceeded its bound.
    ImaginaryResidue { imag: f64, limit: f64 },
    /// Evaluation requested at a singular point (|x - vt| inside the band).
    Singularity { at: f64 },
    /// Denominator of the heat-form ratio vanished.
    DivisionByZero,
    /// Degenerate parameter combination (e.g. m = c = 0).
    DegenerateParameters(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::Convergence { terms } => {
                write!(f, "series did not converge within {terms} terms")
            }
            Self::ToleranceNotMet { achieved, requested } => write!(
                f,
                "quadrature tolerance not met: achieved {achieved:.3e}, requested {requested:.3e}"
            ),
            Self::UnsupportedBranch(msg) => write!(f, "unsupported branch: {msg}"),
            Self::MethodMismatch(msg) => write!(f, "method/parameter mismatch: {msg}"),
            Self::ImaginaryResidue { imag, limit } => write!(
                f,
                "imaginary residue {imag:.3e} exceeds limit {limit:.3e}"
            ),
            Self::Singularity { at } => write!(f, "singular derivative at y = {at:.6e}"),
            Self::DivisionByZero => write!(f, "denominator vanished"),
            Self::DegenerateParameters(msg) => write!(f, "degenerate parameters: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
