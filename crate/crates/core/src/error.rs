use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation on the zero polynomial")]
    ZeroPolynomial,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("interval endpoint {0} is a root; perturb the endpoint")]
    EndpointIsRoot(String),
    #[error("empty interval: lo must be below hi")]
    EmptyInterval,
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: String, hi: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("zero denominator at line {line}, column {column}")]
    ZeroDenominator { line: usize, column: usize },
    #[error("cannot parse '{0}'")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("the inputs have no common root ({0})")]
    NoCommonRoot(String),
    #[error("{0} candidates annihilate every input; supply a filter interval")]
    AmbiguousRoot(usize),
    #[error("no candidate annihilates every input")]
    NoSharedRoot,
    #[error("terminal polynomial has degree {0}; closed forms stop at 4")]
    TerminalTooLarge(usize),
    #[error("no real resolvent root gives a real square root C + 2z")]
    NoRealResolvent,
    #[error("root selection failed: {0}")]
    Selection(String),
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    #[error("singular centre parametrization: h*eps <= r")]
    SingularParametrization,
    #[error("no admissible eccentricity at r = {0}")]
    NoAdmissibleEpsilon(String),
    #[error("no admissible root: {0}")]
    NoAdmissibleRoot(String),
    #[error("no root of the collapsed quadratic lies in the admissible band")]
    InadmissibleAbscissa,
    #[error("no convergence after {iterations} iterations (last step {last_step})")]
    NonConvergence {
        iterations: usize,
        last_step: String,
        trace: Vec<String>,
    },
    #[error("no fifth-root branch assignment reproduces the quintic")]
    BranchFailure,
    #[error("range error: {0}")]
    Range(String),
    #[error("bisector slope is singular for m = 1")]
    SingularSlope,
    #[error("the origin has no image under inversion")]
    Origin,
}

pub type Result<T> = std::result::Result<T, Error>;
