use thiserror::Error;

/// Failures of the library operations.
///
/// `IdentityViolated` and `DegenerateFormBug` flag internal inconsistencies:
/// they can only be reached if an invariant the mathematics guarantees has
/// been broken by the implementation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("empty input")]
    EmptyInput,
    #[error("locus {locus} is not uniform for the queried function; refine the basis first")]
    NonUniformLocus { locus: String },
    #[error("all coordinates are zero")]
    AllZero,
    #[error("curve is degenerate (lies in a proper hyperplane)")]
    DegenerateCurve,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("expected a curve in P^{expected}, got P^{actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error("curve is not a contact curve")]
    NotContact,
    #[error("second associated curve spans too little: contact form is not unique")]
    DegenerateInput,
    #[error("recovered 2-form has zero Pfaffian on nondegenerate input")]
    DegenerateFormBug,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("2-form is degenerate (zero Pfaffian)")]
    DegenerateForm,
    #[error("curve is linear")]
    LinearCurve,
    #[error("curve is not null: {0}")]
    NotNull(&'static str),
    #[error("bivector curve is not decomposable")]
    NotDecomposable,
    #[error("input is constant")]
    ConstantInput,
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("rank certificate inconclusive: no forcing minor among {remaining} polynomials")]
    Inconclusive { remaining: usize },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

/// Failures while reading numbers and polynomials from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed number `{0}`")]
    BadNumber(String),
    #[error("malformed expression at byte {pos}: {msg}")]
    BadExpression { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
