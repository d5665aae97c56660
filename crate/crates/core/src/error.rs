use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    InvalidCharacteristic(u64),
    #[error("field of order p^{deg} with p={p} does not fit in 64 bits")]
    FieldTooLarge { p: u64, deg: u64 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is reducible over F_p")]
    ReducibleModulus,
    #[error("elements or polynomials live in different fields")]
    FieldMismatch,
    #[error("no embedding between these fields: {0}")]
    IncompatibleTower(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division is not exact")]
    InexactDivision,
    #[error("monomial division by {var}^{d} is not exact")]
    InexactMonomialDivision { var: char, d: u32 },
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("curves share a common component through the point")]
    CommonComponent,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("resolution budget of {0} blowups exceeded")]
    ResolutionBudgetExceeded(u32),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("no witness found up to degree {0}")]
    NoWitnessWithinBudget(u32),
    #[error("discrepancy: {0}")]
    DiscrepancyAlert(String),
}

pub type Result<T> = std::result::Result<T, Error>;
