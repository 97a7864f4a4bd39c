use crate::copula::CopulaFamily;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown copula family `{0}`")]
    UnknownFamily(String),

    #[error("copula parameter {alpha} outside the {family} domain {domain}")]
    ParameterDomain {
        family: CopulaFamily,
        alpha: f64,
        domain: &'static str,
    },

    #[error("{family} copula requires a parameter")]
    MissingParameter { family: CopulaFamily },

    #[error("the product copula has no parameter")]
    NoParameter,

    #[error("Kendall's tau {tau} is not attainable by the {family} copula (range {range})")]
    Unattainable {
        family: CopulaFamily,
        tau: f64,
        range: &'static str,
    },

    #[error("({u1}, {u2}) is outside the unit square")]
    OutsideUnitSquare { u1: f64, u2: f64 },

    #[error("({u1}, {u2}) lies on the boundary of the unit square")]
    Boundary { u1: f64, u2: f64 },

    #[error("copula parameter {alpha} lies on the {family} domain boundary")]
    ParameterBoundary { family: CopulaFamily, alpha: f64 },

    #[error("Kendall's tau {0} is outside [-1, 1]")]
    InvalidTau(f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("x = {x} lies outside the design space [{lo}, {hi}]")]
    OutsideDesignSpace { x: f64, lo: f64, hi: f64 },

    #[error("inconsistent cell probabilities at x = {x}: {detail}")]
    Consistency { x: f64, detail: String },

    #[error("degenerate information at x = {x}: a cell probability vanished")]
    DegenerateInformation { x: f64 },

    #[error("non-finite integrand at quadrature node (u1 = {u1}, u2 = {u2})")]
    Quadrature { u1: f64, u2: f64 },

    #[error("information matrix is singular")]
    SingularDesign,

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("design is empty after pruning")]
    EmptyDesign,

    #[error("no nonsingular initial design on the candidate grid")]
    Initialization,

    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(String),
}
