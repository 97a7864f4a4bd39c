//! Locally D-optimal approximate designs for bivariate regression models whose
//! two responses are coupled through a parametric copula.

pub mod copula;
pub mod design;
pub mod error;
pub mod fim;
pub mod models;
pub mod normal;
pub mod optimizer;
pub mod quadrature;

pub use copula::{alpha_from_tau, tau_from_alpha, CopulaFamily, CopulaSpec, TauValue};
pub use design::{CertificationReport, DesignMeasure};
pub use error::{Error, Result};
pub use fim::{InfoMatrix, InformationModel, Model};
pub use models::{
    BinaryLogisticProblem, CellProbabilities, GaussianMarginProblem, Interval, LocalParameters, Problem, TrendFunction,
};
pub use quadrature::QuadratureRule;
