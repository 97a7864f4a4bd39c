//! Problem configuration files.
//!
//! A config is a JSON document with a `schema_version` field. Everything except
//! `problem` and `copula` is optional; omitted fields take the defaults listed
//! on each struct. When the family has a parameter, exactly one of `alpha` and
//! `tau` must be given, and `tau` is converted to `alpha` at load time.

use crate::CliError;
use copula_design::optimizer::OptimizerConfig;
use copula_design::{
    alpha_from_tau, BinaryLogisticProblem, CopulaFamily, CopulaSpec, GaussianMarginProblem, Interval, Problem,
    QuadratureRule, TrendFunction,
};
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemKind {
    /// Two Gaussian-margin polynomial regressions; defaults to trends
    /// `(1, x, x²)` and `(x, x³, x⁴)` on `[0, 1]` with unit coefficients.
    ContinuousLinear,
    /// Two logistic margins; defaults to β1 = (−1, 1), β2 = (−2, 0.5) on `[0, 10]`.
    BinaryLogistic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CopulaConfig {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
}

/// Optimizer overrides. Defaults: grid 1001 points, 20000 iterations,
/// eps_bound 1e-3, certification on 2001 points with tolerance 1e-3.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimizerSettings {
    pub grid_size: Option<usize>,
    pub max_iters: Option<usize>,
    pub eps_bound: Option<f64>,
    pub refine_iters: Option<usize>,
    pub polish_rounds: Option<usize>,
    pub merge_fraction: Option<f64>,
    pub prune_tol: Option<f64>,
    pub cert_grid: Option<usize>,
    pub cert_tol: Option<f64>,
}

/// Gauss–Legendre order per axis (default 64) and endpoint grading exponent (default 3).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadratureSettings {
    pub order: Option<usize>,
    pub grading: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub schema_version: u32,
    pub problem: ProblemKind,
    pub copula: CopulaConfig,
    /// Monomial exponents of the first and second trend (continuous only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trend1: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trend2: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta1: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta2: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub design_space: Option<[f64; 2]>,
    /// Whether α is a parameter of interest. Defaults to true.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimate_alpha: Option<bool>,
    #[serde(default)]
    pub optimizer: OptimizerSettings,
    #[serde(default)]
    pub quadrature: QuadratureSettings,
}

/// A loaded and validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct Resolved {
    pub problem: Problem,
    pub optimizer: OptimizerConfig,
    pub quadrature: QuadratureRule,
}

impl ProblemConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: ProblemConfig = serde_json::from_str(text).map_err(|e| CliError::Input(format!("config: {e}")))?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(CliError::Input(format!(
                "config: unsupported schema_version {} (expected {SCHEMA_VERSION})",
                cfg.schema_version
            )));
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn copula_spec(&self) -> Result<CopulaSpec, CliError> {
        let family: CopulaFamily = self.copula.family.parse()?;
        let spec = match (family.has_parameter(), self.copula.alpha, self.copula.tau) {
            (false, None, None) => CopulaSpec::product(),
            (false, _, _) => return Err(CliError::Input("the product copula takes neither alpha nor tau".into())),
            (true, Some(a), None) => CopulaSpec::new(family, Some(a))?,
            (true, None, Some(t)) => alpha_from_tau(family, t)?,
            (true, Some(_), Some(_)) => {
                return Err(CliError::Input("give exactly one of alpha and tau, not both".into()))
            }
            (true, None, None) => return Err(CliError::Input(format!("{family} copula needs alpha or tau"))),
        };
        Ok(spec)
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let copula = self.copula_spec()?;
        let estimate_alpha = self.estimate_alpha.unwrap_or(true);
        let space = match self.design_space {
            Some([lo, hi]) => Some(Interval::new(lo, hi)?),
            None => None,
        };
        let problem = match self.problem {
            ProblemKind::ContinuousLinear => {
                let mut p = GaussianMarginProblem::fedorov(copula, estimate_alpha);
                if let Some(e) = &self.trend1 {
                    p.trend1 = TrendFunction::new(e.clone())?;
                    p.beta1 = vec![1.0; p.trend1.dim()];
                }
                if let Some(e) = &self.trend2 {
                    p.trend2 = TrendFunction::new(e.clone())?;
                    p.beta2 = vec![1.0; p.trend2.dim()];
                }
                if let Some(b) = &self.beta1 {
                    p.beta1 = b.clone();
                }
                if let Some(b) = &self.beta2 {
                    p.beta2 = b.clone();
                }
                if let Some(s) = space {
                    p.design_space = s;
                }
                p.validate()?;
                Problem::Continuous(p)
            }
            ProblemKind::BinaryLogistic => {
                if self.trend1.is_some() || self.trend2.is_some() {
                    return Err(CliError::Input(
                        "binary-logistic margins are linear; drop trend1/trend2".into(),
                    ));
                }
                let mut p = BinaryLogisticProblem::standard(copula, estimate_alpha);
                if let Some(b) = &self.beta1 {
                    p.beta1 = pair(b, "beta1")?;
                }
                if let Some(b) = &self.beta2 {
                    p.beta2 = pair(b, "beta2")?;
                }
                if let Some(s) = space {
                    p.design_space = s;
                }
                Problem::Binary(p)
            }
        };
        let o = &self.optimizer;
        let d = OptimizerConfig::default();
        let optimizer = OptimizerConfig {
            grid_size: o.grid_size.unwrap_or(d.grid_size),
            max_iters: o.max_iters.unwrap_or(d.max_iters),
            eps_bound: o.eps_bound.unwrap_or(d.eps_bound),
            refine_iters: o.refine_iters.unwrap_or(d.refine_iters),
            polish_rounds: o.polish_rounds.unwrap_or(d.polish_rounds),
            merge_fraction: o.merge_fraction.unwrap_or(d.merge_fraction),
            prune_tol: o.prune_tol.unwrap_or(d.prune_tol),
            cert_grid: o.cert_grid.unwrap_or(d.cert_grid),
            cert_tol: o.cert_tol.unwrap_or(d.cert_tol),
        };
        optimizer.validate(problem.n_params())?;
        let quadrature = quadrature_rule(
            self.quadrature.order.unwrap_or(DEFAULT_QUAD_ORDER),
            self.quadrature.grading.unwrap_or(DEFAULT_QUAD_GRADING),
        )?;
        Ok(Resolved {
            problem,
            optimizer,
            quadrature,
        })
    }
}

pub const DEFAULT_QUAD_ORDER: usize = 64;
pub const DEFAULT_QUAD_GRADING: u32 = 3;

pub fn quadrature_rule(order: usize, grading: u32) -> Result<QuadratureRule, CliError> {
    if !(2..=1024).contains(&order) || !(1..=8).contains(&grading) {
        return Err(CliError::Input(format!(
            "quadrature order must be in [2, 1024] and grading in [1, 8], got {order} and {grading}"
        )));
    }
    Ok(QuadratureRule::graded(order, grading))
}

fn pair(b: &[f64], name: &str) -> Result<[f64; 2], CliError> {
    <[f64; 2]>::try_from(b).map_err(|_| CliError::Input(format!("{name} needs 2 coefficients, got {}", b.len())))
}

/// Serializable description of a resolved problem, used in design-file metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSummary {
    pub kind: ProblemKind,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub estimate_alpha: bool,
    pub design_space: [f64; 2],
    pub beta: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trends: Option<[Vec<u32>; 2]>,
    pub n_params: usize,
}

impl ProblemSummary {
    pub fn of(problem: &Problem) -> Self {
        let space = problem.design_space();
        let copula = problem.copula();
        let (kind, trends) = match problem {
            Problem::Continuous(p) => (
                ProblemKind::ContinuousLinear,
                Some([p.trend1.exponents().to_vec(), p.trend2.exponents().to_vec()]),
            ),
            Problem::Binary(_) => (ProblemKind::BinaryLogistic, None),
        };
        Self {
            kind,
            family: copula.family().name().to_string(),
            alpha: copula.alpha(),
            estimate_alpha: problem.estimate_alpha(),
            design_space: [space.lo(), space.hi()],
            beta: problem.local_parameters().beta,
            trends,
            n_params: problem.n_params(),
        }
    }

    /// SHA-256 of the compact JSON encoding, as lowercase hex.
    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let json = serde_json::to_vec(self).expect("summary serializes");
        Sha256::digest(json).iter().map(|b| format!("{b:02x}")).collect()
    }
}
