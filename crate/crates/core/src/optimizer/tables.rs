//! Efficiency-loss studies built on repeated optimization.

use super::{fedorov_wynn, OptimizationResult, OptimizerConfig};
use crate::copula::{alpha_from_tau, CopulaFamily, CopulaSpec};
use crate::design::{d_efficiency, loss_percent, DesignMeasure};
use crate::error::{Error, Result};
use crate::fim::{Model, QuadratureRule};
use crate::models::Problem;
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Memoized optimal designs keyed by the full problem description.
#[derive(Debug, Default)]
pub struct DesignCache {
    entries: Mutex<HashMap<String, Arc<OptimizationResult>>>,
}

impl DesignCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn optimize(
        &self,
        problem: &Problem,
        config: &OptimizerConfig,
        quad: &QuadratureRule,
    ) -> Result<Arc<OptimizationResult>> {
        let key = format!("{problem:?}|{config:?}|{}|{}", quad.order(), quad.grading());
        if let Some(hit) = self.entries.lock().expect("cache poisoned").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let model = Model::new(problem, quad)?;
        let result = Arc::new(fedorov_wynn(&model, config)?);
        self.entries
            .lock()
            .expect("cache poisoned")
            .entry(key)
            .or_insert_with(|| Arc::clone(&result));
        Ok(result)
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Design that ignores the dependence, compared against the full-model optimum.
#[derive(Debug, Clone, PartialEq)]
pub enum Benchmark {
    /// The same design for every row.
    Fixed(DesignMeasure),
    /// Per row: the optimum of the same model with α treated as known.
    AlphaKnown,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RowStatus {
    Ok,
    /// τ is not attainable by the family.
    NotDefined,
    Failed(String),
}

impl RowStatus {
    pub fn label(&self) -> &str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::NotDefined => "n.d.",
            RowStatus::Failed(_) => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LossRow {
    pub family: CopulaFamily,
    pub tau: f64,
    pub alpha: Option<f64>,
    pub loss_percent: Option<f64>,
    pub status: RowStatus,
    /// Optimum of the full model, when computed.
    pub optimal: Option<DesignMeasure>,
    pub certified: bool,
}

/// Loss `100 (1 - eff(benchmark, ξ*_full))` under the full model, per `(family, τ)` row.
pub fn ignorance_loss_table(
    template: &Problem,
    rows: &[(CopulaFamily, f64)],
    benchmark: &Benchmark,
    config: &OptimizerConfig,
    quad: &QuadratureRule,
    cache: &DesignCache,
) -> Vec<LossRow> {
    rows.par_iter()
        .map(|&(family, tau)| {
            let spec = match alpha_from_tau(family, tau) {
                Ok(s) => s,
                Err(Error::Unattainable { .. }) => {
                    return LossRow {
                        family,
                        tau,
                        alpha: None,
                        loss_percent: None,
                        status: RowStatus::NotDefined,
                        optimal: None,
                        certified: false,
                    }
                }
                Err(e) => return failed_row(family, tau, None, e),
            };
            match loss_row(template, spec, benchmark, config, quad, cache) {
                Ok((loss, opt)) => LossRow {
                    family,
                    tau,
                    alpha: spec.alpha(),
                    loss_percent: Some(loss),
                    status: RowStatus::Ok,
                    certified: opt.report.certified,
                    optimal: Some(opt.design.clone()),
                },
                Err(e) => failed_row(family, tau, spec.alpha(), e),
            }
        })
        .collect()
}

fn failed_row(family: CopulaFamily, tau: f64, alpha: Option<f64>, e: Error) -> LossRow {
    LossRow {
        family,
        tau,
        alpha,
        loss_percent: None,
        status: RowStatus::Failed(e.to_string()),
        optimal: None,
        certified: false,
    }
}

fn loss_row(
    template: &Problem,
    spec: CopulaSpec,
    benchmark: &Benchmark,
    config: &OptimizerConfig,
    quad: &QuadratureRule,
    cache: &DesignCache,
) -> Result<(f64, Arc<OptimizationResult>)> {
    let full = template.with_copula(spec).with_estimate_alpha(true);
    let opt = cache.optimize(&full, config, quad)?;
    let bench = match benchmark {
        Benchmark::Fixed(d) => d.clone(),
        Benchmark::AlphaKnown => cache
            .optimize(&full.with_estimate_alpha(false), config, quad)?
            .design
            .clone(),
    };
    let model = Model::new(&full, quad)?;
    let eff = d_efficiency(&bench, &opt.design, &model)?;
    Ok((loss_percent(eff), opt))
}

#[derive(Debug, Clone, PartialEq)]
pub struct MisspecificationRow {
    pub true_family: CopulaFamily,
    pub assumed_family: CopulaFamily,
    pub tau: f64,
    pub loss_percent: Option<f64>,
    pub status: RowStatus,
}

/// Loss from designing under the assumed copula when another one is true, both
/// at the same τ and both evaluated under the true full model.
pub fn misspecification_table(
    template: &Problem,
    taus: &[f64],
    pairs: &[(CopulaFamily, CopulaFamily)],
    config: &OptimizerConfig,
    quad: &QuadratureRule,
    cache: &DesignCache,
) -> Vec<MisspecificationRow> {
    let cells: Vec<(f64, CopulaFamily, CopulaFamily)> = taus
        .iter()
        .flat_map(|&t| pairs.iter().map(move |&(a, b)| (t, a, b)))
        .collect();
    cells
        .par_iter()
        .map(|&(tau, true_family, assumed_family)| {
            let row = |loss, status| MisspecificationRow {
                true_family,
                assumed_family,
                tau,
                loss_percent: loss,
                status,
            };
            let specs =
                alpha_from_tau(true_family, tau).and_then(|t| alpha_from_tau(assumed_family, tau).map(|a| (t, a)));
            let (t_spec, a_spec) = match specs {
                Ok(s) => s,
                Err(Error::Unattainable { .. }) => return row(None, RowStatus::NotDefined),
                Err(e) => return row(None, RowStatus::Failed(e.to_string())),
            };
            let result = (|| {
                let truth = template.with_copula(t_spec).with_estimate_alpha(true);
                let assumed = template.with_copula(a_spec).with_estimate_alpha(true);
                let xi_t = cache.optimize(&truth, config, quad)?;
                let xi_a = cache.optimize(&assumed, config, quad)?;
                let model = Model::new(&truth, quad)?;
                Ok::<_, Error>(loss_percent(d_efficiency(&xi_a.design, &xi_t.design, &model)?))
            })();
            match result {
                Ok(loss) => row(Some(loss), RowStatus::Ok),
                Err(e) => row(None, RowStatus::Failed(e.to_string())),
            }
        })
        .collect()
}
