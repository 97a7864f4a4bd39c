//! Design measures, the sensitivity function and equivalence-theorem checks.

use crate::error::{Error, Result};
use crate::fim::{design_fim, log_det, InfoMatrix, InformationModel};
use crate::models::Interval;
use nalgebra::DMatrix;
use rayon::prelude::*;

/// Tolerance on `Σ w_i = 1`.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;
pub const DEFAULT_CERT_TOL: f64 = 1e-3;
pub const DEFAULT_CERT_GRID: usize = 1001;
pub const DEFAULT_PRUNE_TOL: f64 = 1e-4;
/// Merge distance as a fraction of the design-space width.
pub const DEFAULT_MERGE_FRACTION: f64 = 1e-3;

/// Approximate design: support points with positive weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignMeasure {
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl DesignMeasure {
    pub fn new(points: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDesign);
        }
        if points.len() != weights.len() {
            return Err(Error::InvalidDesign(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        if let Some(x) = points.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidDesign(format!("non-finite support point {x}")));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::InvalidDesign(format!("weight {w} is not positive")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidDesign(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { points, weights })
    }

    /// Rescales positive weights to sum to one.
    pub fn normalized(points: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total > 0.0 && total.is_finite()) {
            return Err(Error::InvalidDesign(format!("weights sum to {total}")));
        }
        Self::new(points, weights.iter().map(|w| w / total).collect())
    }

    pub fn uniform(points: Vec<f64>) -> Result<Self> {
        let w = 1.0 / points.len().max(1) as f64;
        let n = points.len();
        Self::normalized(points, vec![w; n])
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn check_within(&self, space: &Interval) -> Result<()> {
        for &x in &self.points {
            space.check(x)?;
        }
        Ok(())
    }

    /// [`canonicalize`] with the default tolerances for `space`.
    pub fn canonical(&self, space: &Interval) -> Result<Self> {
        canonicalize(self, DEFAULT_MERGE_FRACTION * space.width(), DEFAULT_PRUNE_TOL)
    }
}

/// Sorts the support, merges runs of points closer than `merge_tol_x` at their
/// weighted mean, drops weights below `prune_tol_w` and renormalizes.
pub fn canonicalize(design: &DesignMeasure, merge_tol_x: f64, prune_tol_w: f64) -> Result<DesignMeasure> {
    let mut pairs: Vec<(f64, f64)> = design
        .points
        .iter()
        .copied()
        .zip(design.weights.iter().copied())
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, f64, f64)> = Vec::new(); // (Σ w x, Σ w, last x)
    for (x, w) in pairs {
        match merged.last_mut() {
            Some(g) if x - g.2 <= merge_tol_x => {
                g.0 += w * x;
                g.1 += w;
                g.2 = x;
            }
            _ => merged.push((w * x, w, x)),
        }
    }
    let (points, weights): (Vec<f64>, Vec<f64>) = merged
        .into_iter()
        .filter(|g| g.1 >= prune_tol_w)
        .map(|g| (g.0 / g.1, g.1))
        .unzip();
    if points.is_empty() {
        return Err(Error::EmptyDesign);
    }
    DesignMeasure::normalized(points, weights)
}

/// `x ↦ tr(M(ξ)⁻¹ m(x))` for a fixed design.
pub struct Sensitivity<'a, M: InformationModel + ?Sized> {
    model: &'a M,
    inverse: DMatrix<f64>,
}

impl<'a, M: InformationModel + ?Sized> Sensitivity<'a, M> {
    pub fn new(design: &DesignMeasure, model: &'a M) -> Result<Self> {
        let info = design_fim(design, model)?;
        Self::from_information(&info, model)
    }

    pub fn from_information(info: &InfoMatrix, model: &'a M) -> Result<Self> {
        Ok(Self {
            model,
            inverse: info.inverse()?,
        })
    }

    pub fn at(&self, x: f64) -> Result<f64> {
        Ok(trace_product(&self.inverse, &self.model.elementary(x)?))
    }
}

/// `tr(A B)` for symmetric `B`.
pub(crate) fn trace_product(a: &DMatrix<f64>, b: &InfoMatrix) -> f64 {
    a.component_mul(b.matrix()).sum()
}

/// `d(x, ξ) = tr(M(ξ)⁻¹ m(x))`, by a linear solve.
pub fn sensitivity<M: InformationModel + ?Sized>(x: f64, design: &DesignMeasure, model: &M) -> Result<f64> {
    let info = design_fim(design, model)?;
    let sol = info.solve(model.elementary(x)?.matrix())?;
    Ok(sol.trace())
}

/// Outcome of checking `max_x d(x, ξ) ≤ p`.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificationReport {
    pub max_sensitivity: f64,
    pub argmax_x: f64,
    pub bound: usize,
    pub tolerance: f64,
    pub certified: bool,
    /// `(x, d(x, ξ))` over the grid and the support, sorted by x.
    pub profile: Vec<(f64, f64)>,
    /// Why certification was impossible, if it was.
    pub failure: Option<String>,
}

/// Evaluates the sensitivity on a uniform grid plus the support of `design`.
pub fn certify<M: InformationModel + ?Sized>(
    design: &DesignMeasure,
    model: &M,
    grid_size: usize,
    tol_cert: f64,
) -> Result<CertificationReport> {
    let bound = model.n_params();
    let not_certified = |reason: String| CertificationReport {
        max_sensitivity: f64::INFINITY,
        argmax_x: f64::NAN,
        bound,
        tolerance: tol_cert,
        certified: false,
        profile: Vec::new(),
        failure: Some(reason),
    };
    let sens = match Sensitivity::new(design, model) {
        Ok(s) => s,
        Err(Error::SingularDesign) => return Ok(not_certified("singular information matrix".into())),
        Err(e) => return Err(e),
    };
    let mut xs = model.design_space().grid(grid_size.max(2));
    xs.extend_from_slice(design.points());
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let profile = xs
        .par_iter()
        .map(|&x| sens.at(x).map(|d| (x, d)))
        .collect::<Result<Vec<_>>>()?;
    let (argmax_x, max_sensitivity) =
        profile.iter().copied().fold(
            (f64::NAN, f64::NEG_INFINITY),
            |best, c| if c.1 > best.1 { c } else { best },
        );
    Ok(CertificationReport {
        max_sensitivity,
        argmax_x,
        bound,
        tolerance: tol_cert,
        certified: max_sensitivity <= bound as f64 * (1.0 + tol_cert),
        profile,
        failure: None,
    })
}

/// `(|M(ξ)| / |M(ξ′)|)^{1/p}`. A singular `ξ` has efficiency 0; a singular `ξ′` is an error.
pub fn d_efficiency<M: InformationModel + ?Sized>(
    xi: &DesignMeasure,
    xi_prime: &DesignMeasure,
    model: &M,
) -> Result<f64> {
    let den = log_det(&design_fim(xi_prime, model)?);
    if den == f64::NEG_INFINITY {
        return Err(Error::SingularDesign);
    }
    let num = log_det(&design_fim(xi, model)?);
    Ok(efficiency_from_log_dets(num, den, model.n_params()))
}

pub fn efficiency_from_log_dets(num: f64, den: f64, p: usize) -> f64 {
    if num == f64::NEG_INFINITY {
        0.0
    } else {
        ((num - den) / p as f64).exp()
    }
}

/// Percent of information lost, `100 (1 - eff)`.
pub fn loss_percent(efficiency: f64) -> f64 {
    100.0 * (1.0 - efficiency)
}

/// Gâteaux derivative of `log det` at `M1` in direction `M2`: `tr(M2 M1⁻¹)`.
pub fn gateaux_d(m1: &InfoMatrix, m2: &InfoMatrix) -> Result<f64> {
    check_dims(m1, m2)?;
    Ok(m1.solve(m2.matrix())?.trace())
}

/// Fréchet derivative of `log det` at `M1` towards `M2`: `tr(M2 M1⁻¹) - dim`.
pub fn frechet_d(m1: &InfoMatrix, m2: &InfoMatrix) -> Result<f64> {
    Ok(gateaux_d(m1, m2)? - m1.dim() as f64)
}

fn check_dims(m1: &InfoMatrix, m2: &InfoMatrix) -> Result<()> {
    if m1.dim() == m2.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: m1.dim(),
            found: m2.dim(),
        })
    }
}
