//! Fedorov–Wynn search for locally D-optimal approximate designs.
//!
//! The search runs over a fixed candidate grid whose elementary matrices are
//! computed once. Each iteration takes the D-optimal vertex step towards the
//! grid maximizer of the sensitivity, followed by one multiplicative
//! reweighting sweep over the whole grid. Once the grid design is within
//! `eps_bound` of the equivalence bound, its support is polished off the grid.
//! The polish seeds one point per local maximum of the sensitivity, then
//! alternates coordinate moves of the points (each to the `log det` maximizer
//! within its Voronoi cell) with weight re-optimization. The polished design
//! replaces the grid design only if `log det` improves.

mod tables;

pub use tables::{
    ignorance_loss_table, misspecification_table, Benchmark, DesignCache, LossRow, MisspecificationRow, RowStatus,
};

use crate::design::{
    canonicalize, certify, trace_product, CertificationReport, DesignMeasure, DEFAULT_CERT_TOL, DEFAULT_MERGE_FRACTION,
    DEFAULT_PRUNE_TOL,
};
use crate::error::{Error, Result};
use crate::fim::{design_fim, log_det, InfoMatrix, InformationModel};
use nalgebra::DMatrix;
use rayon::prelude::*;

/// Backtracking halvings of the vertex step before it is skipped.
const MAX_HALVINGS: usize = 40;
/// Grid sensitivities at or above this fraction of `p` seed the polish.
const POLISH_SEED_FRACTION: f64 = 0.98;
const GOLDEN_ITERS: usize = 60;

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    /// Candidate points, equispaced over the design space including both ends.
    pub grid_size: usize,
    pub max_iters: usize,
    /// Stop once `max d ≤ p (1 + eps_bound)` on the grid.
    pub eps_bound: f64,
    /// Multiplicative sweeps per polish round.
    pub refine_iters: usize,
    /// Upper bound on point-move and reweighting rounds in the polish.
    pub polish_rounds: usize,
    /// Merge distance as a fraction of the design-space width.
    pub merge_fraction: f64,
    pub prune_tol: f64,
    pub cert_grid: usize,
    pub cert_tol: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            grid_size: 1001,
            max_iters: 20_000,
            eps_bound: 1e-3,
            refine_iters: 2000,
            polish_rounds: 1000,
            merge_fraction: DEFAULT_MERGE_FRACTION,
            prune_tol: DEFAULT_PRUNE_TOL,
            cert_grid: 2001,
            cert_tol: DEFAULT_CERT_TOL,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self, n_params: usize) -> Result<()> {
        if self.grid_size < n_params + 1 {
            return Err(Error::InvalidConfig(format!(
                "grid_size {} is below the {} points needed for {} parameters",
                self.grid_size,
                n_params + 1,
                n_params
            )));
        }
        let positive = [
            ("eps_bound", self.eps_bound),
            ("merge_fraction", self.merge_fraction),
            ("prune_tol", self.prune_tol),
            ("cert_tol", self.cert_tol),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!("{name} must be positive, got {v}")));
            }
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be positive".into()));
        }
        if self.cert_grid < 2 {
            return Err(Error::InvalidConfig("cert_grid must be at least 2".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationRecord {
    pub iteration: usize,
    pub log_det: f64,
    pub max_sensitivity: f64,
    pub support_size: usize,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OptimizationTrace {
    pub records: Vec<IterationRecord>,
    /// Whether the grid phase met `eps_bound` before `max_iters`.
    pub converged: bool,
}

impl OptimizationTrace {
    /// Criterion never drops by more than `slack` from one record to the next.
    pub fn is_monotone(&self, slack: f64) -> bool {
        self.records.windows(2).all(|w| w[1].log_det >= w[0].log_det - slack)
    }
}

#[derive(Debug, Clone)]
pub struct OptimizationResult {
    pub design: DesignMeasure,
    pub trace: OptimizationTrace,
    pub report: CertificationReport,
    pub log_det: f64,
}

/// Dense weights over a cached candidate grid.
struct GridState<'a> {
    mats: &'a [InfoMatrix],
    weights: Vec<f64>,
    info: InfoMatrix,
}

impl<'a> GridState<'a> {
    fn new(mats: &'a [InfoMatrix], weights: Vec<f64>) -> Self {
        let info = aggregate(mats, &weights);
        Self { mats, weights, info }
    }

    fn sensitivities(&self) -> Result<Vec<f64>> {
        let inv = self.info.inverse()?;
        Ok(self.mats.par_iter().map(|m| trace_product(&inv, m)).collect())
    }

    fn support_size(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }
}

fn aggregate(mats: &[InfoMatrix], weights: &[f64]) -> InfoMatrix {
    let mut info = InfoMatrix::zeros(mats[0].dim());
    for (m, &w) in mats.iter().zip(weights) {
        if w > 0.0 {
            info.add_scaled(w, m);
        }
    }
    info
}

fn argmax(values: &[f64]) -> (usize, f64) {
    values
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, c| if c.1 > best.1 { c } else { best })
}

/// Elementary matrices on `grid`, evaluated in parallel.
pub fn grid_information<M: InformationModel + ?Sized>(model: &M, grid: &[f64]) -> Result<Vec<InfoMatrix>> {
    grid.par_iter().map(|&x| model.elementary(x)).collect()
}

/// Equal weights on `p + 1` equispaced grid points, shifted until nonsingular.
fn initial_weights(mats: &[InfoMatrix], p: usize) -> Result<Vec<f64>> {
    let n = mats.len();
    let k = (p + 1).min(n);
    let spacing = (n - 1) as f64 / (k - 1).max(1) as f64;
    let max_shift = (spacing.floor() as usize).max(1);
    for shift in 0..max_shift {
        for stretch in [0usize, 1] {
            let mut w = vec![0.0; n];
            for i in 0..k {
                let base = (i as f64 * spacing).round() as usize;
                let idx = if stretch == 0 {
                    (base + shift).min(n - 1)
                } else {
                    base.saturating_sub(shift)
                };
                w[idx] += 1.0 / k as f64;
            }
            if log_det(&aggregate(mats, &w)) > f64::NEG_INFINITY {
                return Ok(w);
            }
        }
    }
    // Fall back to the uniform design over the whole grid.
    let w = vec![1.0 / n as f64; n];
    if log_det(&aggregate(mats, &w)) > f64::NEG_INFINITY {
        Ok(w)
    } else {
        Err(Error::Initialization)
    }
}

/// Locally D-optimal design for `model`.
pub fn fedorov_wynn<M: InformationModel + ?Sized>(model: &M, config: &OptimizerConfig) -> Result<OptimizationResult> {
    let p = model.n_params();
    config.validate(p)?;
    let space = model.design_space();
    let grid = space.grid(config.grid_size);
    let mats = grid_information(model, &grid)?;
    let pf = p as f64;

    let mut state = GridState::new(&mats, initial_weights(&mats, p)?);
    let mut trace = OptimizationTrace::default();
    let mut ld = log_det(&state.info);
    let mut sens = state.sensitivities()?;
    for iteration in 0..config.max_iters {
        let (j, dmax) = argmax(&sens);
        trace.records.push(IterationRecord {
            iteration,
            log_det: ld,
            max_sensitivity: dmax,
            support_size: state.support_size(),
        });
        if dmax <= pf * (1.0 + config.eps_bound) {
            trace.converged = true;
            break;
        }
        // Vertex step with the D-optimal length, halved while it fails to ascend
        // (exact only for rank-one elementary matrices).
        let mut gamma = (dmax - pf) / (pf * (dmax - 1.0));
        for _ in 0..MAX_HALVINGS {
            let mut w: Vec<f64> = state.weights.iter().map(|w| w * (1.0 - gamma)).collect();
            w[j] += gamma;
            let cand = aggregate(&mats, &w);
            let cand_ld = log_det(&cand);
            if cand_ld > ld {
                state.weights = w;
                state.info = cand;
                ld = cand_ld;
                break;
            }
            gamma *= 0.5;
        }
        // Multiplicative sweep w_i ← w_i d_i / p.
        let sens_now = state.sensitivities()?;
        let w: Vec<f64> = state.weights.iter().zip(&sens_now).map(|(w, d)| w * d / pf).collect();
        let total: f64 = w.iter().sum();
        let w: Vec<f64> = w.iter().map(|x| x / total).collect();
        let cand = aggregate(&mats, &w);
        let cand_ld = log_det(&cand);
        if cand_ld >= ld {
            state.weights = w;
            state.info = cand;
            ld = cand_ld;
            sens = state.sensitivities()?;
        } else {
            sens = sens_now;
        }
    }

    let grid_design = grid_design(&grid, &state.weights, config, &space)?;
    let mut design = grid_design.clone();
    let mut best = log_det(&design_fim(&design, model)?);
    let polished = polish(model, &grid, &mats, &sens, &design, config)?;
    if let Some((d, l)) = polished {
        if l > best {
            design = d;
            best = l;
        }
    }
    let last = trace.records.last().map_or(0, |r| r.iteration);
    let report = certify(&design, model, config.cert_grid, config.cert_tol)?;
    trace.records.push(IterationRecord {
        iteration: last + 1,
        log_det: best.max(ld),
        max_sensitivity: report.max_sensitivity,
        support_size: design.len(),
    });
    let mut report = report;
    if !trace.converged {
        report.certified = false;
        report.failure = Some(format!("not converged after {} iterations", config.max_iters));
    }
    Ok(OptimizationResult {
        design,
        trace,
        report,
        log_det: best,
    })
}

fn grid_design(
    grid: &[f64],
    weights: &[f64],
    config: &OptimizerConfig,
    space: &crate::models::Interval,
) -> Result<DesignMeasure> {
    let (pts, ws): (Vec<f64>, Vec<f64>) = grid
        .iter()
        .zip(weights)
        .filter(|(_, &w)| w > 0.0)
        .map(|(&x, &w)| (x, w))
        .unzip();
    let d = DesignMeasure::normalized(pts, ws)?;
    canonicalize(&d, config.merge_fraction * space.width(), config.prune_tol)
}

/// Moves the support off the grid and re-optimizes the weights. Returns the
/// polished design and its criterion if it is nonsingular.
fn polish<M: InformationModel + ?Sized>(
    model: &M,
    grid: &[f64],
    grid_mats: &[InfoMatrix],
    grid_sens: &[f64],
    start: &DesignMeasure,
    config: &OptimizerConfig,
) -> Result<Option<(DesignMeasure, f64)>> {
    let p = model.n_params() as f64;
    let space = model.design_space();
    let step = grid[1] - grid[0];
    // Seeds: grid-local maxima of d that come close to the bound.
    let n = grid.len();
    let mut seeds: Vec<f64> = (0..n)
        .filter(|&i| {
            let left = i == 0 || grid_sens[i] >= grid_sens[i - 1];
            let right = i == n - 1 || grid_sens[i] >= grid_sens[i + 1];
            left && right && grid_sens[i] >= POLISH_SEED_FRACTION * p
        })
        .map(|i| grid[i])
        .collect();
    if seeds.is_empty() {
        seeds = start.points().to_vec();
    }
    // Seed weights from the grid design mass nearest to each seed.
    let mut ws = vec![0.0; seeds.len()];
    for (&x, &w) in start.points().iter().zip(start.weights()) {
        let k = nearest(&seeds, x);
        ws[k] += w;
    }
    let floor = 1.0 / (10.0 * seeds.len() as f64);
    for w in ws.iter_mut() {
        *w = w.max(floor);
    }
    let mut design = match DesignMeasure::normalized(seeds, ws) {
        Ok(d) => d,
        Err(_) => return Ok(None),
    };
    let mut ld = log_det(&design_fim(&design, model)?);
    if ld == f64::NEG_INFINITY {
        return Ok(None);
    }
    design = refine_weights(&design, model, config.refine_iters)?;
    ld = ld.max(log_det(&design_fim(&design, model)?));
    for _ in 0..config.polish_rounds {
        let cand = move_support(model, grid, grid_mats, &design, step)?;
        let cand = canonicalize(&cand, config.merge_fraction * space.width(), config.prune_tol)?;
        let cand = refine_weights(&cand, model, config.refine_iters)?;
        let cand_ld = log_det(&design_fim(&cand, model)?);
        if cand_ld <= ld {
            break;
        }
        let gain = cand_ld - ld;
        design = cand;
        ld = cand_ld;
        if gain < 1e-13 {
            break;
        }
    }
    Ok(Some((design, ld)))
}

/// One Gauss–Seidel sweep over the support: each point moves to the maximizer of
/// `log det` over its Voronoi cell with all weights held fixed. The cell is
/// scanned on the grid first, then refined within one grid step.
fn move_support<M: InformationModel + ?Sized>(
    model: &M,
    grid: &[f64],
    grid_mats: &[InfoMatrix],
    design: &DesignMeasure,
    step: f64,
) -> Result<DesignMeasure> {
    let space = model.design_space();
    let mut pts = design.points().to_vec();
    let ws = design.weights();
    let mut info = design_fim(design, model)?;
    for k in 0..pts.len() {
        let x = pts[k];
        let w = ws[k];
        let rest = plus(&info, -w, &model.elementary(x)?);
        let f = |m: &InfoMatrix| log_det(&plus(&rest, w, m));
        let cell_lo = if k == 0 { space.lo() } else { 0.5 * (pts[k - 1] + x) };
        let cell_hi = if k + 1 == pts.len() {
            space.hi()
        } else {
            0.5 * (x + pts[k + 1])
        };
        let mut best = (x, log_det(&info));
        for (g, m) in grid.iter().zip(grid_mats) {
            if *g >= cell_lo && *g <= cell_hi {
                let v = f(m);
                if v > best.1 {
                    best = (*g, v);
                }
            }
        }
        let fx = |y: f64| model.elementary(y).map(|m| f(&m));
        let lo = (best.0 - step).max(cell_lo);
        let hi = (best.0 + step).min(cell_hi);
        let y = golden_max(&fx, lo, hi, best.0)?;
        if fx(y)? > log_det(&info) {
            pts[k] = y;
            info = plus(&rest, w, &model.elementary(y)?);
        }
    }
    DesignMeasure::new(pts, ws.to_vec())
}

fn plus(a: &InfoMatrix, w: f64, b: &InfoMatrix) -> InfoMatrix {
    let mut out = a.clone();
    out.add_scaled(w, b);
    out
}

fn nearest(points: &[f64], x: f64) -> usize {
    points
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - x).abs().total_cmp(&(b.1 - x).abs()))
        .map_or(0, |(i, _)| i)
}

/// Golden-section maximization of `f` on `[lo, hi]`; keeps `start` if nothing beats it.
fn golden_max(f: &impl Fn(f64) -> Result<f64>, lo: f64, hi: f64, start: f64) -> Result<f64> {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..GOLDEN_ITERS {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d)?;
        }
    }
    // The maximizer may sit on an end of the bracket (e.g. the design-space boundary).
    let mut best = (start, f(start)?);
    for x in [lo, hi, 0.5 * (a + b)] {
        let v = f(x)?;
        if v > best.1 {
            best = (x, v);
        }
    }
    Ok(best.0)
}

/// Multiplicative weight iteration `w_i ← w_i d(x_i, ξ) / p` on a fixed support.
/// Stops early once every support sensitivity is within 1e-12 of `p`, or if a
/// step would lower the criterion.
pub fn refine_weights<M: InformationModel + ?Sized>(
    design: &DesignMeasure,
    model: &M,
    iters: usize,
) -> Result<DesignMeasure> {
    let p = model.n_params() as f64;
    let mats: Vec<InfoMatrix> = design
        .points()
        .iter()
        .map(|&x| model.elementary(x))
        .collect::<Result<_>>()?;
    let mut w = design.weights().to_vec();
    let mut info = aggregate(&mats, &w);
    let mut ld = log_det(&info);
    if ld == f64::NEG_INFINITY {
        return Ok(design.clone());
    }
    for _ in 0..iters {
        let inv: DMatrix<f64> = info.inverse()?;
        let d: Vec<f64> = mats.iter().map(|m| trace_product(&inv, m)).collect();
        if d.iter().all(|di| (di - p).abs() <= 1e-12 * p) {
            break;
        }
        let nw: Vec<f64> = w.iter().zip(&d).map(|(w, d)| w * d / p).collect();
        let total: f64 = nw.iter().sum();
        let nw: Vec<f64> = nw.iter().map(|x| x / total).collect();
        let cand = aggregate(&mats, &nw);
        let cand_ld = log_det(&cand);
        if cand_ld < ld - 1e-12 {
            break;
        }
        w = nw;
        info = cand;
        ld = cand_ld;
    }
    let (pts, ws): (Vec<f64>, Vec<f64>) = design
        .points()
        .iter()
        .zip(&w)
        .filter(|(_, &w)| w > 0.0)
        .map(|(&x, &w)| (x, w))
        .unzip();
    DesignMeasure::normalized(pts, ws)
}
