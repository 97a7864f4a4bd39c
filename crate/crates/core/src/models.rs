//! Marginal regression models and their copula coupling.
//!
//! Two problem classes are covered. [`GaussianMarginProblem`] has responses
//! `Y_i = η_i(x, β) + ε_i` with standard normal margins joined by a copula;
//! [`BinaryLogisticProblem`] has two logistic margins whose joint success
//! probability is `C_α(π1, π2)`.

use crate::copula::CopulaSpec;
use crate::error::{Error, Result};

/// Floor applied to cell probabilities before they are inverted or logged.
pub const CELL_EPS: f64 = 1e-12;

/// Slack allowed on the Fréchet bounds before a cell triple is rejected.
const FRECHET_SLACK: f64 = 1e-10;

/// Closed design region `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidConfig(format!(
                "design space [{lo}, {hi}] must be a finite interval with lo < hi"
            )))
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub(crate) fn check(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutsideDesignSpace {
                x,
                lo: self.lo,
                hi: self.hi,
            })
        }
    }

    /// `n ≥ 2` equispaced points including both ends.
    pub fn grid(&self, n: usize) -> Vec<f64> {
        assert!(n >= 2, "a grid needs at least two points");
        let step = self.width() / (n - 1) as f64;
        (0..n)
            .map(|i| if i == n - 1 { self.hi } else { self.lo + step * i as f64 })
            .collect()
    }
}

/// Polynomial trend `η(x, β) = Σ_j β_j x^{e_j}` over a list of monomial exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TrendFunction {
    exponents: Vec<u32>,
}

impl TrendFunction {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidConfig("trend needs at least one term".into()));
        }
        let mut sorted = exponents.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != exponents.len() {
            return Err(Error::InvalidConfig(format!(
                "repeated exponent in trend {exponents:?}"
            )));
        }
        Ok(Self { exponents })
    }

    /// `β0 + β1 x + β2 x²`.
    pub fn quadratic() -> Self {
        Self {
            exponents: vec![0, 1, 2],
        }
    }

    /// `β3 x + β4 x³ + β5 x⁴`, the second response of the classical linear example.
    pub fn cubic_quartic() -> Self {
        Self {
            exponents: vec![1, 3, 4],
        }
    }

    /// `β0 + β1 x`, the linear predictor of the logistic margins.
    pub fn straight_line() -> Self {
        Self { exponents: vec![0, 1] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn eval(&self, x: f64, beta: &[f64]) -> Result<f64> {
        if beta.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: beta.len(),
            });
        }
        Ok(self.gradient(x).iter().zip(beta).map(|(g, b)| g * b).sum())
    }

    /// ∂η/∂β, the basis evaluated at `x`.
    pub fn gradient(&self, x: f64) -> Vec<f64> {
        self.exponents.iter().map(|&e| x.powi(e as i32)).collect()
    }
}

/// Localization point `(β̄, ᾱ)`: `k` trend coefficients and `l ∈ {0, 1}` copula parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalParameters {
    pub beta: Vec<f64>,
    pub alpha_part: Vec<f64>,
}

impl LocalParameters {
    pub fn k(&self) -> usize {
        self.beta.len()
    }

    pub fn l(&self) -> usize {
        self.alpha_part.len()
    }

    pub fn dim(&self) -> usize {
        self.k() + self.l()
    }

    /// Flattened `θ = (β, α)`.
    pub fn theta(&self) -> Vec<f64> {
        self.beta.iter().chain(&self.alpha_part).copied().collect()
    }
}

fn alpha_part(copula: &CopulaSpec, estimate_alpha: bool) -> Vec<f64> {
    match copula.alpha() {
        Some(a) if estimate_alpha => vec![a],
        _ => Vec::new(),
    }
}

/// Two Gaussian-margin regressions `Y_i ~ N(η_i(x, β_i), 1)` coupled by a copula.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianMarginProblem {
    pub trend1: TrendFunction,
    pub trend2: TrendFunction,
    pub beta1: Vec<f64>,
    pub beta2: Vec<f64>,
    pub copula: CopulaSpec,
    pub design_space: Interval,
    pub estimate_alpha: bool,
}

impl GaussianMarginProblem {
    /// Trends `(1, x, x²)` and `(x, x³, x⁴)` on `[0, 1]` with all coefficients 1.
    /// Information does not depend on β for linear trends.
    pub fn fedorov(copula: CopulaSpec, estimate_alpha: bool) -> Self {
        Self {
            trend1: TrendFunction::quadratic(),
            trend2: TrendFunction::cubic_quartic(),
            beta1: vec![1.0; 3],
            beta2: vec![1.0; 3],
            copula,
            design_space: Interval { lo: 0.0, hi: 1.0 },
            estimate_alpha,
        }
    }

    pub fn with_copula(&self, copula: CopulaSpec) -> Self {
        Self { copula, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        for (t, b) in [(&self.trend1, &self.beta1), (&self.trend2, &self.beta2)] {
            if t.dim() != b.len() {
                return Err(Error::DimensionMismatch {
                    expected: t.dim(),
                    found: b.len(),
                });
            }
        }
        Ok(())
    }

    /// Whether α enters the parameter vector.
    pub fn fits_alpha(&self) -> bool {
        self.estimate_alpha && self.copula.alpha().is_some()
    }

    pub fn n_params(&self) -> usize {
        self.trend1.dim() + self.trend2.dim() + usize::from(self.fits_alpha())
    }

    pub fn local_parameters(&self) -> LocalParameters {
        LocalParameters {
            beta: self.beta1.iter().chain(&self.beta2).copied().collect(),
            alpha_part: alpha_part(&self.copula, self.estimate_alpha),
        }
    }

    /// `(η1(x), η2(x))`.
    pub fn eval_trend(&self, x: f64) -> Result<(f64, f64)> {
        self.design_space.check(x)?;
        Ok((self.trend1.eval(x, &self.beta1)?, self.trend2.eval(x, &self.beta2)?))
    }
}

/// Joint cell probabilities of two binary responses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellProbabilities {
    pub p11: f64,
    pub p10: f64,
    pub p01: f64,
    pub p00: f64,
}

impl CellProbabilities {
    pub fn as_array(&self) -> [f64; 4] {
        [self.p11, self.p10, self.p01, self.p00]
    }

    pub fn min(&self) -> f64 {
        self.as_array().into_iter().fold(f64::INFINITY, f64::min)
    }
}

/// Two logistic margins `logit π_i = β_i0 + β_i1 x` with `p11 = C_α(π1, π2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryLogisticProblem {
    pub beta1: [f64; 2],
    pub beta2: [f64; 2],
    pub copula: CopulaSpec,
    pub design_space: Interval,
    pub estimate_alpha: bool,
}

impl BinaryLogisticProblem {
    /// β1 = (−1, 1), β2 = (−2, 0.5) on `[0, 10]`.
    pub fn standard(copula: CopulaSpec, estimate_alpha: bool) -> Self {
        Self {
            beta1: [-1.0, 1.0],
            beta2: [-2.0, 0.5],
            copula,
            design_space: Interval { lo: 0.0, hi: 10.0 },
            estimate_alpha,
        }
    }

    pub fn with_copula(&self, copula: CopulaSpec) -> Self {
        Self { copula, ..self.clone() }
    }

    pub fn fits_alpha(&self) -> bool {
        self.estimate_alpha && self.copula.alpha().is_some()
    }

    pub fn n_params(&self) -> usize {
        4 + usize::from(self.fits_alpha())
    }

    pub fn local_parameters(&self) -> LocalParameters {
        LocalParameters {
            beta: vec![self.beta1[0], self.beta1[1], self.beta2[0], self.beta2[1]],
            alpha_part: alpha_part(&self.copula, self.estimate_alpha),
        }
    }

    /// π_i(x) for `margin` 1 or 2.
    pub fn marginal_prob(&self, x: f64, margin: usize) -> f64 {
        let b = match margin {
            1 => self.beta1,
            2 => self.beta2,
            _ => panic!("margin index must be 1 or 2, got {margin}"),
        };
        logistic(b[0] + b[1] * x)
    }

    /// The four cells at `x`, floored at [`CELL_EPS`] and renormalized.
    pub fn cell_probs(&self, x: f64) -> Result<CellProbabilities> {
        let (raw, _, _) = self.raw_cells(x)?;
        let mut c = raw.as_array().map(|p| p.clamp(CELL_EPS, 1.0 - CELL_EPS));
        let total: f64 = c.iter().sum();
        c.iter_mut().for_each(|p| *p /= total);
        Ok(CellProbabilities {
            p11: c[0],
            p10: c[1],
            p01: c[2],
            p00: c[3],
        })
    }

    /// Unclamped cells together with (π1, π2), after the Fréchet-bound check.
    pub(crate) fn raw_cells(&self, x: f64) -> Result<(CellProbabilities, f64, f64)> {
        self.design_space.check(x)?;
        let p1 = self.marginal_prob(x, 1);
        let p2 = self.marginal_prob(x, 2);
        let p11 = self.copula.cdf(p1, p2)?;
        let lower = (p1 + p2 - 1.0).max(0.0);
        let upper = p1.min(p2);
        if !(p11 >= lower - FRECHET_SLACK && p11 <= upper + FRECHET_SLACK) {
            return Err(Error::Consistency {
                x,
                detail: format!("p11 = {p11} outside Fréchet bounds [{lower}, {upper}]"),
            });
        }
        let p10 = p1 - p11;
        let p01 = p2 - p11;
        // 1 - p1 - p2 + p11 loses digits when both margins are near 1.
        let p00 = (1.0 - p1) - p01;
        Ok((CellProbabilities { p11, p10, p01, p00 }, p1, p2))
    }
}

pub fn logistic(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

/// Either supported problem class.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    Continuous(GaussianMarginProblem),
    Binary(BinaryLogisticProblem),
}

impl Problem {
    pub fn copula(&self) -> &CopulaSpec {
        match self {
            Problem::Continuous(p) => &p.copula,
            Problem::Binary(p) => &p.copula,
        }
    }

    pub fn design_space(&self) -> Interval {
        match self {
            Problem::Continuous(p) => p.design_space,
            Problem::Binary(p) => p.design_space,
        }
    }

    pub fn n_params(&self) -> usize {
        match self {
            Problem::Continuous(p) => p.n_params(),
            Problem::Binary(p) => p.n_params(),
        }
    }

    pub fn estimate_alpha(&self) -> bool {
        match self {
            Problem::Continuous(p) => p.estimate_alpha,
            Problem::Binary(p) => p.estimate_alpha,
        }
    }

    pub fn local_parameters(&self) -> LocalParameters {
        match self {
            Problem::Continuous(p) => p.local_parameters(),
            Problem::Binary(p) => p.local_parameters(),
        }
    }

    pub fn with_copula(&self, copula: CopulaSpec) -> Self {
        match self {
            Problem::Continuous(p) => Problem::Continuous(p.with_copula(copula)),
            Problem::Binary(p) => Problem::Binary(p.with_copula(copula)),
        }
    }

    pub fn with_estimate_alpha(&self, estimate_alpha: bool) -> Self {
        let mut out = self.clone();
        match &mut out {
            Problem::Continuous(p) => p.estimate_alpha = estimate_alpha,
            Problem::Binary(p) => p.estimate_alpha = estimate_alpha,
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trend_values() {
        let t1 = TrendFunction::quadratic();
        let t2 = TrendFunction::cubic_quartic();
        assert_eq!(t1.eval(0.0, &[1.0, 1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(t2.eval(1.0, &[1.0, 1.0, 1.0]).unwrap(), 3.0);
        assert_eq!(t1.eval(0.5, &[1.0, 2.0, 4.0]).unwrap(), 3.0);
        assert!(matches!(
            t1.eval(0.5, &[1.0]),
            Err(Error::DimensionMismatch { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn trend_gradients() {
        assert_eq!(TrendFunction::quadratic().gradient(1.0), vec![1.0; 3]);
        assert_eq!(TrendFunction::cubic_quartic().gradient(0.0), vec![0.0; 3]);
        let g = TrendFunction::quadratic().gradient(0.38);
        assert_eq!(g[0], 1.0);
        assert_eq!(g[1], 0.38);
        assert!((g[2] - 0.1444).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_trends_and_intervals() {
        assert!(TrendFunction::new(vec![]).is_err());
        assert!(TrendFunction::new(vec![1, 1]).is_err());
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn grid_hits_both_ends() {
        let g = Interval::new(0.0, 10.0).unwrap().grid(1001);
        assert_eq!(g.len(), 1001);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[1000], 10.0);
        assert!((g[280] - 2.8).abs() < 1e-14);
    }

    #[test]
    fn marginal_probabilities() {
        let p = BinaryLogisticProblem::standard(CopulaSpec::product(), false);
        assert_eq!(p.marginal_prob(1.0, 1), 0.5);
        assert_eq!(p.marginal_prob(4.0, 2), 0.5);
        assert!((p.marginal_prob(0.0, 1) - 1.0 / (1.0 + 1f64.exp())).abs() < 1e-15);
        assert!((p.marginal_prob(0.0, 1) - 0.26894).abs() < 1e-5);
    }

    #[test]
    fn product_cells_factorize() {
        let p = BinaryLogisticProblem::standard(CopulaSpec::product(), false);
        for x in [0.0, 2.8, 6.79, 10.0] {
            let c = p.cell_probs(x).unwrap();
            let (p1, p2) = (p.marginal_prob(x, 1), p.marginal_prob(x, 2));
            assert!((c.p11 - p1 * p2).abs() < 1e-15);
            assert!((c.as_array().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn clayton_cells_match_cdf() {
        let cop = CopulaSpec::clayton(8.89).unwrap();
        let p = BinaryLogisticProblem::standard(cop, true);
        let c = p.cell_probs(2.80).unwrap();
        let (p1, p2) = (p.marginal_prob(2.8, 1), p.marginal_prob(2.8, 2));
        let direct = (p1.powf(-8.89) + p2.powf(-8.89) - 1.0).powf(-1.0 / 8.89);
        assert!((c.p11 - direct).abs() < 1e-14);
        assert!((c.p10 - (p1 - direct)).abs() < 1e-14);
        assert!((c.p01 - (p2 - direct)).abs() < 1e-14);
    }

    #[test]
    fn cells_out_of_design_space_rejected() {
        let p = BinaryLogisticProblem::standard(CopulaSpec::product(), false);
        assert!(matches!(p.cell_probs(10.5), Err(Error::OutsideDesignSpace { .. })));
    }

    #[test]
    fn parameter_counts() {
        let g = CopulaSpec::gaussian(0.3).unwrap();
        assert_eq!(GaussianMarginProblem::fedorov(g, true).n_params(), 7);
        assert_eq!(GaussianMarginProblem::fedorov(g, false).n_params(), 6);
        let prod = GaussianMarginProblem::fedorov(CopulaSpec::product(), true);
        assert_eq!(prod.n_params(), 6);
        let b = BinaryLogisticProblem::standard(CopulaSpec::frank(5.0).unwrap(), true);
        assert_eq!(b.n_params(), 5);
        assert_eq!(b.local_parameters().theta(), vec![-1.0, 1.0, -2.0, 0.5, 5.0]);
    }
}
