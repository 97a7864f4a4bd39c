//! Information for two unit-variance Gaussian-margin regressions joined by a copula.
//!
//! With `z_i = y_i - η_i` and `u_i = Φ(z_i)` the score of one observation is
//! `(h1 g1, h2 g2, s_α)` where `h_i = z_i - φ(z_i) ∂_{u_i} ln c`,
//! `s_α = ∂_α ln c` and `g_i` is the trend gradient. The expectations of the
//! score products depend on the copula only, so they are integrated once and
//! every `m(x)` is assembled from them and `g_i(x)`.
//!
//! The expectation over the copula is taken after the Rosenblatt substitution
//! `u2 = h⁻¹(v | u1)`, which makes the integration measure uniform on (0,1)².

use super::{InfoMatrix, InformationModel, QuadratureRule};
use crate::copula::{CopulaFamily, CopulaSpec};
use crate::error::{Error, Result};
use crate::models::{GaussianMarginProblem, Interval};
use crate::normal;
use nalgebra::DMatrix;

/// `E[h hᵀ]`, `E[h s_α]` and `E[s_α²]` for one copula.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMoments {
    pub hh: [[f64; 2]; 2],
    /// Present only when α is estimated.
    pub h_alpha: Option<[f64; 2]>,
    pub alpha_alpha: Option<f64>,
}

impl ScoreMoments {
    pub fn compute(copula: &CopulaSpec, with_alpha: bool, quad: &QuadratureRule) -> Result<Self> {
        let with_alpha = with_alpha && copula.alpha().is_some();
        if copula.family() == CopulaFamily::Product {
            return Ok(Self {
                hh: [[1.0, 0.0], [0.0, 1.0]],
                h_alpha: None,
                alpha_alpha: None,
            });
        }
        let mut acc = [0.0; 6];
        for (&u1, &w1) in quad.nodes().iter().zip(quad.weights()) {
            let z1 = normal::quantile(u1);
            let phi1 = normal::pdf(z1);
            for (&v, &w2) in quad.nodes().iter().zip(quad.weights()) {
                let u2 = copula.conditional_quantile(v, u1)?;
                let z2 = normal::quantile(u2);
                let g = copula.grad_log_pdf(u1, u2)?;
                let h1 = z1 - phi1 * g[0];
                let h2 = z2 - normal::pdf(z2) * g[1];
                let sa = if with_alpha {
                    copula.dlog_pdf_dalpha(u1, u2)?
                } else {
                    0.0
                };
                let terms = [h1 * h1, h1 * h2, h2 * h2, h1 * sa, h2 * sa, sa * sa];
                if terms.iter().any(|t| !t.is_finite()) {
                    return Err(Error::Quadrature { u1, u2 });
                }
                let w = w1 * w2;
                for (a, t) in acc.iter_mut().zip(terms) {
                    *a += w * t;
                }
            }
        }
        Ok(Self {
            hh: [[acc[0], acc[1]], [acc[1], acc[2]]],
            h_alpha: with_alpha.then_some([acc[3], acc[4]]),
            alpha_alpha: with_alpha.then_some(acc[5]),
        })
    }

    fn n_alpha(&self) -> usize {
        usize::from(self.h_alpha.is_some())
    }
}

/// A Gaussian-margin problem with its score moments cached.
#[derive(Debug, Clone)]
pub struct ContinuousModel {
    problem: GaussianMarginProblem,
    moments: ScoreMoments,
}

impl ContinuousModel {
    pub fn new(problem: GaussianMarginProblem, quad: &QuadratureRule) -> Result<Self> {
        problem.validate()?;
        let moments = ScoreMoments::compute(&problem.copula, problem.estimate_alpha, quad)?;
        Ok(Self { problem, moments })
    }

    pub fn problem(&self) -> &GaussianMarginProblem {
        &self.problem
    }

    pub fn moments(&self) -> &ScoreMoments {
        &self.moments
    }
}

impl InformationModel for ContinuousModel {
    fn n_params(&self) -> usize {
        self.problem.trend1.dim() + self.problem.trend2.dim() + self.moments.n_alpha()
    }

    fn design_space(&self) -> Interval {
        self.problem.design_space
    }

    fn elementary(&self, x: f64) -> Result<InfoMatrix> {
        self.problem.design_space.check(x)?;
        let g1 = self.problem.trend1.gradient(x);
        let g2 = self.problem.trend2.gradient(x);
        let k1 = g1.len();
        let n = self.n_params();
        // Row i of the 2 × k Jacobian of (η1, η2), padded into θ coordinates.
        let mut jac = [vec![0.0; n], vec![0.0; n]];
        jac[0][..k1].copy_from_slice(&g1);
        jac[1][k1..k1 + g2.len()].copy_from_slice(&g2);
        let mo = &self.moments;
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = 0.0;
                for (r, jr) in jac.iter().enumerate() {
                    for (c, jc) in jac.iter().enumerate() {
                        s += jr[i] * mo.hh[r][c] * jc[j];
                    }
                }
                m[(i, j)] = s;
            }
        }
        if let (Some(b), Some(a)) = (mo.h_alpha, mo.alpha_alpha) {
            let last = n - 1;
            for i in 0..last {
                let v = jac[0][i] * b[0] + jac[1][i] * b[1];
                m[(i, last)] = v;
                m[(last, i)] = v;
            }
            m[(last, last)] = a;
        }
        Ok(InfoMatrix::new(m))
    }
}

/// `m(x)` for a single point; integrates the score moments afresh on every call.
pub fn elementary_fim_continuous(problem: &GaussianMarginProblem, x: f64, quad: &QuadratureRule) -> Result<InfoMatrix> {
    ContinuousModel::new(problem.clone(), quad)?.elementary(x)
}
