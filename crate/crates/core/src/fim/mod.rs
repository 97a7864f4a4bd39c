//! Fisher information for single observations and for design measures.

mod binary;
mod continuous;
pub mod oracle;

use crate::design::DesignMeasure;
use crate::error::{Error, Result};
use crate::models::{BinaryLogisticProblem, Interval, Problem};
use nalgebra::DMatrix;

pub use crate::quadrature::QuadratureRule;
pub use binary::elementary_fim_binary;
pub use continuous::{elementary_fim_continuous, ContinuousModel, ScoreMoments};
pub use oracle::binary_fim_oracle;

/// Pivots below this fraction of the largest pivot count as zero.
pub const PIVOT_REL_TOL: f64 = 1e-13;

/// Symmetric positive-semidefinite information matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct InfoMatrix(DMatrix<f64>);

impl InfoMatrix {
    /// Wraps `m`, averaging it with its transpose to remove rounding asymmetry.
    pub fn new(m: DMatrix<f64>) -> Self {
        assert!(m.is_square(), "information matrix must be square");
        let t = m.transpose();
        Self((m + t) * 0.5)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.0
    }

    /// `self += w · other`.
    pub fn add_scaled(&mut self, w: f64, other: &InfoMatrix) {
        self.0 += &other.0 * w;
    }

    pub fn scaled(&self, w: f64) -> Self {
        Self(&self.0 * w)
    }

    /// Top-left `n × n` block.
    pub fn leading_block(&self, n: usize) -> Self {
        Self(self.0.view((0, 0), (n, n)).into_owned())
    }

    pub fn log_det(&self) -> f64 {
        log_det(self)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.0
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest asymmetry `|m_ij - m_ji|`.
    pub fn asymmetry(&self) -> f64 {
        (&self.0 - self.0.transpose()).abs().max()
    }

    /// `X` with `self · X = rhs`, or [`Error::SingularDesign`].
    pub fn solve(&self, rhs: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        if log_det(self) == f64::NEG_INFINITY {
            return Err(Error::SingularDesign);
        }
        match self.0.clone().cholesky() {
            Some(ch) => Ok(ch.solve(rhs)),
            None => self.0.clone().lu().solve(rhs).ok_or(Error::SingularDesign),
        }
    }

    /// Inverse of a nonsingular matrix.
    pub fn inverse(&self) -> Result<DMatrix<f64>> {
        self.solve(&DMatrix::identity(self.dim(), self.dim()))
    }
}

/// `log det M` from a diagonally pivoted LDLᵀ factorization; `-∞` when a pivot
/// falls to [`PIVOT_REL_TOL`] times the largest one or below.
pub fn log_det(m: &InfoMatrix) -> f64 {
    let n = m.dim();
    let mut a = m.0.clone();
    let mut total = 0.0;
    let mut first = 0.0;
    for k in 0..n {
        let (p, piv) = (k..n)
            .map(|i| (i, a[(i, i)]))
            .fold((k, f64::NEG_INFINITY), |best, c| if c.1 > best.1 { c } else { best });
        if k == 0 {
            first = piv;
        }
        // Written so that NaN pivots also count as failures.
        let positive = piv > PIVOT_REL_TOL * first && first > 0.0;
        if !positive {
            return f64::NEG_INFINITY;
        }
        a.swap_rows(k, p);
        a.swap_columns(k, p);
        total += piv.ln();
        for i in k + 1..n {
            let l = a[(i, k)] / piv;
            for j in k + 1..=i {
                let v = a[(i, j)] - l * a[(j, k)];
                a[(i, j)] = v;
                a[(j, i)] = v;
            }
        }
    }
    total
}

/// Elementary information `m(x)` of a localized model.
pub trait InformationModel: Sync {
    fn n_params(&self) -> usize;
    fn design_space(&self) -> Interval;
    fn elementary(&self, x: f64) -> Result<InfoMatrix>;
}

impl InformationModel for BinaryLogisticProblem {
    fn n_params(&self) -> usize {
        BinaryLogisticProblem::n_params(self)
    }

    fn design_space(&self) -> Interval {
        self.design_space
    }

    fn elementary(&self, x: f64) -> Result<InfoMatrix> {
        elementary_fim_binary(self, x)
    }
}

/// A [`Problem`] prepared for information evaluation.
#[derive(Debug, Clone)]
pub enum Model {
    Continuous(ContinuousModel),
    Binary(BinaryLogisticProblem),
}

impl Model {
    /// Precomputes whatever `problem` needs; `quad` only matters for continuous margins.
    pub fn new(problem: &Problem, quad: &QuadratureRule) -> Result<Self> {
        Ok(match problem {
            Problem::Continuous(p) => Model::Continuous(ContinuousModel::new(p.clone(), quad)?),
            Problem::Binary(p) => Model::Binary(p.clone()),
        })
    }
}

impl InformationModel for Model {
    fn n_params(&self) -> usize {
        match self {
            Model::Continuous(m) => m.n_params(),
            Model::Binary(p) => InformationModel::n_params(p),
        }
    }

    fn design_space(&self) -> Interval {
        match self {
            Model::Continuous(m) => m.design_space(),
            Model::Binary(p) => p.design_space,
        }
    }

    fn elementary(&self, x: f64) -> Result<InfoMatrix> {
        match self {
            Model::Continuous(m) => m.elementary(x),
            Model::Binary(p) => elementary_fim_binary(p, x),
        }
    }
}

/// `M(ξ) = Σ w_i m(x_i)`.
pub fn design_fim<M: InformationModel + ?Sized>(design: &DesignMeasure, model: &M) -> Result<InfoMatrix> {
    let mut total = InfoMatrix::zeros(model.n_params());
    for (&x, &w) in design.points().iter().zip(design.weights()) {
        total.add_scaled(w, &model.elementary(x)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests;
