//! Brute-force binary information: sum over the four outcomes of
//! `p_y ∇ln p_y ∇ln p_yᵀ`, with the gradients taken by central differences.
//! Shares nothing with the closed form beyond the cell probabilities.

use super::InfoMatrix;
use crate::error::Result;
use crate::models::BinaryLogisticProblem;
use nalgebra::{DMatrix, DVector};

const REL_STEP: f64 = 1e-6;

fn cells_at(problem: &BinaryLogisticProblem, theta: &[f64], x: f64) -> Result<[f64; 4]> {
    let mut p = problem.clone();
    p.beta1 = [theta[0], theta[1]];
    p.beta2 = [theta[2], theta[3]];
    if let Some(&a) = theta.get(4) {
        p.copula = p.copula.with_alpha(a)?;
    }
    Ok(p.cell_probs(x)?.as_array())
}

pub fn binary_fim_oracle(problem: &BinaryLogisticProblem, x: f64) -> Result<InfoMatrix> {
    let theta = problem.local_parameters().theta();
    let n = theta.len();
    let p0 = cells_at(problem, &theta, x)?;
    let mut grads = vec![DVector::zeros(n); 4];
    for j in 0..n {
        let h = REL_STEP * theta[j].abs().max(1.0);
        let mut up = theta.clone();
        let mut dn = theta.clone();
        up[j] += h;
        dn[j] -= h;
        let pu = cells_at(problem, &up, x)?;
        let pd = cells_at(problem, &dn, x)?;
        for y in 0..4 {
            grads[y][j] = (pu[y].ln() - pd[y].ln()) / (2.0 * h);
        }
    }
    let mut m = DMatrix::zeros(n, n);
    for (g, p) in grads.iter().zip(p0) {
        m += g * g.transpose() * p;
    }
    Ok(InfoMatrix::new(m))
}
