//! Information of the bivariate binary model, `Jᵀ (P⁻¹ + e eᵀ / p00) J`
//! with `p = (p11, p10, p01)` and `J = ∂p/∂θ`.

use super::InfoMatrix;
use crate::error::{Error, Result};
use crate::models::BinaryLogisticProblem;
use nalgebra::{DMatrix, RowDVector};

/// `θ = (β10, β11, β20, β21[, α])`.
pub fn elementary_fim_binary(problem: &BinaryLogisticProblem, x: f64) -> Result<InfoMatrix> {
    let (raw, p1, p2) = problem.raw_cells(x)?;
    if raw.as_array().iter().any(|p| !p.is_finite()) {
        return Err(Error::DegenerateInformation { x });
    }
    // Cells below CELL_EPS are floored; their gradients vanish with them, so the
    // floored terms contribute nothing measurable.
    let cells = problem.cell_probs(x)?;
    let n = problem.n_params();
    let cop = &problem.copula;
    let c1 = cop.partial_u1(p1, p2)?;
    let c2 = cop.partial_u2(p1, p2)?;
    let d1 = p1 * (1.0 - p1);
    let d2 = p2 * (1.0 - p2);

    let mut dp11 = RowDVector::zeros(n);
    let mut dpi1 = RowDVector::zeros(n);
    let mut dpi2 = RowDVector::zeros(n);
    for (j, b) in [1.0, x].into_iter().enumerate() {
        dpi1[j] = d1 * b;
        dpi2[2 + j] = d2 * b;
        dp11[j] = c1 * d1 * b;
        dp11[2 + j] = c2 * d2 * b;
    }
    if problem.fits_alpha() {
        dp11[4] = cop.partial_alpha(p1, p2)?;
    }
    let mut jac = DMatrix::zeros(3, n);
    jac.set_row(0, &dp11);
    jac.set_row(1, &(&dpi1 - &dp11));
    jac.set_row(2, &(&dpi2 - &dp11));

    let p = [cells.p11, cells.p10, cells.p01];
    let mut m = DMatrix::zeros(n, n);
    for (r, pr) in p.iter().enumerate() {
        let row = jac.row(r);
        m += row.transpose() * row / *pr;
    }
    let colsum = jac.row_sum();
    m += colsum.transpose() * &colsum / cells.p00;
    Ok(InfoMatrix::new(m))
}
