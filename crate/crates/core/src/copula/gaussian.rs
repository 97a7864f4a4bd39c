//! Gaussian copula with correlation ρ ∈ (-1, 1).

use crate::normal;

pub(super) fn cdf(u1: f64, u2: f64, rho: f64) -> f64 {
    normal::bvn_cdf(normal::quantile(u1), normal::quantile(u2), rho)
}

pub(super) fn log_pdf(u1: f64, u2: f64, rho: f64) -> f64 {
    let x = normal::quantile(u1);
    let y = normal::quantile(u2);
    let om = (1.0 - rho) * (1.0 + rho);
    -0.5 * om.ln() - (rho * rho * (x * x + y * y) - 2.0 * rho * x * y) / (2.0 * om)
}

pub(super) fn partial_u1(u1: f64, u2: f64, rho: f64) -> f64 {
    let x = normal::quantile(u1);
    let y = normal::quantile(u2);
    let om = (1.0 - rho) * (1.0 + rho);
    normal::cdf((y - rho * x) / om.sqrt())
}

// Plackett: ∂Φ₂/∂ρ = φ₂.
pub(super) fn partial_alpha(u1: f64, u2: f64, rho: f64) -> f64 {
    normal::bvn_pdf(normal::quantile(u1), normal::quantile(u2), rho)
}

pub(super) fn dlog_du1(u1: f64, u2: f64, rho: f64) -> f64 {
    let x = normal::quantile(u1);
    let y = normal::quantile(u2);
    let om = (1.0 - rho) * (1.0 + rho);
    -(rho * rho * x - rho * y) / om / normal::pdf(x)
}

pub(super) fn dlog_dalpha(u1: f64, u2: f64, rho: f64) -> f64 {
    let x = normal::quantile(u1);
    let y = normal::quantile(u2);
    let om = (1.0 - rho) * (1.0 + rho);
    let q = rho * rho * (x * x + y * y) - 2.0 * rho * x * y;
    rho / om - ((rho * (x * x + y * y) - x * y) * om + rho * q) / (om * om)
}

pub(super) fn conditional_quantile(v: f64, u1: f64, rho: f64) -> f64 {
    let om = (1.0 - rho) * (1.0 + rho);
    normal::cdf(rho * normal::quantile(u1) + om.sqrt() * normal::quantile(v))
}
