//! Kendall's τ maps between copula parameters and rank correlation.

use super::{CopulaFamily, CopulaSpec, TauValue};
use crate::error::{Error, Result};
use crate::quadrature::integrate_adaptive;
use std::f64::consts::PI;

/// Beyond this the integrand t/(e^t - 1) is below 1e-24 and the tail is dropped.
const DEBYE_CUTOFF: f64 = 60.0;

/// First Debye function D₁(α) = (1/α) ∫₀^α t / (e^t - 1) dt.
pub fn debye1(alpha: f64) -> f64 {
    if alpha == 0.0 {
        return 1.0;
    }
    if alpha < 0.0 {
        // t/(e^{-t} - 1) = -t - t/(e^t - 1)
        return debye1(-alpha) - alpha / 2.0;
    }
    let upper = alpha.min(DEBYE_CUTOFF);
    let integrand = |t: f64| if t == 0.0 { 1.0 } else { t / t.exp_m1() };
    integrate_adaptive(integrand, 0.0, upper, 1e-13) / alpha
}

/// Kendall's τ of a validated spec.
pub fn tau_from_alpha(spec: &CopulaSpec) -> TauValue {
    let a = spec.alpha().unwrap_or(0.0);
    let tau = match spec.family() {
        CopulaFamily::Product => 0.0,
        CopulaFamily::Gaussian => 2.0 / PI * a.asin(),
        CopulaFamily::Fgm => 2.0 * a / 9.0,
        CopulaFamily::Clayton => a / (a + 2.0),
        CopulaFamily::Frank => frank_tau(a),
        CopulaFamily::Gumbel => (a - 1.0) / a,
    };
    TauValue(tau.clamp(-1.0, 1.0))
}

fn frank_tau(a: f64) -> f64 {
    if a < 0.0 {
        return -frank_tau(-a);
    }
    1.0 - 4.0 / a * (1.0 - debye1(a))
}

/// Parameter of `family` that reproduces Kendall's `tau`.
pub fn alpha_from_tau(family: CopulaFamily, tau: f64) -> Result<CopulaSpec> {
    let t = TauValue::new(tau)?.value();
    let unattainable = |range| Error::Unattainable { family, tau, range };
    match family {
        CopulaFamily::Product => {
            if t == 0.0 {
                Ok(CopulaSpec::product())
            } else {
                Err(unattainable("{0}"))
            }
        }
        CopulaFamily::Gaussian => {
            if t.abs() < 1.0 {
                CopulaSpec::gaussian((PI * t / 2.0).sin())
            } else {
                Err(unattainable("(-1, 1)"))
            }
        }
        CopulaFamily::Fgm => {
            if t.abs() <= 2.0 / 9.0 {
                CopulaSpec::fgm((4.5 * t).clamp(-1.0, 1.0))
            } else {
                Err(unattainable("[-2/9, 2/9]"))
            }
        }
        CopulaFamily::Clayton => {
            if t > 0.0 && t < 1.0 {
                CopulaSpec::clayton(2.0 * t / (1.0 - t))
            } else {
                Err(unattainable("(0, 1)"))
            }
        }
        CopulaFamily::Gumbel => {
            if (0.0..1.0).contains(&t) {
                CopulaSpec::gumbel(1.0 / (1.0 - t))
            } else {
                Err(unattainable("[0, 1)"))
            }
        }
        CopulaFamily::Frank => {
            if t != 0.0 && t.abs() < 1.0 {
                CopulaSpec::frank(t.signum() * frank_alpha(t.abs()))
            } else {
                Err(unattainable("(-1, 1) \\ {0}"))
            }
        }
    }
}

/// Bracketed bisection for the positive α with frank_tau(α) = tau.
fn frank_alpha(tau: f64) -> f64 {
    let mut lo = 0.0;
    let mut hi = 1.0;
    while frank_tau(hi) < tau {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let f = frank_tau(mid) - tau;
        if f.abs() < 1e-13 || mid == lo || mid == hi {
            return mid;
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
