//! Bivariate copula families.
//!
//! Six exchangeable families are supported: product (independence), Gaussian,
//! Farlie–Gumbel–Morgenstern, Clayton, Frank and Gumbel. Each exposes its
//! distribution function, density, first partial derivatives, and the
//! conditional quantile `u2 = h⁻¹(v | u1)` used for Rosenblatt-transformed
//! quadrature.

mod clayton;
mod fgm;
mod frank;
mod gaussian;
mod gumbel;
mod tau;

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

pub use tau::{alpha_from_tau, debye1, tau_from_alpha};

/// Relative step for finite differences in the copula parameter.
const ALPHA_REL_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CopulaFamily {
    Product,
    Gaussian,
    Fgm,
    Clayton,
    Frank,
    Gumbel,
}

impl CopulaFamily {
    pub const ALL: [CopulaFamily; 6] = [
        CopulaFamily::Product,
        CopulaFamily::Gaussian,
        CopulaFamily::Fgm,
        CopulaFamily::Clayton,
        CopulaFamily::Frank,
        CopulaFamily::Gumbel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CopulaFamily::Product => "product",
            CopulaFamily::Gaussian => "gaussian",
            CopulaFamily::Fgm => "fgm",
            CopulaFamily::Clayton => "clayton",
            CopulaFamily::Frank => "frank",
            CopulaFamily::Gumbel => "gumbel",
        }
    }

    pub fn has_parameter(self) -> bool {
        self != CopulaFamily::Product
    }

    /// Human-readable parameter domain.
    pub fn domain(self) -> &'static str {
        match self {
            CopulaFamily::Product => "(none)",
            CopulaFamily::Gaussian => "(-1, 1)",
            CopulaFamily::Fgm => "[-1, 1]",
            CopulaFamily::Clayton => "(0, inf)",
            CopulaFamily::Frank => "(-inf, inf) \\ {0}",
            CopulaFamily::Gumbel => "[1, inf)",
        }
    }

    fn admits(self, alpha: f64) -> bool {
        if !alpha.is_finite() {
            return false;
        }
        match self {
            CopulaFamily::Product => false,
            CopulaFamily::Gaussian => alpha > -1.0 && alpha < 1.0,
            CopulaFamily::Fgm => (-1.0..=1.0).contains(&alpha),
            CopulaFamily::Clayton => alpha > 0.0,
            CopulaFamily::Frank => alpha != 0.0,
            CopulaFamily::Gumbel => alpha >= 1.0,
        }
    }

    fn on_boundary(self, alpha: f64) -> bool {
        match self {
            CopulaFamily::Fgm => alpha.abs() == 1.0,
            CopulaFamily::Gumbel => alpha == 1.0,
            _ => false,
        }
    }
}

impl fmt::Display for CopulaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CopulaFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CopulaFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Kendall's rank correlation, always within [-1, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TauValue(f64);

impl TauValue {
    pub fn new(tau: f64) -> Result<Self> {
        if tau.is_finite() && tau.abs() <= 1.0 {
            Ok(Self(tau))
        } else {
            Err(Error::InvalidTau(tau))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// A copula family together with a validated parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CopulaSpec {
    family: CopulaFamily,
    alpha: Option<f64>,
}

impl CopulaSpec {
    pub fn new(family: CopulaFamily, alpha: Option<f64>) -> Result<Self> {
        match (family.has_parameter(), alpha) {
            (false, None) => Ok(Self::product()),
            (false, Some(_)) => Err(Error::NoParameter),
            (true, None) => Err(Error::MissingParameter { family }),
            (true, Some(a)) if family.admits(a) => Ok(Self { family, alpha: Some(a) }),
            (true, Some(a)) => Err(Error::ParameterDomain {
                family,
                alpha: a,
                domain: family.domain(),
            }),
        }
    }

    pub fn product() -> Self {
        Self {
            family: CopulaFamily::Product,
            alpha: None,
        }
    }

    pub fn gaussian(rho: f64) -> Result<Self> {
        Self::new(CopulaFamily::Gaussian, Some(rho))
    }

    pub fn fgm(alpha: f64) -> Result<Self> {
        Self::new(CopulaFamily::Fgm, Some(alpha))
    }

    pub fn clayton(alpha: f64) -> Result<Self> {
        Self::new(CopulaFamily::Clayton, Some(alpha))
    }

    pub fn frank(alpha: f64) -> Result<Self> {
        Self::new(CopulaFamily::Frank, Some(alpha))
    }

    pub fn gumbel(alpha: f64) -> Result<Self> {
        Self::new(CopulaFamily::Gumbel, Some(alpha))
    }

    pub fn family(&self) -> CopulaFamily {
        self.family
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// Same family with a different parameter.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::new(self.family, Some(alpha))
    }

    fn a(&self) -> f64 {
        self.alpha.unwrap_or(0.0)
    }

    /// C(u1, u2) on the closed unit square.
    pub fn cdf(&self, u1: f64, u2: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&u1) || !(0.0..=1.0).contains(&u2) {
            return Err(Error::OutsideUnitSquare { u1, u2 });
        }
        if u1 == 0.0 || u2 == 0.0 {
            return Ok(0.0);
        }
        if u1 == 1.0 {
            return Ok(u2);
        }
        if u2 == 1.0 {
            return Ok(u1);
        }
        Ok(raw_cdf(self.family, self.a(), u1, u2).clamp(0.0, 1.0))
    }

    /// Copula density c(u1, u2) on the open unit square.
    pub fn pdf(&self, u1: f64, u2: f64) -> Result<f64> {
        check_interior(u1, u2)?;
        Ok(match self.family {
            CopulaFamily::Product => 1.0,
            CopulaFamily::Fgm => fgm::pdf(u1, u2, self.a()).max(0.0),
            _ => raw_log_pdf(self.family, self.a(), u1, u2).exp(),
        })
    }

    /// ln c(u1, u2); `f64::NEG_INFINITY` where the density vanishes.
    pub fn log_pdf(&self, u1: f64, u2: f64) -> Result<f64> {
        check_interior(u1, u2)?;
        Ok(raw_log_pdf(self.family, self.a(), u1, u2))
    }

    /// ∂C/∂u1, the conditional distribution of U2 given U1 = u1.
    pub fn partial_u1(&self, u1: f64, u2: f64) -> Result<f64> {
        check_interior(u1, u2)?;
        Ok(raw_partial_u1(self.family, self.a(), u1, u2).clamp(0.0, 1.0))
    }

    /// ∂C/∂u2. Every supported family is exchangeable.
    pub fn partial_u2(&self, u1: f64, u2: f64) -> Result<f64> {
        self.partial_u1(u2, u1)
    }

    /// ∂C/∂α.
    pub fn partial_alpha(&self, u1: f64, u2: f64) -> Result<f64> {
        let a = self.alpha.ok_or(Error::NoParameter)?;
        if self.family.on_boundary(a) {
            return Err(Error::ParameterBoundary {
                family: self.family,
                alpha: a,
            });
        }
        check_interior(u1, u2)?;
        Ok(match self.family {
            CopulaFamily::Product => unreachable!("product has no parameter"),
            CopulaFamily::Gaussian => gaussian::partial_alpha(u1, u2, a),
            CopulaFamily::Fgm => fgm::partial_alpha(u1, u2),
            CopulaFamily::Clayton => clayton::partial_alpha(u1, u2, a),
            CopulaFamily::Frank | CopulaFamily::Gumbel => {
                central_alpha_difference(a, |b| raw_cdf(self.family, b, u1, u2))
            }
        })
    }

    /// (∂/∂u1, ∂/∂u2) of ln c.
    pub fn grad_log_pdf(&self, u1: f64, u2: f64) -> Result<[f64; 2]> {
        check_interior(u1, u2)?;
        let f = self.family;
        let a = self.a();
        Ok([raw_dlog_du1(f, a, u1, u2), raw_dlog_du1(f, a, u2, u1)])
    }

    /// ∂/∂α of ln c.
    pub fn dlog_pdf_dalpha(&self, u1: f64, u2: f64) -> Result<f64> {
        let a = self.alpha.ok_or(Error::NoParameter)?;
        if self.family.on_boundary(a) {
            return Err(Error::ParameterBoundary {
                family: self.family,
                alpha: a,
            });
        }
        check_interior(u1, u2)?;
        Ok(match self.family {
            CopulaFamily::Product => unreachable!("product has no parameter"),
            CopulaFamily::Gaussian => gaussian::dlog_dalpha(u1, u2, a),
            CopulaFamily::Fgm => fgm::dlog_dalpha(u1, u2, a),
            CopulaFamily::Clayton => clayton::dlog_dalpha(u1, u2, a),
            CopulaFamily::Frank | CopulaFamily::Gumbel => {
                central_alpha_difference(a, |b| raw_log_pdf(self.family, b, u1, u2))
            }
        })
    }

    /// Solves ∂C/∂u1 (u1, u2) = v for u2.
    pub fn conditional_quantile(&self, v: f64, u1: f64) -> Result<f64> {
        check_interior(v, u1)?;
        let a = self.a();
        let u2 = match self.family {
            CopulaFamily::Product => v,
            CopulaFamily::Gaussian => gaussian::conditional_quantile(v, u1, a),
            CopulaFamily::Fgm => fgm::conditional_quantile(v, u1, a),
            CopulaFamily::Clayton => clayton::conditional_quantile(v, u1, a),
            CopulaFamily::Frank => frank::conditional_quantile(v, u1, a),
            CopulaFamily::Gumbel => gumbel::conditional_quantile(v, u1, a),
        };
        Ok(u2.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0))
    }

    /// Kendall's τ implied by the parameter.
    pub fn tau(&self) -> TauValue {
        tau_from_alpha(self)
    }
}

impl fmt::Display for CopulaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha {
            Some(a) => write!(f, "{}(alpha={a})", self.family),
            None => write!(f, "{}", self.family),
        }
    }
}

fn check_interior(u1: f64, u2: f64) -> Result<()> {
    let inside = |u: f64| u > 0.0 && u < 1.0;
    if inside(u1) && inside(u2) {
        Ok(())
    } else if (0.0..=1.0).contains(&u1) && (0.0..=1.0).contains(&u2) {
        Err(Error::Boundary { u1, u2 })
    } else {
        Err(Error::OutsideUnitSquare { u1, u2 })
    }
}

fn central_alpha_difference(a: f64, f: impl Fn(f64) -> f64) -> f64 {
    let h = ALPHA_REL_STEP * a.abs();
    (f(a + h) - f(a - h)) / (2.0 * h)
}

fn raw_cdf(family: CopulaFamily, a: f64, u1: f64, u2: f64) -> f64 {
    match family {
        CopulaFamily::Product => u1 * u2,
        CopulaFamily::Gaussian => gaussian::cdf(u1, u2, a),
        CopulaFamily::Fgm => fgm::cdf(u1, u2, a),
        CopulaFamily::Clayton => clayton::cdf(u1, u2, a),
        CopulaFamily::Frank => frank::cdf(u1, u2, a),
        CopulaFamily::Gumbel => gumbel::cdf(u1, u2, a),
    }
}

fn raw_log_pdf(family: CopulaFamily, a: f64, u1: f64, u2: f64) -> f64 {
    match family {
        CopulaFamily::Product => 0.0,
        CopulaFamily::Gaussian => gaussian::log_pdf(u1, u2, a),
        CopulaFamily::Fgm => fgm::log_pdf(u1, u2, a),
        CopulaFamily::Clayton => clayton::log_pdf(u1, u2, a),
        CopulaFamily::Frank => frank::log_pdf(u1, u2, a),
        CopulaFamily::Gumbel => gumbel::log_pdf(u1, u2, a),
    }
}

fn raw_partial_u1(family: CopulaFamily, a: f64, u1: f64, u2: f64) -> f64 {
    match family {
        CopulaFamily::Product => u2,
        CopulaFamily::Gaussian => gaussian::partial_u1(u1, u2, a),
        CopulaFamily::Fgm => fgm::partial_u1(u1, u2, a),
        CopulaFamily::Clayton => clayton::partial_u1(u1, u2, a),
        CopulaFamily::Frank => frank::partial_u1(u1, u2, a),
        CopulaFamily::Gumbel => gumbel::partial_u1(u1, u2, a),
    }
}

fn raw_dlog_du1(family: CopulaFamily, a: f64, u1: f64, u2: f64) -> f64 {
    match family {
        CopulaFamily::Product => 0.0,
        CopulaFamily::Gaussian => gaussian::dlog_du1(u1, u2, a),
        CopulaFamily::Fgm => fgm::dlog_du1(u1, u2, a),
        CopulaFamily::Clayton => clayton::dlog_du1(u1, u2, a),
        CopulaFamily::Frank => frank::dlog_du1(u1, u2, a),
        CopulaFamily::Gumbel => gumbel::dlog_du1(u1, u2, a),
    }
}

#[cfg(test)]
mod tests;
