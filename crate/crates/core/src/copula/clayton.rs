//! Clayton: C = (u1^-α + u2^-α - 1)^(-1/α), α > 0.
//!
//! Everything is expressed through ln S with S = u1^-α + u2^-α - 1 so that
//! large α or small u never overflow.

/// ln S, plus the exponents a_i = -α ln u_i.
fn log_s(u1: f64, u2: f64, a: f64) -> (f64, f64, f64) {
    let a1 = -a * u1.ln();
    let a2 = -a * u2.ln();
    let m = a1.max(a2);
    let ls = if m < 1.0 {
        (a1.exp_m1() + a2.exp_m1()).ln_1p()
    } else {
        m + ((a1 - m).exp() + (a2 - m).exp() - (-m).exp()).ln()
    };
    (ls, a1, a2)
}

pub(super) fn cdf(u1: f64, u2: f64, a: f64) -> f64 {
    let (ls, _, _) = log_s(u1, u2, a);
    // S ≥ 1 on the unit square for α > 0, so the max(·, 0) branch is inert.
    if ls.is_nan() {
        return 0.0;
    }
    (-ls / a).exp()
}

pub(super) fn log_pdf(u1: f64, u2: f64, a: f64) -> f64 {
    let (ls, _, _) = log_s(u1, u2, a);
    a.ln_1p() - (1.0 + a) * (u1.ln() + u2.ln()) - (2.0 + 1.0 / a) * ls
}

pub(super) fn partial_u1(u1: f64, u2: f64, a: f64) -> f64 {
    let (ls, a1, _) = log_s(u1, u2, a);
    ((1.0 + 1.0 / a) * (a1 - ls)).exp()
}

pub(super) fn partial_alpha(u1: f64, u2: f64, a: f64) -> f64 {
    let (ls, a1, a2) = log_s(u1, u2, a);
    let x1 = -u1.ln();
    let x2 = -u2.ln();
    let q1 = (a1 - ls).exp();
    let q2 = (a2 - ls).exp();
    (-ls / a).exp() * (ls / (a * a) - (x1 * q1 + x2 * q2) / a)
}

pub(super) fn dlog_du1(u1: f64, u2: f64, a: f64) -> f64 {
    let (ls, a1, _) = log_s(u1, u2, a);
    let q1 = (a1 - ls).exp();
    (-(1.0 + a) + (2.0 * a + 1.0) * q1) / u1
}

pub(super) fn dlog_dalpha(u1: f64, u2: f64, a: f64) -> f64 {
    let (ls, a1, a2) = log_s(u1, u2, a);
    let x1 = -u1.ln();
    let x2 = -u2.ln();
    let q1 = (a1 - ls).exp();
    let q2 = (a2 - ls).exp();
    1.0 / (1.0 + a) + x1 + x2 + ls / (a * a) - (2.0 + 1.0 / a) * (x1 * q1 + x2 * q2)
}

/// u2 = ((v^(-α/(1+α)) - 1) u1^-α + 1)^(-1/α), evaluated in log space.
pub(super) fn conditional_quantile(v: f64, u1: f64, a: f64) -> f64 {
    let t = (-a / (1.0 + a) * v.ln()).exp_m1();
    let lt = t.ln() - a * u1.ln();
    let ln_inner = if lt > 0.0 {
        lt + (-lt).exp().ln_1p()
    } else {
        lt.exp().ln_1p()
    };
    (-ln_inner / a).exp()
}
