//! Farlie–Gumbel–Morgenstern: C = u1 u2 [1 + α(1 - u1)(1 - u2)], α ∈ [-1, 1].

pub(super) fn cdf(u1: f64, u2: f64, a: f64) -> f64 {
    u1 * u2 * (1.0 + a * (1.0 - u1) * (1.0 - u2))
}

pub(super) fn pdf(u1: f64, u2: f64, a: f64) -> f64 {
    1.0 + a * (1.0 - 2.0 * u1) * (1.0 - 2.0 * u2)
}

pub(super) fn log_pdf(u1: f64, u2: f64, a: f64) -> f64 {
    let c = pdf(u1, u2, a);
    if c > 0.0 {
        c.ln()
    } else {
        f64::NEG_INFINITY
    }
}

pub(super) fn partial_u1(u1: f64, u2: f64, a: f64) -> f64 {
    u2 * (1.0 + a * (1.0 - 2.0 * u1) * (1.0 - u2))
}

pub(super) fn partial_alpha(u1: f64, u2: f64) -> f64 {
    u1 * u2 * (1.0 - u1) * (1.0 - u2)
}

pub(super) fn dlog_du1(u1: f64, u2: f64, a: f64) -> f64 {
    -2.0 * a * (1.0 - 2.0 * u2) / pdf(u1, u2, a)
}

pub(super) fn dlog_dalpha(u1: f64, u2: f64, a: f64) -> f64 {
    (1.0 - 2.0 * u1) * (1.0 - 2.0 * u2) / pdf(u1, u2, a)
}

/// Root in [0, 1] of A u² - (1 + A) u + v = 0 with A = α(1 - 2u1).
pub(super) fn conditional_quantile(v: f64, u1: f64, a: f64) -> f64 {
    let k = a * (1.0 - 2.0 * u1);
    let b = 1.0 + k;
    2.0 * v / (b + (b * b - 4.0 * k * v).max(0.0).sqrt())
}
