//! Frank: C = -(1/α) ln(1 + (e^{-αu1} - 1)(e^{-αu2} - 1) / (e^{-α} - 1)), α ≠ 0.
//!
//! Negative α below `REFLECT_BELOW` is mapped to positive α through
//! C_α(u1, u2) = u1 - C_{-α}(u1, 1 - u2) to keep the exponentials finite.

const REFLECT_BELOW: f64 = -30.0;

struct Terms {
    em: f64,
    e1: f64,
    d2: f64,
    // em + (e^{-αu1} - 1)(e^{-αu2} - 1)
    denom: f64,
    // whether `denom` came from the small-exponential form
    small: bool,
}

fn terms(u1: f64, u2: f64, a: f64) -> Terms {
    let em = (-a).exp_m1();
    let e1 = (-a * u1).exp();
    let e2 = (-a * u2).exp();
    let d1 = (-a * u1).exp_m1();
    let d2 = (-a * u2).exp_m1();
    let small = a > 0.0 && e1 < 0.5 && e2 < 0.5;
    let denom = if small {
        (-a).exp() + e1 * e2 - e1 - e2
    } else {
        em + d1 * d2
    };
    Terms {
        em,
        e1,
        d2,
        denom,
        small,
    }
}

pub(super) fn cdf(u1: f64, u2: f64, a: f64) -> f64 {
    if a < REFLECT_BELOW {
        return u1 - cdf(u1, 1.0 - u2, -a);
    }
    let t = terms(u1, u2, a);
    if t.small {
        -(t.denom / t.em).ln() / a
    } else {
        let d1 = (-a * u1).exp_m1();
        -(d1 * t.d2 / t.em).ln_1p() / a
    }
}

pub(super) fn log_pdf(u1: f64, u2: f64, a: f64) -> f64 {
    if a < REFLECT_BELOW {
        return log_pdf(u1, 1.0 - u2, -a);
    }
    let t = terms(u1, u2, a);
    (-a * t.em).ln() - a * (u1 + u2) - 2.0 * t.denom.abs().ln()
}

pub(super) fn partial_u1(u1: f64, u2: f64, a: f64) -> f64 {
    if a < REFLECT_BELOW {
        return 1.0 - partial_u1(u1, 1.0 - u2, -a);
    }
    let t = terms(u1, u2, a);
    t.e1 * t.d2 / t.denom
}

pub(super) fn dlog_du1(u1: f64, u2: f64, a: f64) -> f64 {
    if a < REFLECT_BELOW {
        return dlog_du1(u1, 1.0 - u2, -a);
    }
    let t = terms(u1, u2, a);
    -a + 2.0 * a * t.e1 * t.d2 / t.denom
}

pub(super) fn conditional_quantile(v: f64, u1: f64, a: f64) -> f64 {
    if a < REFLECT_BELOW {
        return 1.0 - conditional_quantile(1.0 - v, u1, -a);
    }
    // e^{-αu2} = (v e^{-α} + (1-v) e^{-αu1}) / (v + (1-v) e^{-αu1}), all terms positive
    let lv = v.ln();
    let lw = (1.0 - v).ln() - a * u1;
    -(log_add(lv - a, lw) - log_add(lv, lw)) / a
}

fn log_add(x: f64, y: f64) -> f64 {
    x.max(y) + (-(x - y).abs()).exp().ln_1p()
}
