//! Gumbel: C = exp(-[(-ln u1)^α + (-ln u2)^α]^(1/α)), α ≥ 1.

struct Terms {
    x: f64,
    // A = S^(1/α), S = x^α + y^α
    big_a: f64,
    ln_s: f64,
    // x^α / S
    wx: f64,
}

fn terms(u1: f64, u2: f64, a: f64) -> Terms {
    let x = -u1.ln();
    let y = -u2.ln();
    let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
    let r = (lo / hi).powf(a);
    let wx = if x >= y { 1.0 / (1.0 + r) } else { r / (1.0 + r) };
    Terms {
        x,
        big_a: hi * (1.0 + r).powf(1.0 / a),
        ln_s: a * hi.ln() + r.ln_1p(),
        wx,
    }
}

pub(super) fn cdf(u1: f64, u2: f64, a: f64) -> f64 {
    (-terms(u1, u2, a).big_a).exp()
}

pub(super) fn log_pdf(u1: f64, u2: f64, a: f64) -> f64 {
    let t = terms(u1, u2, a);
    let y = -u2.ln();
    -t.big_a + t.x + y + (a - 1.0) * (t.x.ln() + y.ln()) + (1.0 / a - 2.0) * t.ln_s + (t.big_a + a - 1.0).ln()
}

pub(super) fn partial_u1(u1: f64, u2: f64, a: f64) -> f64 {
    let t = terms(u1, u2, a);
    let dadx = t.big_a * t.wx / t.x;
    (-t.big_a).exp() * dadx / u1
}

pub(super) fn dlog_du1(u1: f64, u2: f64, a: f64) -> f64 {
    let t = terms(u1, u2, a);
    let dadx = t.big_a * t.wx / t.x;
    let dl_dx = -dadx + 1.0 + (a - 1.0) / t.x + (1.0 - 2.0 * a) * t.wx / t.x + dadx / (t.big_a + a - 1.0);
    -dl_dx / u1
}

/// Bisection on ln u2; ∂C/∂u1 is nondecreasing in u2.
pub(super) fn conditional_quantile(v: f64, u1: f64, a: f64) -> f64 {
    let mut lo = -745.0_f64;
    let mut hi = 0.0_f64;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let u2 = mid.exp();
        let h = if u2 > 0.0 && u2 < 1.0 {
            partial_u1(u1, u2, a)
        } else {
            0.0
        };
        if h < v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi)).exp()
}
