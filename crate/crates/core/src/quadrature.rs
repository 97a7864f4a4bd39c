//! Gauss–Legendre rules on (0, 1) and adaptive Gauss–Kronrod integration.

use std::f64::consts::PI;

/// A Gauss–Legendre rule mapped to the open unit interval.
///
/// With `grading > 1` the nodes are pulled towards both endpoints through
/// `u = s^g / (s^g + (1 - s)^g)`; the weights absorb the Jacobian, so they
/// stay positive and still sum to one. Grading tames integrands with
/// logarithmic endpoint singularities such as `Φ⁻¹(u)²`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    grading: u32,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub const DEFAULT_ORDER: usize = 64;
    pub const DEFAULT_GRADING: u32 = 3;

    /// Plain Gauss–Legendre rule of the given order on (0, 1).
    pub fn gauss_legendre(order: usize) -> Self {
        assert!(order > 0, "quadrature order must be positive");
        let (x, w) = legendre_nodes(order);
        Self {
            order,
            grading: 1,
            nodes: x.iter().map(|t| 0.5 * (t + 1.0)).collect(),
            weights: w.iter().map(|w| 0.5 * w).collect(),
        }
    }

    /// Gauss–Legendre rule with endpoint grading of power `grading`.
    pub fn graded(order: usize, grading: u32) -> Self {
        let base = Self::gauss_legendre(order);
        if grading <= 1 {
            return base;
        }
        let g = grading as i32;
        let (nodes, weights) = base
            .nodes
            .iter()
            .zip(&base.weights)
            .map(|(&s, &w)| {
                let a = s.powi(g);
                let b = (1.0 - s).powi(g);
                let u = a / (a + b);
                let jac = f64::from(grading) * (s * (1.0 - s)).powi(g - 1) / (a + b).powi(2);
                (u, w * jac)
            })
            .unzip();
        Self {
            order,
            grading,
            nodes,
            weights,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn grading(&self) -> u32 {
        self.grading
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Same rule at twice the order.
    pub fn doubled(&self) -> Self {
        Self::graded(2 * self.order, self.grading)
    }

    /// Integral of `f` over (0, 1).
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&u, &w)| w * f(u)).sum()
    }
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self::graded(Self::DEFAULT_ORDER, Self::DEFAULT_GRADING)
    }
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1], ascending.
fn legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        if d != 0.0 {
            dp = d;
        }
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (non-negative half).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss–Kronrod (G7/K15) integral of `f` over `[a, b]`.
///
/// Bisects the panel with the largest error estimate until the summed
/// estimate falls below `abs_tol` or 2000 panels have been used. Reversed
/// limits flip the sign.
pub fn integrate_adaptive(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if b < a {
        return -integrate_adaptive(f, b, a, abs_tol);
    }
    let (v, e) = gk15(&mut f, a, b);
    let mut panels = vec![(a, b, v, e)];
    loop {
        let total_err: f64 = panels.iter().map(|p| p.3).sum();
        if total_err <= abs_tol || panels.len() >= 2000 {
            break;
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let (lo, hi, _, _) = panels.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&mut f, lo, mid);
        let (v2, e2) = gk15(&mut f, mid, hi);
        panels.push((lo, mid, v1, e1));
        panels.push((mid, hi, v2, e2));
    }
    panels.iter().map(|p| p.2).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_one() {
        for n in [1, 2, 7, 16, 64, 128] {
            let s: f64 = QuadratureRule::gauss_legendre(n).weights().iter().sum();
            assert!((s - 1.0).abs() < 1e-13, "n={n}: {s}");
        }
        for n in [32, 64, 128] {
            for g in [1, 2, 3] {
                let rule = QuadratureRule::graded(n, g);
                let s: f64 = rule.weights().iter().sum();
                assert!((s - 1.0).abs() < 1e-11, "n={n} g={g}: {s}");
                assert!(rule.weights().iter().all(|&w| w > 0.0));
                assert!(rule.nodes().iter().all(|&u| u > 0.0 && u < 1.0));
            }
        }
    }

    #[test]
    fn exact_for_polynomials() {
        let rule = QuadratureRule::gauss_legendre(10);
        // degree 19 is the limit for 10 nodes
        let v = rule.integrate(|u| u.powi(19));
        assert!((v - 1.0 / 20.0).abs() < 1e-15);
    }

    #[test]
    fn nodes_symmetric() {
        let rule = QuadratureRule::graded(33, 3);
        let n = rule.nodes();
        for i in 0..n.len() {
            assert!((n[i] + n[n.len() - 1 - i] - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn grading_handles_log_singularity() {
        // ∫₀¹ ln(u) du = -1
        let plain = QuadratureRule::gauss_legendre(64).integrate(f64::ln);
        let graded = QuadratureRule::graded(64, 3).integrate(f64::ln);
        assert!((graded + 1.0).abs() < 1e-8);
        assert!((graded + 1.0).abs() < (plain + 1.0).abs());
    }

    #[test]
    fn adaptive_integrates_peaks() {
        let v = integrate_adaptive(|t| (-1e4 * (t - 0.3) * (t - 0.3)).exp(), 0.0, 1.0, 1e-14);
        assert!((v - (PI / 1e4).sqrt()).abs() < 1e-12);
        let w = integrate_adaptive(f64::sin, PI, 0.0, 1e-14);
        assert!((w + 2.0).abs() < 1e-13);
    }
}
