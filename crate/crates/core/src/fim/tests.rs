use super::*;
use crate::copula::CopulaSpec;
use crate::models::{BinaryLogisticProblem, GaussianMarginProblem};

fn rel_diff(a: &InfoMatrix, b: &InfoMatrix) -> f64 {
    (a.matrix() - b.matrix()).abs().max() / b.matrix().abs().max()
}

fn quad() -> QuadratureRule {
    QuadratureRule::default()
}

#[test]
fn log_det_basics() {
    assert_eq!(log_det(&InfoMatrix::identity(6)), 0.0);
    let d = InfoMatrix::new(DMatrix::from_diagonal_element(3, 3, 2.0));
    assert!((log_det(&d) - 3.0 * 2f64.ln()).abs() < 1e-15);
    let v = nalgebra::DVector::from_vec(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    let rank_one = InfoMatrix::new(&v * v.transpose());
    assert_eq!(log_det(&rank_one), f64::NEG_INFINITY);
    assert_eq!(log_det(&InfoMatrix::zeros(2)), f64::NEG_INFINITY);
}

#[test]
fn log_det_agrees_with_eigenvalues() {
    let a = DMatrix::from_row_slice(3, 3, &[4.0, 1.0, 0.5, 1.0, 3.0, -0.2, 0.5, -0.2, 2.0]);
    let m = InfoMatrix::new(a.clone());
    let ev: f64 = a.symmetric_eigenvalues().iter().map(|l| l.ln()).sum();
    assert!((log_det(&m) - ev).abs() < 1e-13);
}

#[test]
fn product_copula_information_is_block_diagonal() {
    let p = GaussianMarginProblem::fedorov(CopulaSpec::product(), true);
    let m = elementary_fim_continuous(&p, 0.7, &quad()).unwrap();
    assert_eq!(m.dim(), 6);
    let g1 = p.trend1.gradient(0.7);
    let g2 = p.trend2.gradient(0.7);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(m.matrix()[(i, j)], g1[i] * g1[j]);
            assert_eq!(m.matrix()[(3 + i, 3 + j)], g2[i] * g2[j]);
            assert_eq!(m.matrix()[(i, 3 + j)], 0.0);
        }
    }
}

#[test]
fn gaussian_copula_at_independence_matches_product() {
    let q = quad();
    let prod = GaussianMarginProblem::fedorov(CopulaSpec::product(), false);
    let gauss = GaussianMarginProblem::fedorov(CopulaSpec::gaussian(0.0).unwrap(), true);
    for x in [0.0, 0.25, 0.6, 1.0] {
        let a = elementary_fim_continuous(&prod, x, &q).unwrap();
        let b = elementary_fim_continuous(&gauss, x, &q).unwrap().leading_block(6);
        assert!((a.matrix() - b.matrix()).abs().max() < 1e-8, "x = {x}");
    }
}

#[test]
fn gaussian_copula_moments_match_bivariate_normal() {
    // Unit-variance bivariate normal: mean information Σ⁻¹, no mean/correlation
    // cross term, correlation information (1 + ρ²)/(1 - ρ²)².
    for rho in [-0.6, 0.3, 0.7] {
        let cop = CopulaSpec::gaussian(rho).unwrap();
        let mo = ScoreMoments::compute(&cop, true, &quad()).unwrap();
        let d = 1.0 - rho * rho;
        assert!((mo.hh[0][0] - 1.0 / d).abs() < 1e-8, "{rho} {:?}", mo.hh);
        assert!((mo.hh[0][1] + rho / d).abs() < 1e-8);
        assert!((mo.hh[1][1] - 1.0 / d).abs() < 1e-8);
        let b = mo.h_alpha.unwrap();
        assert!(b[0].abs() < 1e-8 && b[1].abs() < 1e-8);
        let aa = mo.alpha_alpha.unwrap();
        assert!((aa - (1.0 + rho * rho) / (d * d)).abs() < 1e-7, "{aa}");
    }
}

#[test]
fn continuous_information_self_converges() {
    let q = quad();
    let q2 = q.doubled();
    let specs = [
        CopulaSpec::fgm(0.45).unwrap(),
        CopulaSpec::fgm(-0.9).unwrap(),
        CopulaSpec::clayton(6.0).unwrap(),
        CopulaSpec::frank(5.74).unwrap(),
        CopulaSpec::gumbel(2.0).unwrap(),
    ];
    for cop in specs {
        let p = GaussianMarginProblem::fedorov(cop, true);
        let a = elementary_fim_continuous(&p, 0.5, &q).unwrap();
        let b = elementary_fim_continuous(&p, 0.5, &q2).unwrap();
        assert!(rel_diff(&a, &b) < 1e-4, "{cop}: {}", rel_diff(&a, &b));
    }
}

#[test]
fn continuous_information_is_symmetric_psd() {
    let q = quad();
    for cop in [CopulaSpec::fgm(0.45).unwrap(), CopulaSpec::clayton(2.0).unwrap()] {
        let p = GaussianMarginProblem::fedorov(cop, true);
        let model = ContinuousModel::new(p, &q).unwrap();
        for i in 0..=20 {
            let m = model.elementary(i as f64 / 20.0).unwrap();
            assert!(m.asymmetry() < 1e-10);
            assert!(m.min_eigenvalue() > -1e-9);
        }
    }
}

#[test]
fn binary_product_information_factorizes() {
    let p = BinaryLogisticProblem::standard(CopulaSpec::product(), false);
    for x in [0.0, 2.8, 6.79] {
        let m = elementary_fim_binary(&p, x).unwrap();
        for (block, b) in [(0, p.beta1), (2, p.beta2)] {
            let pi = crate::models::logistic(b[0] + b[1] * x);
            let v = pi * (1.0 - pi);
            let f = [1.0, x];
            for i in 0..2 {
                for j in 0..2 {
                    let want = v * f[i] * f[j];
                    assert!((m.matrix()[(block + i, block + j)] - want).abs() < 1e-14 * want.max(1.0));
                }
            }
        }
        assert!(m.matrix()[(0, 2)].abs() < 1e-15 && m.matrix()[(1, 3)].abs() < 1e-15);
        let o = binary_fim_oracle(&p, x).unwrap();
        assert!((m.matrix() - o.matrix()).abs().max() < 1e-6);
    }
}

#[test]
fn binary_information_matches_oracle() {
    let p = BinaryLogisticProblem::standard(CopulaSpec::frank(5.0).unwrap(), true);
    let m = elementary_fim_binary(&p, 2.8).unwrap();
    let o = binary_fim_oracle(&p, 2.8).unwrap();
    assert_eq!(m.dim(), 5);
    assert!(rel_diff(&m, &o) < 1e-6, "{}", rel_diff(&m, &o));
}

#[test]
fn binary_information_equals_expected_negative_hessian() {
    let p = BinaryLogisticProblem::standard(CopulaSpec::frank(5.0).unwrap(), true);
    let x = 2.8;
    let theta = p.local_parameters().theta();
    let n = theta.len();
    let loglik = |t: &[f64]| -> [f64; 4] {
        let mut q = p.clone();
        q.beta1 = [t[0], t[1]];
        q.beta2 = [t[2], t[3]];
        q.copula = q.copula.with_alpha(t[4]).unwrap();
        q.cell_probs(x).unwrap().as_array().map(f64::ln)
    };
    let cells = p.cell_probs(x).unwrap().as_array();
    let h = 1e-4;
    let mut hess = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let at = |di: f64, dj: f64| {
                let mut t = theta.clone();
                t[i] += di;
                t[j] += dj;
                loglik(&t)
            };
            let (pp, pm, mp, mm) = (at(h, h), at(h, -h), at(-h, h), at(-h, -h));
            let e: f64 = (0..4)
                .map(|y| cells[y] * (pp[y] - pm[y] - mp[y] + mm[y]) / (4.0 * h * h))
                .sum();
            hess[(i, j)] = -e;
        }
    }
    let m = elementary_fim_binary(&p, x).unwrap();
    let diff = (m.matrix() - &hess).abs().max() / m.matrix().abs().max();
    assert!(diff < 1e-5, "{diff}");
}

#[test]
fn binary_information_invariants() {
    let g = BinaryLogisticProblem::standard(CopulaSpec::gumbel(5.45).unwrap(), true);
    let m = elementary_fim_binary(&g, 6.79).unwrap();
    assert_eq!(m.dim(), 5);
    assert!(m.asymmetry() < 1e-12);
    assert!(m.min_eigenvalue() > -1e-9);
    let c = BinaryLogisticProblem::standard(CopulaSpec::clayton(0.24).unwrap(), true);
    let o = binary_fim_oracle(&c, 0.0).unwrap();
    assert!(o.min_eigenvalue() > -1e-9);
}

#[test]
fn design_information_is_a_weighted_sum() {
    let p = BinaryLogisticProblem::standard(CopulaSpec::clayton(1.68).unwrap(), true);
    let single = DesignMeasure::new(vec![2.8], vec![1.0]).unwrap();
    assert_eq!(
        design_fim(&single, &p).unwrap(),
        elementary_fim_binary(&p, 2.8).unwrap()
    );
    let split = DesignMeasure::new(vec![2.8, 2.8], vec![0.5, 0.5]).unwrap();
    let a = design_fim(&split, &p).unwrap();
    assert!(rel_diff(&a, &design_fim(&single, &p).unwrap()) < 1e-15);
    let outside = DesignMeasure::new(vec![11.0], vec![1.0]).unwrap();
    assert!(design_fim(&outside, &p).is_err());
}
