//! One function per CLI verb. Each writes its report to `out` and returns the
//! exit status; errors carry their own status through [`CliError::status`].

use crate::config::{quadrature_rule, ProblemConfig, ProblemSummary, Resolved, DEFAULT_QUAD_GRADING};
use crate::design_file::{DesignFile, DesignMetadata};
use crate::output::{design_table, num, write_csv};
use crate::repro::{self, ReproSettings, Target};
use crate::{CliError, ExitStatus};
use copula_design::design::{certify, d_efficiency, loss_percent, CertificationReport};
use copula_design::optimizer::{fedorov_wynn, DesignCache};
use copula_design::{alpha_from_tau, tau_from_alpha, CopulaFamily, CopulaSpec, DesignMeasure, Model};
use std::io::Write;
use std::path::Path;

/// Overrides shared by several verbs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CommonOptions {
    /// Candidate grid for `optimize`, evaluation grid for `check` and profiles.
    pub grid: Option<usize>,
    /// Certification tolerance.
    pub tol: Option<f64>,
    /// Gauss–Legendre order of the continuous-model quadrature.
    pub quad_order: Option<usize>,
}

fn load(config: &Path, common: &CommonOptions) -> Result<Resolved, CliError> {
    let mut r = ProblemConfig::load(config)?.resolve()?;
    if let Some(n) = common.quad_order {
        r.quadrature = quadrature_rule(n, r.quadrature.grading())?;
    }
    if let Some(t) = common.tol {
        if !(t.is_finite() && t >= 0.0) {
            return Err(CliError::Input(format!("--tol must be a nonnegative number, got {t}")));
        }
        r.optimizer.cert_tol = t;
    }
    Ok(r)
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn load_design(path: &Path, r: &Resolved) -> Result<DesignMeasure, CliError> {
    let design = DesignFile::load(path)?.design()?;
    design.check_within(&r.problem.design_space())?;
    Ok(design)
}

fn print_report(out: &mut dyn Write, report: &CertificationReport) -> Result<(), CliError> {
    if let Some(why) = &report.failure {
        writeln!(out, "not certified: {why}").map_err(io)?;
        return Ok(());
    }
    writeln!(
        out,
        "max sensitivity {:.6} at x = {:.6}; bound {} (tolerance {:e}): {}",
        report.max_sensitivity,
        report.argmax_x,
        report.bound,
        report.tolerance,
        if report.certified { "certified" } else { "NOT certified" }
    )
    .map_err(io)
}

/// `optimize`: writes the design file and, if requested, the iteration trace.
pub fn optimize(
    config: &Path,
    out_path: &Path,
    trace_path: Option<&Path>,
    common: &CommonOptions,
    out: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    let mut r = load(config, common)?;
    if let Some(n) = common.grid {
        r.optimizer.grid_size = n;
        r.optimizer.validate(r.problem.n_params())?;
    }
    let model = Model::new(&r.problem, &r.quadrature)?;
    let result = fedorov_wynn(&model, &r.optimizer)?;
    let summary = ProblemSummary::of(&r.problem);
    let meta = DesignMetadata {
        problem_hash: summary.hash(),
        problem: summary,
        log_det: result.log_det,
        max_sensitivity: result.report.max_sensitivity,
        certified: result.report.certified,
        converged: result.trace.converged,
        cert_grid: r.optimizer.cert_grid,
        cert_tol: r.optimizer.cert_tol,
    };
    DesignFile::new(&result.design, Some(meta)).save(out_path)?;
    if let Some(p) = trace_path {
        crate::output::write_text(p, &repro::trace_csv(&result))?;
    }
    write!(out, "{}", design_table(result.design.points(), result.design.weights())).map_err(io)?;
    writeln!(out, "log det {:.10}", result.log_det).map_err(io)?;
    print_report(out, &result.report)?;
    Ok(if !result.trace.converged {
        ExitStatus::NotConverged
    } else if result.report.certified {
        ExitStatus::Ok
    } else {
        ExitStatus::NotCertified
    })
}

/// `check`: equivalence-theorem certification of a stored design.
pub fn check(
    design: &Path,
    config: &Path,
    profile: Option<&Path>,
    common: &CommonOptions,
    out: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    let r = load(config, common)?;
    let xi = load_design(design, &r)?;
    let model = Model::new(&r.problem, &r.quadrature)?;
    let grid = common.grid.unwrap_or(r.optimizer.cert_grid);
    let report = certify(&xi, &model, grid, r.optimizer.cert_tol)?;
    if report.failure.is_some() {
        print_report(out, &report)?;
        return Err(CliError::Numerical("singular information matrix".into()));
    }
    print_report(out, &report)?;
    if let Some(p) = profile {
        write_profile(p, &report)?;
    }
    Ok(if report.certified {
        ExitStatus::Ok
    } else {
        ExitStatus::NotCertified
    })
}

fn write_profile(path: &Path, report: &CertificationReport) -> Result<(), CliError> {
    let rows: Vec<Vec<String>> = report.profile.iter().map(|&(x, d)| vec![num(x), num(d)]).collect();
    write_csv(path, &["x", "sensitivity"], &rows)
}

/// `sensitivity-profile`: d(x, ξ) over the design space as CSV.
pub fn sensitivity_profile(
    design: &Path,
    config: &Path,
    out_path: &Path,
    common: &CommonOptions,
    out: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    let r = load(config, common)?;
    let xi = load_design(design, &r)?;
    let model = Model::new(&r.problem, &r.quadrature)?;
    let report = certify(
        &xi,
        &model,
        common.grid.unwrap_or(r.optimizer.cert_grid),
        r.optimizer.cert_tol,
    )?;
    if report.failure.is_some() {
        return Err(CliError::Numerical("singular information matrix".into()));
    }
    write_profile(out_path, &report)?;
    writeln!(out, "wrote {} points to {}", report.profile.len(), out_path.display()).map_err(io)?;
    Ok(ExitStatus::Ok)
}

/// `efficiency`: D-efficiency of design A relative to design B.
pub fn efficiency(
    design_a: &Path,
    design_b: &Path,
    config: &Path,
    common: &CommonOptions,
    out: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    let r = load(config, common)?;
    let a = load_design(design_a, &r)?;
    let b = load_design(design_b, &r)?;
    let model = Model::new(&r.problem, &r.quadrature)?;
    let eff = d_efficiency(&a, &b, &model)?;
    writeln!(out, "efficiency {eff:.4}").map_err(io)?;
    writeln!(out, "loss {:.2}%", loss_percent(eff)).map_err(io)?;
    Ok(ExitStatus::Ok)
}

/// Which side of the τ map `tau` starts from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TauQuery {
    Tau(f64),
    Alpha(f64),
}

/// `tau`: converts between Kendall's τ and the family parameter.
pub fn tau(family: &str, query: TauQuery, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let family: CopulaFamily = family.parse()?;
    match query {
        TauQuery::Alpha(a) => {
            let spec = if family.has_parameter() {
                CopulaSpec::new(family, Some(a))?
            } else {
                return Err(CliError::Input("the product copula has no parameter".into()));
            };
            writeln!(out, "tau {:.6}", tau_from_alpha(&spec).value()).map_err(io)?;
        }
        TauQuery::Tau(t) => {
            let spec = alpha_from_tau(family, t)?;
            match spec.alpha() {
                Some(a) => writeln!(out, "alpha {a:.6}"),
                None => writeln!(out, "product copula (no parameter)"),
            }
            .map_err(io)?;
        }
    }
    Ok(ExitStatus::Ok)
}

/// `repro`: runs one study, writes its files into `out_dir`, exits 5 on any
/// in-scope mismatch.
pub fn repro(
    target: Target,
    out_dir: &Path,
    common: &CommonOptions,
    out: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    let mut settings = ReproSettings::default();
    if let Some(n) = common.quad_order {
        settings.quadrature = quadrature_rule(n, DEFAULT_QUAD_GRADING)?;
    }
    if let Some(n) = common.grid {
        settings.optimizer.grid_size = n;
    }
    if let Some(t) = common.tol {
        settings.optimizer.cert_tol = t;
    }
    let report = repro::run(target, &settings, &DesignCache::new())?;
    report.write(out_dir)?;
    write!(out, "{}", report.comparison_text()).map_err(io)?;
    Ok(if report.passed() {
        ExitStatus::Ok
    } else {
        ExitStatus::ReproMismatch
    })
}
