//! Four-step solver for `x^5 + a3 x^3 + a1 x + a0 = 0`.
//!
//! 1. Reduce to `y^5 + b2 y^2 + b1 y + b0` by the quadratic Tschirnhaus map.
//! 2. Rescale to `B w^5 + A w^2 + w + 1`.
//! 3. Sum the double series for one root when `(A, B)` is inside its domain.
//! 4. Deflate that root, solve the remaining quartic, and pull all five
//!    principal roots back through the map.
//!
//! Whenever a stage cannot run, the oracle takes over that stage and the
//! report records why. The final root set is always checked against the
//! oracle roots of the input.

use std::fmt;

use num_complex::Complex64;

use super::{
    invert_map_with_tol, principality_defect, printed_coefficients, reduce_to_principal_with, rescale,
    TschirnhausError, TschirnhausMap,
};
use crate::oracle::{find_all_roots, match_multisets, OracleConfig};
use crate::poly::{deflate, solve_quartic, DepressedQuintic, Method, PrincipalQuintic, RootSet};
use crate::series::{convergence_margin, passare_tsikh_root, SeriesError, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineOptions {
    pub rel_tol: f64,
    pub max_shells: usize,
    /// Bound on every returned root's scale-free residual.
    pub pipeline_tol: f64,
    /// Bound on the series root's residual before it is divided out.
    pub deflation_tol: f64,
    /// Bound on the distance to the oracle roots of the input.
    pub match_tol: f64,
    pub oracle: OracleConfig,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            rel_tol: crate::series::DEFAULT_REL_TOL,
            max_shells: crate::series::DEFAULT_MAX_SHELLS,
            pipeline_tol: 1e-7,
            deflation_tol: 1e-8,
            match_tol: 1e-7,
            oracle: OracleConfig::default(),
        }
    }
}

/// Why a stage was handed to the oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum FallbackReason {
    /// Both branches of the map collapse roots or lose principality.
    DegenerateMap,
    ZeroConstantTerm,
    ZeroLinearTerm,
    /// The rescaled coefficients are outside the series' domain.
    OutsideDomain { margin: f64 },
    Series(SeriesError),
    Deflation { residual: f64 },
    Pullback(String),
    /// The assembled roots failed the residual or oracle comparison.
    Verification { max_residual: f64, match_distance: f64 },
    Oracle(String),
}

impl fmt::Display for FallbackReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FallbackReason::DegenerateMap => write!(f, "degenerate_map"),
            FallbackReason::ZeroConstantTerm => write!(f, "zero_constant_term"),
            FallbackReason::ZeroLinearTerm => write!(f, "zero_linear_term"),
            FallbackReason::OutsideDomain { .. } => write!(f, "outside_domain"),
            FallbackReason::Series(e) => write!(f, "series: {e}"),
            FallbackReason::Deflation { residual } => write!(f, "deflation residual {residual:e}"),
            FallbackReason::Pullback(e) => write!(f, "pullback: {e}"),
            FallbackReason::Verification {
                max_residual,
                match_distance,
            } => write!(
                f,
                "verification: residual {max_residual:e}, oracle distance {match_distance:e}"
            ),
            FallbackReason::Oracle(e) => write!(f, "oracle: {e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledPrincipal {
    pub quintic: PrincipalQuintic,
    /// `b0 / b1`; principal roots are `scale * w`.
    pub scale: Complex64,
}

/// Per-stage measurements; `None` when the stage did not run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct StageDiagnostics {
    pub principality_defect: Option<f64>,
    pub deflation_residual: Option<f64>,
    pub quartic_max_residual: Option<f64>,
    pub principal_max_residual: Option<f64>,
    pub max_pullback_residual: Option<f64>,
    pub oracle_match_distance: Option<f64>,
    /// The commonly quoted closed forms for `alpha`, `beta`, for comparison.
    pub printed_alpha: Option<Complex64>,
    pub printed_beta: Option<Complex64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineReport {
    pub input: DepressedQuintic,
    pub map: Option<TschirnhausMap>,
    pub scaled: Option<ScaledPrincipal>,
    pub margin: Option<f64>,
    pub series_root: Option<SeriesResult>,
    /// Roots of the principal quintic, series root first when present.
    pub principal_roots: Vec<Complex64>,
    pub recovered_roots: RootSet,
    pub fallback_used: bool,
    pub fallback_reason: Option<FallbackReason>,
    pub diagnostics: StageDiagnostics,
}

impl PipelineReport {
    /// True when the root set came out of the series, not the oracle.
    pub fn series_path(&self) -> bool {
        !self.fallback_used && self.series_root.is_some()
    }
}

/// Runs the four steps on `q`. Never fails: trouble in any stage is routed
/// to the oracle and recorded in the report.
pub fn solve_pipeline(q: &DepressedQuintic, opts: &PipelineOptions) -> PipelineReport {
    let poly = q.to_poly();
    let mut report = PipelineReport {
        input: *q,
        map: None,
        scaled: None,
        margin: None,
        series_root: None,
        principal_roots: Vec::new(),
        recovered_roots: RootSet::new(&poly, Vec::new(), Method::Pipeline),
        fallback_used: false,
        fallback_reason: None,
        diagnostics: StageDiagnostics::default(),
    };

    let oracle_roots = match find_all_roots(&poly, &opts.oracle) {
        Ok(set) => set,
        Err(e) => {
            // Nothing to verify against; keep whatever the oracle had.
            report.fallback_used = true;
            report.fallback_reason = Some(FallbackReason::Oracle(e.to_string()));
            if let crate::oracle::OracleError::NoConvergence { best, .. } = e {
                report.recovered_roots = RootSet::new(&poly, best, Method::Oracle);
            }
            return report;
        }
    };

    // Step 1
    if q.a3 != Complex64::new(0.0, 0.0) {
        let (alpha, beta) = printed_coefficients(q);
        report.diagnostics.printed_alpha = Some(alpha);
        report.diagnostics.printed_beta = Some(beta);
    }
    let map = match reduce_to_principal_with(q, &opts.oracle) {
        Ok(map) => map,
        Err(TschirnhausError::AlreadyPrincipal(map)) => map,
        Err(TschirnhausError::DegenerateMap) => {
            return oracle_fallback(report, oracle_roots, FallbackReason::DegenerateMap);
        }
        Err(e) => return oracle_fallback(report, oracle_roots, FallbackReason::Oracle(e.to_string())),
    };
    report.map = Some(map);
    let mapped: Vec<Complex64> = oracle_roots.roots.iter().map(|&x| map.apply(x)).collect();
    report.diagnostics.principality_defect = Some(principality_defect(&mapped));
    let principal = map.principal_poly();

    // Steps 2 and 3
    let mut series_point = None;
    match rescale(map.b2, map.b1, map.b0) {
        Ok((quintic, scale)) => {
            report.scaled = Some(ScaledPrincipal { quintic, scale });
            let margin = convergence_margin(&quintic);
            report.margin = Some(margin);
            if margin < 0.0 {
                match passare_tsikh_root(&quintic, opts.rel_tol, opts.max_shells) {
                    Ok(series) => {
                        report.series_root = Some(series);
                        series_point = Some(scale * series.value);
                    }
                    Err(e) => {
                        report.fallback_used = true;
                        report.fallback_reason = Some(FallbackReason::Series(e));
                    }
                }
            } else {
                report.fallback_used = true;
                report.fallback_reason = Some(FallbackReason::OutsideDomain { margin });
            }
        }
        Err(e) => {
            report.fallback_used = true;
            report.fallback_reason = Some(match e {
                TschirnhausError::ZeroConstantTerm => FallbackReason::ZeroConstantTerm,
                _ => FallbackReason::ZeroLinearTerm,
            });
        }
    }

    // Step 4: the other four principal roots
    let mut principal_roots = Vec::with_capacity(5);
    if let Some(y0) = series_point {
        match deflate(&principal, y0, opts.deflation_tol) {
            Ok(quartic) => {
                report.diagnostics.deflation_residual = Some(principal.residual(y0));
                let k = quartic.coeffs();
                let rest = solve_quartic(k[3], k[2], k[1], k[0]);
                report.diagnostics.quartic_max_residual = Some(rest.max_residual());
                principal_roots.push(y0);
                principal_roots.extend(rest.roots);
            }
            Err(crate::poly::PolyError::DeflationResidualTooLarge { residual, .. }) => {
                report.fallback_used = true;
                report.fallback_reason = Some(FallbackReason::Deflation { residual });
            }
            Err(e) => unreachable!("deflating a monic quintic: {e}"),
        }
    }
    if principal_roots.is_empty() {
        match find_all_roots(&principal, &opts.oracle) {
            Ok(set) => principal_roots = set.roots,
            Err(e) => return oracle_fallback(report, oracle_roots, FallbackReason::Oracle(e.to_string())),
        }
    }
    report.diagnostics.principal_max_residual = Some(
        principal_roots
            .iter()
            .map(|&y| principal.residual(y))
            .fold(0.0, f64::max),
    );
    report.principal_roots = principal_roots.clone();

    let mut xs = Vec::with_capacity(5);
    let tol = f64::INFINITY;
    for &y in &principal_roots {
        match invert_map_with_tol(&map, y, q, tol) {
            Ok(x) => xs.push(x),
            Err(e) => return oracle_fallback(report, oracle_roots, FallbackReason::Pullback(e.to_string())),
        }
    }
    let recovered = RootSet::new(&poly, xs, Method::Pipeline);
    report.diagnostics.max_pullback_residual = Some(recovered.max_residual());

    let distance = match_multisets(&recovered.roots, &oracle_roots.roots, opts.match_tol)
        .map(|m| m.max_distance)
        .unwrap_or(f64::INFINITY);
    report.diagnostics.oracle_match_distance = Some(distance);
    let max_residual = recovered.max_residual();
    if !(max_residual <= opts.pipeline_tol) || !(distance <= opts.match_tol) {
        return oracle_fallback(
            report,
            oracle_roots,
            FallbackReason::Verification {
                max_residual,
                match_distance: distance,
            },
        );
    }
    report.recovered_roots = recovered;
    report
}

fn oracle_fallback(mut report: PipelineReport, roots: RootSet, reason: FallbackReason) -> PipelineReport {
    report.fallback_used = true;
    report.fallback_reason = Some(reason);
    report.recovered_roots = roots;
    report
}
