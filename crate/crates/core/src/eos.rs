//! Landau free energy `F = -f u + (a/2) u^2 + (b/4) u^4 + (c/6) u^6` and its
//! equation of state `a u + b u^3 + c u^5 = f`.
//!
//! The stationary points of `F` are the roots of a depressed quintic, so the
//! order parameter `u(f)` comes straight out of [`solve_pipeline`]. On the
//! critical isotherm (`a = 0`) the quintic is a trinomial and is solved by the
//! trinomial series instead.

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::oracle::{find_all_roots, match_multisets};
use crate::poly::{deflate, solve_quadratic, DepressedQuintic, Poly};
use crate::series::{normalize_trinomial, trinomial_radius, trinomial_root, Trinomial, DEFAULT_MAX_TERMS};
use crate::tschirnhaus::{solve_pipeline, PipelineOptions};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EosError {
    #[error("sextic coefficient c is zero")]
    ZeroSexticCoefficient,
    #[error("sextic coefficient c = {0} is negative; the free energy is unbounded below")]
    NegativeSexticCoefficient(f64),
    #[error("parameter {0} is not finite")]
    NonFinite(&'static str),
    #[error("not on the critical isotherm: {0}")]
    NotCritical(&'static str),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandauParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub f: f64,
}

impl LandauParams {
    pub fn new(a: f64, b: f64, c: f64, f: f64) -> Self {
        Self { a, b, c, f }
    }

    fn validate(&self) -> Result<(), EosError> {
        for (name, v) in [("a", self.a), ("b", self.b), ("c", self.c), ("f", self.f)] {
            if !v.is_finite() {
                return Err(EosError::NonFinite(name));
            }
        }
        if self.c == 0.0 {
            return Err(EosError::ZeroSexticCoefficient);
        }
        if self.c < 0.0 {
            return Err(EosError::NegativeSexticCoefficient(self.c));
        }
        Ok(())
    }

    /// `a u + b u^3 + c u^5 - f`, the derivative of the free energy.
    pub fn state_residual(&self, u: f64) -> f64 {
        let u2 = u * u;
        u * (self.a + u2 * (self.b + u2 * self.c)) - self.f
    }

    /// `a + 3 b u^2 + 5 c u^4`.
    pub fn curvature(&self, u: f64) -> f64 {
        let u2 = u * u;
        self.a + u2 * (3.0 * self.b + 5.0 * self.c * u2)
    }
}

/// Temperature-linear quadratic coefficient `a = slope (t - t_c)`.
pub fn landau_a(slope: f64, t: f64, t_c: f64) -> f64 {
    slope * (t - t_c)
}

/// `u^5 + (b/c) u^3 + (a/c) u - f/c`.
pub fn to_depressed_quintic(p: &LandauParams) -> Result<DepressedQuintic, EosError> {
    if p.c == 0.0 {
        return Err(EosError::ZeroSexticCoefficient);
    }
    Ok(DepressedQuintic::from_real(p.b / p.c, p.a / p.c, -p.f / p.c))
}

pub fn free_energy(p: &LandauParams, u: f64) -> f64 {
    let u2 = u * u;
    -p.f * u + u2 * (p.a / 2.0 + u2 * (p.b / 4.0 + u2 * p.c / 6.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EosMethod {
    Pipeline,
    TrinomialSeries,
    Oracle,
}

impl EosMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            EosMethod::Pipeline => "pipeline",
            EosMethod::TrinomialSeries => "trinomial_series",
            EosMethod::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryPoint {
    pub u: f64,
    pub free_energy: f64,
    /// Positive curvature of `F` at `u`.
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumResult {
    pub u_eq: f64,
    /// Real stationary points in increasing `u`.
    pub all_stationary: Vec<StationaryPoint>,
    pub method: EosMethod,
    /// Several stationary points share the lowest free energy.
    pub degenerate: bool,
    /// Convergence margin of the rescaled principal quintic, when one exists.
    pub margin: Option<f64>,
    /// Series terms (shells for the pipeline) summed, when a series ran.
    pub terms_used: Option<usize>,
}

impl EquilibriumResult {
    /// The tied global minimizers, in increasing `u`.
    pub fn minimizers(&self) -> Vec<f64> {
        let best = self.all_stationary.iter().map(|s| s.free_energy).fold(f64::INFINITY, f64::min);
        self.all_stationary
            .iter()
            .filter(|s| s.free_energy <= best + TIE_TOL)
            .map(|s| s.u)
            .collect()
    }
}

const REAL_TOL: f64 = 1e-8;
const TIE_TOL: f64 = 1e-12;
const POLISH_STEPS: usize = 3;

pub fn equilibrium(p: &LandauParams) -> Result<EquilibriumResult, EosError> {
    equilibrium_with(p, &PipelineOptions::default())
}

/// The global free-energy minimizer. The critical isotherm goes to
/// [`critical_isotherm_with`]; everything else to the pipeline.
pub fn equilibrium_with(p: &LandauParams, opts: &PipelineOptions) -> Result<EquilibriumResult, EosError> {
    p.validate()?;
    if p.a == 0.0 && p.b != 0.0 && p.f != 0.0 {
        return critical_isotherm_with(p, opts);
    }
    let q = to_depressed_quintic(p)?;
    let report = solve_pipeline(&q, opts);
    let method = if report.series_path() {
        EosMethod::Pipeline
    } else {
        EosMethod::Oracle
    };
    let terms = report.series_root.map(|s| s.terms_used);
    Ok(select(p, &report.recovered_roots.roots, method, report.margin, terms))
}

pub fn critical_isotherm(p: &LandauParams) -> Result<EquilibriumResult, EosError> {
    critical_isotherm_with(p, &PipelineOptions::default())
}

/// Solves `c u^5 + b u^3 = f` by rewriting it as `1 + y^3 + a y^5 = 0` and
/// summing the trinomial series on all three branches. The remaining two
/// roots come from the quadratic left after dividing those out. Outside the
/// series' radius, or when the result disagrees with the oracle, the oracle
/// roots are used.
pub fn critical_isotherm_with(p: &LandauParams, opts: &PipelineOptions) -> Result<EquilibriumResult, EosError> {
    p.validate()?;
    if p.a != 0.0 {
        return Err(EosError::NotCritical("a must be zero"));
    }
    if p.b == 0.0 {
        return Err(EosError::NotCritical("b must be nonzero"));
    }
    if p.f == 0.0 {
        return Err(EosError::NotCritical("f must be nonzero"));
    }
    let q = to_depressed_quintic(p)?;
    let poly = q.to_poly();
    let oracle = find_all_roots(&poly, &opts.oracle).ok();

    let series = series_isotherm_roots(p, &poly, opts);
    if let (Some((roots, terms)), Some(oracle)) = (&series, &oracle) {
        let agree = match_multisets(roots, &oracle.roots, 1e-8).is_ok_and(|m| m.success);
        if agree {
            return Ok(select(p, roots, EosMethod::TrinomialSeries, None, Some(*terms)));
        }
    }
    let roots = match oracle {
        Some(set) => set.roots,
        None => solve_pipeline(&q, opts).recovered_roots.roots,
    };
    Ok(select(p, &roots, EosMethod::Oracle, None, None))
}

fn series_isotherm_roots(p: &LandauParams, poly: &Poly, opts: &PipelineOptions) -> Option<(Vec<Complex64>, usize)> {
    let (m, n) = (3, 5);
    let (base, lambda) =
        normalize_trinomial(Complex64::from(-p.f), Complex64::from(p.b), Complex64::from(p.c), m, n).ok()?;
    if base.a.norm() >= trinomial_radius(m, n) {
        return None;
    }
    let mut roots = Vec::with_capacity(5);
    let mut terms = 0;
    for branch in 0..m {
        let t = Trinomial::new(m, n, base.a, branch).ok()?;
        let r = trinomial_root(&t, opts.rel_tol, DEFAULT_MAX_TERMS).ok()?;
        terms = terms.max(r.terms_used);
        roots.push(r.value / lambda);
    }
    let mut rest = poly.clone();
    for &u in &roots {
        rest = deflate(&rest, u, opts.deflation_tol).ok()?;
    }
    let k = rest.coeffs();
    roots.extend(solve_quadratic(k[2], k[1], k[0]).ok()?.roots);
    Some((roots, terms))
}

fn newton_polish(p: &LandauParams, mut u: f64) -> f64 {
    for _ in 0..POLISH_STEPS {
        let g = p.state_residual(u);
        let dg = p.curvature(u);
        if g == 0.0 || dg == 0.0 {
            break;
        }
        let next = u - g / dg;
        if p.state_residual(next).abs() >= g.abs() {
            break;
        }
        u = next;
    }
    u
}

/// Keeps the (numerically) real roots, polishes them, and picks the global
/// minimizer of `F`.
fn select(
    p: &LandauParams,
    roots: &[Complex64],
    method: EosMethod,
    margin: Option<f64>,
    terms_used: Option<usize>,
) -> EquilibriumResult {
    let mut reals: Vec<f64> = roots.iter().filter(|r| r.im.abs() < REAL_TOL).map(|r| r.re).collect();
    if reals.is_empty() {
        // A clustered multiple root can leave every copy slightly off the
        // axis; an odd-degree real polynomial still has a real root there.
        let min_im = roots.iter().map(|r| r.im.abs()).fold(f64::INFINITY, f64::min);
        reals = roots.iter().filter(|r| r.im.abs() == min_im).map(|r| r.re).collect();
    }
    assert!(!reals.is_empty(), "no real stationary point for {p:?}");

    let mut us: Vec<f64> = reals.into_iter().map(|u| newton_polish(p, u)).collect();
    us.sort_by(f64::total_cmp);
    us.dedup_by(|x, y| (*x - *y).abs() <= 1e-9 * (1.0 + y.abs()));

    let all_stationary: Vec<StationaryPoint> = us
        .iter()
        .map(|&u| StationaryPoint {
            u,
            free_energy: free_energy(p, u),
            stable: p.curvature(u) > 0.0,
        })
        .collect();
    let best = all_stationary.iter().map(|s| s.free_energy).fold(f64::INFINITY, f64::min);
    let tied: Vec<f64> = all_stationary
        .iter()
        .filter(|s| s.free_energy <= best + TIE_TOL)
        .map(|s| s.u)
        .collect();
    // the largest tied minimizer, which is nonnegative for symmetric ties
    let u_eq = tied.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    EquilibriumResult {
        u_eq,
        degenerate: tied.len() > 1,
        all_stationary,
        method,
        margin,
        terms_used,
    }
}

/// A rectangular `(a, f)` grid with fixed `b`, `c`. Endpoints are included;
/// a single step uses the lower endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepGrid {
    pub a_min: f64,
    pub a_max: f64,
    pub a_steps: usize,
    pub f_min: f64,
    pub f_max: f64,
    pub f_steps: usize,
    pub b: f64,
    pub c: f64,
}

impl SweepGrid {
    pub fn validate(&self) -> Result<(), EosError> {
        if self.a_steps == 0 || self.f_steps == 0 {
            return Err(EosError::InvalidGrid("step counts must be at least 1".into()));
        }
        let all = [self.a_min, self.a_max, self.f_min, self.f_max, self.b, self.c];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(EosError::InvalidGrid("bounds must be finite".into()));
        }
        if self.a_min > self.a_max || self.f_min > self.f_max {
            return Err(EosError::InvalidGrid("min exceeds max".into()));
        }
        if !(self.c > 0.0) {
            return Err(EosError::InvalidGrid(format!("c must be positive, got {}", self.c)));
        }
        Ok(())
    }

    fn axis(lo: f64, hi: f64, steps: usize, i: usize) -> f64 {
        if steps == 1 {
            lo
        } else {
            lo + (hi - lo) * i as f64 / (steps - 1) as f64
        }
    }

    pub fn a_values(&self) -> Vec<f64> {
        (0..self.a_steps).map(|i| Self::axis(self.a_min, self.a_max, self.a_steps, i)).collect()
    }

    pub fn f_values(&self) -> Vec<f64> {
        (0..self.f_steps).map(|i| Self::axis(self.f_min, self.f_max, self.f_steps, i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub params: LandauParams,
    pub result: Result<EquilibriumResult, EosError>,
}

impl SweepCell {
    /// `|a u + b u^3 + c u^5 - f|` at the equilibrium, if there is one.
    pub fn residual(&self) -> Option<f64> {
        self.result.as_ref().ok().map(|r| self.params.state_residual(r.u_eq).abs())
    }
}

pub fn sweep(grid: &SweepGrid) -> Result<Vec<SweepCell>, EosError> {
    sweep_with(grid, &PipelineOptions::default())
}

/// Equilibria on every grid point, row-major with `a` outer and `f` inner.
/// Cells run in parallel; a failing cell keeps its error and the rest go on.
pub fn sweep_with(grid: &SweepGrid, opts: &PipelineOptions) -> Result<Vec<SweepCell>, EosError> {
    grid.validate()?;
    let (a_values, f_values) = (grid.a_values(), grid.f_values());
    let params: Vec<LandauParams> = a_values
        .iter()
        .flat_map(|&a| f_values.iter().map(move |&f| LandauParams::new(a, grid.b, grid.c, f)))
        .collect();
    Ok(params
        .into_par_iter()
        .map(|params| SweepCell {
            params,
            result: equilibrium_with(&params, opts),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, b: f64, c: f64, f: f64) -> LandauParams {
        LandauParams::new(a, b, c, f)
    }

    #[test]
    fn depressed_mapping() {
        let q = to_depressed_quintic(&params(1.0, 2.0, 2.0, 4.0)).unwrap();
        assert_eq!(q, DepressedQuintic::from_real(1.0, 0.5, -2.0));
        let q = to_depressed_quintic(&params(0.0, 0.0, 1.0, 0.0)).unwrap();
        assert_eq!(q, DepressedQuintic::from_real(0.0, 0.0, 0.0));
        assert_eq!(
            to_depressed_quintic(&params(1.0, 1.0, 0.0, 1.0)),
            Err(EosError::ZeroSexticCoefficient)
        );
    }

    #[test]
    fn mapped_roots_solve_the_state_equation() {
        let p = params(1.0, 2.0, 2.0, 4.0);
        let q = to_depressed_quintic(&p).unwrap();
        let roots = find_all_roots(&q.to_poly(), &Default::default()).unwrap();
        for u in roots.roots {
            let g = u * (p.a + u * u * (p.b + u * u * p.c)) - p.f;
            assert!(g.norm() < 1e-9);
        }
    }

    #[test]
    fn free_energy_values() {
        assert_eq!(free_energy(&params(0.3, -1.0, 2.0, 0.7), 0.0), 0.0);
        assert!((free_energy(&params(-1.0, 0.0, 1.0, 0.0), 1.0) + 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(free_energy(&params(0.0, 0.0, 6.0, 0.0), 1.0), 1.0);
        assert_eq!(params(1.0, 1.0, 1.0, 0.0).curvature(1.0), 9.0);
    }

    #[test]
    fn pure_quintic() {
        let r = equilibrium(&params(0.0, 0.0, 1.0, 32.0)).unwrap();
        assert!((r.u_eq - 2.0).abs() < 1e-12);
        assert!(!r.degenerate);
        assert_eq!(r.all_stationary.len(), 1);
    }

    #[test]
    fn single_real_root() {
        let r = equilibrium(&params(1.0, 0.0, 1.0, 2.0)).unwrap();
        assert!((r.u_eq - 1.0).abs() < 1e-12);
        assert_eq!(r.all_stationary.len(), 1);
        assert!(r.all_stationary[0].stable);
    }

    #[test]
    fn symmetric_double_well_tie() {
        let r = equilibrium(&params(-1.0, 0.0, 1.0, 0.0)).unwrap();
        let us: Vec<f64> = r.all_stationary.iter().map(|s| s.u).collect();
        assert_eq!(us.len(), 3);
        assert!((us[0] + 1.0).abs() < 1e-12 && us[1].abs() < 1e-12 && (us[2] - 1.0).abs() < 1e-12);
        assert!(!r.all_stationary[1].stable);
        assert!(r.degenerate);
        assert!((r.u_eq - 1.0).abs() < 1e-12);
        assert_eq!(r.minimizers().len(), 2);
    }

    #[test]
    fn zero_field_quintuple_root() {
        let r = equilibrium(&params(0.0, 0.0, 1.0, 0.0)).unwrap();
        assert!(r.u_eq.abs() < 1e-2);
        assert!(params(0.0, 0.0, 1.0, 0.0).state_residual(r.u_eq).abs() < 1e-7);
    }

    #[test]
    fn critical_isotherm_examples() {
        let r = critical_isotherm(&params(0.0, 2.0, 1.0, 3.0)).unwrap();
        assert!((r.u_eq - 1.0).abs() < 1e-10, "{r:?}");

        let p = params(0.0, 1.0, 1.0, 0.01);
        let r = critical_isotherm(&p).unwrap();
        assert_eq!(r.method, EosMethod::TrinomialSeries);
        let roots = find_all_roots(&to_depressed_quintic(&p).unwrap().to_poly(), &Default::default()).unwrap();
        let oracle_real = roots.roots.iter().find(|r| r.im.abs() < 1e-8).unwrap().re;
        assert!((r.u_eq - oracle_real).abs() < 1e-9);

        let r = critical_isotherm(&params(0.0, 1.0, 1.0, 1e-6)).unwrap();
        assert!((r.u_eq.powi(3) / 1e-6 - 1.0).abs() < 0.01);
    }

    #[test]
    fn critical_isotherm_outside_radius_uses_oracle() {
        let r = critical_isotherm(&params(0.0, 1.0, 1.0, 5.0)).unwrap();
        assert_eq!(r.method, EosMethod::Oracle);
        assert!(params(0.0, 1.0, 1.0, 5.0).state_residual(r.u_eq).abs() < 1e-7 * 6.0);
    }

    #[test]
    fn critical_isotherm_preconditions() {
        assert!(matches!(critical_isotherm(&params(1.0, 1.0, 1.0, 1.0)), Err(EosError::NotCritical(_))));
        assert!(matches!(critical_isotherm(&params(0.0, 0.0, 1.0, 1.0)), Err(EosError::NotCritical(_))));
        assert!(matches!(critical_isotherm(&params(0.0, 1.0, 1.0, 0.0)), Err(EosError::NotCritical(_))));
    }

    #[test]
    fn rejects_unphysical_parameters() {
        assert_eq!(equilibrium(&params(1.0, 0.0, 0.0, 1.0)), Err(EosError::ZeroSexticCoefficient));
        assert!(matches!(
            equilibrium(&params(1.0, 0.0, -1.0, 1.0)),
            Err(EosError::NegativeSexticCoefficient(_))
        ));
        assert_eq!(equilibrium(&params(f64::NAN, 0.0, 1.0, 1.0)), Err(EosError::NonFinite("a")));
    }

    #[test]
    fn one_cell_sweep_is_equilibrium() {
        let grid = SweepGrid {
            a_min: -0.5,
            a_max: -0.5,
            a_steps: 1,
            f_min: 0.2,
            f_max: 0.2,
            f_steps: 1,
            b: 0.0,
            c: 1.0,
        };
        let cells = sweep(&grid).unwrap();
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0].result, equilibrium(&params(-0.5, 0.0, 1.0, 0.2)));
    }

    #[test]
    fn sweep_order_and_validation() {
        let grid = SweepGrid {
            a_min: 0.0,
            a_max: 1.0,
            a_steps: 2,
            f_min: -1.0,
            f_max: 1.0,
            f_steps: 3,
            b: 1.0,
            c: 1.0,
        };
        let cells = sweep(&grid).unwrap();
        let order: Vec<(f64, f64)> = cells.iter().map(|c| (c.params.a, c.params.f)).collect();
        assert_eq!(
            order,
            [(0.0, -1.0), (0.0, 0.0), (0.0, 1.0), (1.0, -1.0), (1.0, 0.0), (1.0, 1.0)]
        );
        assert!(cells.iter().all(|c| c.residual().unwrap() < 1e-7 * 2.0));
        assert!(matches!(
            sweep(&SweepGrid { a_steps: 0, ..grid }),
            Err(EosError::InvalidGrid(_))
        ));
        assert!(matches!(
            sweep(&SweepGrid { c: 0.0, ..grid }),
            Err(EosError::InvalidGrid(_))
        ));
    }

    #[test]
    fn single_well_is_monotone_in_field() {
        let mut last = f64::NEG_INFINITY;
        for i in 0..21 {
            let f = -1.0 + 0.1 * i as f64;
            let u = equilibrium(&params(0.5, 0.3, 1.0, f)).unwrap().u_eq;
            assert!(u > last);
            last = u;
        }
    }
}
