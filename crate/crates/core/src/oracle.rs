//! Independent reference root finder.
//!
//! Durand-Kerner (Weierstrass) simultaneous iteration on the monic form of a
//! low-degree polynomial. Everything else in the crate is checked against it,
//! and the pipeline falls back to it when a series is not applicable.

use num_complex::Complex64;
use thiserror::Error;

use crate::poly::{cmp_complex, Method, Poly, PolyError, RootSet, ZERO};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("invalid oracle configuration: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("no convergence after {iterations} iterations (worst residual {residual:e})")]
    NoConvergence {
        best: Vec<Complex64>,
        residual: f64,
        iterations: usize,
    },
    #[error("cannot match {left} roots against {right}")]
    CardinalityMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub max_iters: usize,
    /// Relative root movement below which iteration stops.
    pub tol: f64,
    pub seed_radius_factor: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_iters: 200,
            tol: 1e-13,
            seed_radius_factor: 1.0,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), OracleError> {
        if !(self.tol > 0.0) {
            return Err(OracleError::InvalidConfig("tol must be positive"));
        }
        if self.max_iters == 0 {
            return Err(OracleError::InvalidConfig("max_iters must be at least 1"));
        }
        if !(self.seed_radius_factor > 0.0) || !self.seed_radius_factor.is_finite() {
            return Err(OracleError::InvalidConfig("seed_radius_factor must be positive"));
        }
        Ok(())
    }
}

/// A root that the cluster pass merged, with how many iterates collapsed onto it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    pub root: Complex64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub roots: RootSet,
    pub iterations: usize,
    pub clusters: Vec<Cluster>,
}

const CLUSTER_RADIUS: f64 = 1e-7;
const SEED_PHASE: f64 = 0.4;

/// All roots of `p`. The polynomial is divided through by its leading
/// coefficient before iterating; residuals in the result refer to `p` itself.
pub fn find_all_roots(p: &Poly, cfg: &OracleConfig) -> Result<RootSet, OracleError> {
    find_all_roots_detailed(p, cfg).map(|r| r.roots)
}

pub fn find_all_roots_detailed(p: &Poly, cfg: &OracleConfig) -> Result<OracleReport, OracleError> {
    cfg.validate()?;
    let d = p.degree();
    if d == 0 {
        return Ok(OracleReport {
            roots: RootSet::new(p, Vec::new(), Method::Oracle),
            iterations: 0,
            clusters: Vec::new(),
        });
    }
    let monic = p.to_monic();
    let c = monic.coeffs();

    // Fujiwara bound: every root lies within 2 max |c_{d-k}|^(1/k).
    let bound = (1..=d)
        .map(|k| c[d - k].norm().powf(1.0 / k as f64))
        .fold(0.0, f64::max);
    let radius = if bound > 0.0 { 2.0 * bound } else { 1.0 } * cfg.seed_radius_factor;
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let phase = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + SEED_PHASE;
            Complex64::from_polar(radius, phase)
        })
        .collect();

    let mut iterations = 0;
    while iterations < cfg.max_iters {
        iterations += 1;
        let mut max_move = 0.0f64;
        for k in 0..d {
            let zk = z[k];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != k {
                    denom *= zk - zj;
                }
            }
            if denom == ZERO {
                // coincident iterates; nudge off the collision
                z[k] = zk + Complex64::from_polar(cfg.tol.max(1e-12) * (1.0 + zk.norm()), k as f64);
                max_move = f64::INFINITY;
                continue;
            }
            let delta = monic.eval(zk) / denom;
            z[k] = zk - delta;
            max_move = max_move.max(delta.norm() / z[k].norm().max(1.0));
        }
        if max_move <= cfg.tol {
            break;
        }
    }

    let clusters = merge_clusters(&mut z);

    let bound = 1e-10 * (1.0 + c.iter().map(|x| x.norm()).fold(0.0, f64::max));
    let worst = z
        .iter()
        .map(|&r| monic.eval(r).norm())
        .fold(0.0, |acc: f64, x| if x.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(x) });
    if !(worst <= bound) {
        z.sort_by(cmp_complex);
        return Err(OracleError::NoConvergence {
            best: z,
            residual: worst,
            iterations,
        });
    }
    Ok(OracleReport {
        roots: RootSet::new(p, z, Method::Oracle),
        iterations,
        clusters,
    })
}

/// Replaces groups of iterates closer than the cluster radius by their mean.
fn merge_clusters(z: &mut [Complex64]) -> Vec<Cluster> {
    let n = z.len();
    let mut group: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let scale = z[i].norm().max(z[j].norm()).max(1.0);
            if (z[i] - z[j]).norm() <= CLUSTER_RADIUS * scale {
                let (gi, gj) = (group[i], group[j]);
                for g in group.iter_mut() {
                    if *g == gj {
                        *g = gi;
                    }
                }
            }
        }
    }
    let mut clusters = Vec::new();
    for leader in 0..n {
        let members: Vec<usize> = (0..n).filter(|&k| group[k] == leader).collect();
        if members.len() < 2 {
            continue;
        }
        let mean = members.iter().map(|&k| z[k]).sum::<Complex64>() / members.len() as f64;
        for &k in &members {
            z[k] = mean;
        }
        clusters.push(Cluster {
            root: mean,
            multiplicity: members.len(),
        });
    }
    clusters
}

/// One greedy pairing between two root multisets.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    /// `(index in left, index in right, distance)`, in the order pairs were taken.
    pub pairs: Vec<(usize, usize, f64)>,
    pub max_distance: f64,
    pub success: bool,
}

/// Pairs the two multisets by repeatedly taking the closest unmatched pair.
pub fn match_multisets(
    left: &[Complex64],
    right: &[Complex64],
    tol: f64,
) -> Result<MatchReport, OracleError> {
    if left.len() != right.len() {
        return Err(OracleError::CardinalityMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    let mut candidates: Vec<(f64, usize, usize)> = Vec::with_capacity(left.len() * right.len());
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            candidates.push(((a - b).norm(), i, j));
        }
    }
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let mut used_left = vec![false; left.len()];
    let mut used_right = vec![false; right.len()];
    let mut pairs = Vec::with_capacity(left.len());
    for (dist, i, j) in candidates {
        if used_left[i] || used_right[j] {
            continue;
        }
        used_left[i] = true;
        used_right[j] = true;
        pairs.push((i, j, dist));
    }
    let max_distance = pairs.iter().map(|p| p.2).fold(0.0, f64::max);
    Ok(MatchReport {
        pairs,
        max_distance,
        success: max_distance <= tol,
    })
}
