//! Quadratic Tschirnhaus reduction of `x^5 + a3 x^3 + a1 x + a0` to the
//! principal form `y^5 + b2 y^2 + b1 y + b0`, and the solver built on it.
//!
//! The map `y = x^2 + alpha x + beta` is fixed by requiring the first two
//! power sums of the image roots to vanish. With `S1 = S3 = 0` for the
//! depressed quintic this gives `beta = -S2 / 5` and
//! `alpha^2 = -(S4 + 2 beta S2 + 5 beta^2) / S2`. The image power sums
//! `S3(y)`, `S4(y)`, `S5(y)` are obtained by expanding `(x^2 + alpha x + beta)^n`
//! and contracting with `S0 .. S10`, then `b2 = -S3(y)/3`, `b1 = -S4(y)/4`,
//! `b0 = -S5(y)/5`.

mod pipeline;

pub use pipeline::{
    solve_pipeline, FallbackReason, PipelineOptions, PipelineReport, ScaledPrincipal, StageDiagnostics,
};

use num_complex::Complex64;
use thiserror::Error;

use crate::oracle::{find_all_roots, OracleConfig, OracleError};
use crate::poly::{quadratic_roots, DepressedQuintic, Poly, PrincipalQuintic, ONE, ZERO};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TschirnhausError {
    /// `a3 = 0`: the input is already principal. Carries the identity map.
    #[error("quintic is already principal")]
    AlreadyPrincipal(TschirnhausMap),
    #[error("both branches of alpha collapse distinct roots or lose principality")]
    DegenerateMap,
    #[error("rescaling needs a nonzero constant term; z = 0 is a root")]
    ZeroConstantTerm,
    #[error("rescaling needs a nonzero linear term")]
    ZeroLinearTerm,
    #[error("no preimage within tolerance (best residual {best:e}, tolerance {tol:e})")]
    NoPreimageWithinTolerance { best: f64, tol: f64 },
    #[error("oracle check failed: {0}")]
    Oracle(#[from] OracleError),
}

/// `S_0 ..= S_10` for the five roots of a depressed quintic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSums {
    sums: [Complex64; 11],
}

impl PowerSums {
    /// `S_n`, with `S_0 = 5`.
    pub fn get(&self, n: usize) -> Complex64 {
        self.sums[n]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.sums
    }
}

/// Newton's identities for the monic quintic with `a4 = a2 = 0`.
pub fn power_sums(q: &DepressedQuintic) -> PowerSums {
    // c[i] multiplies x^i
    let c = [q.a0, q.a1, ZERO, q.a3, ZERO, ONE];
    let mut s = [ZERO; 11];
    s[0] = Complex64::new(5.0, 0.0);
    for n in 1..=10 {
        let mut acc = if n <= 5 { -(n as f64) * c[5 - n] } else { ZERO };
        for j in 1..=n.min(5) {
            if j < n {
                acc -= c[5 - j] * s[n - j];
            }
        }
        s[n] = acc;
    }
    // a4 = a2 = 0 forces the odd low sums to vanish identically
    debug_assert!(s[1] == ZERO && s[3] == ZERO);
    PowerSums { sums: s }
}

/// `y = x^2 + alpha x + beta` together with the principal quintic
/// `y^5 + b2 y^2 + b1 y + b0` its image roots satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TschirnhausMap {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub b2: Complex64,
    pub b1: Complex64,
    pub b0: Complex64,
    /// Set when no transformation was applied (`y = x`).
    pub identity: bool,
}

impl TschirnhausMap {
    pub fn identity_for(q: &DepressedQuintic) -> Self {
        Self {
            alpha: ZERO,
            beta: ZERO,
            b2: ZERO,
            b1: q.a1,
            b0: q.a0,
            identity: true,
        }
    }

    pub fn apply(&self, x: Complex64) -> Complex64 {
        if self.identity {
            x
        } else {
            x * x + self.alpha * x + self.beta
        }
    }

    pub fn principal_poly(&self) -> Poly {
        Poly::new(vec![self.b0, self.b1, self.b2, ZERO, ZERO, ONE]).expect("monic quintic")
    }
}

/// `sum_k (x_k^2 + alpha x_k + beta)^n` from the power sums of the `x_k`.
pub fn image_power_sum(sums: &PowerSums, alpha: Complex64, beta: Complex64, n: usize) -> Complex64 {
    let mut expansion = vec![ONE];
    for _ in 0..n {
        let mut next = vec![ZERO; expansion.len() + 2];
        for (i, &e) in expansion.iter().enumerate() {
            next[i] += e * beta;
            next[i + 1] += e * alpha;
            next[i + 2] += e;
        }
        expansion = next;
    }
    expansion.iter().enumerate().map(|(i, &e)| e * sums.get(i)).sum()
}

fn map_for_alpha(sums: &PowerSums, alpha: Complex64, beta: Complex64) -> TschirnhausMap {
    TschirnhausMap {
        alpha,
        beta,
        b2: -image_power_sum(sums, alpha, beta, 3) / 3.0,
        b1: -image_power_sum(sums, alpha, beta, 4) / 4.0,
        b0: -image_power_sum(sums, alpha, beta, 5) / 5.0,
        identity: false,
    }
}

/// `beta = -S2 / 5` and the principal square root for `alpha`.
pub fn derived_coefficients(q: &DepressedQuintic) -> (Complex64, Complex64) {
    let s = power_sums(q);
    let (s2, s4) = (s.get(2), s.get(4));
    let beta = -s2 / 5.0;
    let alpha = (-(s4 + 2.0 * beta * s2 + 5.0 * beta * beta) / s2).sqrt();
    (alpha, beta)
}

/// The closed-form `alpha = 3 a3 / 5 - 2 a1 / a3`, `beta = 2 a3 / 3` that is
/// often quoted for this reduction. It does not satisfy the vanishing
/// power-sum conditions; kept for comparison in reports only.
pub fn printed_coefficients(q: &DepressedQuintic) -> (Complex64, Complex64) {
    (0.6 * q.a3 - 2.0 * q.a1 / q.a3, 2.0 * q.a3 / 3.0)
}

const PRINCIPALITY_TOL: f64 = 1e-9;
const COLLAPSE_TOL: f64 = 1e-8;

/// How well a candidate map behaves on the oracle roots.
#[derive(Debug, Clone, Copy)]
struct MapCheck {
    principality_defect: f64,
    separation: f64,
}

impl MapCheck {
    fn acceptable(&self) -> bool {
        self.principality_defect <= PRINCIPALITY_TOL && self.separation > COLLAPSE_TOL
    }
}

/// Relative size of the first two power sums of the mapped roots.
pub fn principality_defect(ys: &[Complex64]) -> f64 {
    let p1: Complex64 = ys.iter().sum();
    let p2: Complex64 = ys.iter().map(|y| y * y).sum();
    let n1: f64 = ys.iter().map(|y| y.norm()).sum();
    let n2: f64 = ys.iter().map(|y| y.norm_sqr()).sum();
    (p1.norm() / (1.0 + n1)).max(p2.norm() / (1.0 + n2))
}

fn check_map(map: &TschirnhausMap, xs: &[Complex64]) -> MapCheck {
    let ys: Vec<Complex64> = xs.iter().map(|&x| map.apply(x)).collect();
    let x_scale = 1.0 + xs.iter().map(|x| x.norm()).fold(0.0, f64::max);
    let y_scale = 1.0 + ys.iter().map(|y| y.norm()).fold(0.0, f64::max);
    let mut separation = f64::INFINITY;
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            // repeated roots of the input are not the map's fault
            if (xs[i] - xs[j]).norm() <= COLLAPSE_TOL * x_scale {
                continue;
            }
            separation = separation.min((ys[i] - ys[j]).norm() / y_scale);
        }
    }
    MapCheck {
        principality_defect: principality_defect(&ys),
        separation,
    }
}

/// Builds the quadratic Tschirnhaus map for `q`, checking the result on the
/// oracle roots of `q` and switching to `-alpha` when the principal branch
/// misbehaves.
pub fn reduce_to_principal(q: &DepressedQuintic) -> Result<TschirnhausMap, TschirnhausError> {
    reduce_to_principal_with(q, &OracleConfig::default())
}

pub fn reduce_to_principal_with(
    q: &DepressedQuintic,
    oracle: &OracleConfig,
) -> Result<TschirnhausMap, TschirnhausError> {
    if q.a3 == ZERO {
        return Err(TschirnhausError::AlreadyPrincipal(TschirnhausMap::identity_for(q)));
    }
    let sums = power_sums(q);
    let (alpha, beta) = derived_coefficients(q);
    let xs = find_all_roots(&q.to_poly(), oracle)?.roots;
    for candidate in [alpha, -alpha] {
        let map = map_for_alpha(&sums, candidate, beta);
        if check_map(&map, &xs).acceptable() {
            return Ok(map);
        }
    }
    Err(TschirnhausError::DegenerateMap)
}

/// Maps `z^5 + b2 z^2 + b1 z + b0` onto `B w^5 + A w^2 + w + 1` via
/// `z = scale * w`, `scale = b0 / b1`, `A = b0 b2 / b1^2`, `B = b0^4 / b1^5`.
pub fn rescale(
    b2: Complex64,
    b1: Complex64,
    b0: Complex64,
) -> Result<(PrincipalQuintic, Complex64), TschirnhausError> {
    if b0 == ZERO {
        return Err(TschirnhausError::ZeroConstantTerm);
    }
    if b1 == ZERO {
        return Err(TschirnhausError::ZeroLinearTerm);
    }
    let a = b0 * b2 / (b1 * b1);
    let b = b0.powu(4) / b1.powu(5);
    Ok((PrincipalQuintic::new(a, b), b0 / b1))
}

/// Default pull-back tolerance: `1e-7 (1 + max |a_i|)` on `|q(x)|`.
pub fn default_preimage_tol(original: &DepressedQuintic) -> f64 {
    1e-7 * (1.0 + original.max_coeff_norm())
}

/// Solves `x^2 + alpha x + beta = y` and returns the preimage that is a root
/// of `original`.
pub fn invert_map(
    map: &TschirnhausMap,
    y: Complex64,
    original: &DepressedQuintic,
) -> Result<Complex64, TschirnhausError> {
    invert_map_with_tol(map, y, original, default_preimage_tol(original))
}

pub fn invert_map_with_tol(
    map: &TschirnhausMap,
    y: Complex64,
    original: &DepressedQuintic,
    tol: f64,
) -> Result<Complex64, TschirnhausError> {
    let poly = original.to_poly();
    if map.identity {
        let best = poly.eval(y).norm();
        return if best <= tol {
            Ok(y)
        } else {
            Err(TschirnhausError::NoPreimageWithinTolerance { best, tol })
        };
    }
    let (x1, x2) = quadratic_roots(ONE, map.alpha, map.beta - y);
    let (r1, r2) = (poly.eval(x1).norm(), poly.eval(x2).norm());
    let pick_first = if (r1 - r2).abs() <= 1e-12 {
        x1.im
            .total_cmp(&x2.im)
            .then(x1.re.total_cmp(&x2.re))
            .is_le()
    } else {
        r1 < r2
    };
    let (x, best) = if pick_first { (x1, r1) } else { (x2, r2) };
    if best <= tol {
        Ok(x)
    } else {
        Err(TschirnhausError::NoPreimageWithinTolerance { best, tol })
    }
}
