//! Complex polynomials of low degree and the closed-form pieces every solver
//! shares: Horner evaluation, synthetic division, and the quadratic and
//! quartic formulas.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

/// Field over which every root in this crate lives.
pub type ComplexScalar = Complex64;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("coefficient {index} is not finite")]
    NonFiniteCoefficient { index: usize },
    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,
    #[error("leading coefficient vanishes")]
    DegenerateLeadingCoefficient,
    #[error("deflation residual {residual:e} exceeds tolerance {tol:e}")]
    DeflationResidualTooLarge { residual: f64, tol: f64 },
}

/// Dense polynomial with complex coefficients stored in ascending order.
///
/// The leading (highest) coefficient is always nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, dropping vanishing
    /// leading terms.
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self, PolyError> {
        if let Some(index) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(PolyError::NonFiniteCoefficient { index });
        }
        while coeffs.last().is_some_and(|c| *c == ZERO) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![ONE];
        for &r in roots {
            let mut next = vec![ZERO; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Ascending coefficients `c[0] .. c[degree]`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == ONE
    }

    pub fn to_monic(&self) -> Self {
        let lead = self.leading();
        Self {
            coeffs: self.coeffs.iter().map(|c| c / lead).collect(),
        }
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * x + c)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, x: Complex64) -> (Complex64, Complex64) {
        let mut p = ZERO;
        let mut dp = ZERO;
        for &c in self.coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    }

    /// `max(1, max |c_i|)`, the scale residuals are divided by.
    pub fn residual_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(1.0, f64::max)
    }

    /// Scale-free residual `|P(x)| / max(1, max |c_i|)`.
    pub fn residual(&self, x: Complex64) -> f64 {
        self.eval(x).norm() / self.residual_scale()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut coeffs = vec![ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly { coeffs }
    }

    /// Newton refinement that only ever accepts steps lowering `|P|`.
    pub(crate) fn polish(&self, mut x: Complex64, steps: usize) -> Complex64 {
        let mut best = self.eval(x).norm();
        for _ in 0..steps {
            if best == 0.0 {
                break;
            }
            let (p, dp) = self.eval_with_derivative(x);
            if dp == ZERO {
                break;
            }
            let candidate = x - p / dp;
            let value = self.eval(candidate).norm();
            if !(value < best) {
                break;
            }
            x = candidate;
            best = value;
        }
        x
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if *c == ZERO {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match power {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{power}")?,
            }
        }
        Ok(())
    }
}

/// General quintic `c5 x^5 + ... + c0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quintic {
    pub coeffs: [Complex64; 6],
}

impl Quintic {
    pub fn new(coeffs: [Complex64; 6]) -> Result<Self, PolyError> {
        if coeffs[5] == ZERO {
            return Err(PolyError::DegenerateLeadingCoefficient);
        }
        Poly::new(coeffs.to_vec())?;
        Ok(Self { coeffs })
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[5] == ONE
    }

    pub fn to_poly(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.to_vec(),
        }
    }
}

/// `x^5 + a3 x^3 + a1 x + a0`: the shape of the quintic equation of state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DepressedQuintic {
    pub a3: Complex64,
    pub a1: Complex64,
    pub a0: Complex64,
}

impl DepressedQuintic {
    pub fn new(a3: Complex64, a1: Complex64, a0: Complex64) -> Self {
        Self { a3, a1, a0 }
    }

    pub fn from_real(a3: f64, a1: f64, a0: f64) -> Self {
        Self::new(a3.into(), a1.into(), a0.into())
    }

    pub fn to_quintic(&self) -> Quintic {
        Quintic {
            coeffs: [self.a0, self.a1, ZERO, self.a3, ZERO, ONE],
        }
    }

    pub fn to_poly(&self) -> Poly {
        self.to_quintic().to_poly()
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.a3.norm().max(self.a1.norm()).max(self.a0.norm())
    }

    /// The quintic whose roots are `s` times the roots of this one.
    pub fn scaled_roots(&self, s: Complex64) -> Self {
        Self {
            a3: self.a3 * s * s,
            a1: self.a1 * s.powi(4),
            a0: self.a0 * s.powi(5),
        }
    }
}

/// `B x^5 + A x^2 + x + 1`, the normalization the double series solves.
///
/// Fields are named after the coefficients they hold: `a` multiplies `x^2`,
/// `b` multiplies `x^5`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrincipalQuintic {
    pub a: Complex64,
    pub b: Complex64,
}

impl PrincipalQuintic {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        Self { a, b }
    }

    pub fn from_real(a: f64, b: f64) -> Self {
        Self::new(a.into(), b.into())
    }

    /// Polynomial form; degree drops below 5 when `b` (and possibly `a`) vanish.
    pub fn to_poly(&self) -> Poly {
        Poly::new(vec![ONE, ONE, self.a, ZERO, ZERO, self.b])
            .expect("linear and constant terms are 1")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    ClosedForm,
    Oracle,
    Pipeline,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::ClosedForm => "closed_form",
            Method::Oracle => "oracle",
            Method::Pipeline => "pipeline",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Roots of one polynomial with their scale-free residuals, sorted by
/// (real part, imaginary part).
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
    pub method: Method,
}

pub(crate) fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

impl RootSet {
    pub fn new(poly: &Poly, mut roots: Vec<Complex64>, method: Method) -> Self {
        roots.sort_by(cmp_complex);
        let residuals = roots.iter().map(|&r| poly.residual(r)).collect();
        Self {
            roots,
            residuals,
            method,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Horner evaluation of `p` at `x`.
pub fn eval_poly(p: &Poly, x: Complex64) -> Complex64 {
    p.eval(x)
}

/// Synthetic division by `(x - r)`.
///
/// Returns the quotient `Q` with `P(x) = (x - r) Q(x) + P(r)`; fails when the
/// scale-free residual of `r` exceeds `tol`.
pub fn deflate(p: &Poly, r: Complex64, tol: f64) -> Result<Poly, PolyError> {
    let (quotient, remainder) = divide_linear(p, r);
    let residual = remainder.norm() / p.residual_scale();
    if !(residual <= tol) {
        return Err(PolyError::DeflationResidualTooLarge { residual, tol });
    }
    Poly::new(quotient)
}

pub(crate) fn divide_linear(p: &Poly, r: Complex64) -> (Vec<Complex64>, Complex64) {
    let c = p.coeffs();
    let d = p.degree();
    if d == 0 {
        return (vec![ZERO], c[0]);
    }
    let mut q = vec![ZERO; d];
    q[d - 1] = c[d];
    for i in (1..d).rev() {
        q[i - 1] = c[i] + r * q[i];
    }
    let remainder = c[0] + r * q[0];
    (q, remainder)
}

/// Both roots of `a2 x^2 + a1 x + a0`.
///
/// Uses the cancellation-free pairing `q = -(a1 + s sqrt(disc)) / 2`,
/// `x1 = q / a2`, `x2 = a0 / q` with the sign `s` aligned with `a1`.
pub fn solve_quadratic(a2: Complex64, a1: Complex64, a0: Complex64) -> Result<RootSet, PolyError> {
    if a2 == ZERO {
        return Err(PolyError::DegenerateLeadingCoefficient);
    }
    let poly = Poly::new(vec![a0, a1, a2])?;
    let (x1, x2) = quadratic_roots(a2, a1, a0);
    Ok(RootSet::new(&poly, vec![x1, x2], Method::ClosedForm))
}

pub(crate) fn quadratic_roots(a2: Complex64, a1: Complex64, a0: Complex64) -> (Complex64, Complex64) {
    let disc = (a1 * a1 - 4.0 * a2 * a0).sqrt();
    let signed = if (a1.conj() * disc).re >= 0.0 { disc } else { -disc };
    let q = -(a1 + signed) * 0.5;
    if q == ZERO {
        (ZERO, ZERO)
    } else {
        (q / a2, a0 / q)
    }
}

/// Principal cube root.
fn cbrt(z: Complex64) -> Complex64 {
    if z == ZERO {
        return ZERO;
    }
    Complex64::from_polar(z.norm().cbrt(), z.arg() / 3.0)
}

/// Roots of the monic cubic `t^3 + a t^2 + b t + c` (Cardano, then polished).
fn cubic_roots(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 3] {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let d = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let plus = -q / 2.0 + d;
    let minus = -q / 2.0 - d;
    let u3 = if plus.norm() >= minus.norm() { plus } else { minus };
    let poly = Poly {
        coeffs: vec![c, b, a, ONE],
    };
    if u3 == ZERO {
        return [-shift; 3];
    }
    let u = cbrt(u3);
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut out = [ZERO; 3];
    let mut uk = u;
    for slot in out.iter_mut() {
        let s = uk - p / (3.0 * uk);
        *slot = poly.polish(s - shift, 4);
        uk *= omega;
    }
    out
}

/// All four roots of the monic quartic `x^4 + c3 x^3 + c2 x^2 + c1 x + c0`
/// by Ferrari's resolvent cubic, each polished by Newton steps that must
/// lower the residual.
pub fn solve_quartic(c3: Complex64, c2: Complex64, c1: Complex64, c0: Complex64) -> RootSet {
    let poly = Poly {
        coeffs: vec![c0, c1, c2, c3, ONE],
    };
    let shift = c3 / 4.0;
    let c3sq = c3 * c3;
    let p = c2 - 3.0 * c3sq / 8.0;
    let q = c1 - c3 * c2 / 2.0 + c3sq * c3 / 8.0;
    let r = c0 - c3 * c1 / 4.0 + c3sq * c2 / 16.0 - 3.0 * c3sq * c3sq / 256.0;

    let biquadratic_threshold =
        1e-14 * (1.0 + p.norm().powf(1.5) + r.norm().powf(0.75));
    let mut ys: Vec<Complex64> = Vec::with_capacity(4);
    let mut resolvent = ZERO;
    if q.norm() > biquadratic_threshold {
        let ms = cubic_roots(p, p * p / 4.0 - r, -q * q / 8.0);
        resolvent = ms
            .into_iter()
            .max_by(|x, y| x.norm().total_cmp(&y.norm()))
            .unwrap_or(ZERO);
    }
    if resolvent == ZERO {
        let (z1, z2) = quadratic_roots(ONE, p, r);
        for z in [z1, z2] {
            let s = z.sqrt();
            ys.push(s);
            ys.push(-s);
        }
    } else {
        let sq = (2.0 * resolvent).sqrt();
        let base = p / 2.0 + resolvent;
        let tilt = q / (2.0 * sq);
        let (y1, y2) = quadratic_roots(ONE, -sq, base + tilt);
        let (y3, y4) = quadratic_roots(ONE, sq, base - tilt);
        ys.extend([y1, y2, y3, y4]);
    }
    let roots = ys
        .into_iter()
        .map(|y| poly.polish(y - shift, 4))
        .collect();
    RootSet::new(&poly, roots, Method::ClosedForm)
}
