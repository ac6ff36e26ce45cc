use num_complex::Complex64;
use statrs::function::gamma::ln_gamma;

use super::{sum_blocks, SeriesError, SeriesResult};
use crate::poly::{Poly, ONE, ZERO};

/// `1 + x^m + a x^n = 0` with `n > m > 0`, and the branch of `eps`, the
/// `m`-th root of `-1` the series expands around.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trinomial {
    pub m: u32,
    pub n: u32,
    pub a: Complex64,
    pub branch: u32,
}

impl Trinomial {
    pub fn new(m: u32, n: u32, a: Complex64, branch: u32) -> Result<Self, SeriesError> {
        if m == 0 || n <= m {
            return Err(SeriesError::InvalidTrinomial(format!(
                "need n > m > 0, got m = {m}, n = {n}"
            )));
        }
        if branch >= m {
            return Err(SeriesError::InvalidTrinomial(format!(
                "branch {branch} out of range for m = {m}"
            )));
        }
        if !a.re.is_finite() || !a.im.is_finite() {
            return Err(SeriesError::InvalidTrinomial("coefficient is not finite".into()));
        }
        Ok(Self { m, n, a, branch })
    }

    /// Branch 0: the root of `-1` with the smallest positive argument.
    pub fn with_default_branch(m: u32, n: u32, a: Complex64) -> Result<Self, SeriesError> {
        Self::new(m, n, a, 0)
    }

    /// `exp(i pi (1 + 2 branch) / m)`, exact when it lies on an axis.
    pub fn epsilon(&self) -> Complex64 {
        root_of_minus_one(self.m, self.branch)
    }

    pub fn to_poly(&self) -> Poly {
        let mut coeffs = vec![ZERO; self.n as usize + 1];
        coeffs[0] = ONE;
        coeffs[self.m as usize] = ONE;
        coeffs[self.n as usize] += self.a;
        Poly::new(coeffs).expect("constant term is 1")
    }
}

fn root_of_minus_one(m: u32, branch: u32) -> Complex64 {
    let numer = 1 + 2 * branch;
    if (2 * numer).is_multiple_of(m) {
        return match (2 * numer / m) % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, std::f64::consts::PI * numer as f64 / m as f64)
}

/// Which coefficient formula to sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrinomialForm {
    /// Lagrange inversion:
    /// `x = eps * sum_k binom((nk+1)/m, k) / (nk+1) * (eps^n a)^k`.
    Repaired,
    /// `x = sum_k eps^(1+nk) Gamma(1 + nk/m) / Gamma(1 + (1+(n-m)k)/m) a^k / k!`
    /// as commonly quoted. It agrees with the repaired form for `m = 1` only,
    /// and does not reduce to `eps` at `a = 0` otherwise.
    Printed,
}

/// Generalized binomial coefficient `binom(p, k)` as a running product.
fn binomial(p: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (p - i as f64) / (i as f64 + 1.0))
}

/// `Gamma(x) / Gamma(y)`: a finite product when `x - y` is an integer,
/// log-gamma otherwise.
fn gamma_ratio(x: f64, y: f64) -> f64 {
    let d = x - y;
    if d == d.round() && d.abs() < 1e6 {
        let d = d as i64;
        if d >= 0 {
            (0..d).fold(1.0, |acc, i| acc * (y + i as f64))
        } else {
            1.0 / (0..-d).fold(1.0, |acc, i| acc * (x + i as f64))
        }
    } else {
        (ln_gamma(x) - ln_gamma(y)).exp()
    }
}

/// The real coefficients `c_k` with `x = eps * sum_k c_k (eps^n a)^k`.
pub fn trinomial_coefficients(m: u32, n: u32, count: usize, form: TrinomialForm) -> Vec<f64> {
    (0..count).map(|k| coefficient(m, n, k, form)).collect()
}

fn coefficient(m: u32, n: u32, k: usize, form: TrinomialForm) -> f64 {
    let (mf, nf, kf) = (m as f64, n as f64, k as f64);
    match form {
        TrinomialForm::Repaired => {
            let p = (nf * kf + 1.0) / mf;
            binomial(p, k) / (nf * kf + 1.0)
        }
        TrinomialForm::Printed => {
            let factorial = (1..=k).fold(1.0, |acc, i| acc * i as f64);
            gamma_ratio(1.0 + nf * kf / mf, 1.0 + (1.0 + (nf - mf) * kf) / mf) / factorial
        }
    }
}

/// Coefficient magnitude beyond which the series diverges:
/// `(m/n) ((n-m)/n)^((n-m)/m)`, where two roots of the trinomial collide.
pub fn trinomial_radius(m: u32, n: u32) -> f64 {
    let (mf, nf) = (m as f64, n as f64);
    (mf / nf) * ((nf - mf) / nf).powf((nf - mf) / mf)
}

fn sum_trinomial(
    t: &Trinomial,
    rel_tol: f64,
    max_terms: usize,
    form: TrinomialForm,
) -> Result<SeriesResult, SeriesError> {
    let eps = t.epsilon();
    let z = eps.powu(t.n) * t.a;
    let mut power = ONE;
    let blocks = (0..).map(|k| {
        let term = eps * power * coefficient(t.m, t.n, k, form);
        power *= z;
        (term, term.norm())
    });
    sum_blocks(blocks, rel_tol, max_terms)
        .into_result(|partial| SeriesError::TermBudgetExhausted { partial })
}

/// Root of `1 + x^m + a x^n = 0` on the branch of `t`, by Lagrange inversion
/// around `x = eps`. Exactly `eps` when `a = 0`.
pub fn trinomial_root(t: &Trinomial, rel_tol: f64, max_terms: usize) -> Result<SeriesResult, SeriesError> {
    sum_trinomial(t, rel_tol, max_terms, TrinomialForm::Repaired)
}

/// Sums [`TrinomialForm::Printed`]. Only a root when `m = 1`; kept to show
/// where the two forms part ways.
pub fn trinomial_root_printed(
    t: &Trinomial,
    rel_tol: f64,
    max_terms: usize,
) -> Result<SeriesResult, SeriesError> {
    sum_trinomial(t, rel_tol, max_terms, TrinomialForm::Printed)
}

/// Rewrites `a0 + am x^m + an x^n = 0` as `1 + y^m + a y^n = 0` with
/// `y = scale * x`, `scale = (am/a0)^(1/m)` on the principal branch and
/// `a = (an/a0) / scale^n`.
pub fn normalize_trinomial(
    a0: Complex64,
    am: Complex64,
    an: Complex64,
    m: u32,
    n: u32,
) -> Result<(Trinomial, Complex64), SeriesError> {
    if a0 == ZERO {
        return Err(SeriesError::DegenerateCoefficient("a0"));
    }
    if am == ZERO {
        return Err(SeriesError::DegenerateCoefficient("am"));
    }
    let ratio = am / a0;
    let scale = if m == 1 { ratio } else { ratio.powf(1.0 / m as f64) };
    let a = an / a0 / scale.powu(n);
    Ok((Trinomial::with_default_branch(m, n, a)?, scale))
}
