use num_complex::Complex64;

use super::{sum_blocks, SeriesError, SeriesResult};
use crate::poly::PrincipalQuintic;

/// Anti-diagonal shells of the double series
/// `sum_{j,k} (-1)^k (2j+5k)! / (j! k! (j+4k+1)!) A^j B^k`.
///
/// Shell `s` holds the terms with `j + k = s`, indexed by `j`. Terms are
/// produced from the previous shell by their consecutive ratios, so no
/// factorial is ever formed.
#[derive(Debug, Clone)]
pub struct PrincipalShells {
    a: Complex64,
    b: Complex64,
    shell: Vec<Wide>,
    index: usize,
}

impl PrincipalShells {
    pub fn new(q: &PrincipalQuintic) -> Self {
        Self {
            a: q.a,
            b: q.b,
            shell: Vec::new(),
            index: 0,
        }
    }
}

/// `m * 2^e` with the exponent held apart from the mantissa.
///
/// Along a fixed `k` the edge term `c(0,k) B^k` can fall far below the
/// smallest f64 while the terms it seeds (larger `j`) dominate later shells,
/// so the recurrence runs on these and only the emitted terms are rounded
/// back to f64.
#[derive(Debug, Clone, Copy)]
struct Wide {
    m: Complex64,
    e: i32,
}

/// `2^k` for `k` in the normal exponent range.
fn pow2(k: i32) -> f64 {
    f64::from_bits(((k + 1023) as u64) << 52)
}

impl Wide {
    const RENORMALIZE_ABOVE: f64 = 1e30;
    const RENORMALIZE_BELOW: f64 = 1e-30;

    fn one() -> Self {
        Self {
            m: Complex64::new(1.0, 0.0),
            e: 0,
        }
    }

    fn times(self, z: Complex64) -> Self {
        let m = self.m * z;
        let size = m.re.abs().max(m.im.abs());
        if size == 0.0 || !size.is_finite() || (Self::RENORMALIZE_BELOW..=Self::RENORMALIZE_ABOVE).contains(&size) {
            return Self { m, e: self.e };
        }
        let shift = size.log2().floor() as i32;
        Self {
            m: m * pow2(-shift),
            e: self.e + shift,
        }
    }

    fn value(self) -> Complex64 {
        match self.e {
            e if e > 2046 => self.m * f64::INFINITY,
            e if e < -2044 => Complex64::new(0.0, 0.0),
            e => {
                let half = e / 2;
                self.m * pow2(half) * pow2(e - half)
            }
        }
    }
}

/// `c(j+1, k) / c(j, k)`.
fn ratio_in_j(j: usize, k: usize) -> f64 {
    let (j, k) = (j as f64, k as f64);
    let n = 2.0 * j + 5.0 * k;
    (n + 1.0) * (n + 2.0) / ((j + 1.0) * (j + 4.0 * k + 2.0))
}

/// `c(j, k+1) / c(j, k)`.
fn ratio_in_k(j: usize, k: usize) -> f64 {
    let (j, k) = (j as f64, k as f64);
    let n = 2.0 * j + 5.0 * k;
    let d = j + 4.0 * k + 1.0;
    let mut r = 1.0 / (k + 1.0);
    for i in 1..=5 {
        r *= n + i as f64;
    }
    for i in 1..=4 {
        r /= d + i as f64;
    }
    r
}

impl Iterator for PrincipalShells {
    type Item = Vec<Complex64>;

    fn next(&mut self) -> Option<Self::Item> {
        let s = self.index;
        self.shell = if s == 0 {
            vec![Wide::one()]
        } else {
            let prev = &self.shell;
            let mut cur = Vec::with_capacity(s + 1);
            cur.push(prev[0].times(-self.b * ratio_in_k(0, s - 1)));
            for j in 1..=s {
                cur.push(prev[j - 1].times(self.a * ratio_in_j(j - 1, s - j)));
            }
            cur
        };
        self.index += 1;
        Some(self.shell.iter().map(|w| w.value()).collect())
    }
}

/// The integer `(2j+5k)! / (j! k! (j+4k+1)!)`, or `None` if it overflows.
///
/// Computed as `binom(2j+5k, j) binom(j+5k, k) / (j+4k+1)`.
pub fn series_coefficient(j: u32, k: u32) -> Option<u128> {
    fn binomial(n: u128, r: u128) -> Option<u128> {
        (0..r).try_fold(1u128, |acc, i| acc.checked_mul(n - i).map(|v| v / (i + 1)))
    }
    let (j, k) = (j as u128, k as u128);
    let product = binomial(2 * j + 5 * k, j)?.checked_mul(binomial(j + 5 * k, k)?)?;
    Some(product / (j + 4 * k + 1))
}

/// Root of `B x^5 + A x^2 + x + 1 = 0` as the negated double series, summed
/// shell by shell.
///
/// The convergence domain is not checked here (see [`convergence_margin`]);
/// outside it the divergence detector normally fires.
pub fn passare_tsikh_root(
    q: &PrincipalQuintic,
    rel_tol: f64,
    max_shells: usize,
) -> Result<SeriesResult, SeriesError> {
    let blocks = PrincipalShells::new(q).map(|shell| {
        let sum: Complex64 = shell.iter().sum();
        let magnitude: f64 = shell.iter().map(|t| t.norm()).sum();
        (-sum, magnitude)
    });
    sum_blocks(blocks, rel_tol, max_shells)
        .into_result(|partial| SeriesError::ShellBudgetExhausted { partial })
}

/// Left-hand side of the convergence condition
/// `5^5|B|^2 - 4^4|B| + 108|A|^5 - 27|A|^4 + 1600|A||B| - 2250|A|^2|B|`.
///
/// Negative means strictly inside the domain; zero (including the origin)
/// counts as outside.
pub fn convergence_margin(q: &PrincipalQuintic) -> f64 {
    let a = q.a.norm();
    let b = q.b.norm();
    3125.0 * b * b - 256.0 * b + 108.0 * a.powi(5) - 27.0 * a.powi(4) + 1600.0 * a * b
        - 2250.0 * a * a * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{find_all_roots, OracleConfig};
    use crate::series::{DEFAULT_MAX_SHELLS, DEFAULT_REL_TOL};

    fn root(a: f64, b: f64) -> SeriesResult {
        passare_tsikh_root(&PrincipalQuintic::from_real(a, b), DEFAULT_REL_TOL, DEFAULT_MAX_SHELLS).unwrap()
    }

    #[test]
    fn origin_gives_minus_one() {
        let r = root(0.0, 0.0);
        assert_eq!(r.value, Complex64::new(-1.0, 0.0));
        assert!(r.converged);
    }

    #[test]
    fn b_zero_is_the_quadratic_root() {
        let a: f64 = -0.1;
        let closed = (-1.0 + (1.0 - 4.0 * a).sqrt()) / (2.0 * a);
        let r = root(a, 0.0);
        assert!((r.value.re - closed).abs() < 1e-13, "{} vs {closed}", r.value.re);
        assert!((r.value.re + 0.916_079_783_099_616).abs() < 1e-12);
    }

    #[test]
    fn a_zero_small_b() {
        // B x^5 + x + 1 = 0, B = 0.01. Reference value from the oracle.
        let q = PrincipalQuintic::from_real(0.0, 0.01);
        let r = root(0.0, 0.01);
        assert!((r.value.re + 0.990_467_8).abs() < 1e-6, "{}", r.value);
        assert!(q.to_poly().eval(r.value).norm() < 1e-10);
        // leading terms -(1 - B + 5B^2 - 35B^3 + 285B^4), next one 2530 B^5
        let b: f64 = 0.01;
        let truncated = -(1.0 - b + 5.0 * b * b - 35.0 * b.powi(3) + 285.0 * b.powi(4));
        assert!((r.value.re - truncated).abs() < 2530.0 * b.powi(5));
    }

    #[test]
    fn matches_an_oracle_root() {
        let q = PrincipalQuintic::from_real(-0.05, 0.02);
        let r = root(-0.05, 0.02);
        let oracle = find_all_roots(&q.to_poly(), &OracleConfig::default()).unwrap();
        let best = oracle.roots.iter().map(|z| (z - r.value).norm()).fold(f64::INFINITY, f64::min);
        assert!(best < 1e-9);
    }

    #[test]
    fn shells_hold_the_integer_coefficients() {
        // A = 1, B = -1 strips the powers and the alternating sign.
        let shells: Vec<_> = PrincipalShells::new(&PrincipalQuintic::from_real(1.0, -1.0)).take(4).collect();
        let expected = [vec![1.0], vec![1.0, 1.0], vec![5.0, 7.0, 2.0], vec![35.0, 66.0, 36.0, 5.0]];
        for (shell, want) in shells.iter().zip(expected.iter()) {
            let got: Vec<f64> = shell.iter().map(|t| t.re.round()).collect();
            assert_eq!(&got, want);
        }
    }

    #[test]
    fn exact_coefficients() {
        let row: Vec<u128> = (0..4).map(|j| series_coefficient(j, 3 - j).unwrap()).collect();
        assert_eq!(row, [35, 66, 36, 5]);
        assert_eq!(series_coefficient(0, 5), Some(2530));
        assert_eq!(series_coefficient(7, 0), Some(429)); // Catalan
        assert_eq!(series_coefficient(0, 200), None);
    }

    #[test]
    fn far_shells_survive_underflow_of_their_edges() {
        // Here |c(0,k) B^k| drops below f64::MIN_POSITIVE well before shell
        // 3000, while the shell's dominant terms are still around 1e-14.
        let (a, b) = (Complex64::new(0.0377, -0.0246), Complex64::new(-0.0559, 0.0218));
        let shell = PrincipalShells::new(&PrincipalQuintic::new(a, b)).nth(3000).unwrap();
        assert!(shell[0].norm() < f64::MIN_POSITIVE);
        let ln = |x: f64| statrs::function::gamma::ln_gamma(x);
        let s = 3000.0;
        let expected: f64 = (0..=3000)
            .map(|j| {
                let (j, k) = (j as f64, s - j as f64);
                (ln(2.0 * j + 5.0 * k + 1.0) - ln(j + 1.0) - ln(k + 1.0) - ln(j + 4.0 * k + 2.0)
                    + j * a.norm().ln()
                    + k * b.norm().ln())
                .exp()
            })
            .sum();
        let got: f64 = shell.iter().map(|t| t.norm()).sum();
        assert!((got / expected - 1.0).abs() < 1e-8, "{got:e} vs {expected:e}");
    }

    #[test]
    fn margin_examples() {
        assert_eq!(convergence_margin(&PrincipalQuintic::from_real(0.25, 0.0)), 0.0);
        let m = convergence_margin(&PrincipalQuintic::from_real(0.0, 0.04));
        assert!((m + 5.24).abs() < 1e-12);
        let m = convergence_margin(&PrincipalQuintic::from_real(0.0, 0.1));
        assert!((m - 5.65).abs() < 1e-12);
    }

    #[test]
    fn diverges_outside_domain() {
        let err = passare_tsikh_root(&PrincipalQuintic::from_real(0.0, 0.1), DEFAULT_REL_TOL, DEFAULT_MAX_SHELLS)
            .unwrap_err();
        assert!(matches!(err, SeriesError::SeriesDiverged { .. }), "{err:?}");
    }

    #[test]
    fn budget_exhaustion() {
        let err = passare_tsikh_root(&PrincipalQuintic::from_real(0.2, 0.0), DEFAULT_REL_TOL, 3).unwrap_err();
        match err {
            SeriesError::ShellBudgetExhausted { partial } => assert_eq!(partial.terms_used, 3),
            other => panic!("{other:?}"),
        }
    }
}
