use num_complex::Complex64;

use super::{sum_blocks, SeriesError, SeriesResult};

/// Terms `prod (a_i)_k / prod (b_j)_k * z^k / k!` of a generalized
/// hypergeometric series `pFq(a; b; z)`, generated by their term ratio.
#[derive(Debug, Clone)]
pub struct HypergeometricTerms {
    upper: Vec<f64>,
    lower: Vec<f64>,
    z: Complex64,
    k: usize,
    term: Complex64,
}

impl HypergeometricTerms {
    pub fn new(upper: &[f64], lower: &[f64], z: Complex64) -> Self {
        Self {
            upper: upper.to_vec(),
            lower: lower.to_vec(),
            z,
            k: 0,
            term: Complex64::new(1.0, 0.0),
        }
    }

    fn ratio(&self, k: f64) -> f64 {
        let num: f64 = self.upper.iter().map(|a| a + k).product();
        let den: f64 = self.lower.iter().map(|b| b + k).product();
        num / (den * (k + 1.0))
    }
}

impl Iterator for HypergeometricTerms {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let out = self.term;
        self.term *= self.z * self.ratio(self.k as f64);
        self.k += 1;
        Some(out)
    }
}

/// The first `count` coefficients of `z^k` in `pFq(upper; lower; z)`.
pub fn hypergeometric_coefficients(upper: &[f64], lower: &[f64], count: usize) -> Vec<f64> {
    HypergeometricTerms::new(upper, lower, Complex64::new(1.0, 0.0))
        .take(count)
        .map(|t| t.re)
        .collect()
}

const UPPER: [f64; 4] = [0.2, 0.4, 0.6, 0.8];
const LOWER: [f64; 3] = [0.5, 0.75, 1.25];

/// The root of `x^5 - x - t = 0` that vanishes with `t`:
/// `x = -t 4F3(1/5, 2/5, 3/5, 4/5; 1/2, 3/4, 5/4; 5^5 t^4 / 4^4)`.
///
/// Expanded in `t` this is `-(t + t^5 + 10 t^9 / 2! + ...)`, whose
/// coefficients are `(5k)! / (k! (4k+1)!)`. Converges for
/// `|5^5 t^4 / 4^4| < 1`.
pub fn trinomic_quintic_root(t: Complex64, rel_tol: f64, max_terms: usize) -> Result<SeriesResult, SeriesError> {
    let z = t.powu(4) * (3125.0 / 256.0);
    let blocks = HypergeometricTerms::new(&UPPER, &LOWER, z).map(|term| {
        let term = -t * term;
        (term, term.norm())
    });
    sum_blocks(blocks, rel_tol, max_terms)
        .into_result(|partial| SeriesError::TermBudgetExhausted { partial })
}
