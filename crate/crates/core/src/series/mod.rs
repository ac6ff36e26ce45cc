//! Series root formulas.
//!
//! * [`passare_tsikh_root`]: the double power series in `(A, B)` for a root of
//!   `B x^5 + A x^2 + x + 1 = 0`, with its convergence domain
//!   [`convergence_margin`].
//! * [`trinomial_root`]: the Lagrange-inversion series for a root of
//!   `1 + x^m + a x^n = 0`, plus [`normalize_trinomial`] for general
//!   three-term equations.
//! * [`trinomic_quintic_root`]: the hypergeometric `4F3` root of
//!   `x^5 - x - t = 0`.
//!
//! All series share one stopping rule: a partial sum is converged once three
//! consecutive blocks (a shell of the double series, or a single term) each
//! have magnitude at most `rel_tol * |partial sum|`, and diverged once block
//! magnitudes grow for five consecutive blocks while still above that
//! threshold.

mod hypergeometric;
mod principal;
mod trinomial;

pub use hypergeometric::{hypergeometric_coefficients, trinomic_quintic_root, HypergeometricTerms};
pub use principal::{convergence_margin, passare_tsikh_root, series_coefficient, PrincipalShells};
pub use trinomial::{
    normalize_trinomial, trinomial_coefficients, trinomial_radius, trinomial_root,
    trinomial_root_printed, Trinomial, TrinomialForm,
};

use num_complex::Complex64;
use thiserror::Error;

pub const DEFAULT_REL_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_SHELLS: usize = 500;
pub const DEFAULT_MAX_TERMS: usize = 500;

const CONVERGED_RUN: usize = 3;
const DIVERGED_RUN: usize = 5;

/// A partial sum together with how it stopped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    /// Shells (double series) or terms (single series) summed.
    pub terms_used: usize,
    pub converged: bool,
    pub last_term_magnitude: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("series diverged after {} blocks (last magnitude {:e})", .partial.terms_used, .partial.last_term_magnitude)]
    SeriesDiverged { partial: SeriesResult },
    #[error("shell budget exhausted after {} shells", .partial.terms_used)]
    ShellBudgetExhausted { partial: SeriesResult },
    #[error("term budget exhausted after {} terms", .partial.terms_used)]
    TermBudgetExhausted { partial: SeriesResult },
    #[error("coefficient {0} must be nonzero")]
    DegenerateCoefficient(&'static str),
    #[error("invalid trinomial: {0}")]
    InvalidTrinomial(String),
}

impl SeriesError {
    /// The partial sum reached before giving up, if any.
    pub fn partial(&self) -> Option<&SeriesResult> {
        match self {
            SeriesError::SeriesDiverged { partial }
            | SeriesError::ShellBudgetExhausted { partial }
            | SeriesError::TermBudgetExhausted { partial } => Some(partial),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Continue,
    Converged,
    Diverged,
}

#[derive(Debug)]
struct StoppingRule {
    rel_tol: f64,
    small_run: usize,
    growth_run: usize,
    last: Option<f64>,
}

impl StoppingRule {
    fn new(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            small_run: 0,
            growth_run: 0,
            last: None,
        }
    }

    fn observe(&mut self, partial: Complex64, magnitude: f64) -> Verdict {
        if !magnitude.is_finite() || !partial.re.is_finite() || !partial.im.is_finite() {
            return Verdict::Diverged;
        }
        let threshold = self.rel_tol * partial.norm();
        if magnitude <= threshold {
            self.small_run += 1;
        } else {
            self.small_run = 0;
        }
        match self.last {
            Some(prev) if magnitude > prev && magnitude > threshold => self.growth_run += 1,
            _ => self.growth_run = 0,
        }
        self.last = Some(magnitude);
        if self.small_run >= CONVERGED_RUN {
            Verdict::Converged
        } else if self.growth_run >= DIVERGED_RUN {
            Verdict::Diverged
        } else {
            Verdict::Continue
        }
    }
}

enum Outcome {
    Converged(SeriesResult),
    Diverged(SeriesResult),
    Exhausted(SeriesResult),
}

impl Outcome {
    fn into_result(
        self,
        exhausted: fn(SeriesResult) -> SeriesError,
    ) -> Result<SeriesResult, SeriesError> {
        match self {
            Outcome::Converged(r) => Ok(r),
            Outcome::Diverged(partial) => Err(SeriesError::SeriesDiverged { partial }),
            Outcome::Exhausted(partial) => Err(exhausted(partial)),
        }
    }
}

/// Runs the stopping rule over a stream of `(block sum, block magnitude)`.
fn sum_blocks<I>(blocks: I, rel_tol: f64, budget: usize) -> Outcome
where
    I: Iterator<Item = (Complex64, f64)>,
{
    let mut rule = StoppingRule::new(rel_tol);
    let mut partial = SeriesResult {
        value: Complex64::new(0.0, 0.0),
        terms_used: 0,
        converged: false,
        last_term_magnitude: 0.0,
    };
    for (sum, magnitude) in blocks.take(budget) {
        partial.value += sum;
        partial.terms_used += 1;
        partial.last_term_magnitude = magnitude;
        match rule.observe(partial.value, magnitude) {
            Verdict::Continue => {}
            Verdict::Converged => {
                partial.converged = true;
                return Outcome::Converged(partial);
            }
            Verdict::Diverged => return Outcome::Diverged(partial),
        }
    }
    Outcome::Exhausted(partial)
}
