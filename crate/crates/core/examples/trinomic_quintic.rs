//! The root of `x^5 - x - t = 0` that vanishes with `t`, as a 4F3 series.
//!
//!     cargo run --example trinomic_quintic

use quintic::series::{hypergeometric_coefficients, trinomic_quintic_root, DEFAULT_MAX_TERMS, DEFAULT_REL_TOL};
use quintic::Complex64;

fn main() {
    let coeffs = hypergeometric_coefficients(&[0.2, 0.4, 0.6, 0.8], &[0.5, 0.75, 1.25], 6);
    let integers: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| (c * (3125.0f64 / 256.0).powi(k as i32)).round())
        .collect();
    println!("coefficients of t^(4k+1): {integers:?}");

    for t in [0.05, 0.1, 0.3, 0.5, 0.6] {
        let t = Complex64::new(t, 0.0);
        match trinomic_quintic_root(t, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS) {
            Ok(r) => println!(
                "t = {:.2}: x = {:.15} ({} terms), residual {:.1e}",
                t.re,
                r.value.re,
                r.terms_used,
                (r.value.powu(5) - r.value - t).norm()
            ),
            Err(e) => println!("t = {:.2}: {e}", t.re),
        }
    }
}
