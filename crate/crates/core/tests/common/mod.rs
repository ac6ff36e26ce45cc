#![allow(dead_code)]

use quintic::{Complex64, DepressedQuintic};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the closed disc of the given radius.
pub fn disc(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    let r = radius * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Uniform on the annulus `inner <= |z| <= outer`.
pub fn annulus(rng: &mut ChaCha8Rng, inner: f64, outer: f64) -> Complex64 {
    let r = (inner * inner + (outer * outer - inner * inner) * rng.gen::<f64>()).sqrt();
    Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
}

/// Coefficients uniform on the unit polydisc.
pub fn unit_polydisc(rng: &mut ChaCha8Rng) -> DepressedQuintic {
    DepressedQuintic::new(disc(rng, 1.0), disc(rng, 1.0), disc(rng, 1.0))
}

/// Like [`unit_polydisc`] but with `|a0| <= a0_radius`, which pushes the
/// rescaled principal quintic towards the origin.
pub fn small_constant(rng: &mut ChaCha8Rng, a0_radius: f64) -> DepressedQuintic {
    DepressedQuintic::new(disc(rng, 1.0), disc(rng, 1.0), disc(rng, a0_radius))
}

/// Number of entries of `roots` within `tol` of `z`.
pub fn count_near(roots: &[Complex64], z: Complex64, tol: f64) -> usize {
    roots.iter().filter(|r| (*r - z).norm() <= tol).count()
}

/// `n! / (k! (n - k)!)` computed exactly.
pub fn exact_binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `(5k)! / (k! (4k+1)!)`, which equals `binom(5k, k) / (4k + 1)`.
pub fn eisenstein(k: u128) -> u128 {
    let b = exact_binomial(5 * k, k);
    assert_eq!(b % (4 * k + 1), 0);
    b / (4 * k + 1)
}
