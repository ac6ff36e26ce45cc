//! Roots of `1 + x^m + a x^n = 0` from the Lagrange-inversion series, one per
//! branch, next to the commonly printed gamma-ratio form that only works for
//! `m = 1`.
//!
//!     cargo run --example trinomial_series

use quintic::series::{
    normalize_trinomial, trinomial_radius, trinomial_root, trinomial_root_printed, Trinomial, DEFAULT_MAX_TERMS,
    DEFAULT_REL_TOL,
};
use quintic::Complex64;

fn main() {
    let a = Complex64::new(0.01, 0.0);
    for (m, n) in [(1, 2), (2, 4), (3, 5)] {
        println!("m = {m}, n = {n}, a = {a}, radius {:.4}", trinomial_radius(m, n));
        for branch in 0..m {
            let t = Trinomial::new(m, n, a, branch).unwrap();
            let poly = t.to_poly();
            let repaired = trinomial_root(&t, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).unwrap();
            let printed = trinomial_root_printed(&t, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).unwrap();
            println!(
                "  branch {branch}: {:.12}  residual {:.1e}   printed form residual {:.1e}",
                repaired.value,
                poly.residual(repaired.value),
                poly.residual(printed.value)
            );
        }
    }

    // 2 - 3 x^3 + 0.1 x^5 = 0 rewritten as 1 + y^3 + a y^5 = 0 with y = scale x
    let (t, scale) = normalize_trinomial(2.0.into(), (-3.0).into(), 0.1.into(), 3, 5).unwrap();
    let y = trinomial_root(&t, DEFAULT_REL_TOL, DEFAULT_MAX_TERMS).unwrap().value;
    let x = y / scale;
    println!(
        "2 - 3x^3 + 0.1x^5: a = {:.4}, x = {x:.12}, residual {:.1e}",
        t.a,
        (2.0 - 3.0 * x.powu(3) + 0.1 * x.powu(5)).norm()
    );
}
