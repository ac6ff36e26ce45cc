//! Reduces a depressed quintic to `y^5 + b2 y^2 + b1 y + b0` and checks that
//! the map sends the roots of one onto the roots of the other.
//!
//!     cargo run --example tschirnhaus_reduction

use quintic::oracle::{find_all_roots, match_multisets, OracleConfig};
use quintic::tschirnhaus::{power_sums, printed_coefficients, reduce_to_principal, rescale};
use quintic::{Complex64, DepressedQuintic};

fn main() {
    let q = DepressedQuintic::from_real(0.3, 1.1, 0.05);
    let sums = power_sums(&q);
    let shown: Vec<String> = (1..=5).map(|n| format!("{:.4}", sums.get(n))).collect();
    println!("power sums S1..S5: {}", shown.join(", "));

    let map = reduce_to_principal(&q).expect("generic quintic");
    let (alpha, beta) = printed_coefficients(&q);
    println!("alpha = {:.10}, beta = {:.10}", map.alpha, map.beta);
    println!("commonly quoted closed forms: alpha = {alpha:.10}, beta = {beta:.10}");
    println!("b2 = {:.10}, b1 = {:.10}, b0 = {:.10}", map.b2, map.b1, map.b0);

    let cfg = OracleConfig::default();
    let xs = find_all_roots(&q.to_poly(), &cfg).unwrap().roots;
    let ys: Vec<Complex64> = xs.iter().map(|&x| map.apply(x)).collect();
    let zs = find_all_roots(&map.principal_poly(), &cfg).unwrap().roots;
    let m = match_multisets(&ys, &zs, 1e-8).unwrap();
    println!("image roots vs principal roots: max distance {:.1e}", m.max_distance);
    let s1: Complex64 = ys.iter().sum();
    let s2: Complex64 = ys.iter().map(|y| y * y).sum();
    println!("sum y = {:.1e}, sum y^2 = {:.1e}", s1.norm(), s2.norm());

    let (principal, scale) = rescale(map.b2, map.b1, map.b0).unwrap();
    println!("rescaled: A = {:.6}, B = {:.6}, y = {scale:.6} w", principal.a, principal.b);
}
