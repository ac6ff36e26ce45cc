//! The Durand-Kerner reference solver on a few awkward polynomials.
//!
//!     cargo run --example oracle_roots

use quintic::oracle::{find_all_roots_detailed, match_multisets, OracleConfig};
use quintic::{Complex64, Poly};

fn main() {
    let cfg = OracleConfig::default();
    let cases = [
        ("x^5 - 1", Poly::from_real(&[-1.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap()),
        ("1e-6 x^5 + x + 1", Poly::from_real(&[1.0, 1.0, 0.0, 0.0, 0.0, 1e-6]).unwrap()),
        (
            "(x - 1)^2 (x + 0.5i)",
            Poly::from_roots(&[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, -0.5)]),
        ),
    ];
    for (name, p) in cases {
        let report = find_all_roots_detailed(&p, &cfg).unwrap();
        println!("{name}: {} iterations, worst residual {:.1e}", report.iterations, report.roots.max_residual());
        for z in &report.roots.roots {
            println!("  {z:.12}");
        }
        for c in &report.clusters {
            println!("  cluster of {} at {:.8}", c.multiplicity, c.root);
        }
    }

    let left = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)];
    let right = [Complex64::new(-1.0, 1e-12), Complex64::new(1.0 + 1e-12, 0.0)];
    let m = match_multisets(&left, &right, 1e-9).unwrap();
    println!("matching {left:?} with {right:?}: pairs {:?}, success {}", m.pairs, m.success);
}
