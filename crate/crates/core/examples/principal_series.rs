//! Sums the double series for a root of `B x^5 + A x^2 + x + 1 = 0` at a few
//! points and compares each against the oracle roots.
//!
//!     cargo run --example principal_series

use quintic::oracle::{find_all_roots, OracleConfig};
use quintic::series::{convergence_margin, passare_tsikh_root, DEFAULT_MAX_SHELLS, DEFAULT_REL_TOL};
use quintic::{Complex64, PrincipalQuintic};

fn main() {
    let points = [
        PrincipalQuintic::from_real(-0.1, 0.0),
        PrincipalQuintic::from_real(0.0, 0.01),
        PrincipalQuintic::new(Complex64::new(-0.05, 0.02), Complex64::new(0.02, -0.01)),
        PrincipalQuintic::from_real(0.0, 0.1),
    ];
    for q in points {
        let margin = convergence_margin(&q);
        print!("A = {:.3}, B = {:.3}  margin {margin:+.4}  ", q.a, q.b);
        match passare_tsikh_root(&q, DEFAULT_REL_TOL, DEFAULT_MAX_SHELLS) {
            Ok(r) => {
                let oracle = find_all_roots(&q.to_poly(), &OracleConfig::default()).unwrap();
                let distance = oracle.roots.iter().map(|z| (z - r.value).norm()).fold(f64::INFINITY, f64::min);
                println!(
                    "root {:.12} after {} shells, residual {:.1e}, oracle distance {distance:.1e}",
                    r.value,
                    r.terms_used,
                    q.to_poly().residual(r.value)
                );
            }
            Err(e) => println!("{e}"),
        }
    }
}
