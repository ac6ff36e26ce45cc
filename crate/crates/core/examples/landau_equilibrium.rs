//! Equilibrium order parameter of the sextic Landau free energy, with every
//! real stationary point and its stability.
//!
//!     cargo run --example landau_equilibrium

use quintic::eos::{equilibrium, landau_a, LandauParams};

fn main() {
    let cases = [
        LandauParams::new(0.0, 0.0, 1.0, 32.0),
        LandauParams::new(1.0, 0.0, 1.0, 2.0),
        LandauParams::new(-1.0, 0.0, 1.0, 0.0),
        LandauParams::new(-1.0, 0.0, 1.0, 0.1),
        // first-order regime: negative quartic term
        LandauParams::new(0.2, -1.0, 1.0, 0.05),
        LandauParams::new(landau_a(0.5, 0.8, 1.0), 0.3, 1.0, 0.2),
    ];
    for p in cases {
        let r = equilibrium(&p).unwrap();
        println!(
            "a = {:+.2} b = {:+.2} c = {:.2} f = {:+.2}: u = {:+.10} via {}{}",
            p.a,
            p.b,
            p.c,
            p.f,
            r.u_eq,
            r.method.as_str(),
            if r.degenerate { " (tie)" } else { "" }
        );
        for s in &r.all_stationary {
            println!(
                "    u = {:+.8}  F = {:+.8}  {}",
                s.u,
                s.free_energy,
                if s.stable { "stable" } else { "unstable" }
            );
        }
    }
}
