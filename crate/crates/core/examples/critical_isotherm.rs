//! On the critical isotherm `a = 0` the state equation `c u^5 + b u^3 = f`
//! is a trinomial; the order parameter approaches `f^(1/3)` as `f -> 0`.
//!
//!     cargo run --example critical_isotherm

use quintic::eos::{critical_isotherm, LandauParams};

fn main() {
    println!("{:>8} {:>18} {:>12} {:>18}", "f", "u", "u^3 / f", "method");
    for f in [1e-6, 1e-4, 1e-2, 0.1, 1.0, 10.0] {
        let r = critical_isotherm(&LandauParams::new(0.0, 1.0, 1.0, f)).unwrap();
        println!("{f:>8.0e} {:>18.12} {:>12.8} {:>18}", r.u_eq, r.u_eq.powi(3) / f, r.method.as_str());
    }
}
