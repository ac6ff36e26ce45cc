//! Solves depressed quintics end to end and reports which stage produced the
//! roots.
//!
//!     cargo run --example depressed_pipeline

use quintic::tschirnhaus::{solve_pipeline, PipelineOptions};
use quintic::DepressedQuintic;

fn main() {
    let inputs = [
        DepressedQuintic::from_real(0.3, 1.1, 0.05),
        DepressedQuintic::from_real(0.0, 1.0, 0.01),
        DepressedQuintic::from_real(0.0, 1.0, 1.0),
        DepressedQuintic::from_real(-2.0, 0.5, 0.3),
    ];
    for q in inputs {
        let r = solve_pipeline(&q, &PipelineOptions::default());
        println!("x^5 + ({}) x^3 + ({}) x + ({})", q.a3, q.a1, q.a0);
        match r.margin {
            Some(m) => println!("  margin {m:+.4}"),
            None => println!("  no rescaled principal quintic"),
        }
        if r.series_path() {
            println!("  series root after {} shells", r.series_root.unwrap().terms_used);
        } else {
            println!("  fallback: {}", r.fallback_reason.as_ref().unwrap());
        }
        for (x, res) in r.recovered_roots.roots.iter().zip(&r.recovered_roots.residuals) {
            println!("  {x:.12}  residual {res:.1e}");
        }
    }
}
