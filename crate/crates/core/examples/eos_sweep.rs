//! Equilibria over an `(a, f)` grid, showing where the series applies.
//! Prints the grid of `u` values and the margin of each cell.
//!
//!     cargo run --release --example eos_sweep

use quintic::eos::{sweep, SweepGrid};

fn main() {
    let grid = SweepGrid {
        a_min: -1.0,
        a_max: 1.0,
        a_steps: 5,
        f_min: -1.0,
        f_max: 1.0,
        f_steps: 5,
        b: -0.3,
        c: 1.0,
    };
    let cells = sweep(&grid).unwrap();
    let fs = grid.f_values();
    print!("{:>6}", "a \\ f");
    for f in &fs {
        print!("{f:>26.2}");
    }
    println!();
    for (row, a) in cells.chunks(fs.len()).zip(grid.a_values()) {
        print!("{a:>6.2}");
        for cell in row {
            match &cell.result {
                Ok(r) => {
                    let margin = r.margin.map_or("-".to_string(), |m| format!("{m:+.2e}"));
                    print!("{:>14.6} {:>11}", r.u_eq, margin);
                }
                Err(e) => print!("{:>26}", e.to_string()),
            }
        }
        println!();
    }
}
