//! Tune the free parameter of the B_n(p, q) family: solve b_k = B_k(p, q)
//! for p at each k and average. The means hover around 1/2, which is why
//! p = 1/2 is the shipped default inside the `betafinal` constant.
//!
//! ```bash
//! cargo run --release --example calibrate_p
//! ```

use normax::calibrate::{default_q, p_hat, solve_p};
use normax::norming::{b_general, exact_b};
use normax::LogSize;

fn main() {
    println!("per-size roots of b_k = B_k(p, -ln 2π)");
    for k in [10u64, 100, 1000, 10_000] {
        let p = solve_p(k, default_q()).unwrap();
        let n = LogSize::new(k as f64).unwrap();
        let resid = exact_b(n).unwrap() - b_general(n, p, default_q()).unwrap();
        println!("  k = {k:>6}: p_k = {p:.6}   residual = {resid:+.1e}");
    }

    println!("\nmeans over k = 10..m");
    for m in [100u64, 1_000, 10_000] {
        let r = p_hat(m, default_q()).unwrap();
        println!("  p̂({m:>6}) = {:.4}  ({} roots)", r.p_hat, r.per_k.len());
    }
    println!("\nall of these sit near 1/2, the compromise the betafinal family bakes in");
}
