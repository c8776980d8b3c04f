//! Certify the stated bounds numerically: the square sandwich for b_n²,
//! the growth of b_n²/ln n, the rate theorem, and the three elementary
//! maxima its proof rests on.
//!
//! ```bash
//! cargo run --release --example certify_bounds
//! ```

use normax::verify::{
    check_prop4, k_constant, proof_constants_check, theorem1_certify, theorem_constant,
    theorem_constant_tilde,
};
use normax::LogSize;

fn main() {
    println!("square sandwich 2 ln n − ln(4π ln n) < b_n² < 2 ln n");
    for s in ["2", "10", "1e10", "1e100"] {
        let n: LogSize = s.parse().unwrap();
        let [lo, hi] = check_prop4(n).unwrap();
        println!(
            "  n = {:>6}: {:+.4} < {:.4} < {:.4}  ({})",
            n.label(),
            lo.lhs,
            lo.rhs,
            hi.rhs,
            if lo.pass && hi.pass { "pass" } else { "FAIL" }
        );
    }

    println!("\ngrowth constant K(n0) = b²/ln n0, increasing and below 2");
    for s in ["3", "10", "1e3", "1e6"] {
        let n0: LogSize = s.parse().unwrap();
        println!("  K({:>4}) = {:.6}", n0.label(), k_constant(n0).unwrap());
    }

    println!("\nrate constants C(n0) and the explicit bound on them");
    for s in ["16", "1e2", "1e4", "1e20", "1e100"] {
        let n0: LogSize = s.parse().unwrap();
        println!(
            "  n0 = {:>6}: C = {:.4}   bound = {:.4}",
            n0.label(),
            theorem_constant(n0).unwrap(),
            theorem_constant_tilde(n0).unwrap()
        );
    }

    println!("\nrate certificates at n0 = 16: sup|Φⁿ − Λ|·ln n < C(16)");
    let n0: LogSize = "16".parse().unwrap();
    let sizes: Vec<LogSize> = ["16", "1e3", "1e10", "1e30"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for c in theorem1_certify(n0, &sizes, 1e-8, 4).unwrap() {
        println!(
            "  {:<18} {:.4} < {:.4}  margin {:.4}  ({})",
            c.name,
            c.lhs,
            c.rhs,
            c.margin(),
            if c.pass { "pass" } else { "FAIL" }
        );
    }

    println!("\nthe three elementary maxima behind the negative half-line");
    for c in proof_constants_check() {
        println!(
            "  {:<22} lhs = {:<20} rhs = {:<20} ({})",
            c.name,
            c.lhs,
            c.rhs,
            if c.pass { "pass" } else { "FAIL" }
        );
    }
}
