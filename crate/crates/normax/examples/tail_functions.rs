//! Tail-stable special functions: survival, quantile, Mills ratio and
//! Lambert W, exercised far beyond where naive formulas break down.
//!
//! ```bash
//! cargo run --release --example tail_functions
//! ```

use normax::specfn::{
    lambert_w0, lambert_w_log_arg, mills_lower, mills_ratio, mills_upper,
    std_normal_quantile_upper, std_normal_survival,
};
use normax::TailProbability;

fn main() {
    println!("normal survival far into the tail");
    for x in [1.0, 8.0, 20.0, 40.0] {
        let q = std_normal_survival(x);
        println!("  Q({x:>4}) = {:<24} ln Q = {}", q.value(), q.log_value());
    }

    println!("\nquantile round trips down to p = 1e-100");
    for p in [1e-1f64, 1e-20, 1e-60, 1e-100] {
        let tp = TailProbability::from_log(p.ln()).unwrap();
        let x = std_normal_quantile_upper(tp).unwrap();
        let back = std_normal_survival(x).log_value();
        println!(
            "  p = {p:>7.0e}   x = {x:<19} relative log defect = {:+.2e}",
            back - p.ln()
        );
    }

    println!("\nMills ratio inside its rational sandwich");
    for x in [0.5, 2.0, 10.0, 35.0] {
        let m = mills_ratio(x).unwrap();
        println!(
            "  x = {x:>4}: {:.12} < {m:.12} < {:.12}",
            mills_lower(x).unwrap(),
            mills_upper(x).unwrap()
        );
    }

    println!("\nLambert W and its log-argument form");
    for t in [1.0, 10.0, 1e100] {
        let w = lambert_w0(t).unwrap();
        println!("  W({t:<6e}) = {w:<20} residual = {:+.2e}", w * w.exp() - t);
    }
    // ln t = 800 would overflow t itself
    let y = lambert_w_log_arg(800.0).unwrap();
    println!("  solve y + ln y = 800: y = {y} (t = e^800 is not representable)");
}
