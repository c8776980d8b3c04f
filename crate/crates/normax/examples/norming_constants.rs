//! Every location family side by side, from n = 10 to n = 10^100.
//!
//! ```bash
//! cargo run --release --example norming_constants
//! ```

use normax::norming::{auxiliary_scale, location, norming_pair};
use normax::{ApproxMethod, AuxiliaryKind, LogSize};

fn main() {
    let sizes: Vec<LogSize> = ["10", "1e2", "1e5", "1e10", "1e60", "1e100"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();

    print!("{:>14}", "n");
    for m in ApproxMethod::TABLE {
        print!("{:>14}", m.token());
    }
    println!();
    for &n in &sizes {
        print!("{:>14}", n.label());
        for m in ApproxMethod::TABLE {
            print!("{:>14.5}", location(m, n).unwrap());
        }
        println!();
    }

    println!("\nscale functions at the exact location, n = 100");
    let n: LogSize = "1e2".parse().unwrap();
    let b = location(ApproxMethod::Exact, n).unwrap();
    for aux in AuxiliaryKind::ALL {
        println!(
            "  {:<3} A(b) = {:.10}",
            aux.token(),
            auxiliary_scale(aux, b).unwrap()
        );
    }

    println!("\nthe proposed pair at n = 10^100");
    let n: LogSize = "10^100".parse().unwrap();
    let pair = norming_pair(ApproxMethod::BetaFinal, AuxiliaryKind::FisherTippett, n).unwrap();
    println!("  location = {}", pair.location);
    println!("  scale    = {}", pair.scale);
}
