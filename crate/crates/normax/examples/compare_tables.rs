//! Build all three canonical comparison tables in one go, printed at the
//! precision they are usually quoted at.
//!
//! ```bash
//! cargo run --release --example compare_tables
//! ```

use normax::tables;

fn main() {
    println!("rate-constant upper bounds per starting size n0");
    let sizes = tables::table1_sizes();
    print!("{:>10}", "");
    for n in &sizes {
        print!("{:>9}", n.label());
    }
    println!();
    let rows = tables::table1().unwrap();
    for (name, row) in ["C", "C-bound"].iter().zip(rows) {
        print!("{name:>10}");
        for v in row {
            print!("{v:>9.2}");
        }
        println!();
    }

    println!("\nscaled distance to the Gumbel, per constants and size");
    let sizes = tables::table2_sizes();
    print!("{:>14}", "");
    for n in &sizes {
        print!("{:>9}", n.label());
    }
    println!();
    let rows = tables::table2(1e-8, 8).unwrap();
    for ((m, a), row) in tables::table2_specs().iter().zip(rows) {
        print!("{:>14}", format!("{}:{}", m.token(), a.token()));
        for v in row {
            print!("{v:>9.4}");
        }
        println!();
    }

    println!("\nlocation constants themselves");
    let sizes = tables::table3_sizes();
    print!("{:>14}", "");
    for n in &sizes {
        print!("{:>10}", n.label());
    }
    println!();
    let rows = tables::table3().unwrap();
    for (m, row) in tables::table3_methods().iter().zip(rows) {
        print!("{:>14}", m.token());
        for v in row {
            print!("{v:>10.5}");
        }
        println!();
    }
}
