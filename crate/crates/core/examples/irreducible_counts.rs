//! Counting monic irreducibles over F_p, by formula and by enumeration.
//!
//! Run with `cargo run --example irreducible_counts`.

use inessential::criteria::gbar_table;
use inessential::fp_poly::{count_irreducible, enumerate_irreducibles, factor, FpPolynomial};

fn main() -> inessential::Result<()> {
    for p in [2, 3, 5] {
        let counts: Vec<String> = (1..=6)
            .map(|k| count_irreducible(p, k).map(|c| c.to_string()))
            .collect::<Result<_, _>>()?;
        let gbar: Vec<String> = gbar_table(p, 6)?.iter().map(ToString::to_string).collect();
        println!(
            "p = {p}: irreducible {}  prime-ideal slots {}",
            counts.join(" "),
            gbar.join(" ")
        );
    }

    println!("\nirreducible cubics over F_3:");
    for f in enumerate_irreducibles(3, 3)?.iter().take(6) {
        println!("  {}", f.display_with("x"));
    }

    let f = FpPolynomial::new(2, &[0, 1, 0, 0, 0, 0, 0, 0, 1]);
    let parts: Vec<String> = factor(&f)?
        .iter()
        .map(|(g, e)| format!("({})^{e}", g.display_with("x")))
        .collect();
    println!("\nx^8 + x over F_2 = {}", parts.join(" "));
    Ok(())
}
