//! The smallest cyclotomic subfield over which an index form stops vanishing.
//!
//! Run with `cargo run --example supplementary_domain`.

use inessential::field_file::bundled_field;
use inessential::supplementary::supplementary_report;

fn main() -> inessential::Result<()> {
    for (name, p) in [
        ("dedekind-cubic", 2),
        ("quartic-13564", 2),
        ("period-13-4", 3),
        ("period-31-3", 2),
        ("golden-ratio", 2),
    ] {
        let order = bundled_field(name)?;
        let r = supplementary_report(&order, p)?;
        println!("{name} at {p}");
        println!(
            "  vanishes modulo the systems for k in {:?}, maximal {:?}",
            r.membership, r.minimal
        );
        match r.nu {
            Some(nu) => println!(
                "  use {} (conductor {nu}, mu {}, lambda {})",
                r.description,
                r.mu.unwrap_or(1),
                r.lambda
            ),
            None => println!("  {} already suffices", r.description),
        }
        println!(
            "  check: {:?} over F_{}^{}{}",
            r.verification.status,
            p,
            r.verification.residue_degree,
            r.verification
                .point
                .as_ref()
                .map(|pt| format!(" at {pt:?}"))
                .unwrap_or_default()
        );
    }
    Ok(())
}
