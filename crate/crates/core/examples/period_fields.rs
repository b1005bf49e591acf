//! Orders generated by Gaussian periods, and the field files they export to.
//!
//! Run with `cargo run --example period_fields`.

use inessential::cli::poly_text;
use inessential::field_file::FieldFile;
use inessential::periods::{period_min_poly, period_order, PeriodFieldSpec};

fn main() -> inessential::Result<()> {
    for (nu, lam) in [(5, 2), (7, 3), (13, 4), (31, 3), (11, 5)] {
        let spec = PeriodFieldSpec::new(nu, lam)?;
        let order = period_order(&spec)?;
        println!(
            "{:<13} g = {:<2} disc {:>6}  {}",
            spec.label(),
            spec.primitive_root(),
            order.disc(),
            poly_text(&period_min_poly(&spec)?)
        );
    }

    let spec = PeriodFieldSpec::new(13, 4)?;
    let order = period_order(&spec)?;
    let file = FieldFile::from_order(&order, &order.basis(1))?;
    println!("\n{}", file.to_json());
    Ok(())
}
