//! Frobenius ideals of a quartic field at 2 and the splitting counts they
//! produce.
//!
//! Run with `cargo run --example quartic_frobenius`.

use inessential::criteria::gbar_table;
use inessential::field_file::bundled_field;
use inessential::hnf_ideals::{frobenius_ideal, lambda_profile, ramification_probe};

fn main() -> inessential::Result<()> {
    let order = bundled_field("quartic-13564")?;
    let p = 2;

    for nu in 1..=4 {
        let ideal = frobenius_ideal(&order, p, nu)?;
        println!("N(I_{nu}) = {}", ideal.norm());
    }

    let profile = lambda_profile(&order, p)?;
    let gbar = gbar_table(p, order.degree())?;
    println!("\ndegree  primes  available");
    for (k, (lam, g)) in profile.iter().zip(&gbar).enumerate() {
        let flag = if g < &(*lam).into() {
            "  <- too many"
        } else {
            ""
        };
        println!("{:>6}  {lam:>6}  {g:>9}{flag}", k + 1);
    }

    let probe = ramification_probe(&order, p)?;
    println!("\n2 divides disc: {}", probe.divides_disc);
    match probe.unramified_witness {
        Some(nu) => println!("Frobenius has period {nu} on O/2O, so 2 is unramified"),
        None => println!("Frobenius is not periodic on O/2O"),
    }
    Ok(())
}
