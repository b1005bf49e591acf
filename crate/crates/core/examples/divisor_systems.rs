//! Reducing polynomials modulo `(p, u_i^{p^k} - u_i)`.
//!
//! Run with `cargo run --example divisor_systems`.

use inessential::multipoly::{in_system, reduce_mod_system, DivisorSystem, MPoly};

fn main() -> inessential::Result<()> {
    let names = ["x", "y"];
    let x = MPoly::var(2, 0);
    let y = MPoly::var(2, 1);

    // x^2 y + x y^2 = xy(x + y) vanishes on F_2 but not on F_4.
    let f = &(&(&x * &x) * &y) + &(&x * &(&y * &y));
    for k in 1..=3 {
        let sys = DivisorSystem::new(2, k, 2)?;
        let r = reduce_mod_system(&f, &sys);
        println!(
            "k = {k}: {} reduces to {}  member: {}",
            f.display_with(&names),
            r.display_with(&names),
            in_system(&f, &sys)
        );
    }

    let g = &x.pow(9) - &x;
    let sys = DivisorSystem::new(3, 1, 2)?;
    println!(
        "\nx^9 - x modulo (3, x^3 - x, y^3 - y): {}",
        reduce_mod_system(&g, &sys).display_with(&names)
    );
    Ok(())
}
