//! The classic cubic in which every element has even index.
//!
//! Run with `cargo run --example dedekind_cubic`.

use inessential::criteria::analyze;
use inessential::field_file::bundled_field;
use inessential::number_field::{index_form, OrderElement};

fn main() -> inessential::Result<()> {
    let order = bundled_field("dedekind-cubic")?;
    println!("{} has discriminant {}", order.label(), order.disc());

    let delta = index_form(&order)?;
    println!("index form: {}", delta.display_with(&["a", "b", "c"]));

    for coords in [[0, 1, 0], [0, 0, 1], [0, 1, 1], [0, 3, -2]] {
        let idx = order.element_index(&OrderElement::from_i64(&coords))?;
        println!("  index of {coords:?} = {idx}");
    }

    for p in [2, 3, 5] {
        let r = analyze(&order, p, 3)?;
        let answer = if r.verdict_counts { "yes" } else { "no" };
        print!("p = {p}: common index divisor? {answer}");
        match &r.witness {
            Some(w) => println!(" (witness {:?}, index {})", w.coords, w.index),
            None => println!(" (failing degrees {:?})", r.failing_degrees),
        }
    }
    Ok(())
}
