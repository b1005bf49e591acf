//! Cyclic cubic fields of prime conductor in which 2 divides every index.
//!
//! Run with `cargo run --example cubic_survey -- 500`.

use inessential::periods::{cubic_survey, survey_note};

fn main() -> inessential::Result<()> {
    let limit = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let survey = cubic_survey(limit)?;
    for check in &survey.checks {
        let d = &check.decomposition;
        let mark = if check.parity_verdict { "*" } else { " " };
        println!("{mark} 4*{:<4} = ({})^2 + 27*{}^2", d.nu, d.a, d.b);
    }
    println!(
        "\nconductors with 2 as a common index divisor: {:?}",
        survey.hits
    );
    if let Some(note) = survey_note(limit) {
        println!("{note}");
    }
    Ok(())
}
