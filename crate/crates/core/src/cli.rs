//! The `inessential` command line.
//!
//! Exit status: 0 on success, 1 for usage and I/O problems, 2 for invalid
//! field data or parameters, 3 when independent computations disagree.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::criteria::{self, AnalysisReport, DEFAULT_WITNESS_BOUND};
use crate::error::Error;
use crate::field_file::{FieldFile, ReportFile, SupplementaryFile, SCHEMA_VERSION};
use crate::fp_poly;
use crate::number_field::Order;
use crate::periods::{self, period_order, PeriodFieldSpec};
use crate::supplementary::{supplementary_report, SupplementaryReport};

#[derive(Parser, Debug)]
#[command(
    name = "inessential",
    version,
    about = "Common index divisors of number fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a prime divides the index of every element.
    Analyze {
        field: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_WITNESS_BOUND)]
        witness_bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Smallest prime-conductor period field that removes the prime from the index.
    Supplementary {
        field: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the degree-λ subfield of the ν-th cyclotomic field.
    PeriodField {
        #[arg(long)]
        conductor: u64,
        #[arg(long)]
        degree: u64,
        /// Write a field file for the period order.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Cubic period fields with 2 as a common index divisor.
    CubicSurvey {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Number of monic irreducibles over F_p of each degree.
    Gbar {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        max_degree: u32,
    },
    /// List the monic irreducibles over F_p of one degree.
    Irreducibles {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        degree: u32,
    },
}

enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e)
    }
}

/// Parses `args` (including the program name), runs the command, writes to
/// `out`/`err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_order(path: &PathBuf) -> Result<Order, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file = FieldFile::parse(&text).map_err(|e| match e {
        Error::FieldFile(m) => Error::FieldFile(format!("{}: {m}", path.display())),
        other => other,
    })?;
    Ok(file.to_order()?)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Analyze {
            field,
            prime,
            witness_bound,
            format,
        } => {
            let order = load_order(&field)?;
            let report = criteria::analyze(&order, prime, witness_bound)?;
            Ok(match format {
                Format::Json => json(&ReportFile::new(report)),
                Format::Text => analysis_text(&report),
            })
        }
        Command::Supplementary {
            field,
            prime,
            format,
        } => {
            let order = load_order(&field)?;
            let report = supplementary_report(&order, prime)?;
            Ok(match format {
                Format::Json => json(&SupplementaryFile {
                    schema_version: SCHEMA_VERSION,
                    label: order.label().to_string(),
                    report,
                }),
                Format::Text => {
                    let mut s = format!("field: {}\n", order.label());
                    s.push_str(&supplementary_text(&report));
                    s
                }
            })
        }
        Command::PeriodField {
            conductor,
            degree,
            emit,
        } => {
            let spec = PeriodFieldSpec::new(conductor, degree)?;
            let order = period_order(&spec)?;
            let min_poly = order.charpoly_element(&order.basis(1))?;
            let mut s = String::new();
            let _ = writeln!(s, "field: {}", spec.label());
            let _ = writeln!(s, "primitive root: {}", spec.primitive_root());
            let _ = writeln!(s, "min poly: {}", poly_text(&min_poly));
            let _ = writeln!(s, "disc: {}", order.disc());
            if let Some(path) = emit {
                let file = FieldFile::from_order(&order, &order.basis(1))?;
                std::fs::write(&path, file.to_json() + "\n")
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                let _ = writeln!(s, "wrote: {}", path.display());
            }
            Ok(s)
        }
        Command::CubicSurvey { max, format } => {
            let survey = periods::cubic_survey(max)?;
            Ok(match format {
                Format::Json => json(&survey),
                Format::Text => {
                    let mut s = String::new();
                    for c in &survey.checks {
                        let d = c.decomposition;
                        let _ = writeln!(
                            s,
                            "{:>5}  A={:<4} B={:<3} {}",
                            d.nu,
                            d.a,
                            d.b,
                            if c.parity_verdict {
                                "common index divisor"
                            } else {
                                "-"
                            }
                        );
                    }
                    let hits: Vec<String> = survey.hits.iter().map(u64::to_string).collect();
                    let _ = writeln!(s, "primes: {}", hits.join(" "));
                    if let Some(note) = periods::survey_note(max) {
                        let _ = writeln!(s, "{note}");
                    }
                    s
                }
            })
        }
        Command::Gbar { prime, max_degree } => {
            if max_degree == 0 {
                return Err(Error::Domain("max degree must be >= 1".into()).into());
            }
            if !crate::arith::is_prime(prime) {
                return Err(Error::NotPrime(prime).into());
            }
            let table = criteria::gbar_table(prime, max_degree as usize)?;
            Ok(join(&table) + "\n")
        }
        Command::Irreducibles { prime, degree } => {
            let list = fp_poly::enumerate_irreducibles(prime, degree)?;
            Ok(list.iter().map(|f| format!("{f}\n")).collect())
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// `x^2 + x - 1` style rendering of integer coefficients `c_0..c_n`.
pub fn poly_text(c: &[BigInt]) -> String {
    let mut s = String::new();
    for (k, coeff) in c.iter().enumerate().rev() {
        if coeff == &BigInt::from(0) {
            continue;
        }
        let neg = coeff < &BigInt::from(0);
        let mag = if neg { -coeff.clone() } else { coeff.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let one = mag == BigInt::from(1);
        match k {
            0 => s.push_str(&mag.to_string()),
            _ => {
                if !one {
                    s.push_str(&mag.to_string());
                }
                s.push('x');
                if k > 1 {
                    let _ = write!(s, "^{k}");
                }
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn analysis_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "field: {}", r.label);
    let _ = writeln!(s, "degree: {}", r.degree);
    let _ = writeln!(s, "disc: {}", r.disc);
    let _ = writeln!(s, "prime: {}", r.p);
    let _ = writeln!(s, "index form: {}", r.index_form);
    let _ = writeln!(s, "prime ideals by degree: {}", join(&r.lambda_profile));
    let _ = writeln!(s, "irreducibles by degree: {}", join(&r.gbar_table));
    let _ = writeln!(s, "verdict (prime counts): {}", r.verdict_counts);
    let _ = writeln!(s, "verdict (index form): {}", r.verdict_form);
    let _ = writeln!(s, "failing degrees: {}", join(&r.failing_degrees));
    match &r.witness {
        Some(w) => {
            let _ = writeln!(
                s,
                "witness: ({}) index {}",
                join(&w.coords).replace(' ', ", "),
                w.index
            );
        }
        None if r.verdict_counts => {
            let _ = writeln!(s, "witness: none (every index is divisible by {})", r.p);
        }
        None => {
            let _ = writeln!(s, "witness: none within bound {}", r.witness_bound);
        }
    }
    if let Some(shape) = &r.factor_shape_of_witness {
        let parts: Vec<String> = shape.iter().map(|(d, e)| format!("({d},{e})")).collect();
        let _ = writeln!(s, "factor shape: {}", parts.join(" "));
    }
    let _ = writeln!(s, "divides disc: {}", r.ramification.divides_disc);
    match r.ramification.unramified_witness {
        Some(nu) => {
            let _ = writeln!(s, "frobenius period: {nu}");
        }
        None => {
            let _ = writeln!(s, "frobenius period: none");
        }
    }
    s.push_str(&supplementary_text(&r.supplementary));
    s
}

fn supplementary_text(r: &SupplementaryReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "membership: {}", join(&r.membership));
    let _ = writeln!(s, "minimal set: {}", join(&r.minimal));
    let _ = writeln!(s, "obstruction: {}", r.obstruction);
    match (r.nu, r.mu) {
        (Some(nu), Some(mu)) => {
            let _ = writeln!(s, "supplementary: nu={nu} mu={mu} lambda={}", r.lambda);
        }
        _ => {
            let _ = writeln!(s, "supplementary: rationals");
        }
    }
    let _ = writeln!(s, "description: {}", r.description);
    if let Some(mp) = &r.period_min_poly {
        let _ = writeln!(s, "period polynomial: {}", poly_text(mp));
    }
    let _ = writeln!(s, "minimality: {}", r.minimality);
    let v = &r.verification;
    let status = match v.status {
        crate::supplementary::VerificationStatus::Verified => "verified",
        crate::supplementary::VerificationStatus::Refuted => "refuted",
        crate::supplementary::VerificationStatus::Unverified => "unverified",
    };
    let _ = writeln!(
        s,
        "verification: {status} (residue field F_{}^{} = F_p[t]/({}))",
        r.p, v.residue_degree, v.field_modulus
    );
    if let Some(pt) = &v.point {
        let _ = writeln!(s, "nonvanishing point: ({})", pt.join(", "));
    }
    s
}
