//! JSON field files and analysis report files.
//!
//! A field file describes an order by the minimal polynomial of a primitive
//! element and the basis written over its powers:
//!
//! ```json
//! {
//!   "label": "dedekind-cubic",
//!   "degree": 3,
//!   "min_poly": ["-8", "-2", "-1", "1"],
//!   "basis_numerators": [["2","0","0"], ["0","2","0"], ["0","1","1"]],
//!   "denominator": "2",
//!   "disc": "-503"
//! }
//! ```
//!
//! Integers are written as decimal strings; plain JSON integers are accepted
//! on input.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::criteria::AnalysisReport;
use crate::error::{Error, Result};
use crate::number_field::{Order, OrderElement};
use crate::supplementary::SupplementaryReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldFile {
    pub label: String,
    pub degree: usize,
    #[serde(with = "crate::serde_big::vec")]
    pub min_poly: Vec<BigInt>,
    #[serde(with = "crate::serde_big::mat")]
    pub basis_numerators: Vec<Vec<BigInt>>,
    #[serde(with = "crate::serde_big::int")]
    pub denominator: BigInt,
    #[serde(
        default,
        with = "crate::serde_big::opt_int",
        skip_serializing_if = "Option::is_none"
    )]
    pub disc: Option<BigInt>,
}

impl FieldFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::FieldFile(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::FieldFile(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::FieldFile(m) => Error::FieldFile(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("field files always serialize")
    }

    /// Builds and validates the order, checking the declared degree and,
    /// if present, the declared discriminant.
    pub fn to_order(&self) -> Result<Order> {
        if self.min_poly.len() != self.degree + 1 {
            return Err(Error::FieldFile(format!(
                "min_poly has {} coefficients for degree {}",
                self.min_poly.len(),
                self.degree
            )));
        }
        let order = Order::from_power_basis(
            self.label.clone(),
            &self.min_poly,
            &self.basis_numerators,
            &self.denominator,
        )?;
        if let Some(d) = &self.disc {
            if d != order.disc() {
                return Err(Error::FieldFile(format!(
                    "declared disc {d} but the basis has disc {}",
                    order.disc()
                )));
            }
        }
        Ok(order)
    }

    /// Describes `order` over the powers of `theta`.
    pub fn from_order(order: &Order, theta: &OrderElement) -> Result<Self> {
        let (min_poly, basis_numerators, denominator) = order.power_basis_presentation(theta)?;
        Ok(FieldFile {
            label: order.label().to_string(),
            degree: order.degree(),
            min_poly,
            basis_numerators,
            denominator,
            disc: Some(order.disc().clone()),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: u32,
    #[serde(flatten)]
    pub report: AnalysisReport,
}

impl ReportFile {
    pub fn new(report: AnalysisReport) -> Self {
        ReportFile {
            schema_version: SCHEMA_VERSION,
            report,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::FieldFile(format!("report: {e}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupplementaryFile {
    pub schema_version: u32,
    pub label: String,
    #[serde(flatten)]
    pub report: SupplementaryReport,
}

/// Field files shipped with the crate, by name.
pub const BUNDLED: &[(&str, &str)] = &[
    (
        "dedekind-cubic",
        include_str!("../data/dedekind-cubic.json"),
    ),
    ("quartic-13564", include_str!("../data/quartic-13564.json")),
    ("golden-ratio", include_str!("../data/golden-ratio.json")),
    ("gaussian", include_str!("../data/gaussian.json")),
    ("period-5-2", include_str!("../data/period-5-2.json")),
    ("period-7-3", include_str!("../data/period-7-3.json")),
    ("period-13-4", include_str!("../data/period-13-4.json")),
    ("period-31-3", include_str!("../data/period-31-3.json")),
];

pub fn bundled_field(name: &str) -> Result<Order> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::FieldFile(format!("no bundled field named {name}")))?;
    FieldFile::parse(text)?.to_order()
}

pub fn bundled_fields() -> Result<Vec<Order>> {
    BUNDLED
        .iter()
        .map(|(_, text)| FieldFile::parse(text)?.to_order())
        .collect()
}
