pub mod arith;
pub mod cli;
pub mod criteria;
pub mod error;
pub mod field_file;
pub mod fp_poly;
pub mod hnf_ideals;
pub mod linalg;
pub mod multipoly;
pub mod number_field;
pub mod periods;
pub mod serde_big;
pub mod supplementary;

pub use error::{Error, Result};
