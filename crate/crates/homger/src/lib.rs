//! Exact computations with hom-Lie algebras, hom-Gerstenhaber algebras and
//! hom-Lie–Rinehart algebras over ℚ or a prime field.

pub mod algebra;
pub mod catalog;
pub mod exterior;
pub mod io;
pub mod linalg;
pub mod report;
pub mod reps;
pub mod rinehart;
pub mod sdhga;

use linalg::{Cancelled, LinalgError};
use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not regular: {0}")]
    NotRegular(String),
    #[error("{0}")]
    Domain(String),
    #[error("input failed verification: {}", .0.failures().join(", "))]
    Invalid(Box<Report>),
    #[error(transparent)]
    Cancelled(#[from] Cancelled),
}

/// Turns a failed report into [`Error::Invalid`].
pub(crate) fn require(r: Report) -> Result<(), Error> {
    if r.passed() {
        Ok(())
    } else {
        Err(Error::Invalid(Box::new(r)))
    }
}
