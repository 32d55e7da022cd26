//! Exact scalars and dense matrices over ℚ or a prime field.

mod matrix;
mod scalar;

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

pub use matrix::Matrix;
pub use scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("bad scalar {0:?}")]
    BadScalar(String),
    #[error("rows of unequal length")]
    Ragged,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("computation cancelled")]
pub struct Cancelled;

/// Cooperative cancellation flag shared between a caller and a long computation.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Option<Arc<AtomicBool>>);

impl CancelToken {
    pub fn new() -> Self {
        CancelToken(Some(Arc::new(AtomicBool::new(false))))
    }

    /// A token that can never fire.
    pub fn never() -> Self {
        CancelToken(None)
    }

    pub fn cancel(&self) {
        if let Some(f) = &self.0 {
            f.store(true, Ordering::Relaxed);
        }
    }

    pub fn check(&self) -> Result<(), Cancelled> {
        match &self.0 {
            Some(f) if f.load(Ordering::Relaxed) => Err(Cancelled),
            _ => Ok(()),
        }
    }
}

/// `a + c·b` entrywise.
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    debug_assert_eq!(a.len(), b.len());
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += &(c * y);
        }
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
