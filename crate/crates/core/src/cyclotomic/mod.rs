//! Exact arithmetic in cyclotomic fields ℚ(ζ_M) and dense matrices over them.

mod matrix;
mod number;
mod poly;
mod scalar;

pub use matrix::{DenseMatrix, DenseRecord};
pub use number::{CyclotomicNumber, CyclotomicRecord};
pub use poly::{cyclotomic_poly, reduce_int};
pub use scalar::Scalar;
