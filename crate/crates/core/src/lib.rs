//! Classification of finite irreducible monomial subgroups of GL(p, ℂ) for prime `p`.
//!
//! Groups are named by integer labels, counted without building generators, and
//! assembled as exact monomial or cyclotomic matrices on demand. The [`verify`]
//! module provides closure, character and conjugacy oracles.

pub mod arith;
pub mod classify;
pub mod cyclotomic;
pub mod error;
pub mod modules;
pub mod monomial;
pub mod nonsolvable;
pub mod padic;
pub mod primitive;
pub mod record;
pub mod solvable;
pub mod verify;

pub use error::{Error, Result};

use num_rational::{BigRational, Rational64};

/// Arbitrary-precision rational scalar.
pub type Rational = BigRational;
/// Element of ℚ(ζ_M) with arbitrary-precision coordinates.
pub type Cyclotomic = cyclotomic::CyclotomicNumber<BigRational>;
/// Element of ℚ(ζ_M) with 64-bit rational coordinates.
pub type Cyclotomic64 = cyclotomic::CyclotomicNumber<Rational64>;
/// Dense matrix over ℚ(ζ_M) with arbitrary-precision coordinates.
pub type Matrix = cyclotomic::DenseMatrix<BigRational>;
/// Dense matrix over ℚ(ζ_M) with 64-bit rational coordinates.
pub type Matrix64 = cyclotomic::DenseMatrix<Rational64>;
