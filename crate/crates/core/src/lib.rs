//! Combinatorics on words centred on anti-power words.
//!
//! A `(k, n)`-anti-power sequence is a concatenation of `k` pairwise distinct
//! words of length `n`. A word is 2-anti-power when it is square-free, and
//! `k`-anti-power (for `k >= 3`) when it is `(k - 1)`-anti-power and every
//! factor of length `k * l` splits into `k` pairwise distinct blocks.
//!
//! The crate provides:
//!
//! * [`word`]: words, factors, primitive roots and fractional-power analysis
//!   with exact rational exponents;
//! * [`antipower`]: fast and naive anti-power checkers, enumeration and
//!   counting;
//! * [`morphism`]: morphisms, the text file format, classification and
//!   fixed-point generation;
//! * [`decide`]: square-free morphism testing and the finite decision
//!   procedure for 3-anti-power uniform morphisms.

pub mod antipower;
pub mod decide;
mod error;
pub mod morphism;
pub mod word;

pub use error::{Error, Result};
