//! Exact arithmetic in Q(√2, √3), the coefficient field of every structure
//! constant this crate produces.

mod element;
mod rational;

pub use element::{sqrt_in_field, FieldElement};
pub use rational::Rational;
