//! Exact construction of the exceptional Lie algebra g₂ in two Cartan-Weyl
//! bases, with identity audits and the diagonal isomorphism between them.

pub mod error;
pub mod exactfield;
pub mod rootsys;

pub use error::{Error, Result};
pub mod liealg;
pub mod basis_a;
pub mod basis_b;
pub mod fixtures;
pub mod isomap;
