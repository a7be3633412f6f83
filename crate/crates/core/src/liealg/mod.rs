//! Lie algebras given by bracket tables over Q(√2, √3), and the identity
//! audits run against them.

mod algebra;
mod audit;
pub(crate) mod closure;
mod killing;
mod label;

pub use algebra::{standard_basis, BracketEntry, LieAlgebra, Matrix, TableDoc};
pub use audit::{
    audit_identity_211, audit_identity_28, audit_identity_29, check_antisymmetry, check_antisymmetry_jacobi,
    check_grading, check_jacobi, check_serre, AuditReport, AuditValue, Check,
};
pub use killing::{cartan_killing_pairs, check_killing, global_killing_constant, killing_form, killing_pair};
pub use label::{Element, GeneratorLabel};
