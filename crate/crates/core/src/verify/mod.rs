//! Desk-scale oracles: closure, character norms, conjugacy search, exhaustive enumeration
//! and list audits.

pub mod audit;
pub mod character;
pub mod closure;
pub mod conjugacy;
pub mod isomorphism;
pub mod oracle;

pub use audit::{audit, audit_order, audit_sample, AuditConfig, AuditReport, Failure, OrderReport};
pub use character::{character_norm, dense_character_norm, is_irreducible_fast};
pub use closure::{closure, Budget, ClosedGroup, GroupElement};
pub use conjugacy::{
    are_conjugate, conjugacy_search, dense_invariants_differ, fingerprints_match, gl_conjugacy, Conjugacy, Fingerprint,
};
pub use oracle::{oracle_compare, oracle_enumerate, OracleClass, OracleOrderReport};
