//! Error type shared by the algebra constructors.
//!
//! Constructors validate structure (poset axioms, lattice completeness,
//! distributivity, table totality) and report the first offending elements by
//! name. Law failures on well-formed algebras are not errors; they are
//! reported through [`crate::report::LawReport`]. The exceptions are the
//! constructions whose preconditions are laws (twists, quotients), which
//! refuse invalid input here.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("carrier has {n} elements; at most 64 are supported")]
    TooManyElements { n: usize },

    #[error("duplicate element name {name:?}")]
    DuplicateName { name: String },

    #[error("unknown element name {name:?}")]
    UnknownName { name: String },

    #[error("cover relation has a cycle through {name:?}")]
    CoverCycle { name: String },

    #[error("elements {a:?} and {b:?} have no {kind}")]
    NotALattice { kind: &'static str, a: String, b: String },

    #[error("poset has no {kind} element")]
    Unbounded { kind: &'static str },

    #[error("lattice is not distributive: {a:?} ∧ ({b:?} ∨ {c:?}) ≠ ({a:?} ∧ {b:?}) ∨ ({a:?} ∧ {c:?})")]
    NotDistributive { a: String, b: String, c: String },

    #[error("no greatest x with {a:?} ∧ x ≤ {b:?}: the residual table cannot be formed")]
    NoResidual { a: String, b: String },

    #[error("{members:?} is not a filter: {reason}")]
    NotAFilter { members: Vec<String>, reason: String },

    #[error("filter is not Boolean: it does not contain the dense element {dense:?}")]
    NotBooleanFilter { dense: String },

    #[error("law {law} fails at ({witness}); the construction requires it")]
    LawPrecondition { law: String, witness: String },

    #[error("subset {members:?} is not an up-set: contains {inside:?} but not {above:?}")]
    NotUpSet { members: Vec<String>, inside: String, above: String },

    #[error("subset {members:?} is not a down-set: contains {inside:?} but not {below:?}")]
    NotDownSet { members: Vec<String>, inside: String, below: String },

    #[error("operation table {table} is not total: missing entry for {name:?}")]
    PartialTable { table: String, name: String },

    #[error("operation table {table} maps {name:?} outside the carrier")]
    TableRange { table: String, name: String },

    #[error("isomorphism search limit is {limit} elements, input has {n}")]
    IsoSizeLimit { limit: usize, n: usize },

    #[error("unknown law name {name:?}")]
    UnknownLaw { name: String },

    #[error("document: {detail}")]
    Document { detail: String },

    #[error("internal inconsistency: {msg}")]
    Internal { msg: String },
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Error {
        Error::Internal { msg: msg.into() }
    }
}
