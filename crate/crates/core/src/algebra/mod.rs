//! Finite semigroups given by Cayley tables.

mod canonical;
mod congruence;
mod construct;
mod green;
mod semigroup;
mod sgp;

pub use canonical::{
    canonical_form, canonical_form_of_table, table_hash, CanonicalForm, CanonicalMode, MAX_CANONICAL_ORDER,
};
pub use congruence::{congruences, quotient, Congruence, DEFAULT_CONGRUENCE_BOUND};
pub use construct::{
    a21, adjoin_identity, adjoin_zero, chain_semilattice, cyclic_group, left_zero, null_semigroup, rectangular_band,
    rees_matrix_0, right_zero, trivial, Standard,
};
pub use green::{GreenData, GreenViolation, Relation};
pub use semigroup::{check_associativity, direct_product, principal_factor, rees_quotient, Element, FiniteSemigroup};
pub use sgp::{parse_sgp, to_sgp};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("associativity fails at ({i}, {j}, {k})")]
    AssociativityViolation { i: usize, j: usize, k: usize },
    #[error("entry {value} at row {row}, column {col} is outside 0..{order}")]
    IndexOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("table is not square: expected {expected} entries in row {row}, found {found}")]
    Shape { row: usize, expected: usize, found: usize },
    #[error("semigroups must have at least one element")]
    Empty,
    #[error("element {element} is outside 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("symbol `{0}` has no assigned element")]
    UnassignedSymbol(String),
    #[error("words must be nonempty")]
    EmptyWord,
    #[error("seed set is empty")]
    EmptySeed,
    #[error("subset is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("subset is not closed under multiplication")]
    NotClosed,
    #[error("order {order} exceeds the bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("invalid construction parameters: {0}")]
    InvalidParams(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// Green's relations of `s`.
pub fn green_data(s: &FiniteSemigroup) -> GreenData {
    GreenData::compute(s)
}
