//! Equation systems: syntax, representation and finite semantics.

mod catalog;
mod eval;
mod parse;
mod system;

pub use catalog::{catalog, catalog_entry, catalog_ids, CatalogEntry, ENTRIES as CATALOG};
pub use eval::{bindings_to_fixed, holds_under, satisfies, satisfies_with, Binding, Stats, Verdict};
pub use parse::parse;
pub use system::{Block, Equality, EquationSystem, Quantifier, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EqsysError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("symbol `{0}` is not quantified")]
    UnquantifiedSymbol(String),
    #[error("symbol `{0}` is quantified more than once")]
    DuplicateQuantification(String),
    #[error("empty word at {line}:{column}")]
    EmptyWord { line: usize, column: usize },
    #[error("a system needs at least one equality")]
    NoEqualities,
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
}

impl std::str::FromStr for EquationSystem {
    type Err = EqsysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
