//! Small semigroups: exhaustive enumeration, the persisted corpus, and the
//! verification batteries that sweep it.

mod battery;
mod corpus;
mod enumerate;

pub use battery::{
    battery_ids, class_b_witnesses, verify_battery, BatteryInfo, BatteryReport, Mismatch, BATTERIES,
    CLOSURE_FACTOR_ORDER, EXISTENTIAL_PROBES,
};
pub use corpus::{load_corpus, read_index, save_corpus, Corpus, CorpusSource, CorpusSummary};
pub use enumerate::enumerate_semigroups;

use thiserror::Error;

use crate::algebra::AlgebraError;

/// Largest order `enumerate_semigroups` accepts; 6 is best-effort.
pub const MAX_ENUMERATION_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmallsemiError {
    #[error("order {order} exceeds the enumeration bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("unknown battery `{0}`")]
    UnknownBattery(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("corpus: {0}")]
    Corpus(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
