//! The free product of the free semigroup with a finite semigroup: normal
//! forms, canonical evaluation of parameters as letters, S-runs and the
//! existential systems extracted from them.

mod check;
mod element;
mod script;
mod search;

pub use check::{
    canonical_check, extract_epsilon_c, forbidden_letters, parameter_letters, run_variable, RunEquality, RunSystem,
    WitnessScript,
};
pub use element::{fp_multiply, FreeProductElement, Letter, Segment};
pub use script::parse_script;
pub use search::{candidates, search_scripts, ScriptBudget, ScriptSearch};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeprodError {
    #[error("value of `{variable}` uses letter A{letter} of a later parameter")]
    FreeDependencyViolation { variable: String, letter: Letter },
    #[error("equality {equality}: the sides have different free skeletons")]
    SkeletonMismatch { equality: usize },
    #[error("equality {equality}: run {run} has different products on the two sides")]
    RunProductMismatch { equality: usize, run: usize },
    #[error("no value for existential variable `{0}`")]
    MissingAssignment(String),
    #[error("`{0}` is not an existential variable of the system")]
    UnknownVariable(String),
    #[error("carrier element {element} out of range for order {order}")]
    CarrierOutOfRange { element: usize, order: usize },
    #[error("script line {line}: {message}")]
    Script { line: usize, message: String },
}
