//! Does an equation system hold in every semigroup? A bounded harness that
//! answers yes with a witness in the free semigroup, no with a letter-count
//! certificate or a finite counterexample, and otherwise says it does not
//! know.

mod lp;
mod parikh;
mod witness;

pub use parikh::{
    parikh_analyse, parikh_refute, parikh_system, LinearRow, LinearSystem, ParikhCertificate, ParikhOutcome,
};
pub use witness::{witness_search, word_text, WordBinding, WordWitness};

use serde::Serialize;

use crate::algebra::to_sgp;
use crate::eqsys::{satisfies, Binding, EquationSystem};
use crate::smallsemi::{CorpusSource, SmallsemiError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessBudget {
    /// Longest word tried for each variable.
    pub max_len: usize,
    /// Fresh letters available to the witness search.
    pub extra_letters: usize,
    /// Largest corpus order searched for counterexamples.
    pub max_order: usize,
    /// Longest variable in the integer count search.
    pub len_cap: usize,
}

impl Default for HarnessBudget {
    fn default() -> Self {
        HarnessBudget { max_len: 4, extra_letters: 2, max_order: 4, len_cap: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteCounterexample {
    pub order: usize,
    pub sgp: String,
    /// The failing outer universal assignment, when the prefix opens with one.
    pub assignment: Option<Vec<Binding>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Evidence {
    ParikhInfeasible { certificate: ParikhCertificate },
    FiniteCounterexample(FiniteCounterexample),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome")]
pub enum TriVerdict {
    Holds { witness: WordWitness },
    DoesNotHold { evidence: Evidence },
    Unknown { budgets: HarnessBudget },
}

impl TriVerdict {
    pub fn holds(&self) -> Option<bool> {
        match self {
            TriVerdict::Holds { .. } => Some(true),
            TriVerdict::DoesNotHold { .. } => Some(false),
            TriVerdict::Unknown { .. } => None,
        }
    }
}

/// The first iso-corpus entry, smallest order first, that fails `e`.
pub fn counterexample_search(
    e: &EquationSystem,
    max_order: usize,
    source: &CorpusSource,
) -> Result<Option<FiniteCounterexample>, SmallsemiError> {
    for n in 1..=max_order {
        let corpus = source.get(n, crate::algebra::CanonicalMode::Isomorphism)?;
        for s in &corpus.entries {
            let v = satisfies(s, e);
            if !v.satisfied {
                return Ok(Some(FiniteCounterexample { order: n, sgp: to_sgp(s), assignment: v.counterexample }));
            }
        }
    }
    Ok(None)
}

/// Parikh refutation, then witness search, then counterexample search; the
/// first conclusive answer wins.
pub fn holds_in_all_semigroups(
    e: &EquationSystem,
    budget: HarnessBudget,
    source: &CorpusSource,
) -> Result<TriVerdict, SmallsemiError> {
    if let Some(certificate) = parikh_refute(e) {
        return Ok(TriVerdict::DoesNotHold { evidence: Evidence::ParikhInfeasible { certificate } });
    }
    if let Some(witness) = witness_search(e, budget.max_len, budget.extra_letters) {
        return Ok(TriVerdict::Holds { witness });
    }
    if let Some(ce) = counterexample_search(e, budget.max_order, source)? {
        return Ok(TriVerdict::DoesNotHold { evidence: Evidence::FiniteCounterexample(ce) });
    }
    Ok(TriVerdict::Unknown { budgets: budget })
}

/// What each mechanism finds on its own, without short-circuiting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MechanismReport {
    pub parikh: Option<ParikhCertificate>,
    pub witness: Option<WordWitness>,
    pub counterexample: Option<FiniteCounterexample>,
}

impl MechanismReport {
    /// A witness alongside any refutation would be a soundness bug.
    pub fn is_contradictory(&self) -> bool {
        self.witness.is_some() && (self.parikh.is_some() || self.counterexample.is_some())
    }
}

pub fn run_all_mechanisms(
    e: &EquationSystem,
    budget: HarnessBudget,
    source: &CorpusSource,
) -> Result<MechanismReport, SmallsemiError> {
    Ok(MechanismReport {
        parikh: parikh_refute(e),
        witness: witness_search(e, budget.max_len, budget.extra_letters),
        counterexample: counterexample_search(e, budget.max_order, source)?,
    })
}
