//! Bounded search for witness scripts.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::check::{equality_runs, may_hold, parameter_letters};
use super::{
    canonical_check, extract_epsilon_c, forbidden_letters, FreeProductElement, Letter, Segment, WitnessScript,
};
use crate::algebra::FiniteSemigroup;
use crate::eqsys::EquationSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScriptBudget {
    /// Most segments in one variable's value.
    pub max_segments: usize,
    /// Most letters in one variable's value; also the fresh-letter pool size.
    pub max_free_len: usize,
    /// Keep going after the first script to collect every distinct ε_c.
    pub collect_all: bool,
}

impl ScriptBudget {
    pub fn uniform(k: usize) -> Self {
        ScriptBudget { max_segments: k, max_free_len: k, collect_all: false }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScriptSearch {
    /// The first passing script in candidate order.
    pub script: Option<WitnessScript>,
    /// Distinct extracted systems, by their text. Holds only the first
    /// script's system unless `collect_all` was set.
    pub epsilon_c: BTreeSet<String>,
    pub passing: usize,
    pub nodes: u64,
}

/// Normal forms within budget over `letters` and the elements of `s`,
/// ordered by segment count, then letter count, then segments.
pub fn candidates(
    s: &FiniteSemigroup,
    letters: &[Letter],
    max_segments: usize,
    max_free_len: usize,
) -> Vec<FreeProductElement> {
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut by_len: Vec<Vec<Vec<Letter>>> = vec![Vec::new()];
    for _ in 0..max_free_len {
        words = words.iter().flat_map(|w| letters.iter().map(move |&k| [w.as_slice(), &[k]].concat())).collect();
        by_len.push(words.clone());
    }
    let mut out = Vec::new();
    let mut stack: Vec<Segment> = Vec::new();
    grow(s, &by_len, max_segments, max_free_len, &mut stack, &mut out);
    out.sort_by(|a, b| {
        (a.segments().len(), a.free_length(), a.segments()).cmp(&(b.segments().len(), b.free_length(), b.segments()))
    });
    out
}

fn grow(
    s: &FiniteSemigroup,
    by_len: &[Vec<Vec<Letter>>],
    segments_left: usize,
    letters_left: usize,
    stack: &mut Vec<Segment>,
    out: &mut Vec<FreeProductElement>,
) {
    if !stack.is_empty() {
        out.push(FreeProductElement::from_segments(stack.clone(), s).expect("alternating and nonempty"));
    }
    if segments_left == 0 {
        return;
    }
    let last_free = matches!(stack.last(), Some(Segment::Free(_)));
    let last_carrier = matches!(stack.last(), Some(Segment::Carrier(_)));
    if !last_free {
        for (len, words) in by_len.iter().enumerate().skip(1).take(letters_left) {
            for w in words {
                stack.push(Segment::Free(w.clone()));
                grow(s, by_len, segments_left - 1, letters_left - len, stack, out);
                stack.pop();
            }
        }
    }
    if !last_carrier {
        for a in s.elements() {
            stack.push(Segment::Carrier(a));
            grow(s, by_len, segments_left - 1, letters_left, stack, out);
            stack.pop();
        }
    }
}

struct Searcher<'a> {
    s: &'a FiniteSemigroup,
    e: &'a EquationSystem,
    variables: Vec<usize>,
    pools: Vec<Vec<FreeProductElement>>,
    /// Equalities that become fully assigned with the k-th variable.
    due: Vec<Vec<usize>>,
    letters: std::collections::BTreeMap<usize, Letter>,
}

#[derive(Default)]
struct Found {
    script: Option<WitnessScript>,
    epsilon_c: BTreeSet<String>,
    passing: usize,
    nodes: u64,
}

impl Searcher<'_> {
    fn run<'s>(
        &'s self,
        depth: usize,
        values: &mut [Option<&'s FreeProductElement>],
        collect_all: bool,
        found: &mut Found,
    ) -> bool {
        if depth == self.variables.len() {
            let script = WitnessScript {
                assignments: self
                    .variables
                    .iter()
                    .map(|&v| (self.e.name(v).to_owned(), values[v].expect("assigned").clone()))
                    .collect(),
            };
            let rs = canonical_check(self.s, self.e, &script).expect("pruned search only reaches passing scripts");
            found.passing += 1;
            found.epsilon_c.insert(extract_epsilon_c(&rs).to_string());
            if found.script.is_none() {
                found.script = Some(script);
            }
            return !collect_all;
        }
        let var = self.variables[depth];
        for candidate in &self.pools[depth] {
            found.nodes += 1;
            values[var] = Some(candidate);
            if self.consistent(depth, values) && self.run(depth + 1, values, collect_all, found) {
                values[var] = None;
                return true;
            }
        }
        values[var] = None;
        false
    }

    fn consistent(&self, depth: usize, values: &[Option<&FreeProductElement>]) -> bool {
        let eqs = self.e.equalities();
        let complete = |idx: usize| equality_runs(self.s, idx, &eqs[idx], &self.letters, values).is_ok();
        self.due[depth].iter().all(|&idx| complete(idx)) && eqs.iter().all(|eq| may_hold(eq, &self.letters, values))
    }
}

/// Looks for a script passing [`canonical_check`] among all normal forms
/// within `budget`. Letters available to a variable are the parameter
/// letters it may depend on plus `max_free_len` fresh ones.
pub fn search_scripts(s: &FiniteSemigroup, e: &EquationSystem, budget: ScriptBudget) -> ScriptSearch {
    let letters = parameter_letters(e);
    let variables = e.variables();
    let fresh_start = letters.len() + 1;
    let pools: Vec<Vec<FreeProductElement>> = variables
        .iter()
        .map(|&v| {
            let forbidden = forbidden_letters(e, v);
            let mut allowed: Vec<Letter> = letters.values().copied().filter(|k| !forbidden.contains(k)).collect();
            allowed.extend(fresh_start..fresh_start + budget.max_free_len);
            candidates(s, &allowed, budget.max_segments, budget.max_free_len)
        })
        .collect();
    let mut due = vec![Vec::new(); variables.len().max(1)];
    let mut static_eqs = Vec::new();
    for (idx, eq) in e.equalities().iter().enumerate() {
        match eq.symbols().filter_map(|sym| variables.iter().position(|&v| v == sym)).max() {
            Some(k) => due[k].push(idx),
            None => static_eqs.push(idx),
        }
    }
    let searcher = Searcher { s, e, variables, pools, due, letters };
    let empty: Vec<Option<&FreeProductElement>> = vec![None; e.symbol_count()];
    let static_ok =
        static_eqs.iter().all(|&idx| equality_runs(s, idx, &e.equalities()[idx], &searcher.letters, &empty).is_ok());
    if !static_ok {
        return ScriptSearch::default();
    }
    if searcher.variables.is_empty() {
        let mut found = Found::default();
        searcher.run(0, &mut empty.clone(), budget.collect_all, &mut found);
        return ScriptSearch { script: found.script, epsilon_c: found.epsilon_c, passing: found.passing, nodes: 0 };
    }

    // one task per value of the first variable, merged in candidate order
    let first = searcher.variables[0];
    let parts: Vec<Found> = searcher.pools[0]
        .par_iter()
        .map(|candidate| {
            let mut found = Found { nodes: 1, ..Found::default() };
            let mut values = empty.clone();
            values[first] = Some(candidate);
            if searcher.consistent(0, &values) {
                searcher.run(1, &mut values, budget.collect_all, &mut found);
            }
            found
        })
        .collect();
    let mut out = ScriptSearch::default();
    for part in parts {
        out.nodes += part.nodes;
        if out.script.is_none() && part.script.is_some() {
            out.script = part.script;
            if !budget.collect_all {
                out.epsilon_c = part.epsilon_c.clone();
            }
        }
        if budget.collect_all {
            out.passing += part.passing;
            out.epsilon_c.extend(part.epsilon_c);
        }
    }
    if !budget.collect_all {
        out.passing = usize::from(out.script.is_some());
    }
    out
}
