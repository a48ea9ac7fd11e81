//! Canonical parameter evaluation and run extraction.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{FreeProductElement, FreeprodError, Letter, Segment};
use crate::algebra::{Element, FiniteSemigroup};
use crate::eqsys::{parse, Equality, EquationSystem, Quantifier};

/// An assignment of free-product elements to the existential variables,
/// kept in prefix order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessScript {
    pub assignments: Vec<(String, FreeProductElement)>,
}

impl WitnessScript {
    pub fn get(&self, variable: &str) -> Option<&FreeProductElement> {
        self.assignments.iter().find(|(v, _)| v == variable).map(|(_, x)| x)
    }

    pub fn to_text(&self) -> String {
        self.assignments.iter().map(|(v, x)| format!("{v} = {x}\n")).collect()
    }
}

/// One aligned pair of S-runs, as uncollapsed element sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RunEquality {
    pub equality: usize,
    pub run: usize,
    pub lhs: Vec<Element>,
    pub rhs: Vec<Element>,
}

impl RunEquality {
    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The aligned runs of a successful canonical check, trivial pairs dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunSystem {
    pub runs: Vec<RunEquality>,
    /// How many aligned pairs were dropped for having identical sides.
    pub pruned: usize,
}

/// Letter assigned to each parameter: the `i`-th universal symbol in prefix
/// order gets letter `i + 1`.
pub fn parameter_letters(e: &EquationSystem) -> BTreeMap<usize, Letter> {
    e.parameters().into_iter().enumerate().map(|(i, sym)| (sym, i + 1)).collect()
}

/// Letters that the value of `variable` must avoid: those of parameters
/// quantified after it.
pub fn forbidden_letters(e: &EquationSystem, variable: usize) -> Vec<Letter> {
    let letters = parameter_letters(e);
    e.later_symbols(variable).filter_map(|sym| letters.get(&sym).copied()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Item {
    Letter(Letter),
    Elem(Element),
}

#[derive(Debug, PartialEq, Eq)]
enum Token {
    Letter(Letter),
    Run(Vec<Element>),
}

/// Substitutes parameters and script values into `word` without collapsing
/// adjacent carriers; `None` marks an unassigned variable.
fn substitute(
    word: &[usize],
    letters: &BTreeMap<usize, Letter>,
    values: &[Option<&FreeProductElement>],
) -> Vec<Option<Item>> {
    let mut out = Vec::new();
    for &sym in word {
        if let Some(&k) = letters.get(&sym) {
            out.push(Some(Item::Letter(k)));
            continue;
        }
        let Some(value) = values[sym] else {
            out.push(None);
            continue;
        };
        for seg in value.segments() {
            match seg {
                Segment::Free(w) => out.extend(w.iter().map(|&k| Some(Item::Letter(k)))),
                Segment::Carrier(a) => out.push(Some(Item::Elem(*a))),
            }
        }
    }
    out
}

/// Leading letters up to the first run, unknown or end, and what stopped
/// the scan: `Some(true)` a run, `Some(false)` the end, `None` an unknown.
fn letter_prefix<'a>(items: impl Iterator<Item = &'a Option<Item>>) -> (Vec<Letter>, Option<bool>) {
    let mut letters = Vec::new();
    for item in items {
        match item {
            Some(Item::Letter(k)) => letters.push(*k),
            Some(Item::Elem(_)) => return (letters, Some(true)),
            None => return (letters, None),
        }
    }
    (letters, Some(false))
}

fn prefixes_agree(l: (Vec<Letter>, Option<bool>), r: (Vec<Letter>, Option<bool>)) -> bool {
    let common = l.0.len().min(r.0.len());
    if l.0[..common] != r.0[..common] {
        return false;
    }
    // a side that stopped at a run or the end has no more letters to offer
    match (l.1, r.1) {
        (Some(a), Some(b)) => l.0.len() == r.0.len() && a == b,
        (Some(_), None) => l.0.len() >= r.0.len(),
        (None, Some(_)) => r.0.len() >= l.0.len(),
        (None, None) => true,
    }
}

/// Cheap necessary condition for a partially assigned equality: the
/// letters before the first run agree on both sides, and likewise after
/// the last run.
pub(super) fn may_hold(
    eq: &Equality,
    letters: &BTreeMap<usize, Letter>,
    values: &[Option<&FreeProductElement>],
) -> bool {
    let left = substitute(&eq.lhs, letters, values);
    let right = substitute(&eq.rhs, letters, values);
    prefixes_agree(letter_prefix(left.iter()), letter_prefix(right.iter()))
        && prefixes_agree(letter_prefix(left.iter().rev()), letter_prefix(right.iter().rev()))
}

fn tokens(items: &[Option<Item>]) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::new();
    for item in items {
        let item = item.expect("every variable is assigned");
        match (item, out.last_mut()) {
            (Item::Elem(a), Some(Token::Run(run))) => run.push(a),
            (Item::Elem(a), _) => out.push(Token::Run(vec![a])),
            (Item::Letter(k), _) => out.push(Token::Letter(k)),
        }
    }
    out
}

/// Resolves a script against the system: every existential variable must be
/// assigned, nothing else may be, carriers must lie in `s`, and the free
/// dependency condition must hold.
fn resolve<'a>(
    s: &FiniteSemigroup,
    e: &EquationSystem,
    script: &'a WitnessScript,
) -> Result<Vec<Option<&'a FreeProductElement>>, FreeprodError> {
    let mut values = vec![None; e.symbol_count()];
    for (name, value) in &script.assignments {
        let sym = e
            .symbol_index(name)
            .filter(|&i| e.quantifier(i) == Quantifier::Existential)
            .ok_or_else(|| FreeprodError::UnknownVariable(name.clone()))?;
        if let Some(bad) = value.carriers().find(|&a| a >= s.order()) {
            return Err(FreeprodError::CarrierOutOfRange { element: bad, order: s.order() });
        }
        values[sym] = Some(value);
    }
    for var in e.variables() {
        let value = values[var].ok_or_else(|| FreeprodError::MissingAssignment(e.name(var).to_owned()))?;
        let forbidden = forbidden_letters(e, var);
        if let Some(k) = value.letters().find(|k| forbidden.contains(k)) {
            return Err(FreeprodError::FreeDependencyViolation { variable: e.name(var).to_owned(), letter: k });
        }
    }
    Ok(values)
}

/// Checks that `script` satisfies `e` in `F * S` with each parameter set to
/// its own letter, and returns the aligned S-runs.
pub fn canonical_check(
    s: &FiniteSemigroup,
    e: &EquationSystem,
    script: &WitnessScript,
) -> Result<RunSystem, FreeprodError> {
    let values = resolve(s, e, script)?;
    let letters = parameter_letters(e);
    let mut system = RunSystem::default();
    for (idx, eq) in e.equalities().iter().enumerate() {
        for pair in equality_runs(s, idx, eq, &letters, &values)? {
            if pair.is_trivial() {
                system.pruned += 1;
            } else {
                system.runs.push(pair);
            }
        }
    }
    Ok(system)
}

/// Aligns the runs of one fully assigned equality.
pub(super) fn equality_runs(
    s: &FiniteSemigroup,
    idx: usize,
    eq: &Equality,
    letters: &BTreeMap<usize, Letter>,
    values: &[Option<&FreeProductElement>],
) -> Result<Vec<RunEquality>, FreeprodError> {
    let left = tokens(&substitute(&eq.lhs, letters, values));
    let right = tokens(&substitute(&eq.rhs, letters, values));
    if left.len() != right.len() {
        return Err(FreeprodError::SkeletonMismatch { equality: idx });
    }
    let mut out = Vec::new();
    for (l, r) in left.into_iter().zip(right) {
        match (l, r) {
            (Token::Letter(a), Token::Letter(b)) if a == b => {}
            (Token::Run(lhs), Token::Run(rhs)) => {
                let product = |w: &[Element]| s.product(w.iter().copied()).expect("runs are nonempty");
                if product(&lhs) != product(&rhs) {
                    return Err(FreeprodError::RunProductMismatch { equality: idx, run: out.len() });
                }
                out.push(RunEquality { equality: idx, run: out.len(), lhs, rhs });
            }
            _ => return Err(FreeprodError::SkeletonMismatch { equality: idx }),
        }
    }
    Ok(out)
}

/// Variable name standing for element `a` in an extracted system.
pub fn run_variable(a: Element) -> String {
    format!("xs{a}")
}

/// The purely existential system of run equalities, one variable `xs<a>`
/// per distinct element in order of first appearance. Repeated equalities
/// are kept once; no equalities at all gives `exists x : x = x`.
pub fn extract_epsilon_c(rs: &RunSystem) -> EquationSystem {
    let mut order: Vec<Element> = Vec::new();
    let mut equalities: Vec<Equality> = Vec::new();
    for pair in rs.runs.iter().filter(|p| !p.is_trivial()) {
        let mut index = |w: &[Element]| -> Vec<usize> {
            w.iter()
                .map(|&a| match order.iter().position(|&b| b == a) {
                    Some(i) => i,
                    None => {
                        order.push(a);
                        order.len() - 1
                    }
                })
                .collect()
        };
        let eq = Equality::new(index(&pair.lhs), index(&pair.rhs));
        if !equalities.contains(&eq) {
            equalities.push(eq);
        }
    }
    if equalities.is_empty() {
        return parse("exists x : x = x").expect("convention system parses");
    }
    let symbols = order.into_iter().map(|a| (run_variable(a), Quantifier::Existential)).collect();
    EquationSystem::from_parts(symbols, equalities, None).expect("run systems are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{chain_semilattice, cyclic_group};
    use crate::eqsys::catalog;

    fn el(segments: Vec<Segment>, s: &FiniteSemigroup) -> FreeProductElement {
        FreeProductElement::from_segments(segments, s).unwrap()
    }

    fn worked_script(s: &FiniteSemigroup, x1: FreeProductElement) -> WitnessScript {
        WitnessScript {
            assignments: vec![
                ("x1".into(), x1),
                ("x2".into(), el(vec![Segment::Free(vec![2]), Segment::Carrier(1)], s)),
                ("x3".into(), FreeProductElement::carrier(0)),
            ],
        }
    }

    #[test]
    fn worked_example() {
        let s = chain_semilattice(2).unwrap();
        let e = catalog("sec3.2.eps").unwrap();
        let script = worked_script(&s, el(vec![Segment::Carrier(1), Segment::Free(vec![1])], &s));
        let rs = canonical_check(&s, &e, &script).unwrap();
        assert_eq!(rs.pruned, 1);
        assert_eq!(rs.runs.len(), 2);
        assert_eq!(extract_epsilon_c(&rs).to_string(), "exists xs1, xs0 : xs1 xs0 = xs0 xs1 & xs0 = xs0 xs0");
    }

    #[test]
    fn dependency_violation() {
        let s = chain_semilattice(2).unwrap();
        let e = catalog("sec3.2.eps").unwrap();
        let script = worked_script(&s, el(vec![Segment::Carrier(1), Segment::Free(vec![2])], &s));
        assert_eq!(
            canonical_check(&s, &e, &script),
            Err(FreeprodError::FreeDependencyViolation { variable: "x1".into(), letter: 2 })
        );
    }

    #[test]
    fn commuting_with_parameter() {
        let s = cyclic_group(2).unwrap();
        let e = parse("forall a exists x : a x = x a").unwrap();
        let script = WitnessScript { assignments: vec![("x".into(), FreeProductElement::letter(1))] };
        let rs = canonical_check(&s, &e, &script).unwrap();
        assert!(rs.runs.is_empty());
        assert_eq!(extract_epsilon_c(&rs).to_string(), "exists x : x = x");
    }

    #[test]
    fn skeleton_and_product_failures() {
        let s = cyclic_group(2).unwrap();
        let e = parse("forall a exists x : a = a x a").unwrap();
        let script = WitnessScript { assignments: vec![("x".into(), FreeProductElement::carrier(0))] };
        assert_eq!(canonical_check(&s, &e, &script), Err(FreeprodError::SkeletonMismatch { equality: 0 }));
        let e = parse("exists x : x = x x").unwrap();
        let script = WitnessScript { assignments: vec![("x".into(), FreeProductElement::carrier(1))] };
        assert_eq!(canonical_check(&s, &e, &script), Err(FreeprodError::RunProductMismatch { equality: 0, run: 0 }));
    }

    #[test]
    fn script_must_cover_variables() {
        let s = cyclic_group(2).unwrap();
        let e = parse("forall a exists x : a x = x a").unwrap();
        let empty = WitnessScript { assignments: vec![] };
        assert_eq!(canonical_check(&s, &e, &empty), Err(FreeprodError::MissingAssignment("x".into())));
        let param = WitnessScript { assignments: vec![("a".into(), FreeProductElement::letter(1))] };
        assert_eq!(canonical_check(&s, &e, &param), Err(FreeprodError::UnknownVariable("a".into())));
    }
}
