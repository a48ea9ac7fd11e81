//! Satisfaction of equation systems on finite semigroups.
//!
//! The prefix is played as a game from left to right: a universal symbol
//! must succeed for every element, an existential one for some element.
//! Each equality is checked as soon as its last symbol is bound, so failing
//! branches are cut early.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::system::{EquationSystem, Quantifier};
use crate::algebra::{Element, FiniteSemigroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub symbol: String,
    pub element: Element,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub satisfied: bool,
    /// Values for the outermost universal block under which the rest of the
    /// game is lost. Present iff unsatisfied and the prefix opens with `forall`.
    pub counterexample: Option<Vec<Binding>>,
    /// A full satisfying assignment. Present iff satisfied and the system is
    /// purely existential.
    pub witness: Option<Vec<Binding>>,
    pub stats: Stats,
}

/// Decides `s ⊨ e`.
pub fn satisfies(s: &FiniteSemigroup, e: &EquationSystem) -> Verdict {
    satisfies_with(s, e, &[])
}

/// Plays the game with some symbols pinned to fixed elements.
///
/// Pinning the bindings of a counterexample and re-running replays it.
pub fn satisfies_with(s: &FiniteSemigroup, e: &EquationSystem, fixed: &[(usize, Element)]) -> Verdict {
    let start = Instant::now();
    let n_sym = e.symbol_count();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n_sym];
    for (idx, eq) in e.equalities().iter().enumerate() {
        let last = eq.symbols().max().expect("words are nonempty");
        due[last].push(idx);
    }
    let mut pinned = vec![None; n_sym];
    for &(sym, value) in fixed {
        pinned[sym] = Some(value);
    }
    let blocks = e.blocks();
    let outer_universal = match blocks.first() {
        Some(b) if b.quantifier == Quantifier::Universal => b.symbols.len(),
        _ => 0,
    };
    let mut game = Game {
        s,
        e,
        due,
        pinned,
        assignment: vec![0; n_sym],
        nodes: 0,
        outer_universal,
        counterexample: None,
        witness: None,
    };
    let satisfied = game.play(0);
    let name = |i: usize, v: Element| Binding { symbol: e.name(i).to_owned(), element: v };
    let counterexample = if satisfied || outer_universal == 0 {
        None
    } else {
        game.counterexample.map(|vals| vals.into_iter().enumerate().map(|(i, v)| name(i, v)).collect())
    };
    let witness = if satisfied && e.is_existential() {
        game.witness.map(|vals| vals.into_iter().enumerate().map(|(i, v)| name(i, v)).collect())
    } else {
        None
    };
    Verdict { satisfied, counterexample, witness, stats: Stats { nodes: game.nodes, elapsed: start.elapsed() } }
}

/// Checks every equality under a full assignment indexed by symbol.
pub fn holds_under(s: &FiniteSemigroup, e: &EquationSystem, assignment: &[Element]) -> bool {
    e.equalities().iter().all(|eq| {
        let val = |w: &[usize]| s.product(w.iter().map(|&sym| assignment[sym])).expect("nonempty word");
        val(&eq.lhs) == val(&eq.rhs)
    })
}

/// Resolves named bindings to symbol indices.
pub fn bindings_to_fixed(e: &EquationSystem, bindings: &[Binding]) -> Option<Vec<(usize, Element)>> {
    bindings.iter().map(|b| e.symbol_index(&b.symbol).map(|i| (i, b.element))).collect()
}

struct Game<'a> {
    s: &'a FiniteSemigroup,
    e: &'a EquationSystem,
    due: Vec<Vec<usize>>,
    pinned: Vec<Option<Element>>,
    assignment: Vec<Element>,
    nodes: u64,
    outer_universal: usize,
    counterexample: Option<Vec<Element>>,
    witness: Option<Vec<Element>>,
}

impl Game<'_> {
    fn value(&self, word: &[usize]) -> Element {
        let mut it = word.iter().map(|&sym| self.assignment[sym]);
        let first = it.next().expect("nonempty word");
        it.fold(first, |acc, x| self.s.mul(acc, x))
    }

    fn due_hold(&self, depth: usize) -> bool {
        self.due[depth].iter().all(|&idx| {
            let eq = &self.e.equalities()[idx];
            self.value(&eq.lhs) == self.value(&eq.rhs)
        })
    }

    fn play(&mut self, depth: usize) -> bool {
        if depth == self.assignment.len() {
            if self.witness.is_none() {
                self.witness = Some(self.assignment.clone());
            }
            return true;
        }
        let universal = self.e.quantifier(depth) == Quantifier::Universal;
        let range = match self.pinned[depth] {
            Some(v) => v..v + 1,
            None => 0..self.s.order(),
        };
        for v in range {
            self.assignment[depth] = v;
            self.nodes += 1;
            let ok = self.due_hold(depth) && self.play(depth + 1);
            if universal && !ok {
                if depth < self.outer_universal && self.counterexample.is_none() {
                    let mut vals = self.assignment[..self.outer_universal].to_vec();
                    for (i, slot) in vals.iter_mut().enumerate().skip(depth + 1) {
                        *slot = self.pinned[i].unwrap_or(0);
                    }
                    self.counterexample = Some(vals);
                }
                return false;
            }
            if !universal && ok {
                return true;
            }
        }
        universal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{a21, cyclic_group, left_zero, null_semigroup};
    use crate::eqsys::parse;

    #[test]
    fn groups_satisfy_group_equation() {
        let e = parse("forall a, b exists x : a = b x b").unwrap();
        assert!(satisfies(&cyclic_group(2).unwrap(), &e).satisfied);
    }

    #[test]
    fn left_zero_left_and_right_group() {
        let lz2 = left_zero(2).unwrap();
        let left = parse("forall a, b exists x : a = a x b").unwrap();
        let right = parse("forall a, b exists x : a = b x a").unwrap();
        assert!(satisfies(&lz2, &left).satisfied);
        let v = satisfies(&lz2, &right);
        assert!(!v.satisfied);
        let ce = v.counterexample.unwrap();
        assert_eq!(ce, vec![Binding { symbol: "a".into(), element: 0 }, Binding { symbol: "b".into(), element: 1 }]);
    }

    #[test]
    fn a21_is_not_in_class_b() {
        let e = parse("exists x forall a : a = a x a").unwrap();
        let v = satisfies(&a21(), &e);
        assert!(!v.satisfied);
        assert!(v.counterexample.is_none());
    }

    #[test]
    fn existential_witness() {
        let e = parse("exists x, y : x y = y & y x = x & x = x x").unwrap();
        let s = left_zero(2).unwrap();
        let v = satisfies(&s, &e);
        assert!(v.satisfied);
        let w = v.witness.unwrap();
        let vals: Vec<Element> = w.iter().map(|b| b.element).collect();
        assert!(holds_under(&s, &e, &vals));
    }

    #[test]
    fn counterexample_replays() {
        let e = parse("forall a exists x : a = a x a").unwrap();
        let s = null_semigroup(2).unwrap();
        let v = satisfies(&s, &e);
        let ce = v.counterexample.unwrap();
        assert_eq!(ce[0].element, 1);
        let fixed = bindings_to_fixed(&e, &ce).unwrap();
        assert!(!satisfies_with(&s, &e, &fixed).satisfied);
    }

    #[test]
    fn pruned_universal_fills_remaining_block() {
        // fails as soon as a is bound to 1, before b is chosen
        let e = parse("forall a, b exists x : a a = a & b = b x").unwrap();
        let s = null_semigroup(2).unwrap();
        let v = satisfies(&s, &e);
        let ce = v.counterexample.unwrap();
        assert_eq!(ce.len(), 2);
        let fixed = bindings_to_fixed(&e, &ce).unwrap();
        assert!(!satisfies_with(&s, &e, &fixed).satisfied);
    }
}
