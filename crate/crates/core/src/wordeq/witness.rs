//! Witness search in the free semigroup under the canonical evaluation.

use serde::Serialize;

use crate::algebra::trivial;
use crate::eqsys::EquationSystem;
use crate::freeprod::{
    canonical_check, forbidden_letters, parameter_letters, FreeProductElement, Letter, Segment, WitnessScript,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordBinding {
    pub variable: String,
    pub letters: Vec<Letter>,
    /// Parameter letters print as `A<k>`, fresh ones as `B<k>`.
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordWitness {
    pub assignments: Vec<WordBinding>,
}

impl WordWitness {
    /// The witness as a free-product script with no carrier segments.
    pub fn to_script(&self) -> WitnessScript {
        let assignments = self
            .assignments
            .iter()
            .map(|b| {
                let value = FreeProductElement::from_segments(vec![Segment::Free(b.letters.clone())], &trivial())
                    .expect("witness words are nonempty");
                (b.variable.clone(), value)
            })
            .collect();
        WitnessScript { assignments }
    }

    /// Replays the witness through the canonical check on the trivial
    /// carrier, which for carrier-free scripts is letter-for-letter equality.
    pub fn replays(&self, e: &EquationSystem) -> bool {
        canonical_check(&trivial(), e, &self.to_script()).is_ok()
    }
}

pub fn word_text(word: &[Letter], params: usize) -> String {
    let names: Vec<String> =
        word.iter().map(|&k| if k <= params { format!("A{k}") } else { format!("B{}", k - params) }).collect();
    names.join(" ")
}

/// Searches for words, one per existential variable, that make every
/// equality an identity of strings once parameter `i` is read as letter
/// `A<i>`. Each variable ranges over words of length `1..=max_len` over the
/// parameter letters it may depend on and `extra_letters` fresh letters.
pub fn witness_search(e: &EquationSystem, max_len: usize, extra_letters: usize) -> Option<WordWitness> {
    let letters = parameter_letters(e);
    let params = letters.len();
    let variables = e.variables();
    let pools: Vec<Vec<Vec<Letter>>> = variables
        .iter()
        .map(|&v| {
            let forbidden = forbidden_letters(e, v);
            let mut alphabet: Vec<Letter> = letters.values().copied().filter(|k| !forbidden.contains(k)).collect();
            alphabet.extend(params + 1..=params + extra_letters);
            words_up_to(&alphabet, max_len)
        })
        .collect();
    let order = assignment_order(e, &variables);
    let mut search = Search {
        e,
        letters: &letters,
        variables: &variables,
        order: &order,
        pools: &pools,
        max_len,
        values: vec![None; e.symbol_count()],
    };
    if !search.run(0) {
        return None;
    }
    let assignments = variables
        .iter()
        .map(|&v| {
            let word = search.values[v].clone().expect("assigned");
            WordBinding { variable: e.name(v).to_owned(), text: word_text(&word, params), letters: word }
        })
        .collect();
    Some(WordWitness { assignments })
}

fn words_up_to(alphabet: &[Letter], max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| alphabet.iter().map(move |&k| [w.as_slice(), &[k]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Greedy order that completes equalities as early as possible. The
/// quantifier order does not matter here: the dependency condition is
/// already encoded in each variable's alphabet.
fn assignment_order(e: &EquationSystem, variables: &[usize]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rest: Vec<usize> = variables.to_vec();
    while !rest.is_empty() {
        let missing = |v: usize, eq: &crate::eqsys::Equality| {
            let mut syms: Vec<usize> =
                eq.symbols().filter(|s| variables.contains(s) && !chosen.contains(s) && *s != v).collect();
            syms.sort_unstable();
            syms.dedup();
            syms.len()
        };
        let best = rest
            .iter()
            .enumerate()
            .max_by_key(|&(pos, &v)| {
                let completed =
                    e.equalities().iter().filter(|eq| eq.symbols().any(|s| s == v) && missing(v, eq) == 0).count();
                (completed, std::cmp::Reverse(pos))
            })
            .map(|(pos, _)| pos)
            .expect("rest is nonempty");
        chosen.push(rest.remove(best));
    }
    chosen
}

struct Search<'a> {
    e: &'a EquationSystem,
    letters: &'a std::collections::BTreeMap<usize, Letter>,
    variables: &'a [usize],
    order: &'a [usize],
    pools: &'a [Vec<Vec<Letter>>],
    max_len: usize,
    values: Vec<Option<Vec<Letter>>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.e.equalities().iter().all(|eq| self.side(&eq.lhs) == self.side(&eq.rhs));
        }
        let var = self.order[depth];
        let pool = self.variables.iter().position(|&v| v == var).expect("order lists variables");
        for word in &self.pools[pool] {
            self.values[var] = Some(word.clone());
            if self.plausible() && self.run(depth + 1) {
                return true;
            }
        }
        self.values[var] = None;
        false
    }

    /// Substituted side with `None` for unassigned variables.
    fn side(&self, word: &[usize]) -> Vec<Option<Letter>> {
        let mut out = Vec::new();
        for &sym in word {
            match (self.letters.get(&sym), &self.values[sym]) {
                (Some(&k), _) => out.push(Some(k)),
                (None, Some(w)) => out.extend(w.iter().map(|&k| Some(k))),
                (None, None) => out.push(None),
            }
        }
        out
    }

    fn plausible(&self) -> bool {
        self.e.equalities().iter().all(|eq| {
            let l = self.side(&eq.lhs);
            let r = self.side(&eq.rhs);
            ends_agree(l.iter(), r.iter()) && ends_agree(l.iter().rev(), r.iter().rev()) && self.lengths_overlap(&l, &r)
        })
    }

    fn lengths_overlap(&self, l: &[Option<Letter>], r: &[Option<Letter>]) -> bool {
        let range = |side: &[Option<Letter>]| {
            let known = side.iter().filter(|x| x.is_some()).count();
            let unknown = side.len() - known;
            (known + unknown, known + unknown * self.max_len)
        };
        let (lo_l, hi_l) = range(l);
        let (lo_r, hi_r) = range(r);
        lo_l <= hi_r && lo_r <= hi_l
    }
}

/// Letters before the first unknown must match; a fully known side cannot
/// be shorter than the known prefix of the other.
fn ends_agree<'a>(l: impl Iterator<Item = &'a Option<Letter>>, r: impl Iterator<Item = &'a Option<Letter>>) -> bool {
    let (lp, l_done) = known_prefix(l);
    let (rp, r_done) = known_prefix(r);
    let common = lp.len().min(rp.len());
    if lp[..common] != rp[..common] {
        return false;
    }
    match (l_done, r_done) {
        (true, true) => lp.len() == rp.len(),
        (true, false) => rp.len() < lp.len(),
        (false, true) => lp.len() < rp.len(),
        (false, false) => true,
    }
}

fn known_prefix<'a>(items: impl Iterator<Item = &'a Option<Letter>>) -> (Vec<Letter>, bool) {
    let mut out = Vec::new();
    for item in items {
        match item {
            Some(k) => out.push(*k),
            None => return (out, false),
        }
    }
    (out, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eqsys::parse;

    #[test]
    fn commuting_with_a() {
        let e = parse("forall a exists x : a x = x a").unwrap();
        let w = witness_search(&e, 2, 1).unwrap();
        assert_eq!(w.assignments[0].text, "A1");
        assert!(w.replays(&e));
    }

    #[test]
    fn equal_fresh_witnesses() {
        let e = parse("exists x, y : x y = y x").unwrap();
        let w = witness_search(&e, 2, 1).unwrap();
        let texts: Vec<&str> = w.assignments.iter().map(|b| b.text.as_str()).collect();
        assert_eq!(texts, ["B1", "B1"]);
        assert!(w.replays(&e));
    }

    #[test]
    fn regularity_has_no_witness() {
        let e = parse("forall a exists x : a = a x a").unwrap();
        assert!(witness_search(&e, 4, 2).is_none());
    }

    #[test]
    fn dependency_blocks_later_letters() {
        // x = b would work if x could see b
        let e = parse("forall a exists x forall b : a x = a b").unwrap();
        assert!(witness_search(&e, 3, 1).is_none());
        let e = parse("forall a, b exists x : a x = a b").unwrap();
        assert_eq!(witness_search(&e, 3, 1).unwrap().assignments[0].text, "A2");
    }
}
