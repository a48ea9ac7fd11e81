//! Green's relations computed from principal ideals.
//!
//! `S¹` is never materialised: a principal ideal always contains its
//! generator, which is exactly the effect of the adjoined identity.

use serde::Serialize;
use thiserror::Error;

use super::{Element, FiniteSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    R,
    L,
    J,
    H,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GreenViolation {
    #[error("H differs from R ∧ L at ({0}, {1})")]
    HNotMeet(Element, Element),
    #[error("R∘L differs from L∘R at ({0}, {1})")]
    NotCommuting(Element, Element),
    #[error("D differs from J at ({0}, {1})")]
    DNotJ(Element, Element),
}

/// The five Green partitions plus the principal ideals they come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenData {
    order: usize,
    /// `right_ideals[a][b]` iff `b ∈ aS¹`.
    right_ideals: Vec<Vec<bool>>,
    left_ideals: Vec<Vec<bool>>,
    two_sided_ideals: Vec<Vec<bool>>,
    r_classes: Vec<usize>,
    l_classes: Vec<usize>,
    j_classes: Vec<usize>,
    h_classes: Vec<usize>,
    d_classes: Vec<usize>,
    group_h_classes: Vec<bool>,
}

impl GreenData {
    pub fn compute(s: &FiniteSemigroup) -> GreenData {
        let n = s.order();
        let mut right_ideals = vec![vec![false; n]; n];
        let mut left_ideals = vec![vec![false; n]; n];
        let mut two_sided_ideals = vec![vec![false; n]; n];
        for a in s.elements() {
            right_ideals[a][a] = true;
            left_ideals[a][a] = true;
            for x in s.elements() {
                right_ideals[a][s.mul(a, x)] = true;
                left_ideals[a][s.mul(x, a)] = true;
            }
            // S¹aS¹ = left ideal of everything in aS¹
            for b in s.elements().filter(|&b| right_ideals[a][b]) {
                two_sided_ideals[a][b] = true;
                for x in s.elements() {
                    two_sided_ideals[a][s.mul(x, b)] = true;
                }
            }
        }
        let r_classes = classes_by_key(n, |a, b| right_ideals[a] == right_ideals[b]);
        let l_classes = classes_by_key(n, |a, b| left_ideals[a] == left_ideals[b]);
        let j_classes = classes_by_key(n, |a, b| two_sided_ideals[a] == two_sided_ideals[b]);
        let h_classes = classes_by_key(n, |a, b| r_classes[a] == r_classes[b] && l_classes[a] == l_classes[b]);
        // D = R∘L, taken as the equivalence it generates
        let d_classes =
            classes_by_closure(n, |a, b| (0..n).any(|c| r_classes[a] == r_classes[c] && l_classes[c] == l_classes[b]));
        let h_count = h_classes.iter().max().map_or(0, |m| m + 1);
        let mut group_h_classes = vec![false; h_count];
        for a in s.elements().filter(|&a| s.is_idempotent(a)) {
            group_h_classes[h_classes[a]] = true;
        }
        GreenData {
            order: n,
            right_ideals,
            left_ideals,
            two_sided_ideals,
            r_classes,
            l_classes,
            j_classes,
            h_classes,
            d_classes,
            group_h_classes,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class_index(&self, rel: Relation) -> &[usize] {
        match rel {
            Relation::R => &self.r_classes,
            Relation::L => &self.l_classes,
            Relation::J => &self.j_classes,
            Relation::H => &self.h_classes,
            Relation::D => &self.d_classes,
        }
    }

    pub fn related(&self, rel: Relation, a: Element, b: Element) -> bool {
        let idx = self.class_index(rel);
        idx[a] == idx[b]
    }

    pub fn r_related(&self, a: Element, b: Element) -> bool {
        self.related(Relation::R, a, b)
    }

    pub fn l_related(&self, a: Element, b: Element) -> bool {
        self.related(Relation::L, a, b)
    }

    pub fn h_related(&self, a: Element, b: Element) -> bool {
        self.related(Relation::H, a, b)
    }

    pub fn j_related(&self, a: Element, b: Element) -> bool {
        self.related(Relation::J, a, b)
    }

    pub fn d_related(&self, a: Element, b: Element) -> bool {
        self.related(Relation::D, a, b)
    }

    pub fn class_count(&self, rel: Relation) -> usize {
        self.class_index(rel).iter().max().map_or(0, |m| m + 1)
    }

    /// Classes as element lists, ordered by least element.
    pub fn classes(&self, rel: Relation) -> Vec<Vec<Element>> {
        let idx = self.class_index(rel);
        let mut out = vec![Vec::new(); self.class_count(rel)];
        for (a, &c) in idx.iter().enumerate() {
            out[c].push(a);
        }
        out
    }

    pub fn class_of(&self, rel: Relation, a: Element) -> Vec<Element> {
        let idx = self.class_index(rel);
        (0..self.order).filter(|&b| idx[b] == idx[a]).collect()
    }

    pub fn is_universal(&self, rel: Relation) -> bool {
        self.class_count(rel) == 1
    }

    pub fn is_trivial(&self, rel: Relation) -> bool {
        self.class_count(rel) == self.order
    }

    /// `aS¹ ⊆ bS¹`.
    pub fn r_leq(&self, a: Element, b: Element) -> bool {
        self.right_ideals[b][a]
    }

    /// `S¹a ⊆ S¹b`.
    pub fn l_leq(&self, a: Element, b: Element) -> bool {
        self.left_ideals[b][a]
    }

    /// `S¹aS¹ ⊆ S¹bS¹`.
    pub fn j_leq(&self, a: Element, b: Element) -> bool {
        self.two_sided_ideals[b][a]
    }

    pub fn right_ideal(&self, a: Element) -> &[bool] {
        &self.right_ideals[a]
    }

    pub fn left_ideal(&self, a: Element) -> &[bool] {
        &self.left_ideals[a]
    }

    pub fn two_sided_ideal(&self, a: Element) -> &[bool] {
        &self.two_sided_ideals[a]
    }

    pub fn group_h_classes(&self) -> &[bool] {
        &self.group_h_classes
    }

    /// Whether the H-class of `a` contains an idempotent.
    pub fn in_group_h_class(&self, a: Element) -> bool {
        self.group_h_classes[self.h_classes[a]]
    }

    /// Checks H = R ∧ L, R∘L = L∘R, and that D (as R∘L) equals J.
    pub fn check_invariants(&self) -> Result<(), GreenViolation> {
        let n = self.order;
        let r_then_l = |a: usize, b: usize| (0..n).any(|c| self.r_related(a, c) && self.l_related(c, b));
        let l_then_r = |a: usize, b: usize| (0..n).any(|c| self.l_related(a, c) && self.r_related(c, b));
        for a in 0..n {
            for b in 0..n {
                if self.h_related(a, b) != (self.r_related(a, b) && self.l_related(a, b)) {
                    return Err(GreenViolation::HNotMeet(a, b));
                }
                let rl = r_then_l(a, b);
                if rl != l_then_r(a, b) {
                    return Err(GreenViolation::NotCommuting(a, b));
                }
                if rl != self.d_related(a, b) || rl != self.j_related(a, b) {
                    return Err(GreenViolation::DNotJ(a, b));
                }
            }
        }
        Ok(())
    }
}

/// Class indices for an equivalence given by a key comparison, numbered by
/// least element.
fn classes_by_key(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut class = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if class[a] != usize::MAX {
            continue;
        }
        for (b, slot) in class.iter_mut().enumerate().skip(a) {
            if *slot == usize::MAX && same(a, b) {
                *slot = next;
            }
        }
        next += 1;
    }
    class
}

/// Class indices of the equivalence generated by a relation.
fn classes_by_closure(n: usize, rel: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in 0..n {
        for b in 0..n {
            if rel(a, b) {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
    classes_by_key(n, |a, b| roots[a] == roots[b])
}
