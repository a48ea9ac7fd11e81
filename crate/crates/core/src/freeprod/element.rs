//! Normal forms in the free product of the free semigroup with a finite
//! semigroup `S`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Element, FiniteSemigroup};

/// Letters are numbered from 1, so letter `k` prints as `A<k>`.
pub type Letter = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Segment {
    Free(Vec<Letter>),
    Carrier(Element),
}

/// An alternating, nonempty sequence of free words and carrier elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeProductElement {
    segments: Vec<Segment>,
}

impl FreeProductElement {
    /// Normalises any nonempty sequence of segments: adjacent free words are
    /// concatenated and adjacent carriers multiplied in `s`. Returns `None`
    /// for an empty sequence or an empty free word.
    pub fn from_segments(segments: Vec<Segment>, s: &FiniteSemigroup) -> Option<Self> {
        let mut out: Vec<Segment> = Vec::with_capacity(segments.len());
        for seg in segments {
            if let Segment::Free(w) = &seg {
                if w.is_empty() {
                    return None;
                }
            }
            push_segment(&mut out, seg, s);
        }
        (!out.is_empty()).then_some(FreeProductElement { segments: out })
    }

    pub fn letter(k: Letter) -> Self {
        FreeProductElement { segments: vec![Segment::Free(vec![k])] }
    }

    pub fn carrier(a: Element) -> Self {
        FreeProductElement { segments: vec![Segment::Carrier(a)] }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.segments
            .iter()
            .flat_map(|seg| match seg {
                Segment::Free(w) => w.as_slice(),
                Segment::Carrier(_) => &[],
            })
            .copied()
    }

    pub fn carriers(&self) -> impl Iterator<Item = Element> + '_ {
        self.segments.iter().filter_map(|seg| match seg {
            Segment::Carrier(a) => Some(*a),
            Segment::Free(_) => None,
        })
    }

    pub fn free_length(&self) -> usize {
        self.letters().count()
    }
}

fn push_segment(out: &mut Vec<Segment>, seg: Segment, s: &FiniteSemigroup) {
    match (out.last_mut(), seg) {
        (Some(Segment::Free(w)), Segment::Free(v)) => w.extend(v),
        (Some(Segment::Carrier(a)), Segment::Carrier(b)) => *a = s.mul(*a, b),
        (_, seg) => out.push(seg),
    }
}

pub fn fp_multiply(x: &FreeProductElement, y: &FreeProductElement, s: &FiniteSemigroup) -> FreeProductElement {
    let mut segments = x.segments.clone();
    for seg in &y.segments {
        push_segment(&mut segments, seg.clone(), s);
    }
    FreeProductElement { segments }
}

impl fmt::Display for FreeProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens = Vec::new();
        for seg in &self.segments {
            match seg {
                Segment::Free(w) => tokens.extend(w.iter().map(|k| format!("A{k}"))),
                Segment::Carrier(a) => tokens.push(format!("s{a}")),
            }
        }
        f.write_str(&tokens.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{chain_semilattice, cyclic_group};

    #[test]
    fn junction_merges() {
        let s = cyclic_group(3).unwrap();
        let x = FreeProductElement::from_segments(vec![Segment::Free(vec![1]), Segment::Carrier(1)], &s).unwrap();
        let y = FreeProductElement::from_segments(vec![Segment::Carrier(1), Segment::Free(vec![2])], &s).unwrap();
        let xy = fp_multiply(&x, &y, &s);
        assert_eq!(xy.segments(), &[Segment::Free(vec![1]), Segment::Carrier(2), Segment::Free(vec![2])]);
        assert_eq!(xy.to_string(), "A1 s2 A2");
        let ab = fp_multiply(&FreeProductElement::letter(1), &FreeProductElement::letter(2), &s);
        assert_eq!(ab.segments(), &[Segment::Free(vec![1, 2])]);
        let ch = chain_semilattice(2).unwrap();
        let c = fp_multiply(&FreeProductElement::carrier(1), &FreeProductElement::carrier(0), &ch);
        assert_eq!(c.segments(), &[Segment::Carrier(0)]);
    }

    #[test]
    fn empty_inputs_rejected() {
        let s = cyclic_group(2).unwrap();
        assert!(FreeProductElement::from_segments(vec![], &s).is_none());
        assert!(FreeProductElement::from_segments(vec![Segment::Free(vec![])], &s).is_none());
    }
}
