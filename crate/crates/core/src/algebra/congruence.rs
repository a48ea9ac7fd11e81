//! Congruences by exhaustive partition enumeration.

use serde::Serialize;

use super::{AlgebraError, Element, FiniteSemigroup};

pub const DEFAULT_CONGRUENCE_BOUND: usize = 6;

/// A partition of the elements; `blocks[a]` is the block index of `a`,
/// numbered by least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Congruence {
    blocks: Vec<usize>,
}

impl Congruence {
    pub fn block_of(&self, a: Element) -> usize {
        self.blocks[a]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<Element>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (a, &b) in self.blocks.iter().enumerate() {
            out[b].push(a);
        }
        out
    }

    pub fn is_compatible(&self, s: &FiniteSemigroup) -> bool {
        is_compatible(s, &self.blocks)
    }
}

fn is_compatible(s: &FiniteSemigroup, blocks: &[usize]) -> bool {
    for a in s.elements() {
        for b in (a + 1)..s.order() {
            if blocks[a] != blocks[b] {
                continue;
            }
            for c in s.elements() {
                if blocks[s.mul(c, a)] != blocks[s.mul(c, b)] || blocks[s.mul(a, c)] != blocks[s.mul(b, c)] {
                    return false;
                }
            }
        }
    }
    true
}

/// The quotient table; the block of `a` becomes element `block_of(a)`.
pub fn quotient(s: &FiniteSemigroup, cong: &Congruence) -> Result<FiniteSemigroup, AlgebraError> {
    if !cong.is_compatible(s) {
        return Err(AlgebraError::InvalidParams("partition is not a congruence".into()));
    }
    let blocks = cong.blocks();
    let m = blocks.len();
    let mut table = Vec::with_capacity(m * m);
    for x in &blocks {
        for y in &blocks {
            table.push(cong.block_of(s.mul(x[0], y[0])));
        }
    }
    let labels = blocks
        .iter()
        .map(|blk| format!("[{}]", blk.iter().map(|&a| s.label(a)).collect::<Vec<_>>().join(",")))
        .collect();
    FiniteSemigroup::from_table(m, table).map(|q| q.with_labels(labels))
}

/// All congruences with their quotients, in restricted-growth-string order
/// (the diagonal first, the universal relation last).
pub fn congruences(s: &FiniteSemigroup, bound: usize) -> Result<Vec<(Congruence, FiniteSemigroup)>, AlgebraError> {
    let n = s.order();
    if n > bound {
        return Err(AlgebraError::OrderBoundExceeded { order: n, bound });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let blocks: Vec<usize> = rgs.clone();
        if is_compatible(s, &blocks) {
            let cong = Congruence { blocks };
            let q = quotient(s, &cong)?;
            out.push((cong, q));
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    // lexicographic order starts from the universal relation
    out.reverse();
    Ok(out)
}

/// Advances to the next restricted growth string in lexicographic order.
fn next_rgs(rgs: &mut [usize]) -> bool {
    let n = rgs.len();
    for i in (1..n).rev() {
        let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
        if rgs[i] <= max_prefix {
            rgs[i] += 1;
            for r in rgs.iter_mut().skip(i + 1) {
                *r = 0;
            }
            return true;
        }
    }
    false
}
