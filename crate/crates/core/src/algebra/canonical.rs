//! Canonical Cayley tables by brute-force relabelling.

use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{AlgebraError, FiniteSemigroup};

pub const MAX_CANONICAL_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CanonicalMode {
    /// Up to isomorphism.
    #[serde(rename = "iso")]
    Isomorphism,
    /// Up to isomorphism or anti-isomorphism.
    #[serde(rename = "equiv")]
    Equivalence,
}

impl CanonicalMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CanonicalMode::Isomorphism => "iso",
            CanonicalMode::Equivalence => "equiv",
        }
    }
}

impl std::str::FromStr for CanonicalMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "iso" | "isomorphism" => Ok(CanonicalMode::Isomorphism),
            "equiv" | "equivalence" => Ok(CanonicalMode::Equivalence),
            other => Err(format!("unknown mode `{other}` (expected iso or equiv)")),
        }
    }
}

impl fmt::Display for CanonicalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The lexicographically least row-major table over all relabellings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    table: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bytes(&self) -> &[u8] {
        &self.table
    }

    pub fn to_semigroup(&self) -> FiniteSemigroup {
        let table = self.table.iter().map(|&c| c as usize).collect();
        FiniteSemigroup::from_parts_unchecked(self.order, table, None)
    }

    /// First 16 hex digits of the SHA-256 of the table bytes.
    pub fn hash_hex(&self) -> String {
        table_hash(&self.table)
    }
}

/// First 16 hex digits of the SHA-256 of raw table bytes.
pub fn table_hash(table: &[u8]) -> String {
    let digest = Sha256::digest(table);
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn permutations(n: usize) -> &'static [Vec<u8>] {
    static CACHE: [OnceLock<Vec<Vec<u8>>>; MAX_CANONICAL_ORDER + 1] =
        [const { OnceLock::new() }; MAX_CANONICAL_ORDER + 1];
    CACHE[n].get_or_init(|| (0..n as u8).permutations(n).collect())
}

pub fn canonical_form(s: &FiniteSemigroup, mode: CanonicalMode) -> Result<CanonicalForm, AlgebraError> {
    let n = s.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(AlgebraError::OrderBoundExceeded { order: n, bound: MAX_CANONICAL_ORDER });
    }
    let table: Vec<u8> = s.table().iter().map(|&c| c as u8).collect();
    Ok(canonical_form_of_table(n, &table, mode))
}

/// Canonical form of a raw table; `n` must not exceed [`MAX_CANONICAL_ORDER`].
pub fn canonical_form_of_table(n: usize, table: &[u8], mode: CanonicalMode) -> CanonicalForm {
    assert!(n <= MAX_CANONICAL_ORDER);
    let mut best = table.to_vec();
    let mut scratch = vec![0u8; n * n];
    let mut inverse = vec![0u8; n];
    let transposed: Vec<u8>;
    let mut sources: Vec<&[u8]> = vec![table];
    if mode == CanonicalMode::Equivalence {
        transposed = (0..n * n).map(|idx| table[(idx % n) * n + idx / n]).collect();
        if transposed < best {
            best.clone_from(&transposed);
        }
        sources.push(&transposed);
    }
    for src in sources {
        for perm in permutations(n) {
            for (old, &new) in perm.iter().enumerate() {
                inverse[new as usize] = old as u8;
            }
            if relabel_if_smaller(n, src, perm, &inverse, &best, &mut scratch) {
                best.copy_from_slice(&scratch);
            }
        }
    }
    CanonicalForm { order: n, table: best }
}

/// Writes the relabelled table into `out` and returns true when it is
/// strictly smaller than `best`; bails out at the first larger cell.
fn relabel_if_smaller(n: usize, src: &[u8], perm: &[u8], inverse: &[u8], best: &[u8], out: &mut [u8]) -> bool {
    let mut smaller = false;
    for a in 0..n {
        let qa = inverse[a] as usize;
        for (b, &qb) in inverse.iter().enumerate().take(n) {
            let qb = qb as usize;
            let v = perm[src[qa * n + qb] as usize];
            let idx = a * n + b;
            out[idx] = v;
            if !smaller {
                match v.cmp(&best[idx]) {
                    std::cmp::Ordering::Less => smaller = true,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    smaller
}
