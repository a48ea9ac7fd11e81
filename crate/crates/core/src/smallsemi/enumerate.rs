//! Backtracking enumeration of associative tables.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{Corpus, SmallsemiError, MAX_ENUMERATION_ORDER};
use crate::algebra::{canonical_form_of_table, CanonicalMode, FiniteSemigroup};

const UNSET: u8 = u8::MAX;

/// All semigroups of order `n` up to isomorphism (or isomorphism and
/// anti-isomorphism), each as its canonical table.
pub fn enumerate_semigroups(n: usize, mode: CanonicalMode) -> Result<Corpus, SmallsemiError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(SmallsemiError::OrderBoundExceeded { order: n, bound: MAX_ENUMERATION_ORDER });
    }
    // fill the first row sequentially, then hand each surviving prefix to a worker
    let mut prefixes = Vec::new();
    let mut table = vec![UNSET; n * n];
    collect_prefixes(n, &mut table, 0, &mut prefixes);

    let found: HashSet<Vec<u8>> = prefixes
        .into_par_iter()
        .map(|mut table| {
            let mut seen = HashSet::new();
            search(n, &mut table, n, mode, &mut seen);
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });

    let mut tables: Vec<Vec<u8>> = found.into_iter().collect();
    tables.sort();
    let entries = tables
        .into_iter()
        .map(|t| {
            FiniteSemigroup::from_table(n, t.into_iter().map(usize::from).collect())
                .expect("search emits associative tables")
        })
        .collect();
    Ok(Corpus { order: n, mode, entries })
}

fn collect_prefixes(n: usize, table: &mut [u8], cell: usize, out: &mut Vec<Vec<u8>>) {
    if cell == n {
        out.push(table.to_vec());
        return;
    }
    for v in 0..n as u8 {
        table[cell] = v;
        if consistent(n, table, 0, cell) {
            collect_prefixes(n, table, cell + 1, out);
        }
    }
    table[cell] = UNSET;
}

fn search(n: usize, table: &mut [u8], cell: usize, mode: CanonicalMode, seen: &mut HashSet<Vec<u8>>) {
    if cell == n * n {
        seen.insert(canonical_form_of_table(n, table, mode).bytes().to_vec());
        return;
    }
    let (i, j) = (cell / n, cell % n);
    for v in 0..n as u8 {
        table[cell] = v;
        if consistent(n, table, i, j) {
            search(n, table, cell + 1, mode, seen);
        }
    }
    table[cell] = UNSET;
}

/// Checks every associativity triple `(xy)z = x(yz)` that became fully
/// determined when cell `(i, j)` was set. The new cell can play the role of
/// any of the four lookups `xy`, `(xy)z`, `yz`, `x(yz)`.
fn consistent(n: usize, t: &[u8], i: usize, j: usize) -> bool {
    let at = |a: usize, b: usize| t[a * n + b];
    let get = |a: u8, b: u8| -> Option<u8> {
        let v = t[a as usize * n + b as usize];
        (v != UNSET).then_some(v)
    };
    let v = at(i, j);
    let (iu, ju) = (i as u8, j as u8);
    for z in 0..n as u8 {
        // x = i, y = j
        if let (Some(left), Some(q)) = (get(v, z), get(ju, z)) {
            if let Some(right) = get(iu, q) {
                if left != right {
                    return false;
                }
            }
        }
    }
    for x in 0..n as u8 {
        // y = i, z = j
        if let Some(p) = get(x, iu) {
            if let (Some(left), Some(right)) = (get(p, ju), get(x, v)) {
                if left != right {
                    return false;
                }
            }
        }
    }
    for a in 0..n as u8 {
        for b in 0..n as u8 {
            let Some(ab) = get(a, b) else { continue };
            // xy = i with (x, y) = (a, b), z = j
            if ab == iu {
                if let Some(q) = get(b, ju) {
                    if let Some(right) = get(a, q) {
                        if right != v {
                            return false;
                        }
                    }
                }
            }
            // yz = j with (y, z) = (a, b), x = i
            if ab == ju {
                if let Some(p) = get(iu, a) {
                    if let Some(left) = get(p, b) {
                        if left != v {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
