use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use super::AlgebraError;

/// Elements are 0-based indices into the Cayley table.
pub type Element = usize;

/// A finite semigroup stored as a row-major `n × n` Cayley table.
///
/// Associativity is checked when the value is built, so every
/// `FiniteSemigroup` in circulation is a genuine semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<Element>,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

/// Validates a table given as rows and returns the semigroup.
///
/// Triples are scanned in lexicographic order and the first one violating
/// associativity is reported.
pub fn check_associativity(rows: &[Vec<Element>]) -> Result<FiniteSemigroup, AlgebraError> {
    let order = rows.len();
    let mut table = Vec::with_capacity(order * order);
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != order {
            return Err(AlgebraError::Shape { row, expected: order, found: entries.len() });
        }
        table.extend_from_slice(entries);
    }
    FiniteSemigroup::from_table(order, table)
}

impl FiniteSemigroup {
    pub fn from_table(order: usize, table: Vec<Element>) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::Empty);
        }
        if table.len() != order * order {
            return Err(AlgebraError::Shape { row: table.len() / order, expected: order, found: table.len() % order });
        }
        for (idx, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(AlgebraError::IndexOutOfRange { row: idx / order, col: idx % order, value, order });
            }
        }
        let s = FiniteSemigroup { order, table, labels: None, name: None };
        if let Some((i, j, k)) = s.first_associativity_violation() {
            return Err(AlgebraError::AssociativityViolation { i, j, k });
        }
        Ok(s)
    }

    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self, AlgebraError> {
        check_associativity(rows)
    }

    fn first_associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Attaches display labels. The number of labels must equal the order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn table(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[Element]>::to_vec).collect()
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// Product of a nonempty sequence of elements, `None` when empty.
    pub fn product<I: IntoIterator<Item = Element>>(&self, factors: I) -> Option<Element> {
        let mut it = factors.into_iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, x| self.mul(acc, x)))
    }

    /// Evaluates a word under an assignment of its symbols to elements.
    pub fn evaluate_word<K>(&self, word: &[K], assignment: &HashMap<K, Element>) -> Result<Element, AlgebraError>
    where
        K: Eq + Hash + fmt::Display,
    {
        let mut acc: Option<Element> = None;
        for sym in word {
            let value = *assignment.get(sym).ok_or_else(|| AlgebraError::UnassignedSymbol(sym.to_string()))?;
            if value >= self.order {
                return Err(AlgebraError::ElementOutOfRange { element: value, order: self.order });
            }
            acc = Some(match acc {
                None => value,
                Some(a) => self.mul(a, value),
            });
        }
        acc.ok_or(AlgebraError::EmptyWord)
    }

    pub fn is_idempotent(&self, a: Element) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn identity(&self) -> Option<Element> {
        self.elements().find(|&e| self.elements().all(|a| self.mul(e, a) == a && self.mul(a, e) == a))
    }

    pub fn zero(&self) -> Option<Element> {
        self.elements().find(|&z| self.elements().all(|a| self.mul(z, a) == z && self.mul(a, z) == z))
    }

    /// `V(a) = { v : a v a = a and v a v = v }`.
    pub fn inverses_of(&self, a: Element) -> Vec<Element> {
        self.elements().filter(|&v| self.mul(self.mul(a, v), a) == a && self.mul(self.mul(v, a), v) == v).collect()
    }

    /// Smallest subset containing `seed` and closed under the product.
    pub fn subsemigroup_generated(&self, seed: &[Element]) -> Result<Vec<Element>, AlgebraError> {
        if seed.is_empty() {
            return Err(AlgebraError::EmptySeed);
        }
        let mut member = vec![false; self.order];
        let mut members = Vec::new();
        for &s in seed {
            self.check_element(s)?;
            if !member[s] {
                member[s] = true;
                members.push(s);
            }
        }
        let mut frontier = 0;
        while frontier < members.len() {
            let a = members[frontier];
            frontier += 1;
            let snapshot = members.len();
            for idx in 0..snapshot {
                let b = members[idx];
                for c in [self.mul(a, b), self.mul(b, a)] {
                    if !member[c] {
                        member[c] = true;
                        members.push(c);
                    }
                }
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    /// The subsemigroup on a product-closed subset, relabelled in index order.
    pub fn restrict(&self, subset: &[Element]) -> Result<FiniteSemigroup, AlgebraError> {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(AlgebraError::EmptySeed);
        }
        let mut position = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            self.check_element(e)?;
            position[e] = i;
        }
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                let p = position[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(AlgebraError::NotClosed);
                }
                table.push(p);
            }
        }
        let labels = elems.iter().map(|&e| self.label(e)).collect();
        Ok(FiniteSemigroup { order: m, table, labels: Some(labels), name: None })
    }

    /// The anti-isomorphic copy with multiplication `a * b = b a`.
    pub fn transpose(&self) -> FiniteSemigroup {
        let n = self.order;
        let table = (0..n * n).map(|idx| self.mul(idx % n, idx / n)).collect();
        FiniteSemigroup { order: n, table, labels: self.labels.clone(), name: None }
    }

    pub(crate) fn check_element(&self, a: Element) -> Result<(), AlgebraError> {
        if a < self.order {
            Ok(())
        } else {
            Err(AlgebraError::ElementOutOfRange { element: a, order: self.order })
        }
    }

    pub(crate) fn from_parts_unchecked(order: usize, table: Vec<Element>, labels: Option<Vec<String>>) -> Self {
        debug_assert!(FiniteSemigroup::from_table(order, table.clone()).is_ok());
        FiniteSemigroup { order, table, labels, name: None }
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.table.chunks(self.order) {
            let cells: Vec<String> = row.iter().map(|&c| self.label(c)).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Componentwise product; the pair `(s, t)` has index `s * |T| + t`.
pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> FiniteSemigroup {
    let (n, m) = (s.order(), t.order());
    let order = n * m;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            let (a1, a2) = (a / m, a % m);
            let (b1, b2) = (b / m, b % m);
            table.push(s.mul(a1, b1) * m + t.mul(a2, b2));
        }
    }
    let labels = (0..order).map(|p| format!("({},{})", s.label(p / m), t.label(p % m))).collect();
    FiniteSemigroup::from_parts_unchecked(order, table, Some(labels))
}

/// Collapses a two-sided ideal to a single zero.
///
/// Surviving elements keep their relative order and the zero is the last
/// element. Collapsing the whole semigroup yields the trivial semigroup.
pub fn rees_quotient(s: &FiniteSemigroup, ideal: &[Element]) -> Result<FiniteSemigroup, AlgebraError> {
    if ideal.is_empty() {
        return Err(AlgebraError::NotAnIdeal("ideal is empty".into()));
    }
    let mut in_ideal = vec![false; s.order()];
    for &i in ideal {
        s.check_element(i)?;
        in_ideal[i] = true;
    }
    for i in s.elements().filter(|&i| in_ideal[i]) {
        for a in s.elements() {
            if !in_ideal[s.mul(a, i)] || !in_ideal[s.mul(i, a)] {
                return Err(AlgebraError::NotAnIdeal(format!(
                    "{} absorbs {} outside the subset",
                    s.label(i),
                    s.label(a)
                )));
            }
        }
    }
    let survivors: Vec<Element> = s.elements().filter(|&a| !in_ideal[a]).collect();
    Ok(collapse_onto(s, &survivors, |a| !in_ideal[a], true))
}

/// The principal factor of the J-class of `a`: `J_a` with everything
/// strictly below it collapsed to zero. When `J_a` is the minimum ideal
/// nothing lies below it and no zero is adjoined.
pub fn principal_factor(s: &FiniteSemigroup, a: Element) -> Result<FiniteSemigroup, AlgebraError> {
    s.check_element(a)?;
    let green = super::GreenData::compute(s);
    let class: Vec<Element> = s.elements().filter(|&b| green.j_related(a, b)).collect();
    let below_nonempty = s.elements().any(|b| green.j_leq(b, a) && !green.j_related(a, b));
    let in_class = |b: Element| green.j_related(a, b);
    Ok(collapse_onto(s, &class, in_class, below_nonempty))
}

fn collapse_onto(
    s: &FiniteSemigroup,
    kept: &[Element],
    keep: impl Fn(Element) -> bool,
    with_zero: bool,
) -> FiniteSemigroup {
    let mut position = vec![usize::MAX; s.order()];
    for (i, &e) in kept.iter().enumerate() {
        position[e] = i;
    }
    let zero = kept.len();
    let order = kept.len() + usize::from(with_zero);
    let mut table = vec![zero; order * order];
    for (i, &a) in kept.iter().enumerate() {
        for (j, &b) in kept.iter().enumerate() {
            let p = s.mul(a, b);
            if keep(p) {
                table[i * order + j] = position[p];
            } else {
                debug_assert!(with_zero, "product left the kept set without a zero");
            }
        }
    }
    let mut labels: Vec<String> = kept.iter().map(|&e| s.label(e)).collect();
    if with_zero {
        labels.push("0".into());
    }
    FiniteSemigroup::from_parts_unchecked(order, table, Some(labels))
}
