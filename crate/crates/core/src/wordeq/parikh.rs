//! Letter-count abstraction of canonical satisfaction in the free semigroup.
//!
//! Unknowns are the number of occurrences of each letter in each
//! existential variable. Fresh letters are pooled into one bucket, which
//! keeps the abstraction sound: summing the counts of all fresh letters in a
//! real solution gives a solution of the pooled system.

use num_bigint::BigInt;
use serde::Serialize;

use super::lp::{is_farkas, solve, Feasibility};
use crate::eqsys::EquationSystem;
use crate::freeprod::{forbidden_letters, parameter_letters};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearRow {
    pub label: String,
    pub coefficients: Vec<i64>,
    pub rhs: i64,
}

/// `A x = b` over nonnegative unknowns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSystem {
    pub unknowns: Vec<String>,
    pub rows: Vec<LinearRow>,
    /// Columns that are letter counts, per variable, as `(variable, columns)`.
    #[serde(skip)]
    pub count_columns: Vec<(String, Vec<usize>)>,
}

impl LinearSystem {
    fn matrix(&self) -> (Vec<Vec<i64>>, Vec<i64>) {
        (self.rows.iter().map(|r| r.coefficients.clone()).collect(), self.rows.iter().map(|r| r.rhs).collect())
    }
}

/// A Farkas vector for the system: `yᵀA ≥ 0` and `yᵀb < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParikhCertificate {
    pub system: LinearSystem,
    /// Decimal integers, one per row.
    pub multipliers: Vec<String>,
}

impl ParikhCertificate {
    /// Re-checks the certificate from its own data.
    pub fn verify(&self) -> bool {
        let Ok(y) = self.multipliers.iter().map(|m| m.parse::<BigInt>()).collect::<Result<Vec<_>, _>>() else {
            return false;
        };
        let (a, b) = self.system.matrix();
        is_farkas(&a, &b, &y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ParikhOutcome {
    Infeasible {
        certificate: ParikhCertificate,
    },
    /// An integer solution: the length of each variable.
    Feasible {
        lengths: Vec<(String, u64)>,
    },
    /// Rationally feasible, no integer solution within the length cap.
    Undetermined {
        len_cap: usize,
    },
}

fn letter_name(k: usize, params: usize) -> String {
    if k <= params {
        format!("A{k}")
    } else {
        "fresh".to_owned()
    }
}

/// The count system of `e` under the canonical evaluation.
pub fn parikh_system(e: &EquationSystem) -> LinearSystem {
    let letters = parameter_letters(e);
    let params = letters.len();
    // letter index p + 1 is the fresh bucket
    let alphabet: Vec<usize> = (1..=params + 1).collect();
    let variables = e.variables();
    let mut unknowns = Vec::new();
    let mut column = vec![vec![None; params + 2]; e.symbol_count()];
    let mut count_columns = Vec::new();
    for &v in &variables {
        let forbidden = forbidden_letters(e, v);
        let mut cols = Vec::new();
        for &k in alphabet.iter().filter(|k| !forbidden.contains(k)) {
            column[v][k] = Some(unknowns.len());
            cols.push(unknowns.len());
            unknowns.push(format!("#{}({})", letter_name(k, params), e.name(v)));
        }
        count_columns.push((e.name(v).to_owned(), cols));
    }
    let slack_start = unknowns.len();
    unknowns.extend(variables.iter().map(|&v| format!("slack({})", e.name(v))));
    let width = unknowns.len();

    let mut rows = Vec::new();
    for (i, &v) in variables.iter().enumerate() {
        let mut coefficients = vec![0; width];
        for k in &alphabet {
            if let Some(c) = column[v][*k] {
                coefficients[c] = 1;
            }
        }
        coefficients[slack_start + i] = -1;
        rows.push(LinearRow { label: format!("|{}| >= 1", e.name(v)), coefficients, rhs: 1 });
    }
    for (idx, eq) in e.equalities().iter().enumerate() {
        let mut total = vec![0i64; width];
        let mut total_rhs = 0i64;
        for &k in &alphabet {
            let mut coefficients = vec![0i64; width];
            let mut rhs = 0i64;
            for (word, sign) in [(&eq.lhs, 1i64), (&eq.rhs, -1i64)] {
                for &sym in word {
                    match letters.get(&sym) {
                        Some(&l) if l == k => rhs -= sign,
                        Some(_) => {}
                        None => {
                            if let Some(c) = column[sym][k] {
                                coefficients[c] += sign;
                            }
                        }
                    }
                }
            }
            for (t, c) in total.iter_mut().zip(&coefficients) {
                *t += c;
            }
            total_rhs += rhs;
            if coefficients.iter().any(|&c| c != 0) || rhs != 0 {
                rows.push(LinearRow {
                    label: format!("equality {idx}, letter {}", letter_name(k, params)),
                    coefficients,
                    rhs,
                });
            }
        }
        if total.iter().any(|&c| c != 0) || total_rhs != 0 {
            rows.push(LinearRow { label: format!("equality {idx}, length"), coefficients: total, rhs: total_rhs });
        }
    }
    LinearSystem { unknowns, rows, count_columns }
}

/// A certificate that `e` has no canonical solution in the free semigroup,
/// found by exact rational linear programming.
pub fn parikh_refute(e: &EquationSystem) -> Option<ParikhCertificate> {
    let system = parikh_system(e);
    let (a, b) = system.matrix();
    match solve(&a, &b) {
        Feasibility::Infeasible(y) => {
            let certificate = ParikhCertificate { system, multipliers: y.iter().map(|v| v.to_string()).collect() };
            debug_assert!(certificate.verify());
            certificate.verify().then_some(certificate)
        }
        Feasibility::Feasible => None,
    }
}

/// Most count vectors visited by the integer search.
const INTEGER_NODE_CAP: u64 = 2_000_000;

/// The rational test first; if it passes, a bounded search for an integer
/// solution with every variable of length at most `len_cap`. Failing that
/// search proves nothing, so it reports `Undetermined`.
pub fn parikh_analyse(e: &EquationSystem, len_cap: usize) -> ParikhOutcome {
    if let Some(certificate) = parikh_refute(e) {
        return ParikhOutcome::Infeasible { certificate };
    }
    let system = parikh_system(e);
    let mut search = IntegerSearch { system: &system, len_cap, x: vec![0; system.unknowns.len()], nodes: 0 };
    if search.run(0) {
        let lengths = system
            .count_columns
            .iter()
            .map(|(v, cols)| (v.clone(), cols.iter().map(|&c| search.x[c]).sum::<i64>() as u64))
            .collect();
        ParikhOutcome::Feasible { lengths }
    } else {
        ParikhOutcome::Undetermined { len_cap }
    }
}

struct IntegerSearch<'a> {
    system: &'a LinearSystem,
    len_cap: usize,
    x: Vec<i64>,
    nodes: u64,
}

impl IntegerSearch<'_> {
    /// Assigns the count vector of variable `v`, then recurses.
    fn run(&mut self, v: usize) -> bool {
        if v == self.system.count_columns.len() {
            return self.rows_hold();
        }
        let cols = self.system.count_columns[v].1.clone();
        let slack = self.x.len() - self.system.count_columns.len() + v;
        for total in 1..=self.len_cap as i64 {
            if self.split(&cols, 0, total, v, slack) {
                return true;
            }
        }
        false
    }

    fn split(&mut self, cols: &[usize], i: usize, left: i64, v: usize, slack: usize) -> bool {
        self.nodes += 1;
        if self.nodes > INTEGER_NODE_CAP {
            return false;
        }
        if i + 1 == cols.len() {
            self.x[cols[i]] = left;
            self.x[slack] = cols.iter().map(|&c| self.x[c]).sum::<i64>() - 1;
            return self.run(v + 1);
        }
        for here in 0..=left {
            self.x[cols[i]] = here;
            if self.split(cols, i + 1, left - here, v, slack) {
                return true;
            }
        }
        false
    }

    fn rows_hold(&self) -> bool {
        self.system.rows.iter().all(|r| r.coefficients.iter().zip(&self.x).map(|(c, x)| c * x).sum::<i64>() == r.rhs)
    }
}
