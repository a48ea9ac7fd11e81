//! Exact feasibility of `A x = b, x ≥ 0` over the rationals.
//!
//! Phase-I simplex with Bland's rule on a dense `BigRational` tableau. When
//! the system is infeasible the final duals give a Farkas vector `y` with
//! `yᵀA ≥ 0` and `yᵀb < 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub enum Feasibility {
    Feasible,
    /// Integer Farkas multipliers, one per row.
    Infeasible(Vec<BigInt>),
}

pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Feasibility {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    // rows with negative right-hand side are negated so the artificial basis
    // starts feasible
    let sign: Vec<i64> = b.iter().map(|&v| if v < 0 { -1 } else { 1 }).collect();
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = vec![BigRational::zero(); width];
            for j in 0..n {
                row[j] = q(sign[i] * a[i][j]);
            }
            row[n + i] = BigRational::one();
            row[width - 1] = q(sign[i] * b[i]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let cost = |j: usize| if j >= n { BigRational::one() } else { BigRational::zero() };

    loop {
        // reduced costs c_j - c_Bᵀ B⁻¹ A_j
        let entering = (0..n + m).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut r = cost(j);
            for (i, &bi) in basis.iter().enumerate() {
                r -= cost(bi) * &t[i][j];
            }
            r.is_negative()
        });
        let Some(col) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            // phase-I objective is bounded below by zero
            unreachable!("unbounded phase-I direction");
        };
        let pivot = t[row][col].clone();
        for v in t[row].iter_mut() {
            *v /= &pivot;
        }
        let pivot_row = t[row].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let factor = r[col].clone();
                for (cell, p) in r.iter_mut().zip(&pivot_row) {
                    *cell -= &factor * p;
                }
            }
        }
        basis[row] = col;
    }

    let objective: BigRational =
        basis.iter().enumerate().filter(|&(_, &bi)| bi >= n).map(|(i, _)| t[i][width - 1].clone()).sum();
    if objective.is_zero() {
        return Feasibility::Feasible;
    }
    // duals y_i = c_Bᵀ B⁻¹ e_i, read off the artificial columns; the
    // certificate is -y mapped back through the row signs
    let y: Vec<BigRational> = (0..m)
        .map(|i| {
            let mut acc = BigRational::zero();
            for (k, &bk) in basis.iter().enumerate() {
                if bk >= n {
                    acc += &t[k][n + i];
                }
            }
            -acc * q(sign[i])
        })
        .collect();
    let lcm = y.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    Feasibility::Infeasible(y.iter().map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer()).collect())
}

/// Checks `yᵀA ≥ 0` columnwise and `yᵀb < 0`.
pub fn is_farkas(a: &[Vec<i64>], b: &[i64], y: &[BigInt]) -> bool {
    if y.len() != a.len() {
        return false;
    }
    let n = a.first().map_or(0, Vec::len);
    let columns_ok = (0..n).all(|j| {
        let s: BigInt = a.iter().zip(y).map(|(row, yi)| yi * BigInt::from(row[j])).sum();
        !s.is_negative()
    });
    let rhs: BigInt = b.iter().zip(y).map(|(&bi, yi)| yi * BigInt::from(bi)).sum();
    columns_ok && rhs.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_system() {
        // x + y = 2, x - y = 0
        let a = vec![vec![1, 1], vec![1, -1]];
        let b = vec![2, 0];
        assert!(matches!(solve(&a, &b), Feasibility::Feasible));
    }

    #[test]
    fn infeasible_system() {
        // x - s = 1, x = 0 (an idempotent-style length clash)
        let a = vec![vec![1, -1], vec![1, 0]];
        let b = vec![1, 0];
        match solve(&a, &b) {
            Feasibility::Infeasible(y) => assert!(is_farkas(&a, &b, &y)),
            Feasibility::Feasible => panic!("system is infeasible"),
        }
    }

    #[test]
    fn negative_rhs() {
        // -x = -3 is feasible, -x = 3 is not
        assert!(matches!(solve(&[vec![-1]], &[-3]), Feasibility::Feasible));
        match solve(&[vec![-1]], &[3]) {
            Feasibility::Infeasible(y) => assert!(is_farkas(&[vec![-1]], &[3], &y)),
            Feasibility::Feasible => panic!("infeasible"),
        }
    }
}
