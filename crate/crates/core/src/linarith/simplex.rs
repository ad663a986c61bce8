//! Dense two-phase simplex over exact rationals.
//!
//! Solves `min c·z` subject to `A z = b`, `z ≥ 0`. Bland's rule guarantees
//! termination; every pivot is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal(Vec<BigRational>),
    Infeasible,
    Unbounded,
}

struct Tableau {
    // rows x (cols + 1); last column is the right-hand side
    t: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.t[row][col].clone();
        for v in self.t[row].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.t[row].clone();
        for (r, line) in self.t.iter_mut().enumerate() {
            if r == row || line[col].is_zero() {
                continue;
            }
            let f = line[col].clone();
            for (v, pv) in line.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Reduced costs of `cost` for the current basis, over allowed columns.
    fn reduced(&self, cost: &[BigRational], col: usize) -> BigRational {
        let mut r = cost[col].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.t[i][col].is_zero() {
                r -= &cost[b] * &self.t[i][col];
            }
        }
        r
    }

    /// Runs simplex iterations minimising `cost` over columns `< allowed`.
    /// Returns false when unbounded.
    fn optimise(&mut self, cost: &[BigRational], allowed: usize) -> bool {
        loop {
            let entering = (0..allowed)
                .filter(|c| !self.basis.contains(c))
                .find(|&c| self.reduced(cost, c).is_negative());
            let Some(col) = entering else { return true };
            let rhs = self.cols;
            let mut best: Option<(usize, BigRational)> = None;
            for r in 0..self.t.len() {
                if self.t[r][col].is_positive() {
                    let ratio = &self.t[r][rhs] / &self.t[r][col];
                    let better = match &best {
                        None => true,
                        Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                    };
                    if better {
                        best = Some((r, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, col),
            }
        }
    }
}

/// Minimises `cost · z` subject to `a z = b`, `z ≥ 0`.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational], cost: &[BigRational]) -> LpOutcome {
    let n = cost.len();
    let m = a.len();
    // Columns: n structural, m artificial, then rhs.
    let cols = n + m;
    let mut t = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut line: Vec<BigRational> = Vec::with_capacity(cols + 1);
        for v in row {
            line.push(if flip { -v.clone() } else { v.clone() });
        }
        for j in 0..m {
            line.push(if i == j { BigRational::one() } else { BigRational::zero() });
        }
        line.push(if flip { -rhs.clone() } else { rhs.clone() });
        t.push(line);
    }
    let mut tab = Tableau { t, basis: (n..n + m).collect(), cols };

    let mut phase1 = vec![BigRational::zero(); cols];
    for c in phase1.iter_mut().skip(n) {
        *c = BigRational::one();
    }
    tab.optimise(&phase1, cols);
    let infeasibility: BigRational = tab
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= n)
        .map(|(r, _)| tab.t[r][cols].clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    // Drive zero-valued artificials out of the basis where possible.
    for r in 0..m {
        if tab.basis[r] >= n {
            if let Some(c) = (0..n).find(|&c| !tab.t[r][c].is_zero() && !tab.basis.contains(&c)) {
                tab.pivot(r, c);
            }
        }
    }
    let mut phase2 = vec![BigRational::zero(); cols];
    phase2[..n].clone_from_slice(cost);
    // Rows still carrying an artificial are redundant; they stay pinned at 0.
    if !tab.optimise(&phase2, n) {
        return LpOutcome::Unbounded;
    }
    let mut z = vec![BigRational::zero(); n];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n {
            z[b] = tab.t[r][cols].clone();
        }
    }
    LpOutcome::Optimal(z)
}

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigRational>> {
        data.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    fn vec_of(data: &[i64]) -> Vec<BigRational> {
        data.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn feasible_with_fractional_optimum() {
        // 2x + 2y = 3, min x + 2y  -> x = 3/2, y = 0
        let out = solve(&rows(&[&[2, 2]]), &vec_of(&[3]), &vec_of(&[1, 2]));
        let z = match out {
            LpOutcome::Optimal(z) => z,
            other => panic!("{other:?}"),
        };
        assert_eq!(z[0], BigRational::new(3.into(), 2.into()));
        assert!(z[1].is_zero());
    }

    #[test]
    fn infeasible_and_unbounded() {
        assert_eq!(solve(&rows(&[&[1, 1]]), &vec_of(&[-1]), &vec_of(&[0, 0])), LpOutcome::Infeasible);
        assert_eq!(solve(&rows(&[&[1, -1]]), &vec_of(&[0]), &vec_of(&[-1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let out = solve(&rows(&[&[1, 1], &[2, 2]]), &vec_of(&[2, 4]), &vec_of(&[1, 0]));
        assert_eq!(out, LpOutcome::Optimal(vec_of(&[0, 2])));
    }

    #[test]
    fn no_rows() {
        assert_eq!(solve(&[], &[], &vec_of(&[1, 1])), LpOutcome::Optimal(vec_of(&[0, 0])));
    }
}
