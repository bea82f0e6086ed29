use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Whether `v` is a nonnegative rational combination of the vectors in `set`.
///
/// Decided exactly with a phase-one simplex over the rationals; Bland's rule
/// makes the pivot sequence deterministic and guarantees termination.
pub fn in_cone(v: &[BigInt], set: &[Vec<BigInt>]) -> Result<bool> {
    if let Some(bad) = set.iter().find(|s| s.len() != v.len()) {
        return Err(Error::Dimension(format!(
            "vector of length {} against a set of length-{} vectors",
            v.len(),
            bad.len()
        )));
    }
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if set.is_empty() {
        return Ok(false);
    }
    Ok(PhaseOne::new(v, set).solve())
}

/// Tableau for `min Σ t_i  s.t.  S·λ + t = v, λ, t ≥ 0` with `v ≥ 0` after row signs.
struct PhaseOne {
    /// `rows × (n + rows + 1)`; the last column is the right-hand side.
    tableau: Vec<Vec<BigRational>>,
    /// Reduced costs, same width as a tableau row.
    cost: Vec<BigRational>,
    basis: Vec<usize>,
    n: usize,
}

impl PhaseOne {
    fn new(v: &[BigInt], set: &[Vec<BigInt>]) -> Self {
        let rows = v.len();
        let n = set.len();
        let width = n + rows + 1;
        let mut tableau = Vec::with_capacity(rows);
        for i in 0..rows {
            let flip = v[i].is_negative();
            let sign = |x: &BigInt| {
                let r = BigRational::from_integer(x.clone());
                if flip {
                    -r
                } else {
                    r
                }
            };
            let mut row = vec![BigRational::zero(); width];
            for (j, s) in set.iter().enumerate() {
                row[j] = sign(&s[i]);
            }
            row[n + i] = BigRational::one();
            row[width - 1] = sign(&v[i]);
            tableau.push(row);
        }
        // Artificials are basic with unit cost, so reduced costs are minus the column sums.
        let mut cost = vec![BigRational::zero(); width];
        for row in &tableau {
            for j in 0..n {
                cost[j] -= &row[j];
            }
            cost[width - 1] -= &row[width - 1];
        }
        PhaseOne {
            tableau,
            cost,
            basis: (n..n + rows).collect(),
            n,
        }
    }

    fn solve(mut self) -> bool {
        let width = self.cost.len();
        let rhs = width - 1;
        // Bland: lowest-index improving column.
        while let Some(enter) = (0..rhs).find(|&j| self.cost[j].is_negative()) {
            let mut leave: Option<(usize, BigRational)> = None;
            for (i, row) in self.tableau.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            // Phase one is bounded below by zero, so an improving column always has a leaving row.
            let (pivot_row, _) = leave.expect("phase-one objective is bounded");
            self.pivot(pivot_row, enter);
        }
        self.cost[rhs].is_zero()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.tableau[r][c].clone();
        for x in self.tableau[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.tableau[r].clone();
        for (i, row) in self.tableau.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (x, y) in self.cost.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
        debug_assert!(self.basis.iter().all(|&b| b < self.n + self.tableau.len()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int_vec;

    fn cols(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|c| int_vec(c)).collect()
    }

    #[test]
    fn cone_membership_in_the_merge_example() {
        let all = cols(&[
            &[52, 0, 0],
            &[0, 52, 0],
            &[0, 0, 52],
            &[20, 30, 100],
            &[28, 42, 140],
            &[30, 45, 150],
            &[42, 63, 210],
            &[52, 52, 78],
        ]);
        for i in 0..all.len() {
            let rest: Vec<_> = all.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
            let expected = i >= 3;
            assert_eq!(in_cone(&all[i], &rest).unwrap(), expected, "a_{}", i + 1);
        }
    }

    #[test]
    fn trivial_cases() {
        let s = cols(&[&[1, 2], &[3, 1]]);
        assert!(in_cone(&int_vec(&[0, 0]), &s).unwrap());
        assert!(in_cone(&int_vec(&[2, 4]), &s).unwrap());
        assert!(in_cone(&int_vec(&[4, 3]), &s).unwrap());
        assert!(!in_cone(&int_vec(&[1, 0]), &s).unwrap());
        assert!(!in_cone(&int_vec(&[-1, -2]), &s).unwrap());
        assert!(!in_cone(&int_vec(&[1, 1]), &[]).unwrap());
    }

    #[test]
    fn handles_negative_targets_and_degenerate_pivots() {
        let s = cols(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]);
        assert!(in_cone(&int_vec(&[-2, 1, 1]), &s).unwrap());
        let d = cols(&[&[1, 1], &[1, 1], &[2, 2]]);
        assert!(in_cone(&int_vec(&[3, 3]), &d).unwrap());
        assert!(!in_cone(&int_vec(&[3, 4]), &d).unwrap());
    }
}
