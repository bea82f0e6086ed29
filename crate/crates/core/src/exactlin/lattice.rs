use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::normal_form::{echelon_pivots, hnf, torsion_order};
use super::IntMatrix;
use crate::error::{Error, Result};

fn check_dims(v: &[BigInt], set: &[Vec<BigInt>]) -> Result<()> {
    if v.is_empty() {
        return Err(Error::Dimension("empty vector".into()));
    }
    if let Some(bad) = set.iter().find(|s| s.len() != v.len()) {
        return Err(Error::Dimension(format!(
            "vector of length {} against a set of length-{} vectors",
            v.len(),
            bad.len()
        )));
    }
    Ok(())
}

/// Some integral `x` with `M·x = b`, or `None` when no integral solution exists.
pub fn solve_integer(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != m.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    let (h, u) = hnf(m);
    let pivots = echelon_pivots(&h);
    let mut y = vec![BigInt::zero(); m.cols()];
    let mut next = 0;
    for r in 0..m.rows() {
        // Columns with pivot row < r are already solved; later ones vanish in row r.
        let mut residual = b[r].clone();
        for &(_, j) in &pivots[..next] {
            residual -= &h[(r, j)] * &y[j];
        }
        if next < pivots.len() && pivots[next].0 == r {
            let j = pivots[next].1;
            let (q, rem) = residual.div_rem(&h[(r, j)]);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[j] = q;
            next += 1;
        } else if !residual.is_zero() {
            return Ok(None);
        }
    }
    Ok(Some(u.mul_vec(&y)?))
}

/// Whether `v` lies in the rational span of `set`.
pub fn in_q_span(v: &[BigInt], set: &[Vec<BigInt>]) -> Result<bool> {
    check_dims(v, set)?;
    if v.iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if set.is_empty() {
        return Ok(false);
    }
    let s = IntMatrix::from_columns(v.len(), set)?;
    Ok(s.rank() == s.with_column(v)?.rank())
}

/// Smallest `B ≥ 1` with `B·v` in the integer span of `set`, computed as the
/// ratio of the torsion orders of `ℤ^m / ℤ set` and `ℤ^m / ℤ(set ∪ {v})`.
pub fn min_multiple_in_zspan(v: &[BigInt], set: &[Vec<BigInt>]) -> Result<BigInt> {
    if !in_q_span(v, set)? {
        return Err(Error::InvalidArgument(
            "vector is not in the rational span of the set".into(),
        ));
    }
    let s = IntMatrix::from_columns(v.len(), set)?;
    let without = torsion_order(&s);
    let with = torsion_order(&s.with_column(v)?);
    let (q, r) = without.div_rem(&with);
    if !r.is_zero() || q < BigInt::one() {
        return Err(Error::Invariant(format!(
            "torsion order {} not divisible by {}",
            without, with
        )));
    }
    Ok(q)
}
