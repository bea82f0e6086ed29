use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub rank: usize,
    /// Positive integers `d_1 | d_2 | … | d_rank`.
    pub invariant_factors: Vec<BigInt>,
}

impl SnfResult {
    /// Order of the torsion subgroup of the cokernel.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

/// Order of the finite group `ℤ^rows / G`, or infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

/// Column-style Hermite normal form `H = M·U` with `U` unimodular.
///
/// `H` is in column echelon form: column `k` is zero above its pivot row,
/// pivot rows strictly increase with `k`, pivots are positive and every
/// entry left of a pivot lies in `[0, pivot)`. Columns past the rank are zero.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u) = column_hnf(m, true);
    (h, u.expect("transform was tracked"))
}

pub(crate) fn hnf_only(m: &IntMatrix) -> IntMatrix {
    column_hnf(m, false).0
}

/// Pivot positions `(row, col)` of a matrix already in column echelon form.
pub(crate) fn echelon_pivots(h: &IntMatrix) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    for j in 0..h.cols() {
        match (0..h.rows()).find(|&i| !h[(i, j)].is_zero()) {
            Some(i) => pivots.push((i, j)),
            None => break,
        }
    }
    pivots
}

fn column_hnf(m: &IntMatrix, track: bool) -> (IntMatrix, Option<IntMatrix>) {
    let mut h = m.clone();
    let mut u = track.then(|| IntMatrix::identity(m.cols()));
    let cols = h.cols();
    let mut k = 0;
    for r in 0..h.rows() {
        if k == cols {
            break;
        }
        // Euclid on row r across columns k.., always pivoting on the smallest
        // nonzero magnitude (lowest index on ties).
        loop {
            let pivot = (k..cols)
                .filter(|&j| !h[(r, j)].is_zero())
                .min_by(|&a, &b| h[(r, a)].abs().cmp(&h[(r, b)].abs()).then(a.cmp(&b)));
            let Some(p) = pivot else { break };
            h.swap_columns(k, p);
            if let Some(u) = u.as_mut() {
                u.swap_columns(k, p);
            }
            let mut done = true;
            for j in k + 1..cols {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = h[(r, j)].div_floor(&h[(r, k)]);
                h.sub_column_multiple(j, k, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_column_multiple(j, k, &q);
                }
                if !h[(r, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, k)].is_zero() {
            continue;
        }
        if h[(r, k)].is_negative() {
            h.negate_column(k);
            if let Some(u) = u.as_mut() {
                u.negate_column(k);
            }
        }
        for j in 0..k {
            let q = h[(r, j)].div_floor(&h[(r, k)]);
            if !q.is_zero() {
                h.sub_column_multiple(j, k, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_column_multiple(j, k, &q);
                }
            }
        }
        k += 1;
    }
    (h, u)
}

fn is_monomial_matrix(m: &IntMatrix) -> bool {
    for i in 0..m.rows() {
        if m.row(i).iter().filter(|v| !v.is_zero()).count() > 1 {
            return false;
        }
    }
    for j in 0..m.cols() {
        if (0..m.rows()).filter(|&i| !m[(i, j)].is_zero()).count() > 1 {
            return false;
        }
    }
    true
}

/// Invariant factors, computed by alternating column and row Hermite passes
/// until at most one entry per row and column survives, followed by a
/// gcd/lcm normalisation of the surviving entries into a divisibility chain.
pub fn snf(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    loop {
        a = hnf_only(&a);
        if is_monomial_matrix(&a) {
            break;
        }
        a = hnf_only(&a.transpose()).transpose();
        if is_monomial_matrix(&a) {
            break;
        }
    }
    let mut diag: Vec<BigInt> = (0..a.rows())
        .flat_map(|i| a.row(i).iter().filter(|v| !v.is_zero()).map(|v| v.abs()).collect::<Vec<_>>())
        .collect();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            if g == diag[i] {
                continue;
            }
            let l = &diag[i] / &g * &diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    SnfResult {
        rank: diag.len(),
        invariant_factors: diag,
    }
}

/// Gcd of the nonzero `t × t` minors, `None` when all of them vanish.
pub fn delta_t(m: &IntMatrix, t: usize) -> Result<Option<BigInt>> {
    if t == 0 || t > m.rows().min(m.cols()) {
        return Err(Error::InvalidArgument(format!(
            "t = {} outside 1..={} for a {}x{} matrix",
            t,
            m.rows().min(m.cols()),
            m.rows(),
            m.cols()
        )));
    }
    let s = snf(m);
    if t > s.rank {
        return Ok(None);
    }
    Ok(Some(s.invariant_factors[..t].iter().product()))
}

/// Order of `ℤ^rows / G` where `G` is spanned by the columns of `m`.
pub fn card_group(m: &IntMatrix) -> GroupOrder {
    let s = snf(m);
    if s.rank < m.rows() {
        GroupOrder::Infinite
    } else {
        GroupOrder::Finite(s.torsion_order())
    }
}

/// Order of the torsion subgroup of `ℤ^rows / G`; always finite.
pub fn torsion_order(m: &IntMatrix) -> BigInt {
    if m.cols() == 0 {
        return BigInt::one();
    }
    snf(m).torsion_order()
}
