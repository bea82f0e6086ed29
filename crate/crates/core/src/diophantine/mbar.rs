use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::membership::feasible_columns;
use super::scalar::ScalarSemigroup;
use crate::error::{Error, Result};
use crate::exactlin::in_cone;
use crate::toric::{proportional, Configuration};

/// Upper proxy for `m_i`, or no proportional partner at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MBar {
    Value(BigInt),
    /// `L_i` is empty, so `a_i` cannot be part of any match.
    Unmatchable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MBarResult {
    pub value: MBar,
    /// Set only when `value` is the true minimum `m_i`.
    pub confirmed_exact: bool,
}

/// `m̄_i`: least `b ≥ 1` with `b·a_{i,k}` in the numerical semigroup spanned by
/// the `k`-th coordinates of the vectors proportional to `a_i`, where `k` is
/// the first nonzero coordinate of `a_i`. Confirmed against the full
/// configuration when `m̄_i > 1`.
pub fn m_bar(i: usize, g: &Configuration) -> Result<MBarResult> {
    check_index(i, g)?;
    if partners(i, g).is_empty() && !in_cone(g.vector(i), &g.others(i))? {
        return Err(Error::InvalidArgument(format!(
            "vector {} is not in the cone of the others",
            g.label(i) + 1
        )));
    }
    m_bar_unchecked(i, g)
}

/// [`m_bar`] without the cone precondition.
pub(crate) fn m_bar_unchecked(i: usize, g: &Configuration) -> Result<MBarResult> {
    let l = partners(i, g);
    if l.is_empty() {
        return Ok(MBarResult {
            value: MBar::Unmatchable,
            confirmed_exact: false,
        });
    }
    let a = g.vector(i);
    let k = a.iter().position(|x| !x.is_zero()).expect("vectors are nonzero");
    let gens: Vec<BigInt> = l.iter().map(|&j| g.vector(j)[k].clone()).collect();
    let value = scalar_min_multiple(&gens, &a[k]);
    let confirmed_exact = confirm_exact(i, g, &value)?;
    Ok(MBarResult {
        value: MBar::Value(value),
        confirmed_exact,
    })
}

fn scalar_min_multiple(gens: &[BigInt], q: &BigInt) -> BigInt {
    let small: Option<Vec<i128>> = gens.iter().chain([q]).map(|x| x.to_i128()).collect();
    match small {
        Some(v) if v.iter().all(|x| x.abs() < 1 << 62) => {
            let (q, gens) = v.split_last().expect("q is present");
            BigInt::from(
                ScalarSemigroup::new(gens)
                    .min_multiple(q)
                    .expect("a proportional partner gives a multiple"),
            )
        }
        _ => ScalarSemigroup::new(gens)
            .min_multiple(q)
            .expect("a proportional partner gives a multiple"),
    }
}

/// Whether `m_i = mbar`, decided by infeasibility of
/// `Σ x_j a_j = (mbar − 1)·a_i, x_i + x_{n+1} = mbar − 2` over `ℕ^{n+1}`.
pub fn confirm_exact(i: usize, g: &Configuration, mbar: &BigInt) -> Result<bool> {
    check_index(i, g)?;
    if !mbar.is_positive() {
        return Err(Error::InvalidArgument(format!("m̄ must be positive, got {}", mbar)));
    }
    if mbar.is_one() {
        return Ok(true);
    }
    let dim = g.dim();
    let mut cols: Vec<Vec<BigInt>> = g
        .vectors()
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let mut c = v.clone();
            c.push(if j == i { BigInt::one() } else { BigInt::zero() });
            c
        })
        .collect();
    let mut slack = vec![BigInt::zero(); dim + 1];
    slack[dim] = BigInt::one();
    cols.push(slack);
    let scale = mbar - 1;
    let mut target: Vec<BigInt> = g.vector(i).iter().map(|x| x * &scale).collect();
    target.push(mbar - 2);
    Ok(!feasible_columns(&target, &cols))
}

/// The true `m_i` by ascending search; `a_i` must lie in the cone of the others.
pub(crate) fn exact_m(i: usize, g: &Configuration) -> Result<BigInt> {
    check_index(i, g)?;
    let others = g.others(i);
    if !in_cone(g.vector(i), &others)? {
        return Err(Error::InvalidArgument(format!(
            "vector {} is not in the cone of the others",
            g.label(i) + 1
        )));
    }
    let mut b = BigInt::one();
    loop {
        let target: Vec<BigInt> = g.vector(i).iter().map(|x| x * &b).collect();
        if feasible_columns(&target, &others) {
            return Ok(b);
        }
        b += 1;
    }
}

/// Positions `j ≠ i` with `a_j` a positive rational multiple of `a_i`.
pub(crate) fn partners(i: usize, g: &Configuration) -> Vec<usize> {
    (0..g.len())
        .filter(|&j| j != i && proportional(g.vector(j), g.vector(i)))
        .collect()
}

fn check_index(i: usize, g: &Configuration) -> Result<()> {
    if i >= g.len() {
        return Err(Error::InvalidArgument(format!(
            "index {} outside a configuration of {} vectors",
            i,
            g.len()
        )));
    }
    Ok(())
}
