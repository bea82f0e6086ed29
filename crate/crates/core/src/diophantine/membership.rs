use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::scalar::ScalarSemigroup;
use super::Coef;
use crate::error::{Error, Result};
use crate::toric::Configuration;

/// Nonnegative coefficients `x` with `Σ x_j a_j` equal to the queried target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub coefficients: Vec<BigInt>,
}

impl Certificate {
    /// `Σ x_j a_j` over the given columns.
    pub fn replay(&self, columns: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); dim];
        for (x, col) in self.coefficients.iter().zip(columns) {
            for (o, v) in out.iter_mut().zip(col) {
                *o += x * v;
            }
        }
        out
    }
}

/// Lexicographically smallest `x ∈ ℕ^n` with `A·x = b`, or `None`.
pub fn semigroup_member(b: &[BigInt], a: &Configuration) -> Result<Option<Certificate>> {
    check_target(b, a)?;
    Ok(member_columns(b, a.vectors()).map(|coefficients| Certificate { coefficients }))
}

/// As [`semigroup_member`] with every column outside `allowed` (positions)
/// forced to zero.
pub fn semigroup_member_restricted(
    b: &[BigInt],
    a: &Configuration,
    allowed: &[usize],
) -> Result<Option<Certificate>> {
    check_target(b, a)?;
    if let Some(&bad) = allowed.iter().find(|&&j| j >= a.len()) {
        return Err(Error::InvalidArgument(format!(
            "column {} outside a configuration of {} vectors",
            bad,
            a.len()
        )));
    }
    let mut keep: Vec<usize> = allowed.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let cols: Vec<Vec<BigInt>> = keep.iter().map(|&j| a.vector(j).to_vec()).collect();
    Ok(member_columns(b, &cols).map(|x| {
        let mut coefficients = vec![BigInt::zero(); a.len()];
        for (&j, v) in keep.iter().zip(x) {
            coefficients[j] = v;
        }
        Certificate { coefficients }
    }))
}

fn check_target(b: &[BigInt], a: &Configuration) -> Result<()> {
    if b.len() != a.dim() {
        return Err(Error::Dimension(format!(
            "target of length {} for vectors in dimension {}",
            b.len(),
            a.dim()
        )));
    }
    Ok(())
}

/// Values below this bound keep every intermediate product inside `i128`.
const FAST_LIMIT: i128 = 1 << 62;

fn fits_fast(b: &[BigInt], cols: &[Vec<BigInt>]) -> bool {
    b.iter()
        .chain(cols.iter().flatten())
        .all(|x| x.to_i128().is_some_and(|v| v.abs() < FAST_LIMIT))
}

fn narrow(v: &[BigInt]) -> Vec<i128> {
    v.iter().map(|x| x.to_i128().expect("checked by fits_fast")).collect()
}

/// Lexicographically smallest nonnegative solution over plain columns.
/// Columns must be nonnegative.
pub(crate) fn member_columns(b: &[BigInt], cols: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    if b.iter().any(|x| x < &BigInt::zero()) {
        return None;
    }
    if fits_fast(b, cols) {
        let c: Vec<Vec<i128>> = cols.iter().map(|c| narrow(c)).collect();
        Engine::new(c, b.len())
            .lexmin(&narrow(b))
            .map(|x| x.into_iter().map(BigInt::from).collect())
    } else {
        Engine::new(cols.to_vec(), b.len()).lexmin(b)
    }
}

/// Feasibility only; cheaper than [`member_columns`] when no certificate is needed.
pub(crate) fn feasible_columns(b: &[BigInt], cols: &[Vec<BigInt>]) -> bool {
    if b.iter().any(|x| x < &BigInt::zero()) {
        return false;
    }
    if fits_fast(b, cols) {
        let c: Vec<Vec<i128>> = cols.iter().map(|c| narrow(c)).collect();
        Engine::new(c, b.len()).feasible(&narrow(b))
    } else {
        Engine::new(cols.to_vec(), b.len()).feasible(b)
    }
}

/// Cap on remembered dead ends across all suffixes of one query.
const MEMO_BUDGET: usize = 1 << 20;

struct Engine<T> {
    cols: Vec<Vec<T>>,
    dim: usize,
    /// `suffixes[j]` decides feasibility over columns `j..n`, built lazily.
    suffixes: Vec<Option<Suffix<T>>>,
    memo_left: usize,
}

impl<T: Coef> Engine<T> {
    fn new(cols: Vec<Vec<T>>, dim: usize) -> Self {
        let n = cols.len();
        Engine {
            cols,
            dim,
            suffixes: (0..=n).map(|_| None).collect(),
            memo_left: MEMO_BUDGET,
        }
    }

    fn suffix_feasible(&mut self, j: usize, b: &[T]) -> bool {
        if self.suffixes[j].is_none() {
            self.suffixes[j] = Some(Suffix::new(&self.cols[j..], self.dim));
        }
        let suffix = self.suffixes[j].as_mut().expect("just built");
        suffix.feasible(b, &mut self.memo_left)
    }

    fn feasible(&mut self, b: &[T]) -> bool {
        self.suffix_feasible(0, b)
    }

    /// Greedy over columns: each coefficient is the least value that keeps the
    /// remaining suffix feasible, which yields the lexicographic minimum.
    fn lexmin(&mut self, b: &[T]) -> Option<Vec<T>> {
        if !self.feasible(b) {
            return None;
        }
        let n = self.cols.len();
        let mut rem = b.to_vec();
        let mut x = vec![T::zero(); n];
        for (j, col) in self.cols.clone().into_iter().enumerate() {
            let ub = upper_bound(&col, &rem);
            let mut v = T::zero();
            loop {
                if v > ub {
                    unreachable!("a feasible prefix always extends");
                }
                let next = sub_multiple(&rem, &col, &v);
                if self.suffix_feasible(j + 1, &next) {
                    rem = next;
                    x[j] = v;
                    break;
                }
                v = v + T::one();
            }
        }
        debug_assert!(rem.iter().all(Zero::is_zero));
        Some(x)
    }
}

/// Largest multiple of `col` that fits under `rem`; zero for a zero column.
fn upper_bound<T: Coef>(col: &[T], rem: &[T]) -> T {
    col.iter()
        .zip(rem)
        .filter(|(c, _)| c.is_positive())
        .map(|(c, r)| r.clone() / c.clone())
        .min()
        .unwrap_or_else(T::zero)
}

fn sub_multiple<T: Coef>(rem: &[T], col: &[T], v: &T) -> Vec<T> {
    rem.iter()
        .zip(col)
        .map(|(r, c)| r.clone() - c.clone() * v.clone())
        .collect()
}

/// Feasibility of `Σ x_j c_j = b` over a fixed column set.
///
/// Columns with one nonzero coordinate are folded into a scalar semigroup per
/// coordinate. The others are enumerated depth first; once no remaining
/// column touches a coordinate its residual is checked against the scalar
/// semigroup, and dead ends are remembered by `(depth, residual)`.
struct Suffix<T> {
    units: Vec<ScalarSemigroup<T>>,
    wide: Vec<Vec<T>>,
    /// Coordinates that no column of `wide[d..]` touches but `wide[d - 1]` does
    /// (at depth 0: untouched by every wide column).
    closing: Vec<Vec<usize>>,
    /// `open[d][k]`: coordinate `k` is still touched by `wide[d..]`.
    open: Vec<Vec<bool>>,
    dead: Vec<HashSet<Vec<T>>>,
}

impl<T: Coef> Suffix<T> {
    fn new(cols: &[Vec<T>], dim: usize) -> Self {
        let mut unit_gens: Vec<Vec<T>> = vec![Vec::new(); dim];
        let mut wide = Vec::new();
        for c in cols {
            let support: Vec<usize> = (0..dim).filter(|&k| !c[k].is_zero()).collect();
            match support.as_slice() {
                [] => {}
                [k] => unit_gens[*k].push(c[*k].clone()),
                _ => wide.push(c.clone()),
            }
        }
        let depth = wide.len();
        let mut open = vec![vec![false; dim]; depth + 1];
        for d in (0..depth).rev() {
            for k in 0..dim {
                open[d][k] = open[d + 1][k] || !wide[d][k].is_zero();
            }
        }
        let closing = (0..=depth)
            .map(|d| {
                (0..dim)
                    .filter(|&k| !open[d][k] && (d == 0 || open[d - 1][k]))
                    .collect()
            })
            .collect();
        Suffix {
            units: unit_gens.iter().map(|g| ScalarSemigroup::new(g)).collect(),
            wide,
            closing,
            open,
            dead: (0..=depth).map(|_| HashSet::new()).collect(),
        }
    }

    fn feasible(&mut self, b: &[T], budget: &mut usize) -> bool {
        let mut rem = b.to_vec();
        self.search(0, &mut rem, budget)
    }

    fn search(&mut self, d: usize, rem: &mut Vec<T>, budget: &mut usize) -> bool {
        for &k in &self.closing[d] {
            if !self.units[k].contains(&rem[k]) {
                return false;
            }
        }
        if d == self.wide.len() {
            return true;
        }
        let key = self.key(d, rem);
        if self.dead[d].contains(&key) {
            return false;
        }
        let col = self.wide[d].clone();
        let ub = upper_bound(&col, rem);
        // Large multiples first: solutions tend to use the wide columns heavily.
        let mut v = ub.clone();
        for (r, c) in rem.iter_mut().zip(&col) {
            *r = r.clone() - c.clone() * v.clone();
        }
        let found = loop {
            if self.search(d + 1, rem, budget) {
                break true;
            }
            if v.is_zero() {
                break false;
            }
            v = v - T::one();
            for (r, c) in rem.iter_mut().zip(&col) {
                *r = r.clone() + c.clone();
            }
        };
        for (r, c) in rem.iter_mut().zip(&col) {
            *r = r.clone() + c.clone() * v.clone();
        }
        if !found && *budget > 0 {
            *budget -= 1;
            self.dead[d].insert(key);
        }
        found
    }

    /// Residual with coordinates already settled masked out.
    fn key(&self, d: usize, rem: &[T]) -> Vec<T> {
        rem.iter()
            .zip(&self.open[d])
            .map(|(r, &o)| if o { r.clone() } else { T::zero() })
            .collect()
    }
}
