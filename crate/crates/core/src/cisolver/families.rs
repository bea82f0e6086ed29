use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::toric::{Configuration, SimplicialConfig};

/// The monomial curve family `{d e_1, d e_2, (d−1)e_1 + e_2, (d−d_k)e_1 + d_k e_2}`
/// for a strictly increasing `1 < d_4 < … < d_n < d`.
pub fn gen_family_curve(d: u64, ds: &[u64]) -> Result<SimplicialConfig> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree {} must be at least 2", d)));
    }
    let mut prev = 1;
    for &dk in ds {
        if dk <= prev || dk >= d {
            return Err(Error::InvalidArgument(format!(
                "exponents {:?} must increase strictly inside (1, {})",
                ds, d
            )));
        }
        prev = dk;
    }
    let mut vectors = vec![[d, 0], [0, d], [d - 1, 1]];
    vectors.extend(ds.iter().map(|&dk| [d - dk, dk]));
    build(2, vectors.iter().map(|v| v.to_vec()).collect())
}

/// Known answer for [`gen_family_curve`]: `d_4 | d_5 | … | d_n | d`.
pub fn curve_family_expected(d: u64, ds: &[u64]) -> bool {
    ds.iter()
        .chain(std::iter::once(&d))
        .collect::<Vec<_>>()
        .windows(2)
        .all(|w| w[1] % w[0] == 0)
}

/// `{2e_1, …, 2e_m, e_i + e_j}` with 1-based `i ≠ j`; always a complete intersection.
pub fn gen_family_surface(m: usize, i: usize, j: usize) -> Result<SimplicialConfig> {
    gen_family_surface_pairs(m, &[(i, j)])
}

/// `{2e_1, …, 2e_m}` plus `e_i + e_j` for every listed pair (1-based).
pub fn gen_family_surface_pairs(m: usize, pairs: &[(usize, usize)]) -> Result<SimplicialConfig> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("dimension {} must be at least 2", m)));
    }
    let mut vectors: Vec<Vec<u64>> = (0..m)
        .map(|k| {
            let mut v = vec![0; m];
            v[k] = 2;
            v
        })
        .collect();
    for &(i, j) in pairs {
        if i == j || i == 0 || j == 0 || i > m || j > m {
            return Err(Error::InvalidArgument(format!(
                "pair ({}, {}) must be two distinct indices in 1..={}",
                i, j, m
            )));
        }
        let mut v = vec![0; m];
        v[i - 1] = 1;
        v[j - 1] = 1;
        vectors.push(v);
    }
    build(m, vectors)
}

/// Simplicial configuration with axis vectors `d_k e_k`, `d_k ∈ [1, max]`,
/// followed by `extra` random nonzero vectors with entries in `[0, max]`.
pub fn random_simplicial<R: Rng + ?Sized>(rng: &mut R, m: usize, extra: usize, max: u64) -> Result<SimplicialConfig> {
    if m == 0 || max == 0 {
        return Err(Error::InvalidArgument("dimension and entry bound must be positive".into()));
    }
    let mut vectors: Vec<Vec<u64>> = (0..m)
        .map(|k| {
            let mut v = vec![0; m];
            v[k] = rng.gen_range(1..=max);
            v
        })
        .collect();
    while vectors.len() < m + extra {
        let v: Vec<u64> = (0..m).map(|_| rng.gen_range(0..=max)).collect();
        if v.iter().any(|&x| x > 0) {
            vectors.push(v);
        }
    }
    build(m, vectors)
}

/// Direct sum of curve family instances on disjoint coordinate pairs, one
/// per entry of `chains`. Each chain is `[d_4, …, d_n, d]` with every entry
/// dividing the next, so the result is a complete intersection.
pub fn curve_blocks(chains: &[Vec<u64>]) -> Result<SimplicialConfig> {
    let m = 2 * chains.len();
    let mut vectors = Vec::new();
    for (b, chain) in chains.iter().enumerate() {
        let Some((&d, ds)) = chain.split_last() else {
            return Err(Error::InvalidArgument("empty chain".into()));
        };
        let block = gen_family_curve(d, ds)?;
        for v in block.config().vectors() {
            let mut w = vec![0u64; m];
            w[2 * b] = u64::try_from(&v[0]).expect("entries are small");
            w[2 * b + 1] = u64::try_from(&v[1]).expect("entries are small");
            vectors.push(w);
        }
    }
    build(m, vectors)
}

/// Random divisibility chain `d_4 | … | d_n | d` of the given length (including
/// `d`), built from prime steps so that `d ≤ max`; `None` when impossible.
pub fn random_chain<R: Rng + ?Sized>(rng: &mut R, len: usize, max: u64) -> Option<Vec<u64>> {
    const STEPS: [u64; 4] = [2, 3, 5, 7];
    if len == 0 || 1u64.checked_shl(len as u32)? > max {
        return None;
    }
    for _ in 0..64 {
        let mut chain = Vec::with_capacity(len);
        let mut cur = 1u64;
        for _ in 0..len {
            cur *= STEPS[rng.gen_range(0..STEPS.len())];
            chain.push(cur);
        }
        if cur <= max {
            // Scale the top so that d uses the available range.
            let room = max / cur;
            if room > 1 {
                let f = rng.gen_range(1..=room);
                *chain.last_mut().expect("nonempty") *= f;
            }
            return Some(chain);
        }
    }
    Some((1..=len as u32).map(|k| 1u64 << k).collect())
}

fn build(m: usize, vectors: Vec<Vec<u64>>) -> Result<SimplicialConfig> {
    let vectors = vectors
        .into_iter()
        .map(|v| v.into_iter().map(BigInt::from).collect())
        .collect();
    SimplicialConfig::new(Configuration::new(m, vectors)?)
}
