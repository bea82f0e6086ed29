//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use toric_ci::{int_vec, Configuration, IntMatrix, SimplicialConfig};

pub fn config(dim: usize, vectors: &[&[i64]]) -> Configuration {
    let v: Vec<Vec<i64>> = vectors.iter().map(|v| v.to_vec()).collect();
    Configuration::from_i64(dim, &v).expect("fixture is valid")
}

pub fn simplicial(dim: usize, vectors: &[&[i64]]) -> SimplicialConfig {
    SimplicialConfig::new(config(dim, vectors)).expect("fixture is simplicial")
}

pub fn card_group_matrix() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![24, 0, 0, 8, 3],
        vec![0, 24, 0, 10, 6],
        vec![0, 0, 24, 5, 9],
    ])
    .unwrap()
}

pub fn belongs_config() -> Configuration {
    config(3, &[&[10, 2, 5], &[3, 1, 0], &[2, 1, 1], &[1, 3, 2]])
}

pub fn library_negative() -> SimplicialConfig {
    simplicial(3, &[&[12, 0, 0], &[0, 10, 0], &[0, 0, 8], &[1, 3, 3], &[2, 2, 3]])
}

/// Ten vectors in `ℕ^3`; the last column reads `(40, 40, 60)`.
pub fn library_positive() -> SimplicialConfig {
    simplicial(
        3,
        &[
            &[52, 0, 0],
            &[0, 52, 0],
            &[0, 0, 52],
            &[20, 30, 100],
            &[28, 42, 140],
            &[30, 45, 150],
            &[42, 63, 210],
            &[32, 32, 48],
            &[36, 36, 54],
            &[40, 40, 60],
        ],
    )
}

pub fn merge_example() -> SimplicialConfig {
    simplicial(
        3,
        &[
            &[52, 0, 0],
            &[0, 52, 0],
            &[0, 0, 52],
            &[20, 30, 100],
            &[28, 42, 140],
            &[30, 45, 150],
            &[42, 63, 210],
            &[52, 52, 78],
        ],
    )
}

pub fn reduction_example() -> Configuration {
    config(3, &[&[0, 0, 3], &[2, 3, 12], &[0, 6, 18], &[1, 0, 0], &[1, 5, 17]])
}

pub fn numerical_fixed_point() -> Configuration {
    config(1, &[&[14], &[15], &[20], &[21]])
}

pub fn conic() -> SimplicialConfig {
    simplicial(2, &[&[2, 0], &[0, 2], &[1, 1]])
}

/// `{2e_1, …, 2e_4}` plus the four edges of the 4-cycle 1–2–4–3–1.
pub fn surface_cycle() -> SimplicialConfig {
    toric_ci::cisolver::gen_family_surface_pairs(4, &[(1, 2), (3, 4), (1, 3), (2, 4)]).unwrap()
}

/// Named simplicial fixtures with their known decisions.
pub fn simplicial_fixtures() -> Vec<(&'static str, SimplicialConfig, bool)> {
    use toric_ci::{gen_family_curve, gen_family_surface};
    vec![
        ("library negative", library_negative(), false),
        ("library positive", library_positive(), true),
        ("merge example", merge_example(), true),
        ("conic", conic(), true),
        ("curve d=3", gen_family_curve(3, &[]).unwrap(), true),
        ("curve d=12 (2,4)", gen_family_curve(12, &[2, 4]).unwrap(), true),
        ("curve d=12 (2,5)", gen_family_curve(12, &[2, 5]).unwrap(), false),
        ("surface m=2", gen_family_surface(2, 1, 2).unwrap(), true),
        ("surface m=3", gen_family_surface(3, 1, 2).unwrap(), true),
        ("surface m=4 two disjoint pairs", toric_ci::cisolver::gen_family_surface_pairs(4, &[(1, 2), (3, 4)]).unwrap(), true),
        ("surface m=4 cycle", surface_cycle(), false),
    ]
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Gcd of the nonzero `t × t` minors by explicit enumeration.
pub fn minors_gcd(m: &IntMatrix, t: usize) -> Option<BigInt> {
    let mut g = BigInt::zero();
    for rows in subsets(m.rows(), t) {
        for cols in subsets(m.cols(), t) {
            let sub: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m[(r, c)].clone()).collect())
                .collect();
            g = g.gcd(&cofactor_det(&sub));
        }
    }
    (!g.is_zero()).then_some(g)
}

/// Lexicographically first `x ∈ ℕ^n` with `Σ x_j a_j = b`, by exhaustive
/// enumeration in lexicographic order.
pub fn brute_member(b: &[i64], cols: &[Vec<i64>]) -> Option<Vec<i64>> {
    let bounds: Vec<i64> = cols
        .iter()
        .map(|c| {
            c.iter()
                .zip(b)
                .filter(|(v, _)| **v > 0)
                .map(|(v, t)| t / v)
                .min()
                .unwrap_or(0)
        })
        .collect();
    let mut x = vec![0i64; cols.len()];
    loop {
        let sum: Vec<i64> = (0..b.len())
            .map(|k| cols.iter().zip(&x).map(|(c, v)| c[k] * v).sum())
            .collect();
        if sum == b {
            return Some(x);
        }
        // Odometer increment with the last column fastest.
        let mut j = cols.len();
        loop {
            if j == 0 {
                return None;
            }
            j -= 1;
            if x[j] < bounds[j] {
                x[j] += 1;
                for v in &mut x[j + 1..] {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Smallest `k ≥ 1` with `k·v` in the integer span of `set`, by direct search.
pub fn ascending_min_multiple(v: &[BigInt], set: &[Vec<BigInt>], limit: u64) -> Option<u64> {
    let m = IntMatrix::from_columns(v.len(), set).ok()?;
    (1..=limit).find(|&k| {
        let target: Vec<BigInt> = v.iter().map(|x| x * k).collect();
        toric_ci::solve_integer(&m, &target).unwrap().is_some()
    })
}

/// Random matrix on which merging the last two columns preserves domination
/// and the top minors gcd:
/// last row `(0, …, 0, c, −d)` with coprime positive `c, d`, and every other
/// row with `a_{i,n−1}·a_{i,n} ≥ 0`.
pub fn merge_matrix<R: Rng>(rng: &mut R, s: usize, n: usize, max: i64) -> IntMatrix {
    let (c, d) = loop {
        let c = rng.gen_range(1..=max);
        let d = rng.gen_range(1..=max);
        if c.gcd(&d) == 1 {
            break (c, d);
        }
    };
    let mut rows = Vec::with_capacity(s);
    for _ in 0..s - 1 {
        let mut row: Vec<i64> = (0..n).map(|_| rng.gen_range(-max..=max)).collect();
        if row[n - 2] * row[n - 1] < 0 {
            row[n - 1] = -row[n - 1];
        }
        rows.push(row);
    }
    let mut last = vec![0i64; n];
    last[n - 2] = c;
    last[n - 1] = -d;
    rows.push(last);
    IntMatrix::from_rows(&rows).unwrap()
}

/// The merged `(s−1) × (n−1)` matrix: first `n − 2` columns kept, last column
/// `d·a_{i,n−1} + c·a_{i,n}` (the exponent of `t` under `x_{n−1} ↦ t^d, x_n ↦ t^c`).
pub fn merge_transform(a: &IntMatrix) -> IntMatrix {
    let s = a.rows();
    let n = a.cols();
    let c = a[(s - 1, n - 2)].clone();
    let d = -a[(s - 1, n - 1)].clone();
    let rows: Vec<Vec<BigInt>> = (0..s - 1)
        .map(|i| {
            let mut row: Vec<BigInt> = (0..n - 2).map(|j| a[(i, j)].clone()).collect();
            row.push(&d * &a[(i, n - 2)] + &c * &a[(i, n - 1)]);
            row
        })
        .collect();
    IntMatrix::from_rows(&rows).unwrap()
}

/// The same construction with coefficients in the other order, `c·a_{i,n−1} + d·a_{i,n}`.
/// It does not preserve the minors gcd.
pub fn merge_transform_unswapped(a: &IntMatrix) -> IntMatrix {
    let s = a.rows();
    let n = a.cols();
    let c = a[(s - 1, n - 2)].clone();
    let d = -a[(s - 1, n - 1)].clone();
    let rows: Vec<Vec<BigInt>> = (0..s - 1)
        .map(|i| {
            let mut row: Vec<BigInt> = (0..n - 2).map(|j| a[(i, j)].clone()).collect();
            row.push(&c * &a[(i, n - 2)] + &d * &a[(i, n - 1)]);
            row
        })
        .collect();
    IntMatrix::from_rows(&rows).unwrap()
}

/// Square mixed submatrix search by full enumeration of row and column subsets.
pub fn brute_dominating(m: &IntMatrix) -> bool {
    for k in 1..=m.rows().min(m.cols()) {
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                let mixed = rows.iter().all(|&r| {
                    cols.iter().any(|&c| m[(r, c)].is_positive()) && cols.iter().any(|&c| m[(r, c)].is_negative())
                });
                if mixed {
                    return false;
                }
            }
        }
    }
    true
}

pub fn random_int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, max: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-max..=max)).collect())
        .collect();
    IntMatrix::from_rows(&data).unwrap()
}

pub fn nonneg_vectors<R: Rng>(rng: &mut R, dim: usize, count: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=max)).collect();
        if v.iter().any(|&x| x > 0) {
            out.push(v);
        }
    }
    out
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    int_vec(v)
}
