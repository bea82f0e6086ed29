//! Certification of complete intersection generating sets.
//!
//! Binomials `x^{α_i} − x^{β_i}` (coprime sides) in `I_A`, `s = height(A)` of
//! them, generate `I_A` exactly when the matrix with rows `α_i − β_i` is
//! dominating (no square mixed submatrix) and the gcd of its `s × s` minors is 1.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exactlin::{delta_t, IntMatrix};
use crate::toric::{height, Binomial, Configuration};

/// Rows `α_i − β_i` of a list of binomials, common support divided out first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    pub rows: Vec<Vec<BigInt>>,
}

impl ExponentMatrix {
    pub fn from_binomials(gens: &[Binomial]) -> Self {
        ExponentMatrix {
            rows: gens.iter().map(|g| g.coprime_part().difference()).collect(),
        }
    }

    /// `None` when there are no rows or no columns.
    pub fn to_matrix(&self) -> Option<IntMatrix> {
        if self.rows.is_empty() || self.rows[0].is_empty() {
            return None;
        }
        IntMatrix::from_rows(&self.rows).ok()
    }
}

/// Every row has a strictly positive and a strictly negative entry.
pub fn is_mixed(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| {
        let row = m.row(i);
        row.iter().any(Signed::is_positive) && row.iter().any(Signed::is_negative)
    })
}

/// No square submatrix is mixed.
pub fn is_dominating(m: &IntMatrix) -> bool {
    !MixedSearch::new(m).exists()
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn with(&self, i: usize) -> Self {
        let mut b = self.clone();
        b.0[i / 64] |= 1 << (i % 64);
        b
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Branch and prune search for a square mixed submatrix.
///
/// A state is a column set `C` and a set of excluded rows. It succeeds once
/// at least `|C|` live rows are mixed on `C`. Otherwise the lowest live row
/// that touches `C` without being mixed on it either receives a column with
/// its missing sign or is excluded. Searching from every seed row and every
/// sign pair of that row reaches a smallest square mixed submatrix if one
/// exists.
struct MixedSearch {
    /// `sign[r][c]` in `{-1, 0, 1}`.
    sign: Vec<Vec<i8>>,
    cols: usize,
    seen: HashSet<(Bits, Bits)>,
}

impl MixedSearch {
    fn new(m: &IntMatrix) -> Self {
        let sign = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .map(|x| if x.is_positive() { 1 } else if x.is_negative() { -1 } else { 0 })
                    .collect()
            })
            .collect();
        MixedSearch {
            sign,
            cols: m.cols(),
            seen: HashSet::new(),
        }
    }

    fn exists(&mut self) -> bool {
        let rows = self.sign.len();
        let mut excluded = Bits::new(rows);
        for r0 in 0..rows {
            let pos: Vec<usize> = (0..self.cols).filter(|&c| self.sign[r0][c] > 0).collect();
            let neg: Vec<usize> = (0..self.cols).filter(|&c| self.sign[r0][c] < 0).collect();
            for &p in &pos {
                for &q in &neg {
                    let c = Bits::new(self.cols).with(p).with(q);
                    if self.grow(c, excluded.clone()) {
                        return true;
                    }
                }
            }
            excluded = excluded.with(r0);
        }
        false
    }

    /// `(has positive, has negative)` of row `r` restricted to `c`.
    fn signs_on(&self, r: usize, c: &Bits) -> (bool, bool) {
        let mut out = (false, false);
        for (j, &s) in self.sign[r].iter().enumerate() {
            if s != 0 && c.get(j) {
                if s > 0 {
                    out.0 = true;
                } else {
                    out.1 = true;
                }
            }
        }
        out
    }

    fn grow(&mut self, c: Bits, excluded: Bits) -> bool {
        let rows = self.sign.len();
        let size = c.count();
        let live = rows - excluded.count();
        if size > live {
            return false;
        }
        if !self.seen.insert((c.clone(), excluded.clone())) {
            return false;
        }
        let mut mixed = 0;
        let mut branch_row = None;
        for r in (0..rows).filter(|&r| !excluded.get(r)) {
            match self.signs_on(r, &c) {
                (true, true) => mixed += 1,
                (false, false) => {}
                _ => {
                    if branch_row.is_none() {
                        branch_row = Some(r);
                    }
                }
            }
        }
        if mixed >= size {
            return true;
        }
        let Some(r) = branch_row else {
            return false;
        };
        let (has_pos, _) = self.signs_on(r, &c);
        let want: i8 = if has_pos { -1 } else { 1 };
        let candidates: Vec<usize> = (0..self.cols)
            .filter(|&j| !c.get(j) && self.sign[r][j] == want)
            .collect();
        for j in candidates {
            if self.grow(c.with(j), excluded.clone()) {
                return true;
            }
        }
        self.grow(c, excluded.with(r))
    }
}

/// First violated clause of the generation criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyFailure {
    /// Binomial `index` is not in `I_A` (or has the wrong number of variables).
    NotHomogeneous { index: usize },
    Count { expected: usize, found: usize },
    NotDominating,
    /// The gcd of the maximal minors, `None` when they all vanish.
    Delta { value: Option<BigInt> },
}

impl VerifyFailure {
    /// Short machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            VerifyFailure::NotHomogeneous { .. } => "not-homogeneous",
            VerifyFailure::Count { .. } => "count",
            VerifyFailure::NotDominating => "not-dominating",
            VerifyFailure::Delta { .. } => "delta",
        }
    }
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::NotHomogeneous { index } => {
                write!(f, "binomial {} is not homogeneous", index + 1)
            }
            VerifyFailure::Count { expected, found } => {
                write!(f, "{} binomials, height is {}", found, expected)
            }
            VerifyFailure::NotDominating => write!(f, "exponent matrix has a square mixed submatrix"),
            VerifyFailure::Delta { value: Some(v) } => write!(f, "maximal minors have gcd {}", v),
            VerifyFailure::Delta { value: None } => write!(f, "maximal minors all vanish"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Valid,
    Invalid(VerifyFailure),
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }
}

/// Whether `gens` is a generating set of `I_A` of size `height(A)`.
pub fn verify_ci(a: &Configuration, gens: &[Binomial]) -> VerifyOutcome {
    for (index, g) in gens.iter().enumerate() {
        if !g.coprime_part().is_homogeneous(a) {
            return VerifyOutcome::Invalid(VerifyFailure::NotHomogeneous { index });
        }
    }
    let expected = height(a);
    if gens.len() != expected {
        return VerifyOutcome::Invalid(VerifyFailure::Count {
            expected,
            found: gens.len(),
        });
    }
    let Some(m) = ExponentMatrix::from_binomials(gens).to_matrix() else {
        return VerifyOutcome::Valid;
    };
    if !is_dominating(&m) {
        return VerifyOutcome::Invalid(VerifyFailure::NotDominating);
    }
    let s = gens.len();
    let value = if s <= m.cols() {
        delta_t(&m, s).expect("1 ≤ s ≤ min(rows, cols)")
    } else {
        None
    };
    match value {
        Some(v) if v.is_one() => VerifyOutcome::Valid,
        value => VerifyOutcome::Invalid(VerifyFailure::Delta { value }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn mixed_rows() {
        assert!(is_mixed(&m(&[vec![1, -1]])));
        assert!(!is_mixed(&m(&[vec![1, 0], vec![0, -1]])));
        assert!(!is_mixed(&m(&[vec![5]])));
    }

    #[test]
    fn dominating_small_cases() {
        assert!(is_dominating(&m(&[vec![1, -1]])));
        assert!(!is_dominating(&m(&[vec![1, -1], vec![-1, 1]])));
        assert!(is_dominating(&m(&[vec![1, -1, 0], vec![0, 1, -1]])));
        assert!(!is_dominating(&m(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]])));
        // The mixed square sits in rows 2,3 and columns 3,4 only.
        assert!(!is_dominating(&m(&[
            vec![2, -1, 0, 0],
            vec![0, 0, 1, -1],
            vec![0, 0, -3, 2],
        ])));
    }

    fn merge_example() -> Configuration {
        Configuration::from_i64(
            3,
            &[
                vec![52, 0, 0],
                vec![0, 52, 0],
                vec![0, 0, 52],
                vec![20, 30, 100],
                vec![28, 42, 140],
                vec![30, 45, 150],
                vec![42, 63, 210],
                vec![52, 52, 78],
            ],
        )
        .unwrap()
    }

    fn known_generators() -> Vec<Binomial> {
        vec![
            Binomial::from_i64(&[0, 0, 0, 3, 0, 0, 0, 0], &[0, 0, 0, 0, 0, 2, 0, 0]).unwrap(),
            Binomial::from_i64(&[0, 0, 0, 0, 3, 0, 0, 0], &[0, 0, 0, 0, 0, 0, 2, 0]).unwrap(),
            Binomial::from_i64(&[0, 0, 0, 2, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0, 1, 0]).unwrap(),
            Binomial::from_i64(&[0, 0, 0, 1, 0, 0, 2, 0], &[0, 1, 7, 0, 0, 0, 0, 2]).unwrap(),
            // x_2 must appear squared for this one to be homogeneous.
            Binomial::from_i64(&[0, 0, 0, 0, 0, 0, 0, 2], &[2, 2, 3, 0, 0, 0, 0, 0]).unwrap(),
        ]
    }

    #[test]
    fn known_generators_certify() {
        let a = merge_example();
        let gens = known_generators();
        assert!(is_dominating(&ExponentMatrix::from_binomials(&gens).to_matrix().unwrap()));
        assert_eq!(verify_ci(&a, &gens), VerifyOutcome::Valid);
        let four = &gens[..4];
        assert_eq!(
            verify_ci(&a, four),
            VerifyOutcome::Invalid(VerifyFailure::Count { expected: 5, found: 4 })
        );
        let mut broken = gens.clone();
        broken[4].beta[2] = BigInt::from(4);
        assert_eq!(
            verify_ci(&a, &broken),
            VerifyOutcome::Invalid(VerifyFailure::NotHomogeneous { index: 4 })
        );
    }

    #[test]
    fn conic_and_non_generating_sets() {
        let conic = Configuration::from_i64(2, &[vec![2, 0], vec![0, 2], vec![1, 1]]).unwrap();
        let g = Binomial::from_i64(&[0, 0, 2], &[1, 1, 0]).unwrap();
        assert!(verify_ci(&conic, &[g]).is_valid());
        // x_1^2 x_2^2 - x_3^4 lies in the ideal but does not generate it.
        let g = Binomial::from_i64(&[2, 2, 0], &[0, 0, 4]).unwrap();
        assert_eq!(
            verify_ci(&conic, &[g]),
            VerifyOutcome::Invalid(VerifyFailure::Delta { value: Some(BigInt::from(2)) })
        );
        let free = Configuration::from_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(verify_ci(&free, &[]).is_valid());
    }
}
