use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::Coef;

/// Largest residue table built before falling back to search.
const TABLE_LIMIT: u64 = 1 << 20;

/// Numerical semigroup `ℕ g_1 + … + ℕ g_k` with a constant-time membership test.
///
/// After dividing by `g = gcd(g_i)` the table stores, for every residue `ρ`
/// modulo the smallest reduced generator `s`, the least member `≡ ρ (mod s)`.
/// A value `t` is a member iff `g | t` and `t/g ≥ table[(t/g) mod s]`.
#[derive(Debug, Clone)]
pub(crate) struct ScalarSemigroup<T> {
    gcd: T,
    shape: Shape<T>,
}

#[derive(Debug, Clone)]
enum Shape<T> {
    /// Only zero.
    Trivial,
    /// Every multiple of the gcd.
    Full,
    Table { modulus: T, least: Vec<Option<T>> },
    Search { gens: Vec<T> },
}

impl<T: Coef> ScalarSemigroup<T> {
    pub(crate) fn new(gens: &[T]) -> Self {
        let gens: Vec<T> = gens.iter().filter(|g| g.is_positive()).cloned().collect();
        if gens.is_empty() {
            return ScalarSemigroup {
                gcd: T::one(),
                shape: Shape::Trivial,
            };
        }
        let gcd = gens.iter().fold(T::zero(), |acc, g| acc.gcd(g));
        let mut reduced: Vec<T> = gens.iter().map(|g| g.clone() / gcd.clone()).collect();
        reduced.sort();
        reduced.dedup();
        let s = reduced[0].clone();
        let shape = if s.is_one() {
            Shape::Full
        } else if s.to_u64().is_some_and(|v| v <= TABLE_LIMIT) {
            Shape::Table {
                least: residue_table(&reduced, &s),
                modulus: s,
            }
        } else {
            Shape::Search { gens: reduced }
        };
        ScalarSemigroup { gcd, shape }
    }

    pub(crate) fn contains(&self, t: &T) -> bool {
        if t.is_zero() {
            return true;
        }
        if t.is_negative() {
            return false;
        }
        match &self.shape {
            Shape::Trivial => false,
            _ if !(t.clone() % self.gcd.clone()).is_zero() => false,
            Shape::Full => true,
            Shape::Table { modulus, least } => {
                let q = t.clone() / self.gcd.clone();
                let r = (q.clone() % modulus.clone()).to_usize().expect("residue fits");
                least[r].as_ref().is_some_and(|w| q >= *w)
            }
            Shape::Search { gens } => {
                let q = t.clone() / self.gcd.clone();
                search(gens, gens.len(), &q, &mut HashMap::new())
            }
        }
    }

    /// Least `b ≥ 1` with `b·q` a member, or `None` when no multiple is.
    pub(crate) fn min_multiple(&self, q: &T) -> Option<T> {
        if !q.is_positive() || matches!(self.shape, Shape::Trivial) {
            return None;
        }
        let mut b = T::one();
        loop {
            if self.contains(&(b.clone() * q.clone())) {
                return Some(b);
            }
            b = b + T::one();
        }
    }
}

/// Dijkstra over residues modulo `s` with edge weights the generators.
fn residue_table<T: Coef>(gens: &[T], s: &T) -> Vec<Option<T>> {
    let size = s.to_usize().expect("modulus fits");
    let mut least: Vec<Option<T>> = vec![None; size];
    least[0] = Some(T::zero());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((T::zero(), 0usize)));
    let steps: Vec<(T, usize)> = gens
        .iter()
        .skip(1)
        .map(|g| (g.clone(), (g.clone() % s.clone()).to_usize().expect("residue fits")))
        .collect();
    while let Some(Reverse((w, r))) = heap.pop() {
        if least[r].as_ref().is_some_and(|best| w > *best) {
            continue;
        }
        for (g, gr) in &steps {
            let nr = (r + gr) % size;
            let nw = w.clone() + g.clone();
            if least[nr].as_ref().is_none_or(|best| nw < *best) {
                least[nr] = Some(nw.clone());
                heap.push(Reverse((nw, nr)));
            }
        }
    }
    least
}

/// Whether `t` is a sum of the first `k` generators (largest taken first).
fn search<T: Coef>(gens: &[T], k: usize, t: &T, memo: &mut HashMap<(usize, T), bool>) -> bool {
    if t.is_zero() {
        return true;
    }
    if k == 0 {
        return false;
    }
    if let Some(&hit) = memo.get(&(k, t.clone())) {
        return hit;
    }
    let g = &gens[k - 1];
    let mut c = t.clone() / g.clone();
    let found = loop {
        if search(gens, k - 1, &(t.clone() - c.clone() * g.clone()), memo) {
            break true;
        }
        if c.is_zero() {
            break false;
        }
        c = c - T::one();
    };
    memo.insert((k, t.clone()), found);
    found
}
