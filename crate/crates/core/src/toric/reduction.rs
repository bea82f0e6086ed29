use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Binomial, Configuration};
use crate::diophantine::member_columns;
use crate::error::{Error, Result};
use crate::exactlin::{in_q_span, min_multiple_in_zspan};

/// One step of the reduction, labels refer to the original configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionEvent {
    /// The vector was outside the rational span of the rest and was dropped.
    DropNonQSpan { label: usize },
    /// The vector was replaced by `b` times itself (`b > 1`).
    Scale { label: usize, b: BigInt },
    /// `b` times the vector lay in the semigroup of the rest; `generator`
    /// indexes the binomial recorded for it.
    Eliminate {
        label: usize,
        b: BigInt,
        generator: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    /// What is left; labels are original labels, vectors are rescaled.
    pub a_red: Configuration,
    /// Binomials in the variables of the original configuration.
    pub generators: Vec<Binomial>,
    pub trace: Vec<ReductionEvent>,
}

impl ReductionResult {
    pub fn is_empty(&self) -> bool {
        self.a_red.is_empty()
    }
}

/// Coordinatewise gcd of two positively proportional vectors.
pub fn gcd_vec(a: &[BigInt], b: &[BigInt]) -> Result<Vec<BigInt>> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("lengths {} and {}", a.len(), b.len())));
    }
    if !proportional(a, b) {
        return Err(Error::InvalidArgument("vectors are not proportional".into()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x.gcd(y)).collect())
}

/// `a = λ·b` for some rational `λ > 0`.
pub(crate) fn proportional(a: &[BigInt], b: &[BigInt]) -> bool {
    let Some(k) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if b[k].is_zero() || (a[k] > BigInt::zero()) != (b[k] > BigInt::zero()) {
        return false;
    }
    a.iter().zip(b).all(|(x, y)| x * &b[k] == y * &a[k])
}

/// `n − rank(A)`.
pub fn height(a: &Configuration) -> usize {
    if a.is_empty() {
        return 0;
    }
    a.len() - a.matrix().rank()
}

struct Slot {
    label: usize,
    vector: Vec<BigInt>,
    /// Product of every scaling applied to this label so far.
    multiplier: BigInt,
}

/// The reduction algorithm: sweeps over the current set in ascending label
/// order until it is empty or a sweep leaves it unchanged.
pub fn reduce(a: &Configuration) -> Result<ReductionResult> {
    let n_vars = a.labels().iter().max().map_or(0, |&l| l + 1);
    let mut current: Vec<Slot> = a
        .vectors()
        .iter()
        .zip(a.labels())
        .map(|(v, &label)| Slot {
            label,
            vector: v.clone(),
            multiplier: BigInt::one(),
        })
        .collect();
    current.sort_by_key(|s| s.label);
    let mut generators = Vec::new();
    let mut trace = Vec::new();
    loop {
        let snapshot: Vec<usize> = current.iter().map(|s| s.label).collect();
        let mut changed = false;
        for label in snapshot {
            let pos = current
                .iter()
                .position(|s| s.label == label)
                .expect("snapshot labels are present");
            let slot = current.remove(pos);
            let rest: Vec<Vec<BigInt>> = current.iter().map(|s| s.vector.clone()).collect();
            if !in_q_span(&slot.vector, &rest)? {
                trace.push(ReductionEvent::DropNonQSpan { label });
                changed = true;
                continue;
            }
            let b = min_multiple_in_zspan(&slot.vector, &rest)?;
            let target: Vec<BigInt> = slot.vector.iter().map(|x| x * &b).collect();
            match member_columns(&target, &rest) {
                Some(cert) => {
                    let mut alpha = vec![BigInt::zero(); n_vars];
                    let mut beta = vec![BigInt::zero(); n_vars];
                    alpha[label] = &slot.multiplier * &b;
                    for (s, g) in current.iter().zip(&cert) {
                        beta[s.label] = &s.multiplier * g;
                    }
                    trace.push(ReductionEvent::Eliminate {
                        label,
                        b,
                        generator: generators.len(),
                    });
                    generators.push(Binomial::new(alpha, beta)?);
                    changed = true;
                }
                None => {
                    if !b.is_one() {
                        trace.push(ReductionEvent::Scale {
                            label,
                            b: b.clone(),
                        });
                        changed = true;
                    }
                    current.insert(
                        pos,
                        Slot {
                            label,
                            vector: target,
                            multiplier: slot.multiplier * b,
                        },
                    );
                }
            }
        }
        if current.is_empty() || !changed {
            break;
        }
    }
    let a_red = Configuration::with_labels(
        a.dim(),
        current.iter().map(|s| s.vector.clone()).collect(),
        current.iter().map(|s| s.label).collect(),
    )?;
    Ok(ReductionResult {
        a_red,
        generators,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int_vec;

    fn example_2_9() -> Configuration {
        Configuration::from_i64(
            3,
            &[vec![0, 0, 3], vec![2, 3, 12], vec![0, 6, 18], vec![1, 0, 0], vec![1, 5, 17]],
        )
        .unwrap()
    }

    #[test]
    fn gcd_vectors() {
        let a = int_vec(&[20, 30, 100]);
        let b = int_vec(&[30, 45, 150]);
        assert_eq!(gcd_vec(&a, &b).unwrap(), int_vec(&[10, 15, 50]));
        let c = int_vec(&[14, 21, 70]);
        assert_eq!(gcd_vec(&int_vec(&[10, 15, 50]), &c).unwrap(), int_vec(&[2, 3, 10]));
        assert_eq!(gcd_vec(&a, &a).unwrap(), a);
        assert!(gcd_vec(&a, &int_vec(&[1, 1, 1])).is_err());
        assert!(gcd_vec(&int_vec(&[1, 0]), &int_vec(&[2, 0])).is_ok());
    }

    #[test]
    fn reduction_of_five_vectors() {
        let a = example_2_9();
        let r = reduce(&a).unwrap();
        assert!(r.is_empty());
        assert_eq!(r.generators.len(), 2);
        assert_eq!(r.generators.len(), height(&a));
        let g1 = &r.generators[0];
        assert_eq!(g1.alpha, int_vec(&[0, 0, 0, 0, 3]));
        assert_eq!(g1.beta, int_vec(&[1, 1, 2, 1, 0]));
        let g2 = &r.generators[1];
        assert_eq!(g2.to_string(), "x(2)^2 - x(1)^2*x(3)*x(4)^4");
        for g in &r.generators {
            assert!(g.is_homogeneous(&a));
            assert!(g.is_coprime());
        }
        assert!(r.trace.contains(&ReductionEvent::Scale {
            label: 0,
            b: BigInt::from(2)
        }));
    }

    #[test]
    fn numerical_fixed_point() {
        let a = Configuration::from_i64(1, &[vec![14], vec![15], vec![20], vec![21]]).unwrap();
        let r = reduce(&a).unwrap();
        assert_eq!(r.a_red, a);
        assert!(r.generators.is_empty());
        assert!(r.trace.is_empty());
    }

    #[test]
    fn independent_axes_vanish() {
        let a = Configuration::from_i64(3, &[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]).unwrap();
        let r = reduce(&a).unwrap();
        assert!(r.is_empty());
        assert!(r.generators.is_empty());
        let single = Configuration::from_i64(2, &[vec![1, 4]]).unwrap();
        assert!(reduce(&single).unwrap().is_empty());
    }

    #[test]
    fn heights() {
        let e = Configuration::from_i64(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(height(&e), 0);
        let pair = Configuration::from_i64(2, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(height(&pair), 1);
    }
}
