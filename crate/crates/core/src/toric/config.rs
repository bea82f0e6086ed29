use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::IntMatrix;

/// An ordered set of nonzero vectors `a_1, …, a_n ∈ ℕ^m`.
///
/// Each vector carries a stable label: its index in the configuration the
/// user supplied. Derived configurations (subsets, rescaled vectors) keep
/// the labels of the vectors they came from, which is how generators are
/// mapped back to the original variables `x_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    dim: usize,
    vectors: Vec<Vec<BigInt>>,
    labels: Vec<usize>,
}

impl Configuration {
    /// Labels the vectors `0..n` in order.
    pub fn new(dim: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidConfiguration("no vectors".into()));
        }
        let labels = (0..vectors.len()).collect();
        Self::with_labels(dim, vectors, labels)
    }

    /// Configuration with explicit labels; may be empty.
    pub fn with_labels(dim: usize, vectors: Vec<Vec<BigInt>>, labels: Vec<usize>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidConfiguration("ambient dimension is zero".into()));
        }
        if labels.len() != vectors.len() {
            return Err(Error::InvalidConfiguration(format!(
                "{} labels for {} vectors",
                labels.len(),
                vectors.len()
            )));
        }
        let mut seen = HashSet::new();
        for (v, &l) in vectors.iter().zip(&labels) {
            if v.len() != dim {
                return Err(Error::Dimension(format!(
                    "vector {} has {} coordinates, expected {}",
                    l + 1,
                    v.len(),
                    dim
                )));
            }
            if v.iter().any(Signed::is_negative) {
                return Err(Error::InvalidConfiguration(format!(
                    "vector {} has a negative coordinate",
                    l + 1
                )));
            }
            if v.iter().all(Zero::is_zero) {
                return Err(Error::InvalidConfiguration(format!("vector {} is zero", l + 1)));
            }
            if !seen.insert(l) {
                return Err(Error::InvalidConfiguration(format!("duplicate label {}", l + 1)));
            }
        }
        Ok(Configuration {
            dim,
            vectors,
            labels,
        })
    }

    pub fn from_i64(dim: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        Self::new(dim, vectors.iter().map(|v| crate::int_vec(v)).collect())
    }

    /// The columns of `m` as a configuration.
    pub fn from_matrix(m: &IntMatrix) -> Result<Self> {
        Self::new(m.rows(), m.columns())
    }

    pub fn empty(dim: usize) -> Self {
        Configuration {
            dim,
            vectors: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[BigInt] {
        &self.vectors[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn position_of(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Matrix whose columns are the vectors (`dim × len`).
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.dim, &self.vectors).expect("dimensions checked on construction")
    }

    /// Vectors other than the one at position `i`.
    pub fn others(&self, i: usize) -> Vec<Vec<BigInt>> {
        self.vectors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Sub-configuration at the given positions, labels preserved.
    pub fn select(&self, positions: &[usize]) -> Configuration {
        Configuration {
            dim: self.dim,
            vectors: positions.iter().map(|&p| self.vectors[p].clone()).collect(),
            labels: positions.iter().map(|&p| self.labels[p]).collect(),
        }
    }

    pub fn without(&self, i: usize) -> Configuration {
        let keep: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
        self.select(&keep)
    }

    /// The `A`-degree `Σ e_i a_i` of an exponent vector indexed by position.
    pub fn degree(&self, exponents: &[BigInt]) -> Result<Vec<BigInt>> {
        if exponents.len() != self.len() {
            return Err(Error::Dimension(format!(
                "{} exponents for {} vectors",
                exponents.len(),
                self.len()
            )));
        }
        let mut deg = vec![BigInt::zero(); self.dim];
        for (e, v) in exponents.iter().zip(&self.vectors) {
            if e.is_zero() {
                continue;
            }
            for (d, x) in deg.iter_mut().zip(v) {
                *d += e * x;
            }
        }
        Ok(deg)
    }

    /// Same vectors with coordinates permuted: new coordinate `k` is old `perm[k]`.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<Configuration> {
        check_permutation(perm, self.dim)?;
        let vectors = self
            .vectors
            .iter()
            .map(|v| perm.iter().map(|&k| v[k].clone()).collect())
            .collect();
        Configuration::with_labels(self.dim, vectors, self.labels.clone())
    }

    /// Vectors reordered: new position `i` holds old position `perm[i]`, relabelled `0..n`.
    pub fn permute_vectors(&self, perm: &[usize]) -> Result<Configuration> {
        check_permutation(perm, self.len())?;
        Configuration::new(self.dim, perm.iter().map(|&p| self.vectors[p].clone()).collect())
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!("permutation of length {} for {}", perm.len(), n)));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
    }
    Ok(())
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration[")?;
        for (k, (v, l)) in self.vectors.iter().zip(&self.labels).enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "a{}=({})", l + 1, s.join(","))?;
        }
        write!(f, "]")
    }
}

/// A configuration containing `d_k·e_k` for every coordinate axis `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialConfig {
    base: Configuration,
    d: Vec<BigInt>,
    axis_positions: Vec<usize>,
    projective: bool,
}

impl SimplicialConfig {
    /// Detects the axis vectors (first vector on each axis wins) and the
    /// projective shape.
    pub fn new(base: Configuration) -> Result<Self> {
        let m = base.dim();
        let mut axis_positions = Vec::with_capacity(m);
        let mut d = Vec::with_capacity(m);
        for k in 0..m {
            let found = base.vectors().iter().position(|v| {
                v.iter().enumerate().all(|(c, x)| (c == k) != x.is_zero())
            });
            match found {
                Some(p) => {
                    axis_positions.push(p);
                    d.push(base.vector(p)[k].clone());
                }
                None => {
                    return Err(Error::NotSimplicial(format!(
                        "no vector on coordinate axis {}",
                        k + 1
                    )))
                }
            }
        }
        let projective = d.iter().all(|x| *x == d[0])
            && base
                .vectors()
                .iter()
                .all(|v| v.iter().sum::<BigInt>() == d[0]);
        Ok(SimplicialConfig {
            base,
            d,
            axis_positions,
            projective,
        })
    }

    pub fn config(&self) -> &Configuration {
        &self.base
    }

    pub fn d(&self) -> &[BigInt] {
        &self.d
    }

    /// Position of `d_k·e_k` in the configuration, per axis.
    pub fn axis_positions(&self) -> &[usize] {
        &self.axis_positions
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }
}

/// The binomial `x^alpha − x^beta`, exponents indexed by original labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
}

impl Binomial {
    pub fn new(alpha: Vec<BigInt>, beta: Vec<BigInt>) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::Dimension(format!(
                "exponent vectors of lengths {} and {}",
                alpha.len(),
                beta.len()
            )));
        }
        if alpha.iter().chain(&beta).any(Signed::is_negative) {
            return Err(Error::InvalidArgument("negative exponent".into()));
        }
        Ok(Binomial { alpha, beta })
    }

    pub fn from_i64(alpha: &[i64], beta: &[i64]) -> Result<Self> {
        Self::new(crate::int_vec(alpha), crate::int_vec(beta))
    }

    pub fn nvars(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_coprime(&self) -> bool {
        self.alpha
            .iter()
            .zip(&self.beta)
            .all(|(a, b)| a.is_zero() || b.is_zero())
    }

    /// Divides out the common monomial factor of both sides.
    pub fn coprime_part(&self) -> Binomial {
        let (alpha, beta) = self
            .alpha
            .iter()
            .zip(&self.beta)
            .map(|(a, b)| {
                let c = a.min(b);
                (a - c, b - c)
            })
            .unzip();
        Binomial { alpha, beta }
    }

    /// `alpha − beta`.
    pub fn difference(&self) -> Vec<BigInt> {
        self.alpha.iter().zip(&self.beta).map(|(a, b)| a - b).collect()
    }

    /// Whether both monomials have the same `A`-degree, i.e. the binomial lies in `I_A`.
    pub fn is_homogeneous(&self, config: &Configuration) -> bool {
        if self.nvars() != config.len() {
            return false;
        }
        let diff = self.difference();
        config.degree(&diff).map(|d| d.iter().all(Zero::is_zero)).unwrap_or(false)
    }

    /// `A`-degree of the leading monomial `x^alpha`.
    pub fn degree(&self, config: &Configuration) -> Result<Vec<BigInt>> {
        config.degree(&self.alpha)
    }

    pub fn swapped(&self) -> Binomial {
        Binomial {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exps: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (i, e) in exps.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e.is_one() {
            write!(f, "x({})", i + 1)?;
        } else {
            write!(f, "x({})^{}", i + 1, e)?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

/// Renders as `x(4)^3 - x(6)^2` with 1-based variable indices.
impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.alpha)?;
        write!(f, " - ")?;
        write_monomial(f, &self.beta)
    }
}
