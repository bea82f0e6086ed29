use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::diophantine::{exact_m, m_bar_unchecked, member_columns, MBar};
use crate::error::{Error, Result};
use crate::exactlin::{in_cone, in_q_span, min_multiple_in_zspan};
use crate::toric::{gcd_vec, height, proportional, reduce, Binomial, Configuration, ReductionEvent, SimplicialConfig};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Also compute the true `m_i` of every vector the shortcut cannot
    /// match. Only affects the event trace, never the decision.
    pub exact_m_values: bool,
}

/// The `m`-value attached to a vector of the working set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MOutcome {
    /// Outside the cone of the other vectors; no `m`-value.
    NotInCone,
    /// The true minimum `m_i`.
    Confirmed(BigInt),
    /// Cannot take part in a match. `mbar` is `None` when the vector has no
    /// proportional partner, otherwise the unconfirmed proxy; `exact` is the
    /// true `m_i` when requested.
    Unmatchable {
        mbar: Option<BigInt>,
        exact: Option<BigInt>,
    },
}

/// Audit trail of a decision. Labels are 0-based; labels `≥ n` denote the
/// vectors synthesised by merges, in creation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CiEvent {
    MValue { label: usize, outcome: MOutcome },
    /// `m_i a_i = m_j a_j` lay in both semigroups; `merged` is the label of
    /// their gcd vector.
    Match {
        i: usize,
        j: usize,
        m_i: BigInt,
        m_j: BigInt,
        merged: usize,
        generator: usize,
    },
    MergeFail { i: usize, j: usize },
    RepeatDrop { label: usize },
    RepeatElim { label: usize, b: BigInt, generator: usize },
    ResidualSet { labels: Vec<usize> },
    Reduction(ReductionEvent),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotCiReason {
    /// `m_i a_i` missed `ℕV_i ∩ ℕV_j` for a matched pair.
    MergeCheckFailed { i: usize, j: usize },
    /// The elimination phase stopped with these labels left.
    ResidualNonempty { labels: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiResult {
    pub is_ci: bool,
    /// Minimal generators in the original variables; empty unless `is_ci`.
    pub generators: Vec<Binomial>,
    pub events: Vec<CiEvent>,
    pub reason: Option<NotCiReason>,
}

impl CiResult {
    fn negative(events: Vec<CiEvent>, reason: NotCiReason) -> Self {
        CiResult {
            is_ci: false,
            generators: Vec::new(),
            events,
            reason: Some(reason),
        }
    }
}

struct Node {
    label: usize,
    vector: Vec<BigInt>,
    /// Original labels absorbed by this vector, ascending.
    vset: Vec<usize>,
    outcome: MOutcome,
}

impl Node {
    fn confirmed(&self) -> Option<&BigInt> {
        match &self.outcome {
            MOutcome::Confirmed(m) => Some(m),
            _ => None,
        }
    }
}

struct Solver<'a> {
    original: &'a Configuration,
    options: &'a SolverOptions,
    nodes: Vec<Node>,
    next_label: usize,
    generators: Vec<Binomial>,
    events: Vec<CiEvent>,
}

/// Decides whether the toric ideal of a simplicial configuration is a
/// complete intersection and, if so, returns a minimal generating set.
pub fn ci_simplicial(a: &SimplicialConfig, options: &SolverOptions) -> Result<CiResult> {
    let original = a.config();
    let mut solver = Solver {
        original,
        options,
        nodes: Vec::with_capacity(original.len()),
        next_label: original.len(),
        generators: Vec::new(),
        events: Vec::new(),
    };
    let mut order: Vec<usize> = (0..original.len()).collect();
    order.sort_by_key(|&p| original.label(p));
    for &p in &order {
        solver.nodes.push(Node {
            label: original.label(p),
            vector: original.vector(p).to_vec(),
            vset: vec![original.label(p)],
            outcome: MOutcome::NotInCone,
        });
    }
    for k in 0..solver.nodes.len() {
        solver.nodes[k].outcome = solver.m_value(k)?;
        solver.record_m(k);
    }
    if let Some(reason) = solver.merge_phase()? {
        return Ok(CiResult::negative(solver.events, reason));
    }
    if let Some(reason) = solver.elimination_phase()? {
        return Ok(CiResult::negative(solver.events, reason));
    }
    solver.check_generators()?;
    Ok(CiResult {
        is_ci: true,
        generators: solver.generators,
        events: solver.events,
        reason: None,
    })
}

/// Projective fast path: complete intersection iff the reduction is empty.
pub fn ci_projective(a: &SimplicialConfig) -> Result<CiResult> {
    if !a.is_projective() {
        return Err(Error::NotProjective);
    }
    let r = reduce(a.config())?;
    let events = r.trace.into_iter().map(CiEvent::Reduction).collect();
    if r.a_red.is_empty() {
        Ok(CiResult {
            is_ci: true,
            generators: r.generators,
            events,
            reason: None,
        })
    } else {
        let labels = r.a_red.labels().to_vec();
        let mut events: Vec<CiEvent> = events;
        events.push(CiEvent::ResidualSet { labels: labels.clone() });
        Ok(CiResult::negative(events, NotCiReason::ResidualNonempty { labels }))
    }
}

impl Solver<'_> {
    fn vectors_except(&self, k: usize) -> Vec<Vec<BigInt>> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, n)| n.vector.clone())
            .collect()
    }

    fn working_set(&self) -> Result<Configuration> {
        Configuration::with_labels(
            self.original.dim(),
            self.nodes.iter().map(|n| n.vector.clone()).collect(),
            self.nodes.iter().map(|n| n.label).collect(),
        )
    }

    fn m_value(&self, k: usize) -> Result<MOutcome> {
        let g = self.working_set()?;
        let has_partner = (0..g.len()).any(|j| j != k && proportional(g.vector(j), g.vector(k)));
        if !has_partner && !in_cone(g.vector(k), &self.vectors_except(k))? {
            return Ok(MOutcome::NotInCone);
        }
        let r = m_bar_unchecked(k, &g)?;
        let outcome = match r.value {
            MBar::Value(m) if r.confirmed_exact => MOutcome::Confirmed(m),
            value => MOutcome::Unmatchable {
                mbar: match value {
                    MBar::Value(m) => Some(m),
                    MBar::Unmatchable => None,
                },
                exact: if self.options.exact_m_values {
                    Some(exact_m(k, &g)?)
                } else {
                    None
                },
            },
        };
        Ok(outcome)
    }

    fn record_m(&mut self, k: usize) {
        self.events.push(CiEvent::MValue {
            label: self.nodes[k].label,
            outcome: self.nodes[k].outcome.clone(),
        });
    }

    /// Matched pair with the smallest `(min label, max label)`, as positions.
    fn next_match(&self) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), (usize, usize))> = None;
        for p in 0..self.nodes.len() {
            let Some(mp) = self.nodes[p].confirmed() else { continue };
            for q in p + 1..self.nodes.len() {
                let Some(mq) = self.nodes[q].confirmed() else { continue };
                if !proportional(&self.nodes[p].vector, &self.nodes[q].vector) {
                    continue;
                }
                let same = self.nodes[p]
                    .vector
                    .iter()
                    .zip(&self.nodes[q].vector)
                    .all(|(x, y)| x * mp == y * mq);
                if !same {
                    continue;
                }
                let (lp, lq) = (self.nodes[p].label, self.nodes[q].label);
                let key = (lp.min(lq), lp.max(lq));
                let pos = if lp < lq { (p, q) } else { (q, p) };
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, pos));
                }
            }
        }
        best.map(|(_, pos)| pos)
    }

    /// Certificate of `b` over the original vectors with the given labels,
    /// spread over all original variables.
    fn certificate(&self, b: &[BigInt], labels: &[usize]) -> Option<Vec<BigInt>> {
        let positions: Vec<usize> = labels
            .iter()
            .map(|&l| self.original.position_of(l).expect("V-sets hold original labels"))
            .collect();
        let cols: Vec<Vec<BigInt>> = positions.iter().map(|&p| self.original.vector(p).to_vec()).collect();
        let x = member_columns(b, &cols)?;
        let mut exps = vec![BigInt::zero(); self.n_vars()];
        for (&l, v) in labels.iter().zip(x) {
            exps[l] = v;
        }
        Some(exps)
    }

    fn n_vars(&self) -> usize {
        self.original.labels().iter().max().map_or(0, |&l| l + 1)
    }

    fn merge_phase(&mut self) -> Result<Option<NotCiReason>> {
        while let Some((p, q)) = self.next_match() {
            let (li, lj) = (self.nodes[p].label, self.nodes[q].label);
            let m_i = self.nodes[p].confirmed().expect("matched").clone();
            let m_j = self.nodes[q].confirmed().expect("matched").clone();
            if !m_i.gcd(&m_j).is_one() {
                return Err(Error::Invariant(format!(
                    "matched multiples {} and {} of vectors {} and {} are not coprime",
                    m_i,
                    m_j,
                    li + 1,
                    lj + 1
                )));
            }
            let target: Vec<BigInt> = self.nodes[p].vector.iter().map(|x| x * &m_i).collect();
            let alpha = self.certificate(&target, &self.nodes[p].vset);
            let beta = self.certificate(&target, &self.nodes[q].vset);
            let (Some(alpha), Some(beta)) = (alpha, beta) else {
                self.events.push(CiEvent::MergeFail { i: li, j: lj });
                return Ok(Some(NotCiReason::MergeCheckFailed { i: li, j: lj }));
            };
            let generator = self.generators.len();
            self.generators.push(Binomial::new(alpha, beta)?);
            let merged_vector = gcd_vec(&self.nodes[p].vector, &self.nodes[q].vector)?;
            let label = self.next_label;
            self.next_label += 1;
            self.events.push(CiEvent::Match {
                i: li,
                j: lj,
                m_i,
                m_j,
                merged: label,
                generator,
            });
            let second = self.nodes.remove(q);
            let first = self.nodes.remove(p);
            let mut vset = first.vset;
            vset.extend(second.vset);
            vset.sort_unstable();
            self.nodes.push(Node {
                label,
                vector: merged_vector,
                vset,
                outcome: MOutcome::NotInCone,
            });
            let k = self.nodes.len() - 1;
            self.nodes[k].outcome = self.m_value(k)?;
            self.record_m(k);
        }
        Ok(None)
    }

    fn elimination_phase(&mut self) -> Result<Option<NotCiReason>> {
        loop {
            let snapshot: Vec<usize> = self.nodes.iter().map(|n| n.label).collect();
            let mut changed = false;
            for label in snapshot {
                let k = self
                    .nodes
                    .iter()
                    .position(|n| n.label == label)
                    .expect("snapshot labels are present");
                let rest = self.vectors_except(k);
                if !in_q_span(&self.nodes[k].vector, &rest)? {
                    self.nodes.remove(k);
                    self.events.push(CiEvent::RepeatDrop { label });
                    changed = true;
                    continue;
                }
                let b = min_multiple_in_zspan(&self.nodes[k].vector, &rest)?;
                let target: Vec<BigInt> = self.nodes[k].vector.iter().map(|x| x * &b).collect();
                let Some(alpha) = self.certificate(&target, &self.nodes[k].vset) else {
                    continue;
                };
                let mut others: Vec<usize> = self
                    .nodes
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .flat_map(|(_, n)| n.vset.iter().copied())
                    .collect();
                others.sort_unstable();
                let Some(beta) = self.certificate(&target, &others) else {
                    continue;
                };
                let generator = self.generators.len();
                self.generators.push(Binomial::new(alpha, beta)?);
                self.events.push(CiEvent::RepeatElim { label, b, generator });
                self.nodes.remove(k);
                changed = true;
            }
            if self.nodes.is_empty() {
                return Ok(None);
            }
            if !changed {
                let labels: Vec<usize> = self.nodes.iter().map(|n| n.label).collect();
                self.events.push(CiEvent::ResidualSet { labels: labels.clone() });
                return Ok(Some(NotCiReason::ResidualNonempty { labels }));
            }
        }
    }

    fn check_generators(&self) -> Result<()> {
        let h = height(self.original);
        if self.generators.len() != h {
            return Err(Error::Invariant(format!(
                "{} generators for an ideal of height {}",
                self.generators.len(),
                h
            )));
        }
        let ordered = self.ordered_original()?;
        if let Some(g) = self.generators.iter().find(|g| !g.is_homogeneous(&ordered)) {
            return Err(Error::Invariant(format!("generator {} is not homogeneous", g)));
        }
        Ok(())
    }

    /// The original configuration indexed by label.
    fn ordered_original(&self) -> Result<Configuration> {
        let mut order: Vec<usize> = (0..self.original.len()).collect();
        order.sort_by_key(|&p| self.original.label(p));
        let labels: Vec<usize> = order.iter().map(|&p| self.original.label(p)).collect();
        if labels.iter().enumerate().any(|(i, &l)| i != l) {
            return Err(Error::InvalidConfiguration("labels are not 0..n".into()));
        }
        Ok(self.original.select(&order))
    }
}
