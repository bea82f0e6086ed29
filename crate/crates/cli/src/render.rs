//! Text and JSON reports. Vector indices are 1-based in every output.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use toric_ci::{
    Binomial, CiEvent, CiResult, Configuration, MOutcome, NotCiReason, ReductionEvent, ReductionResult,
};

fn num(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

fn nums(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

fn binomial(g: &Binomial) -> Value {
    json!({ "alpha": nums(&g.alpha), "beta": nums(&g.beta) })
}

fn m_outcome(o: &MOutcome) -> Value {
    match o {
        MOutcome::NotInCone => json!({ "kind": "not-in-cone" }),
        MOutcome::Confirmed(m) => json!({ "kind": "confirmed", "m": num(m) }),
        MOutcome::Unmatchable { mbar, exact } => json!({
            "kind": "unmatchable",
            "mbar": mbar.as_ref().map(num),
            "m": exact.as_ref().map(num),
        }),
    }
}

fn reduction_event(e: &ReductionEvent) -> Value {
    match e {
        ReductionEvent::DropNonQSpan { label } => json!({ "event": "drop", "vector": label + 1 }),
        ReductionEvent::Scale { label, b } => json!({ "event": "scale", "vector": label + 1, "b": num(b) }),
        ReductionEvent::Eliminate { label, b, generator } => json!({
            "event": "eliminate",
            "vector": label + 1,
            "b": num(b),
            "generator": generator + 1,
        }),
    }
}

fn ci_event(e: &CiEvent) -> Value {
    match e {
        CiEvent::MValue { label, outcome } => json!({
            "event": "m-value",
            "vector": label + 1,
            "outcome": m_outcome(outcome),
        }),
        CiEvent::Match { i, j, m_i, m_j, merged, generator } => json!({
            "event": "match",
            "pair": [i + 1, j + 1],
            "m": [num(m_i), num(m_j)],
            "merged": merged + 1,
            "generator": generator + 1,
        }),
        CiEvent::MergeFail { i, j } => json!({ "event": "merge-fail", "pair": [i + 1, j + 1] }),
        CiEvent::RepeatDrop { label } => json!({ "event": "drop", "vector": label + 1 }),
        CiEvent::RepeatElim { label, b, generator } => json!({
            "event": "eliminate",
            "vector": label + 1,
            "b": num(b),
            "generator": generator + 1,
        }),
        CiEvent::ResidualSet { labels } => json!({
            "event": "residual",
            "vectors": labels.iter().map(|l| l + 1).collect::<Vec<_>>(),
        }),
        CiEvent::Reduction(r) => reduction_event(r),
    }
}

fn reason_json(r: &NotCiReason) -> Value {
    match r {
        NotCiReason::MergeCheckFailed { i, j } => json!({ "kind": "merge-check-failed", "pair": [i + 1, j + 1] }),
        NotCiReason::ResidualNonempty { labels } => json!({
            "kind": "residual-nonempty",
            "vectors": labels.iter().map(|l| l + 1).collect::<Vec<_>>(),
        }),
    }
}

pub fn reason_text(r: &NotCiReason) -> String {
    match r {
        NotCiReason::MergeCheckFailed { i, j } => {
            format!("merge check failed for a{} and a{}", i + 1, j + 1)
        }
        NotCiReason::ResidualNonempty { labels } => {
            let v: Vec<String> = labels.iter().map(|l| format!("a{}", l + 1)).collect();
            format!("no vector of {{{}}} can be eliminated", v.join(", "))
        }
    }
}

pub fn ci_json(r: &CiResult) -> Value {
    json!({
        "is_ci": r.is_ci,
        "generators": r.generators.iter().map(binomial).collect::<Vec<_>>(),
        "events": r.events.iter().map(ci_event).collect::<Vec<_>>(),
        "reason": r.reason.as_ref().map(reason_json),
    })
}

pub fn ci_text(r: &CiResult) -> String {
    let mut s = format!("{}\n", r.is_ci);
    for g in &r.generators {
        s.push_str(&format!("{}\n", g));
    }
    if let Some(reason) = &r.reason {
        s.push_str(&format!("reason: {}\n", reason_text(reason)));
    }
    s
}

fn vector_text(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn remaining(a: &Configuration) -> Vec<Value> {
    a.vectors()
        .iter()
        .zip(a.labels())
        .map(|(v, l)| json!({ "vector": l + 1, "entries": nums(v) }))
        .collect()
}

pub fn reduce_json(r: &ReductionResult) -> Value {
    json!({
        "a_red": remaining(&r.a_red),
        "generators": r.generators.iter().map(binomial).collect::<Vec<_>>(),
        "events": r.trace.iter().map(reduction_event).collect::<Vec<_>>(),
    })
}

pub fn reduce_text(r: &ReductionResult) -> String {
    let mut s = String::new();
    if r.a_red.is_empty() {
        s.push_str("empty\n");
    } else {
        for (v, l) in r.a_red.vectors().iter().zip(r.a_red.labels()) {
            s.push_str(&format!("a{} = {}\n", l + 1, vector_text(v)));
        }
    }
    s.push_str(&format!("generators: {}\n", r.generators.len()));
    for g in &r.generators {
        s.push_str(&format!("{}\n", g));
    }
    s
}

/// Coefficients joined by commas, or `0` for non-membership.
pub fn certificate_text(c: Option<&[BigInt]>) -> String {
    match c {
        Some(c) => c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        None => "0".into(),
    }
}
