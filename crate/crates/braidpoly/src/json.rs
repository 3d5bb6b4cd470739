//! JSON encodings of core types. Big integers are written as strings.

use braidpoly_core::normalized::{
    ConwayReport, ItemCheck, JonesReport, LspaceScreen, Status, Value,
};
use braidpoly_core::{
    DecompositionTree, HGrid, Laurent1, LaurentPoly2, LinkProfile, TheoremReport,
};
use num_bigint::BigInt;
use serde_json::{json, Value as Json};

fn big(c: &BigInt) -> Json {
    Json::String(c.to_string())
}

/// `[[p, q, "coeff"], …]` for `coeff·v^p·z^q`, ordered by `(q, p)`.
pub fn poly(p: &LaurentPoly2) -> Json {
    p.terms().map(|(v, z, c)| json!([v, z, big(c)])).collect()
}

/// `[[e, "coeff"], …]`
pub fn laurent(p: &Laurent1) -> Json {
    p.terms().map(|(e, c)| json!([e, big(c)])).collect()
}

pub fn profile(p: &LinkProfile) -> Json {
    json!({
        "strands": p.strands,
        "components": p.components,
        "euler": p.euler,
        "split": p.split,
        "prime": p.prime,
        "m": p.m,
        "d": p.d,
        "genus": p.genus,
    })
}

pub fn tree(t: &DecompositionTree) -> Json {
    match t {
        DecompositionTree::SplitUnion(c) => {
            json!({"type": "split", "children": c.iter().map(tree).collect::<Vec<_>>()})
        }
        DecompositionTree::ConnectedSum(c) => {
            json!({"type": "sum", "children": c.iter().map(tree).collect::<Vec<_>>()})
        }
        DecompositionTree::PrimeLeaf(w) => json!({"type": "prime", "word": w.to_string()}),
        DecompositionTree::UnknotLeaf => json!({"type": "unknot"}),
    }
}

pub fn grid(g: &HGrid) -> Json {
    json!({
        "d": g.profile.d,
        "m": g.profile.m,
        "p": g.profile.prime,
        "h": g.entries().map(|(i, j, c)| json!([i, j, big(c)])).collect::<Vec<_>>(),
        "nonnegative": g.all_nonnegative,
    })
}

fn value(v: &Value) -> Json {
    match v {
        Value::Flag(b) => json!(b),
        Value::Int(c) => big(c),
        Value::Ints(cs) => cs.iter().map(big).collect(),
        Value::Range(lo, hi) => json!([big(lo), big(hi)]),
    }
}

pub fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Vacuous => "vacuous",
    }
}

fn item(c: &ItemCheck) -> Json {
    json!({
        "item": c.item.label(),
        "expected": value(&c.expected),
        "observed": value(&c.observed),
        "pass": c.status.is_ok(),
        "status": status(c.status),
    })
}

pub fn theorem(r: &TheoremReport) -> Json {
    r.items.iter().map(item).collect()
}

pub fn conway_report(r: &ConwayReport) -> Json {
    json!({
        "top": r.top.as_ref().map(big),
        "top_expected": big(&r.top_expected),
        "next": r.next.as_ref().map(big),
        "next_bounds": [big(&r.next_bounds.0), big(&r.next_bounds.1)],
        "pass": r.ok(),
    })
}

pub fn jones_report(r: &JonesReport) -> Json {
    json!({
        "min_degree": r.min_degree,
        "coefficients": r.coefficients.iter().map(big).collect::<Vec<_>>(),
        "k": big(&r.k),
        "k_bounds": [big(&r.k_bounds.0), big(&r.k_bounds.1)],
        "h": big(&r.h),
        "identity": r.identity_ok,
        "pass": r.ok(),
    })
}

pub fn lspace(s: &LspaceScreen) -> Json {
    json!({
        "jones": s.jones_ok,
        "h": s.h_ok,
        "alexander": s.alexander_form_ok,
        "pass": s.passes(),
    })
}
