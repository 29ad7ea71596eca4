//! Conversion graph between families and shortest-route composition.

use std::collections::VecDeque;

use abt_core::abh::{abh_to_ssb_triangle, ssb_triangle_to_abh};
use abt_core::abt::{
    abt_to_approval_seq, abt_to_nclp, approval_seq_to_abt, nclp_to_abt, AbtTriangle,
};
use abt_core::ssb::{ssb_to_syt, syt_to_ssb, syt_to_triangle, triangle_to_syt};
use abt_core::tsscpp::{
    abt_to_boolean, boolean_to_abt, boolean_to_nilp, domain_to_full, domain_to_magog,
    domain_to_nilp, full_to_domain, magog_to_domain, nilp_to_boolean, nilp_to_domain,
};

use crate::envelope::{Object, FAMILIES};
use crate::error::CliError;

/// Undirected edges; every edge is a bijection in both directions.
const EDGES: [(&str, &str); 10] = [
    ("abt", "approval-seq"),
    ("abt", "nclp"),
    ("abt", "boolean"),
    ("boolean", "nilp"),
    ("nilp", "domain"),
    ("domain", "magog"),
    ("domain", "tsscpp"),
    ("ssb", "syt"),
    ("syt", "ssb-triangle"),
    ("ssb-triangle", "abh"),
];

fn neighbours(family: &str) -> Vec<&'static str> {
    let mut out: Vec<&'static str> = EDGES
        .iter()
        .filter_map(|&(a, b)| {
            if a == family {
                Some(b)
            } else if b == family {
                Some(a)
            } else {
                None
            }
        })
        .collect();
    out.sort_unstable();
    out
}

/// Shortest chain of families from `from` to `to`, both ends included.
pub fn route(from: &str, to: &str) -> Result<Vec<&'static str>, CliError> {
    let known = |f: &str| FAMILIES.iter().copied().find(|&k| k == f);
    let start = known(from).ok_or_else(|| CliError::Usage(format!("unknown family {from:?}")))?;
    let goal = known(to).ok_or_else(|| CliError::Usage(format!("unknown family {to:?}")))?;
    let mut prev: Vec<(&'static str, &'static str)> = vec![(start, start)];
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        if f == goal {
            let mut chain = vec![goal];
            let mut cur = goal;
            while cur != start {
                cur = prev.iter().find(|(k, _)| *k == cur).expect("visited").1;
                chain.push(cur);
            }
            chain.reverse();
            return Ok(chain);
        }
        for n in neighbours(f) {
            if prev.iter().all(|(k, _)| *k != n) {
                prev.push((n, f));
                queue.push_back(n);
            }
        }
    }
    Err(CliError::Usage(format!(
        "no conversion route from {from} to {to}"
    )))
}

fn abt(obj: &Object) -> Result<AbtTriangle, CliError> {
    match obj {
        Object::Abt(t) => Ok(AbtTriangle::new(t.clone())?),
        _ => unreachable!("route edges match families"),
    }
}

/// One edge of the graph. The input is assumed valid.
fn step(obj: &Object, to: &str) -> Result<Object, CliError> {
    Ok(match (obj, to) {
        (Object::Abt(_), "approval-seq") => Object::ApprovalSeq(abt_to_approval_seq(&abt(obj)?)),
        (Object::Abt(_), "nclp") => Object::Nclp(abt_to_nclp(&abt(obj)?)),
        (Object::Abt(_), "boolean") => Object::Boolean(abt_to_boolean(&abt(obj)?)),
        (Object::ApprovalSeq(s), "abt") => Object::abt(&approval_seq_to_abt(s)?),
        (Object::Nclp(p), "abt") => Object::abt(&nclp_to_abt(p)?),
        (Object::Boolean(b), "abt") => Object::abt(&boolean_to_abt(b)?),
        (Object::Boolean(b), "nilp") => Object::Nilp(boolean_to_nilp(b)?),
        (Object::Nilp(p), "boolean") => Object::Boolean(nilp_to_boolean(p)?),
        (Object::Nilp(p), "domain") => Object::Domain(nilp_to_domain(p)?),
        (Object::Domain(d), "nilp") => Object::Nilp(domain_to_nilp(d)?),
        (Object::Domain(d), "magog") => Object::Magog(domain_to_magog(d)?),
        (Object::Domain(d), "tsscpp") => Object::Tsscpp(domain_to_full(d)?),
        (Object::Magog(m), "domain") => Object::Domain(magog_to_domain(m)?),
        (Object::Tsscpp(f), "domain") => Object::Domain(full_to_domain(f)?),
        (Object::Ssb(b), "syt") => Object::Syt(ssb_to_syt(b)?),
        (Object::Syt(s), "ssb") => Object::Ssb(syt_to_ssb(s)?),
        (Object::Syt(s), "ssb-triangle") => Object::SsbTriangle(syt_to_triangle(s)?),
        (Object::SsbTriangle(t), "syt") => Object::Syt(triangle_to_syt(t)?),
        (Object::SsbTriangle(t), "abh") => Object::Abh(ssb_triangle_to_abh(t)?),
        (Object::Abh(h), "ssb-triangle") => Object::SsbTriangle(abh_to_ssb_triangle(h)?),
        (o, t) => unreachable!("no edge {} -> {t}", o.family()),
    })
}

/// Validates `obj`, walks the route to `to`, and validates the result.
pub fn convert(obj: Object, to: &str) -> Result<Object, CliError> {
    let chain = route(obj.family(), to)?;
    let mut cur = obj.validated()?;
    for next in &chain[1..] {
        cur = step(&cur, next)?;
    }
    cur.validated()
}
