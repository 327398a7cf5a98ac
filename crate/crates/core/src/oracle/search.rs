use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::enumerate::{operation_at, operation_count};
use crate::error::{Error, Result};
use crate::finite::{preserves, preserves_all, preserves_naive, Operation, Relation};

/// Limits for exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_arity: usize,
    pub max_candidates: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_arity: 1, max_candidates: 1 << 24, time_limit: None }
    }
}

/// Result of a separator search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Operation),
    /// Every candidate within the stated arities was examined.
    Absent,
    Inconclusive(String),
}

impl Search {
    pub fn found(&self) -> Option<&Operation> {
        match self {
            Search::Found(op) => Some(op),
            _ => None,
        }
    }
}

fn separates(op: &Operation, preserve: &[Relation], violate: &Relation) -> bool {
    preserves_all(op, preserve).unwrap_or(false) && !preserves(op, violate).unwrap_or(true)
}

/// An operation preserving every relation in `preserve` and not `violate`. Template hits win
/// (least table first); otherwise arities 1..=max_arity are scanned in lexicographic table order.
pub fn find_separator(
    preserve: &[Relation],
    violate: &Relation,
    budget: &SearchBudget,
    templates: &[Operation],
) -> Result<Search> {
    let k = violate.k();
    if let Some(r) = preserve.iter().find(|r| r.k() != k) {
        return Err(Error::IncompatibleDomains { left: k, right: r.k() });
    }
    if let Some(best) = templates.iter().filter(|op| op.k() == k && separates(op, preserve, violate)).min() {
        return Ok(Search::Found(confirm(best.clone(), preserve, violate)));
    }
    let start = Instant::now();
    let mut spent: u64 = 0;
    for n in 1..=budget.max_arity {
        let count = match operation_count(k, n) {
            Some(c) if spent.saturating_add(c) <= budget.max_candidates => c,
            _ => return Ok(Search::Inconclusive(format!("arity {n} exceeds the candidate budget"))),
        };
        spent += count;
        let timed_out = AtomicBool::new(false);
        let hit = (0..count).into_par_iter().find_first(|&i| {
            if let Some(limit) = budget.time_limit {
                if start.elapsed() > limit {
                    timed_out.store(true, Ordering::Relaxed);
                    return true;
                }
            }
            let op = operation_at(k, n, i).expect("valid index");
            separates(&op, preserve, violate)
        });
        if timed_out.load(Ordering::Relaxed) {
            return Ok(Search::Inconclusive("time limit reached".into()));
        }
        if let Some(i) = hit {
            return Ok(Search::Found(confirm(operation_at(k, n, i)?, preserve, violate)));
        }
    }
    Ok(Search::Absent)
}

/// Column combinations above which the literal re-check is skipped.
const NAIVE_LIMIT: f64 = (1u64 << 22) as f64;

fn naive_agrees(op: &Operation, r: &Relation, expected: bool) -> bool {
    if (r.len() as f64).powi(op.arity() as i32) > NAIVE_LIMIT {
        return true;
    }
    preserves_naive(op, r).unwrap() == expected
}

fn confirm(op: Operation, preserve: &[Relation], violate: &Relation) -> Operation {
    assert!(
        preserve.iter().all(|r| naive_agrees(&op, r, true)) && naive_agrees(&op, violate, false),
        "separator failed naive re-verification"
    );
    op
}
