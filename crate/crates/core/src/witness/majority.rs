use itertools::Itertools;

use crate::classify::CentralType;
use crate::error::{Error, Result};
use crate::finite::{center, Elem, Operation, Partition, Permutation, Relation};

fn exact_majority(x: &[Elem]) -> Option<Elem> {
    if x[0] == x[1] || x[0] == x[2] {
        Some(x[0])
    } else if x[1] == x[2] {
        Some(x[1])
    } else {
        None
    }
}

/// Case (a) term for `fine ⊊ coarse`. Branches are tried in order; the second branch returns the
/// exact majority when there is one and x₁ otherwise, so that all majority identities hold.
fn nested_majority(fine: &Partition, coarse: &Partition) -> Result<Operation> {
    Operation::from_fn(fine.k(), 3, |x| {
        for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            if fine.related(x[i], x[j]) && !fine.related(x[l], x[i]) {
                return x[i];
            }
        }
        if fine.related(x[0], x[2]) && fine.related(x[1], x[2]) {
            return exact_majority(x).unwrap_or(x[0]);
        }
        for (l, m) in [(0, 1), (0, 2), (1, 2)] {
            if coarse.related(x[l], x[m]) {
                return coarse.block_of(x[l])[0];
            }
        }
        0
    })
}

/// Coordinatewise majority on E_k/ρ × E_k/θ; the first argument breaks ties.
fn product_majority(theta: &Partition, rho: &Partition) -> Result<Operation> {
    let k = theta.k();
    let mut back = vec![vec![None; theta.num_blocks()]; rho.num_blocks()];
    for x in 0..k as Elem {
        back[rho.class_of(x)][theta.class_of(x)] = Some(x);
    }
    let maj = |a: usize, b: usize, c: usize| if b == c { b } else { a };
    Operation::from_fn(k, 3, |x| {
        let r = maj(rho.class_of(x[0]), rho.class_of(x[1]), rho.class_of(x[2]));
        let t = maj(theta.class_of(x[0]), theta.class_of(x[1]), theta.class_of(x[2]));
        back[r][t].expect("product decomposition")
    })
}

/// A majority operation in Pol(θ) ∩ Pol(ρ) for two equivalence relations satisfying (a) or (b).
pub fn majority_equiv(theta: &Partition, rho: &Partition) -> Result<Operation> {
    if theta.k() != rho.k() {
        return Err(Error::IncompatibleDomains { left: theta.k(), right: rho.k() });
    }
    if theta != rho && rho.refines(theta) {
        return nested_majority(rho, theta);
    }
    if theta != rho && theta.refines(rho) {
        return nested_majority(theta, rho);
    }
    let meet = theta.meet(rho)?;
    let (tr, rr) = (theta.to_relation(), rho.to_relation());
    if meet.is_discrete() && rr.compose(&tr)?.is_full() {
        return product_majority(theta, rho);
    }
    Err(Error::Precondition("the equivalence relations satisfy neither (a) nor (b)".into()))
}

/// (h+1)-ary term: x_{i₁} if some h arguments agree; `second` of the first h arguments that are
/// θ-equal; `fallback` otherwise.
fn nu_term(theta: &Partition, h: usize, second: impl Fn(&[Elem]) -> Elem, fallback: Elem) -> Result<Operation> {
    let subsets: Vec<Vec<usize>> = (0..=h).combinations(h).collect();
    Operation::from_fn(theta.k(), h + 1, |x| {
        if let Some(s) = subsets.iter().find(|s| s.iter().all(|&i| x[i] == x[s[0]])) {
            return x[s[0]];
        }
        if let Some(s) = subsets.iter().find(|s| s.iter().all(|&i| theta.related(x[i], x[s[0]]))) {
            let vals: Vec<Elem> = s.iter().map(|&i| x[i]).collect();
            return second(&vals);
        }
        fallback
    })
}

/// Per-class representative from `pool`: the least member of the class.
fn class_reps(theta: &Partition, pool: &[Elem]) -> Result<Vec<Elem>> {
    theta
        .blocks()
        .iter()
        .map(|b| {
            b.iter()
                .copied()
                .find(|x| pool.contains(x))
                .ok_or_else(|| Error::Precondition(format!("class {b:?} has no representative")))
        })
        .collect()
}

/// The (h+1)-ary near-unanimity operation for a central ρ of the given type.
pub fn near_unanimity(rho: &Relation, theta: &Partition, kind: &CentralType) -> Result<Operation> {
    let h = rho.arity();
    let centre = center(rho)?;
    let c = *centre.first().ok_or_else(|| Error::Precondition("empty center".into()))?;
    match kind {
        CentralType::TypeI => {
            let reps = class_reps(theta, &centre)?;
            nu_term(theta, h, |v| reps[theta.class_of(v[0])], c)
        }
        CentralType::TypeII => nu_term(theta, h, |v| v[0], c),
        CentralType::TypeIII { transversal, .. } => {
            let reps = class_reps(theta, transversal)?;
            nu_term(theta, h, |v| reps[theta.class_of(v[0])], c)
        }
        CentralType::None => Err(Error::Precondition("no near-unanimity term for type none".into())),
    }
}

/// Ternary term for a unary central relation: the type-II form when ρ is a union of classes,
/// otherwise the type-I form with the least element of ρ in each class.
pub fn unary_central_majority(rho: &Relation, theta: &Partition) -> Result<Operation> {
    if rho.arity() != 1 {
        return Err(Error::Arity { expected: 1, found: rho.arity() });
    }
    let members: Vec<Elem> = rho.iter().map(|t| t[0]).collect();
    let c = *members.first().ok_or_else(|| Error::Precondition("empty relation".into()))?;
    let union =
        theta.blocks().iter().all(|b| b.iter().all(|x| members.contains(x)) || !b.iter().any(|x| members.contains(x)));
    if union {
        return nu_term(theta, 2, |v| v[0], c);
    }
    let reps = class_reps(theta, &members)?;
    nu_term(theta, 2, |v| reps[theta.class_of(v[0])], c)
}

/// Majority for a prime permutation that permutes the θ-classes: the exact majority if any,
/// else the first argument in the class holding two of them, else x₁.
pub fn permutation_majority(theta: &Partition, pi: &Permutation) -> Result<Operation> {
    if theta.k() != pi.k() {
        return Err(Error::IncompatibleDomains { left: theta.k(), right: pi.k() });
    }
    Operation::from_fn(theta.k(), 3, |x| {
        if let Some(m) = exact_majority(x) {
            return m;
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if theta.related(x[i], x[j]) {
                return x[i];
            }
        }
        x[0]
    })
}
