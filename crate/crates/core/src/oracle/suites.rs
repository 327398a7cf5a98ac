//! Named replay suites over the fixtures. Each suite returns one [`Comparison`] per check.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::replay::{construction_suite, nontrivial_pairs, Comparison};
use super::{brute, enumerate_operations, invariants_h};
use crate::classify::{
    classify_central, decide_equiv_pair, decide_h_regular, decide_partial_order, decide_prime_affine,
    decide_prime_permutation, transversal, weak_closure_order, CentralType, Classification, Decision,
};
use crate::constructions::GroupTable;
use crate::error::{Error, Result};
use crate::finite::{preserves_all, preserves_naive, Elem, Operation, Partition, Permutation, Relation};
use crate::fixtures::*;
use crate::witness::majority_equiv;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Examples,
    EquivPairs,
    NearUnanimity,
    Invariants,
    Negatives,
    Constructions,
    Permutations,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Examples,
        Suite::EquivPairs,
        Suite::NearUnanimity,
        Suite::Invariants,
        Suite::Negatives,
        Suite::Constructions,
        Suite::Permutations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples => "examples",
            Suite::EquivPairs => "equiv-pairs",
            Suite::NearUnanimity => "near-unanimity",
            Suite::Invariants => "invariants",
            Suite::Negatives => "negatives",
            Suite::Constructions => "constructions",
            Suite::Permutations => "permutations",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Self::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn run(self) -> Result<Vec<Comparison>> {
        match self {
            Suite::Examples => examples_suite(),
            Suite::EquivPairs => equiv_pair_suite(),
            Suite::NearUnanimity => near_unanimity_suite(),
            Suite::Invariants => invariant_collapse_suite(),
            Suite::Negatives => negative_certificate_suite(),
            Suite::Constructions => construction_suite(),
            Suite::Permutations => permutation_suite(),
        }
    }
}

fn check(name: impl Into<String>, agree: bool) -> Comparison {
    Comparison { name: name.into(), agree }
}

fn all_verified(c: &Classification) -> bool {
    c.witnesses().all(|(_, w)| w.verified)
}

/// The classifications stated for the worked examples.
pub fn examples_suite() -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    let central = |rho: &Relation, theta: &Partition| classify_central(rho, theta);

    let (k1, c1) = central(&upsilon1(), &theta1())?;
    out.push(check("upsilon1/theta1 type I", k1 == CentralType::TypeI && c1.decision == Decision::Submaximal));

    let (k2, c2) = central(&upsilon2(), &theta2())?;
    out.push(check("upsilon2/theta2 type II, not I", k2 == CentralType::TypeII && c2.decision == Decision::Submaximal));

    let (k3, c3) = central(&upsilon3(), &theta3())?;
    out.push(check("upsilon3/theta3 type none", k3 == CentralType::None && c3.decision == Decision::NotSubmaximal));

    let (k4, c4) = central(&upsilon4(), &theta4())?;
    let want4 = CentralType::TypeIII { order: 2, transversal: vec![0, 3, 6] };
    out.push(check(
        "upsilon4/theta4 weakly closed of order 2, transversal {0,3,6}",
        k4 == want4
            && c4.decision == Decision::Submaximal
            && weak_closure_order(&upsilon4(), &theta4())? == Some(2)
            && transversal(&upsilon4(), &theta4(), 1)? == Some(vec![0, 3, 6]),
    ));

    let (k5, c5) = central(&upsilon5(), &theta5())?;
    let want5 = CentralType::TypeIII { order: 3, transversal: vec![0, 3, 5, 7] };
    out.push(check(
        "upsilon5/theta5 weakly closed of order 3, transversal {0,3,5,7}",
        k5 == want5
            && c5.decision == Decision::Submaximal
            && weak_closure_order(&upsilon5(), &theta5())? == Some(3)
            && transversal(&upsilon5(), &theta5(), 2)? == Some(vec![0, 3, 5, 7]),
    ));

    let c6 = decide_h_regular(&theta6(), &family6())?;
    out.push(check(
        "upsilon6/{theta6} submaximal",
        c6.decision == Decision::Submaximal && upsilon6() == brute::h_regular(&family6())?,
    ));

    let c7 = decide_h_regular(&theta8(), &family67())?;
    out.push(check("upsilon7/{theta6,theta7} submaximal", c7.decision == Decision::Submaximal));

    for (name, c) in [
        ("upsilon1", &c1),
        ("upsilon2", &c2),
        ("upsilon4", &c4),
        ("upsilon5", &c5),
        ("upsilon6", &c6),
        ("upsilon7", &c7),
    ] {
        out.push(check(format!("{name} witnesses verified"), all_verified(c)));
    }
    Ok(out)
}

/// (a) nested or (b) ρ ∩ θ = Δ and ρ∘θ = ∇, from relation algebra only.
pub fn equiv_condition(theta: &Relation, rho: &Relation) -> Result<bool> {
    let nested = (theta.is_subset(rho)? || rho.is_subset(theta)?) && theta != rho;
    let k = theta.k();
    let product = theta.intersect(rho)? == Relation::delta(k)? && brute::compose(rho, theta)?.is_full();
    Ok(nested || product)
}

/// All ordered pairs of distinct nontrivial equivalence relations on E₄.
pub fn equiv_pair_suite() -> Result<Vec<Comparison>> {
    let pairs = nontrivial_pairs(4);
    let logs: Vec<Vec<Comparison>> = pairs
        .par_iter()
        .map(|(theta, rho)| {
            let label = format!("theta {:?} rho {:?}", theta.blocks(), rho.blocks());
            let (tr, rr) = (theta.to_relation(), rho.to_relation());
            let c = decide_equiv_pair(theta, rho)?;
            let expected = equiv_condition(&tr, &rr)?;
            let mut out = vec![check(format!("{label} decision"), (c.decision == Decision::Submaximal) == expected)];
            if c.decision == Decision::Submaximal {
                let m = majority_equiv(theta, rho)?;
                let ok = m.arity() == 3 && preserves_naive(&m, &tr)? && preserves_naive(&m, &rr)?;
                out.push(check(format!("{label} majority"), ok));
            } else {
                let separated = c.witnesses().any(|(_, w)| w.verified && w.must_violate.contains(&rr));
                out.push(check(format!("{label} separator"), separated && all_verified(&c)));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(logs.into_iter().flatten().collect())
}

/// The 4-ary witnesses for Υ₁ and Υ₂ against the literal column loop.
pub fn near_unanimity_suite() -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    for (name, rho, theta) in [("upsilon1/theta1", upsilon1(), theta1()), ("upsilon2/theta2", upsilon2(), theta2())] {
        let (_, c) = classify_central(&rho, &theta)?;
        let (_, w) = c
            .witnesses()
            .find(|(label, _)| *label == "near-unanimity")
            .ok_or_else(|| Error::Precondition(format!("{name} has no near-unanimity witness")))?;
        let m = &w.operation;
        out.push(check(format!("{name} witness is 4-ary near-unanimity"), m.arity() == 4 && m.is_near_unanimity()));
        out.push(check(format!("{name} preserves rho"), preserves_naive(m, &rho)?));
        out.push(check(format!("{name} preserves theta"), preserves_naive(m, &theta.to_relation())?));
    }
    Ok(out)
}

/// The E₄ case-(b) pair θ = {0,1}{2,3}, ρ = {0,2}{1,3}.
pub fn product_fixture() -> (Partition, Partition) {
    let p = |blocks: Vec<Vec<Elem>>| Partition::new(4, blocks).expect("fixture");
    (p(vec![vec![0, 1], vec![2, 3]]), p(vec![vec![0, 2], vec![1, 3]]))
}

/// Binary invariants of the unary members of Pol(θ) ∩ Pol(ρ) plus the majority witness.
pub fn invariant_collapse_suite() -> Result<Vec<Comparison>> {
    let (theta, rho) = product_fixture();
    let (tr, rr) = (theta.to_relation(), rho.to_relation());
    let mut ops: Vec<Operation> =
        enumerate_operations(4, 1, 1 << 8)?.filter(|f| preserves_all(f, [&tr, &rr]).unwrap_or(false)).collect();
    ops.push(majority_equiv(&theta, &rho)?);
    let found: HashSet<Relation> = invariants_h(4, &ops, 2)?.into_iter().collect();
    let expected: HashSet<Relation> =
        [Relation::empty(4, 2)?, Relation::delta(4)?, tr, rr, Relation::nabla(4)?].into_iter().collect();
    Ok(vec![check(format!("{} invariants equal {{empty, delta, theta, rho, nabla}}", found.len()), found == expected)])
}

/// Bounded orders on E₃/E₄ and the Klein and Z₃ affine relations.
pub fn negative_certificate_suite() -> Result<Vec<Comparison>> {
    let part = |k: usize, blocks: Vec<Vec<Elem>>| Partition::new(k, blocks);
    let chain = |k: usize| Relation::from_predicate(k, 2, |t| t[0] <= t[1]);
    let mut cases: Vec<(String, Classification)> = vec![
        ("chain 0<1<2, theta {0,1}{2}".into(), decide_partial_order(&part(3, vec![vec![0, 1], vec![2]])?, &chain(3)?)?),
        (
            "chain 0<1<2<3, theta {0,2}{1,3}".into(),
            decide_partial_order(&part(4, vec![vec![0, 2], vec![1, 3]])?, &chain(4)?)?,
        ),
        (
            "chain 0<1<2<3, theta {0,1}{2,3}".into(),
            decide_partial_order(&part(4, vec![vec![0, 1], vec![2, 3]])?, &chain(4)?)?,
        ),
        (
            "Klein, theta {0,1}{2,3}".into(),
            decide_prime_affine(&part(4, vec![vec![0, 1], vec![2, 3]])?, &GroupTable::elementary(2, 2)?)?,
        ),
        (
            "Z3, theta {0,1}{2}".into(),
            decide_prime_affine(&part(3, vec![vec![0, 1], vec![2]])?, &GroupTable::cyclic(3)?)?,
        ),
    ];
    for theta in Partition::all(3).into_iter().chain(Partition::all(4)).filter(|p| p.is_nontrivial()) {
        let k = theta.k();
        let label = format!("chain on E{k}, theta {:?}", theta.blocks());
        cases.push((label, decide_partial_order(&theta, &chain(k)?)?));
    }
    let mut out = Vec::new();
    for (name, c) in cases {
        out.push(check(format!("{name} not submaximal"), c.decision == Decision::NotSubmaximal));
        out.push(check(format!("{name} has an intermediate relation"), c.relations().next().is_some()));
        for (label, w) in c.witnesses() {
            out.push(check(format!("{name} {label}"), w.verify()?));
        }
    }
    Ok(out)
}

/// Condition (a) or (b) from the definition: graph(π) ⊊ θ, or every class is carried onto a class.
pub fn permutation_condition(theta: &Partition, pi: &Permutation) -> bool {
    let k = theta.k() as Elem;
    let graph: BTreeSet<(Elem, Elem)> = (0..k).map(|x| (x, pi.apply(x))).collect();
    let pairs: BTreeSet<(Elem, Elem)> =
        (0..k).flat_map(|x| (0..k).map(move |y| (x, y))).filter(|&(x, y)| theta.related(x, y)).collect();
    let below = graph.is_subset(&pairs) && graph != pairs;
    let classes: BTreeSet<BTreeSet<Elem>> = theta.blocks().iter().map(|b| b.iter().copied().collect()).collect();
    let onto = classes.iter().all(|c| classes.contains(&c.iter().map(|&x| pi.apply(x)).collect::<BTreeSet<_>>()));
    below || onto
}

/// Every prime permutation on E₄ and E₆ against every nontrivial θ, plus three worked examples.
pub fn permutation_suite() -> Result<Vec<Comparison>> {
    let mut out = Vec::new();
    let p = |k: usize, blocks: Vec<Vec<Elem>>| Partition::new(k, blocks);
    let cyc = |k: usize, cycles: Vec<Vec<Elem>>| Permutation::from_cycles(k, &cycles);
    let examples = [
        ("(0 1)(2 3), {0,1}{2,3}", p(4, vec![vec![0, 1], vec![2, 3]])?, cyc(4, vec![vec![0, 1], vec![2, 3]])?, true),
        ("(0 2)(1 3), {0,1}{2,3}", p(4, vec![vec![0, 1], vec![2, 3]])?, cyc(4, vec![vec![0, 2], vec![1, 3]])?, true),
        (
            "(0 1 2)(3 4 5), {0,1}{2,3}{4,5}",
            p(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]])?,
            cyc(6, vec![vec![0, 1, 2], vec![3, 4, 5]])?,
            false,
        ),
    ];
    for (name, theta, pi, sub) in examples {
        let c = decide_prime_permutation(&theta, &pi)?;
        out.push(check(format!("example {name}"), (c.decision == Decision::Submaximal) == sub));
    }
    for k in [4usize, 6] {
        let thetas: Vec<Partition> = Partition::all(k).into_iter().filter(|t| t.is_nontrivial()).collect();
        let perms: Vec<Permutation> = Permutation::all(k).into_iter().filter(|pi| pi.is_prime()).collect();
        let logs: Vec<Comparison> = perms
            .par_iter()
            .map(|pi| {
                let mut agree = true;
                for theta in &thetas {
                    let c = decide_prime_permutation(theta, pi)?;
                    let sub = c.decision == Decision::Submaximal;
                    agree &= sub == permutation_condition(theta, pi) && (!sub || all_verified(&c));
                }
                Ok(check(format!("E{k} {:?} against {} partitions", pi.cycles(), thetas.len()), agree))
            })
            .collect::<Result<_>>()?;
        out.extend(logs);
    }
    Ok(out)
}
