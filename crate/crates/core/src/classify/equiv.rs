use super::{check_theta, strict_chain, Certificate, Classification, Criterion, Decision, RelationClass};
use crate::error::{Error, Result};
use crate::finite::{Elem, Operation, Partition, Permutation};
use crate::witness::{majority_equiv, permutation_majority, WitnessReport};

/// Distinct nontrivial equivalence relations θ and ρ.
pub fn decide_equiv_pair(theta: &Partition, rho: &Partition) -> Result<Classification> {
    check_theta(theta)?;
    if !rho.is_nontrivial() {
        return Err(Error::Precondition("ρ is trivial".into()));
    }
    if theta.k() != rho.k() {
        return Err(Error::IncompatibleDomains { left: theta.k(), right: rho.k() });
    }
    if theta == rho {
        return Err(Error::Precondition("θ and ρ are equal".into()));
    }
    let (tr, rr) = (theta.to_relation(), rho.to_relation());
    let meet = theta.meet(rho)?;
    let nested = rho.refines(theta) || theta.refines(rho);
    let product = meet.is_discrete() && rr.compose(&tr)?.is_full();
    let class = RelationClass::Equivalence;
    if nested || product {
        let m = majority_equiv(theta, rho)?;
        let report = WitnessReport::new(m, vec![tr, rr], vec![])?;
        return Ok(Classification {
            class,
            decision: Decision::Submaximal,
            criterion: if nested { Criterion::EquivNested } else { Criterion::EquivProduct },
            central_type: None,
            certificates: vec![Certificate::witness("majority", report)],
        });
    }
    let k = theta.k();
    let (criterion, sigma, lower) = if !meet.is_discrete() {
        // (a, b) ∈ θ∖γ, (c, d) ∈ ρ∖γ; f sends the θ-class of c to a and the rest to b.
        let pairs = |p: &Partition| -> Vec<(Elem, Elem)> {
            (0..k as Elem)
                .flat_map(|x| (0..k as Elem).map(move |y| (x, y)))
                .filter(|&(x, y)| p.related(x, y) && !meet.related(x, y))
                .collect()
        };
        let (a, b) = pairs(theta)[0];
        let (c, _) = pairs(rho)[0];
        let f = Operation::from_fn(k, 1, |x| if theta.related(x[0], c) { a } else { b })?;
        (Criterion::EquivMeet, meet.to_relation(), f)
    } else {
        // g sends u to a and everything else to b, for a θ b and u ρ v with a ≠ b, u ≠ v.
        let first = |p: &Partition| p.blocks().iter().find(|b| b.len() > 1).map(|b| (b[0], b[1])).unwrap();
        let (a, b) = first(theta);
        let (u, _) = first(rho);
        let g = Operation::from_fn(k, 1, |x| if x[0] == u { a } else { b })?;
        let sigma = rr.compose(&tr)?.intersect(&tr.compose(&rr)?)?;
        (Criterion::EquivJoin, sigma, g)
    };
    let label = match criterion {
        Criterion::EquivMeet => "rho meet theta",
        _ => "rho-theta intersect theta-rho",
    };
    let certificates = strict_chain(label, theta, &rr, sigma, Some(lower), None)?;
    Ok(Classification { class, decision: Decision::NotSubmaximal, criterion, central_type: None, certificates })
}

/// Whether π maps every θ-class onto a θ-class.
pub fn permutes_classes(theta: &Partition, pi: &Permutation) -> bool {
    theta.blocks().iter().all(|b| {
        let target = theta.class_of(pi.apply(b[0]));
        b.iter().all(|&x| theta.class_of(pi.apply(x)) == target) && theta.blocks()[target].len() == b.len()
    })
}

/// θ nontrivial and π a prime permutation on the same set.
pub fn decide_prime_permutation(theta: &Partition, pi: &Permutation) -> Result<Classification> {
    check_theta(theta)?;
    if theta.k() != pi.k() {
        return Err(Error::IncompatibleDomains { left: theta.k(), right: pi.k() });
    }
    if !pi.is_prime() {
        return Err(Error::Permutation("not a prime permutation".into()));
    }
    let graph = pi.graph();
    let tr = theta.to_relation();
    let below = graph.is_subset(&tr)? && graph != tr;
    let class = RelationClass::PrimePermutation;
    let criterion = if below {
        Criterion::PermBelowTheta
    } else if permutes_classes(theta, pi) {
        Criterion::PermClassMap
    } else {
        return Ok(Classification {
            class,
            decision: Decision::NotSubmaximal,
            criterion: Criterion::PermNeither,
            central_type: None,
            certificates: vec![Certificate::note("cited", "no intermediate relation is constructed for this case")],
        });
    };
    let m = permutation_majority(theta, pi)?;
    let report = WitnessReport::new(m, vec![tr, graph], vec![])?;
    Ok(Classification {
        class,
        decision: Decision::Submaximal,
        criterion,
        central_type: None,
        certificates: vec![Certificate::witness("majority", report)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, blocks: &[&[Elem]]) -> Partition {
        Partition::new(k, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn nested_pair() {
        let c = decide_equiv_pair(&p(4, &[&[0, 1], &[2], &[3]]), &p(4, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!((c.decision, &c.criterion), (Decision::Submaximal, &Criterion::EquivNested));
        assert!(c.witnesses().all(|(_, w)| w.verified));
    }

    #[test]
    fn product_pair() {
        let c = decide_equiv_pair(&p(4, &[&[0, 1], &[2, 3]]), &p(4, &[&[0, 2], &[1, 3]])).unwrap();
        assert_eq!((c.decision, &c.criterion), (Decision::Submaximal, &Criterion::EquivProduct));
    }

    #[test]
    fn join_pair_certificate() {
        let theta = p(4, &[&[0, 1], &[2], &[3]]);
        let rho = p(4, &[&[0, 2], &[1], &[3]]);
        let c = decide_equiv_pair(&theta, &rho).unwrap();
        assert_eq!((c.decision, c.criterion.clone()), (Decision::NotSubmaximal, Criterion::EquivJoin));
        let (tr, rr) = (theta.to_relation(), rho.to_relation());
        let sigma = rr.compose(&tr).unwrap().intersect(&tr.compose(&rr).unwrap()).unwrap();
        assert_eq!(c.relations().next().unwrap().1, &sigma);
        assert_eq!(c.witnesses().count(), 2);
        assert!(c.witnesses().all(|(_, w)| w.verified));
    }

    #[test]
    fn rejects_equal_or_trivial() {
        let t = p(4, &[&[0, 1], &[2, 3]]);
        assert!(decide_equiv_pair(&t, &t).is_err());
        assert!(decide_equiv_pair(&t, &Partition::discrete(4).unwrap()).is_err());
    }

    #[test]
    fn permutation_examples() {
        let t4 = p(4, &[&[0, 1], &[2, 3]]);
        let pi = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(decide_prime_permutation(&t4, &pi).unwrap().criterion, Criterion::PermBelowTheta);
        let pi = Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(decide_prime_permutation(&t4, &pi).unwrap().criterion, Criterion::PermClassMap);
        let t6 = p(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        let pi = Permutation::from_cycles(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(decide_prime_permutation(&t6, &pi).unwrap().decision, Decision::NotSubmaximal);
    }
}
