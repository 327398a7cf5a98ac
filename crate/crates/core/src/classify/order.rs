use super::{check_theta, strict_chain, Certificate, Classification, Criterion, Decision, RelationClass};
use crate::constructions::{affine, alpha_1, GroupTable};
use crate::error::{Error, Result};
use crate::finite::{Elem, Partition, Relation};
use crate::witness::{affine_separators, least_pair_in, least_pair_out, WitnessReport};

/// Reflexive, antisymmetric, transitive, with a least and a greatest element.
pub fn is_bounded_order(rho: &Relation) -> Result<bool> {
    if rho.arity() != 2 {
        return Err(Error::Arity { expected: 2, found: rho.arity() });
    }
    if !(rho.is_reflexive()? && rho.is_antisymmetric()? && rho.is_transitive()?) {
        return Ok(false);
    }
    let k = rho.k() as Elem;
    let least = (0..k).any(|a| (0..k).all(|x| rho.contains(&[a, x])));
    let greatest = (0..k).any(|a| (0..k).all(|x| rho.contains(&[x, a])));
    Ok(least && greatest)
}

/// Always NotSubmaximal; the certificate follows the case split on θ∘ρ∘θ and r = ρ ∩ θ.
pub fn decide_partial_order(theta: &Partition, rho: &Relation) -> Result<Classification> {
    check_theta(theta)?;
    if theta.k() != rho.k() {
        return Err(Error::IncompatibleDomains { left: theta.k(), right: rho.k() });
    }
    if !is_bounded_order(rho)? {
        return Err(Error::Precondition("not a bounded partial order".into()));
    }
    let t = theta.to_relation();
    let conj = t.compose(rho)?.compose(&t)?;
    let r = rho.intersect(&t)?;
    let kernel = r.compose(&r.inverse()?)?;
    let (criterion, certificates) = if !conj.is_full() {
        (Criterion::OrderConjugate, strict_chain("theta-rho-theta", theta, rho, conj, None, None)?)
    } else if kernel != t {
        (Criterion::OrderKernel, strict_chain("r-inverse-r", theta, rho, kernel, None, None)?)
    } else {
        (
            Criterion::BoundedBlocks,
            vec![
                Certificate::relation("r", r),
                Certificate::note(
                    "bounded-blocks",
                    "Pol(r) is a meet-irreducible maximal subclone of Pol(θ); cited, not constructed",
                ),
            ],
        )
    };
    Ok(Classification {
        class: RelationClass::PartialOrder,
        decision: Decision::NotSubmaximal,
        criterion,
        central_type: None,
        certificates,
    })
}

/// Always NotSubmaximal, with α₁ and the separating g₁, g₂.
pub fn decide_prime_affine(theta: &Partition, g: &GroupTable) -> Result<Classification> {
    check_theta(theta)?;
    if theta.k() != g.k() {
        return Err(Error::IncompatibleDomains { left: theta.k(), right: g.k() });
    }
    if !g.is_elementary() {
        return Err(Error::Group("not an elementary abelian p-group".into()));
    }
    let alpha = affine(g);
    let a1 = alpha_1(&alpha, theta)?;
    let pin = least_pair_in(theta).expect("θ nontrivial");
    let pout = least_pair_out(theta).expect("θ nontrivial");
    let (g1, g2) = affine_separators(theta, pin, pout)?;
    let w1 = WitnessReport::new(g1, vec![theta.to_relation()], vec![a1.clone()])?;
    let w2 = WitnessReport::new(g2, vec![a1.clone()], vec![alpha])?;
    Ok(Classification {
        class: RelationClass::PrimeAffine,
        decision: Decision::NotSubmaximal,
        criterion: Criterion::AffineAlpha1,
        central_type: None,
        certificates: vec![
            Certificate::relation("alpha1", a1),
            Certificate::witness("g1", w1),
            Certificate::witness("g2", w2),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Relation {
        Relation::from_predicate(k, 2, |t| t[0] <= t[1]).unwrap()
    }

    #[test]
    fn chain_on_three() {
        let theta = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let c = decide_partial_order(&theta, &chain(3)).unwrap();
        assert_eq!(c.decision, Decision::NotSubmaximal);
        assert_eq!(c.criterion, Criterion::OrderConjugate);
    }

    #[test]
    fn rejects_non_order() {
        let theta = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(decide_partial_order(&theta, &Relation::nabla(3).unwrap()).is_err());
    }

    #[test]
    fn klein_certificates() {
        let theta = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let c = decide_prime_affine(&theta, &GroupTable::elementary(2, 2).unwrap()).unwrap();
        assert!(c.witnesses().all(|(_, w)| w.verified));
        assert_eq!(c.witnesses().count(), 2);
    }

    #[test]
    fn cyclic_three_certificates() {
        let theta = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let c = decide_prime_affine(&theta, &GroupTable::cyclic(3).unwrap()).unwrap();
        assert!(c.witnesses().all(|(_, w)| w.verified));
    }

    #[test]
    fn rejects_non_elementary_group() {
        let theta = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(decide_prime_affine(&theta, &GroupTable::cyclic(4).unwrap()).is_err());
    }
}
