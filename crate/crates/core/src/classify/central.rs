use super::chain::{necessity_chain, ChainOutcome};
use super::{check_theta, CentralType, Certificate, Classification, Criterion, Decision, RelationClass};
use crate::constructions::{beta, eta, rho_0_theta};
use crate::error::{Error, Result};
use crate::finite::{center, is_central, Elem, Partition, Relation};
use crate::witness::{near_unanimity, unary_central_majority, WitnessReport};

fn same_domain(rho: &Relation, theta: &Partition) -> Result<()> {
    if rho.k() == theta.k() {
        Ok(())
    } else {
        Err(Error::IncompatibleDomains { left: rho.k(), right: theta.k() })
    }
}

/// ρ = ρ_{0,θ}; for binary ρ also checked against ρ = θ∘ρ∘θ.
pub fn theta_closed(rho: &Relation, theta: &Partition) -> Result<bool> {
    let closed = rho_0_theta(rho, theta)? == *rho;
    if rho.arity() == 2 {
        let t = theta.to_relation();
        assert_eq!(closed, t.compose(rho)?.compose(&t)? == *rho, "θ-closure forms disagree");
    }
    Ok(closed)
}

/// All (a₁,…,a_l, v_{l+1},…,v_h) with v from `set` lie in ρ.
fn transversal_ok(rho: &Relation, l: usize, set: &[Elem]) -> bool {
    let (k, h) = (rho.k(), rho.arity());
    let mut t = vec![0 as Elem; h];
    let total = k.pow(l as u32) * set.len().pow((h - l) as u32);
    (0..total).all(|mut r| {
        for slot in t[l..].iter_mut().rev() {
            *slot = set[r % set.len()];
            r /= set.len();
        }
        for slot in t[..l].iter_mut().rev() {
            *slot = (r % k) as Elem;
            r /= k;
        }
        rho.contains(&t)
    })
}

/// The least transversal of order l, listed class by class, if any.
pub fn transversal(rho: &Relation, theta: &Partition, l: usize) -> Result<Option<Vec<Elem>>> {
    same_domain(rho, theta)?;
    if l >= rho.arity() {
        return Err(Error::Range(format!("order {l} outside 0..{}", rho.arity())));
    }
    fn dfs(rho: &Relation, theta: &Partition, l: usize, chosen: &mut Vec<Elem>) -> bool {
        if chosen.len() == theta.num_blocks() {
            return true;
        }
        for &x in &theta.blocks()[chosen.len()] {
            chosen.push(x);
            if transversal_ok(rho, l, chosen) && dfs(rho, theta, l, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(theta.num_blocks());
    Ok(dfs(rho, theta, l, &mut chosen).then_some(chosen))
}

/// Least l ∈ [1, h−1] with ρ = ∩_σ (ρ_{l,θ})_σ and a transversal of order l−1.
pub fn weak_closure_order(rho: &Relation, theta: &Partition) -> Result<Option<usize>> {
    same_domain(rho, theta)?;
    for l in 1..rho.arity() {
        if beta(rho, theta, l + 1)? == *rho && transversal(rho, theta, l - 1)?.is_some() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

fn every_class_has(theta: &Partition, set: &[Elem]) -> bool {
    theta.blocks().iter().all(|b| b.iter().any(|x| set.contains(x)))
}

/// Type of a central ρ of arity h ≥ 2, trying I, II, III in that order. For h = 2 condition III
/// does not ask for η ⊆ ρ.
pub fn central_type(rho: &Relation, theta: &Partition) -> Result<CentralType> {
    same_domain(rho, theta)?;
    let h = rho.arity();
    if h < 2 {
        return Err(Error::Unary);
    }
    let eta_in = eta(theta, h)?.is_subset(rho)?;
    if eta_in && every_class_has(theta, &center(rho)?) {
        return Ok(CentralType::TypeI);
    }
    if theta_closed(rho, theta)? {
        return Ok(CentralType::TypeII);
    }
    if eta_in || h == 2 {
        if let Some(order) = weak_closure_order(rho, theta)? {
            let transversal = transversal(rho, theta, order - 1)?.expect("checked above");
            return Ok(CentralType::TypeIII { order, transversal });
        }
    }
    Ok(CentralType::None)
}

fn unary(rho: &Relation, theta: &Partition) -> Result<(CentralType, Classification)> {
    let members: Vec<Elem> = rho.iter().map(|t| t[0]).collect();
    let union_of_classes = theta.blocks().iter().all(|b| {
        let inside = b.iter().filter(|x| members.contains(x)).count();
        inside == 0 || inside == b.len()
    });
    let meets_every_class = every_class_has(theta, &members);
    let criterion = Criterion::CentralUnary { union_of_classes, meets_every_class };
    let kind = match (union_of_classes, meets_every_class) {
        (true, _) => CentralType::TypeII,
        (false, true) => CentralType::TypeI,
        _ => CentralType::None,
    };
    let certificates = if kind == CentralType::None {
        let sigma = rho_0_theta(rho, theta)?;
        super::strict_chain("rho_0_theta", theta, rho, sigma, None, None)?
    } else {
        let m = unary_central_majority(rho, theta)?;
        vec![Certificate::witness("majority", WitnessReport::new(m, vec![rho.clone(), theta.to_relation()], vec![])?)]
    };
    let decision = if kind == CentralType::None { Decision::NotSubmaximal } else { Decision::Submaximal };
    let c = Classification {
        class: RelationClass::Central,
        decision,
        criterion,
        central_type: Some(kind.clone()),
        certificates,
    };
    Ok((kind, c))
}

/// Type and decision for a central ρ.
pub fn classify_central(rho: &Relation, theta: &Partition) -> Result<(CentralType, Classification)> {
    check_theta(theta)?;
    same_domain(rho, theta)?;
    if !is_central(rho) {
        return Err(Error::Precondition("ρ is not central".into()));
    }
    let h = rho.arity();
    if h == 1 {
        return unary(rho, theta);
    }
    let t = theta.num_blocks();
    let kind = if h > t && h >= 3 { CentralType::None } else { central_type(rho, theta)? };
    let mut certificates = Vec::new();
    let (decision, criterion) = if kind != CentralType::None {
        let m = near_unanimity(rho, theta, &kind)?;
        let report = WitnessReport::new(m, vec![rho.clone(), theta.to_relation()], vec![])?;
        certificates.push(Certificate::witness("near-unanimity", report));
        match &kind {
            CentralType::TypeI => certificates.push(Certificate::elements("center", center(rho)?)),
            CentralType::TypeIII { transversal, .. } => {
                certificates.push(Certificate::elements("transversal", transversal.clone()))
            }
            _ => {}
        }
        let criterion =
            if h == 2 { Criterion::CentralBinary(kind.clone()) } else { Criterion::CentralType(kind.clone()) };
        (Decision::Submaximal, criterion)
    } else {
        let outcome = necessity_chain(rho, theta)?;
        let step = match outcome {
            ChainOutcome::Certificate { step, certificates: c } => {
                certificates.extend(c);
                step
            }
            ChainOutcome::Exit { step, claimed } => {
                certificates.push(Certificate::note(
                    "chain",
                    format!("the chain reaches {step} and suggests type {} without a certificate", claimed.name()),
                ));
                step
            }
            ChainOutcome::Truncated { step, reason } => {
                certificates.push(Certificate::note("chain", format!("stopped at {step}: {reason}")));
                step
            }
        };
        let criterion = if h > t && h >= 3 {
            Criterion::CentralArity
        } else if h == 2 {
            Criterion::CentralBinary(CentralType::None)
        } else {
            Criterion::CentralChain(step)
        };
        (Decision::NotSubmaximal, criterion)
    };
    let c = Classification {
        class: RelationClass::Central,
        decision,
        criterion,
        central_type: Some(kind.clone()),
        certificates,
    };
    Ok((kind, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn closure_examples() {
        assert!(theta_closed(&upsilon2(), &theta2()).unwrap());
        assert!(theta_closed(&upsilon6(), &theta6()).unwrap());
        assert!(!theta_closed(&upsilon3(), &theta3()).unwrap());
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(transversal(&upsilon4(), &theta4(), 1).unwrap(), Some(vec![0, 3, 6]));
        assert_eq!(transversal(&upsilon5(), &theta5(), 2).unwrap(), Some(vec![0, 3, 5, 7]));
        assert!(transversal(&upsilon4(), &theta4(), 3).is_err());
    }

    #[test]
    fn weak_closure_examples() {
        assert_eq!(weak_closure_order(&upsilon4(), &theta4()).unwrap(), Some(2));
        assert_eq!(weak_closure_order(&upsilon5(), &theta5()).unwrap(), Some(3));
    }

    #[test]
    fn upsilon3_has_order_zero_transversal() {
        // {0,2,3} covers every class of θ₃ and {0,2,3}³ avoids the removed rearrangements of (1,2,3).
        assert_eq!(transversal(&upsilon3(), &theta3(), 0).unwrap(), Some(vec![0, 2, 3]));
        assert_eq!(weak_closure_order(&upsilon3(), &theta3()).unwrap(), Some(1));
    }

    #[test]
    fn types_of_examples() {
        assert_eq!(central_type(&upsilon1(), &theta1()).unwrap(), CentralType::TypeI);
        assert_eq!(central_type(&upsilon2(), &theta2()).unwrap(), CentralType::TypeII);
    }

    #[test]
    fn unary_disjuncts() {
        let theta = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let rho = Relation::from_tuples(4, 1, [[0u8], [2]]).unwrap();
        let (kind, c) = classify_central(&rho, &theta).unwrap();
        assert_eq!(kind, CentralType::TypeI);
        assert_eq!(c.criterion, Criterion::CentralUnary { union_of_classes: false, meets_every_class: true });
        assert!(c.witnesses().all(|(_, w)| w.verified));
        let theta = Partition::new(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let rho = Relation::from_tuples(4, 1, [[0u8]]).unwrap();
        let (kind, c) = classify_central(&rho, &theta).unwrap();
        assert_eq!(kind, CentralType::None);
        assert_eq!(c.decision, Decision::NotSubmaximal);
    }
}
