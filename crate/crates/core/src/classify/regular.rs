use super::central::theta_closed;
use super::chain::{necessity_chain, ChainOutcome};
use super::{check_theta, CentralType, Certificate, Classification, Criterion, Decision, RelationClass};
use crate::constructions::{h_regular, quotient, quotient_partition, RegularFamily};
use crate::error::{Error, Result};
use crate::finite::tuple::tuples;
use crate::finite::Partition;
use crate::witness::{least_pair_out, separator_f, WitnessReport};

/// Submaximal iff θ ⊆ θ_i for every member, equivalently λ_T is θ-closed; both are evaluated.
pub fn decide_h_regular(theta: &Partition, family: &RegularFamily) -> Result<Classification> {
    check_theta(theta)?;
    if theta.k() != family.k() {
        return Err(Error::IncompatibleDomains { left: theta.k(), right: family.k() });
    }
    let lambda = h_regular(family);
    let below_all = family.members().iter().all(|p| theta.refines(p));
    let closed = theta_closed(&lambda, theta)?;
    assert_eq!(below_all, closed, "θ ⊆ θ_i for all i must match θ-closure of λ_T");
    let mut certificates = Vec::new();
    let (decision, criterion) = if closed {
        let psi = quotient(&lambda, theta)?;
        let members = family.members().iter().map(|p| quotient_partition(p, theta)).collect::<Result<Vec<_>>>()?;
        let image = RegularFamily::new(members)?;
        assert_eq!(h_regular(&image), psi, "φ(λ_T) is the relation of φ(T)");
        certificates.push(Certificate::relation("quotient", psi));
        let (a, b) = least_pair_out(theta).expect("θ nontrivial");
        let u = tuples(lambda.k(), lambda.arity()).find(|u| !lambda.contains(u)).expect("λ_T is not full");
        let f = separator_f(&u, a, b, theta)?;
        let report = WitnessReport::new(f, vec![theta.to_relation()], vec![lambda])?;
        certificates.push(Certificate::witness("proper", report));
        (Decision::Submaximal, Criterion::RegularClosed)
    } else {
        match necessity_chain(&lambda, theta)? {
            ChainOutcome::Certificate { certificates: c, .. } => certificates.extend(c),
            ChainOutcome::Exit { step, .. } | ChainOutcome::Truncated { step, .. } => {
                certificates.push(Certificate::note("chain", format!("no certificate at {step}")))
            }
        }
        (Decision::NotSubmaximal, Criterion::RegularNotClosed)
    };
    Ok(Classification {
        class: RelationClass::HRegular,
        decision,
        criterion,
        central_type: Some(if closed { CentralType::TypeII } else { CentralType::None }),
        certificates,
    })
}
