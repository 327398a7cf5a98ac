//! The necessity argument run forward: each step either exhibits an intermediate relation σ with
//! Pol(θ) ∩ Pol(ρ) ⊊ Pol(θ) ∩ Pol(σ) ⊊ Pol(θ), or passes its hypothesis on to the next step.

use super::{strict_chain, CentralType, Certificate};
use crate::constructions::{beta, beta_l, default_shape, eta, extended_family, gamma_prime, rho_0_theta, zeta, zeta_l};
use crate::error::Result;
use crate::finite::tuple::{cells, tuples};
use crate::finite::{Elem, Partition, Relation};
use crate::witness::{eta_separator, least_pair_out, pattern_separator, separator_f, separator_h};

/// Largest k^l for which an l-ary step is evaluated.
pub const CHAIN_CELL_LIMIT: usize = 1 << 22;

#[derive(Debug, Clone)]
pub enum ChainOutcome {
    Certificate {
        step: String,
        certificates: Vec<Certificate>,
    },
    /// Every non-maximality hypothesis failed; the proof concludes the given type.
    Exit {
        step: String,
        claimed: CentralType,
    },
    Truncated {
        step: String,
        reason: String,
    },
}

fn first_outside(small: &Relation, big: &Relation) -> Vec<Elem> {
    big.iter().find(|t| !small.contains(t)).expect("strict inclusion")
}

fn first_missing(r: &Relation) -> Vec<Elem> {
    tuples(r.k(), r.arity()).find(|t| !r.contains(t)).expect("relation is not full")
}

fn fits(k: usize, l: usize) -> bool {
    cells(k, l).is_ok_and(|c| c <= CHAIN_CELL_LIMIT)
}

struct Chain<'a> {
    rho: &'a Relation,
    theta: &'a Partition,
    a: Elem,
    b: Elem,
}

impl Chain<'_> {
    fn certify(&self, step: &str, sigma: Relation, lower: Relation, upper: Relation) -> Result<ChainOutcome> {
        let (k, h) = (self.rho.k(), self.rho.arity());
        let lower_u = first_outside(self.rho, &lower);
        let f = separator_f(&lower_u, self.a, self.b, self.theta)?;
        let upper_u = first_missing(&upper);
        let g = if upper.arity() == h {
            separator_f(&upper_u, self.a, self.b, self.theta)?
        } else {
            separator_h(&upper_u, self.a, self.b, self.theta)?
        };
        debug_assert_eq!(g.k(), k);
        let certificates = strict_chain(step, self.theta, self.rho, sigma, Some(f), Some(g))?;
        Ok(ChainOutcome::Certificate { step: step.into(), certificates })
    }

    /// σ = ρ ⊊ σ ⊊ E^h with f from σ∖ρ and g from E^h∖σ.
    fn same_arity(&self, step: &str, sigma: Relation) -> Result<ChainOutcome> {
        self.certify(step, sigma.clone(), sigma.clone(), sigma)
    }

    /// σ of arity l > h: f from E^h∖ρ, g from E^l∖σ.
    fn wide(&self, step: &str, sigma: Relation) -> Result<ChainOutcome> {
        let full = Relation::full(self.rho.k(), self.rho.arity())?;
        self.certify(step, sigma.clone(), full, sigma)
    }

    /// The least l in `range` with `build(l)` not full.
    fn extended(
        &self,
        name: &str,
        range: std::ops::RangeInclusive<usize>,
        build: impl Fn(usize) -> Result<Relation>,
    ) -> Result<Option<ChainOutcome>> {
        let k = self.rho.k();
        for l in range {
            let step = format!("{name} (l = {l})");
            if !fits(k, l) {
                return Ok(Some(ChainOutcome::Truncated { step, reason: format!("{k}^{l} cells exceed the limit") }));
            }
            let sigma = build(l)?;
            if !sigma.is_full() {
                return self.wide(&step, sigma).map(Some);
            }
        }
        Ok(None)
    }

    /// β′ for the default shape against its diagonal.
    fn primed(&self, name: &str, n: usize) -> Result<Option<ChainOutcome>> {
        let (k, t) = (self.rho.k(), self.theta.num_blocks());
        let Some(shape) = default_shape(self.theta, n) else {
            return Ok(None);
        };
        let m: usize = shape.iter().sum();
        if !fits(k, m + t - n) {
            return Ok(Some(ChainOutcome::Truncated {
                step: name.into(),
                reason: format!("{k}^{} cells exceed the limit", m + t - n),
            }));
        }
        let gp = gamma_prime(self.rho, self.theta, &shape)?;
        if gp.relation == gp.diagonal {
            return Ok(None);
        }
        let missing: Vec<Vec<Elem>> = gp.diagonal.iter().filter(|v| !gp.relation.contains(v)).collect();
        let v = missing.iter().find(|v| v[..m].iter().all(|&x| x == v[0])).unwrap_or(&missing[0]);
        let mut outputs = vec![v[0]];
        outputs.extend_from_slice(&v[m..]);
        let g = pattern_separator(self.theta, self.a, self.b, &outputs, *outputs.last().unwrap())?;
        let f = separator_f(&first_missing(self.rho), self.a, self.b, self.theta)?;
        let certificates = strict_chain(name, self.theta, self.rho, gp.relation, Some(f), Some(g))?;
        Ok(Some(ChainOutcome::Certificate { step: name.into(), certificates }))
    }
}

/// Runs the steps in the order of the proof for a central ρ of arity h ≥ 2.
pub fn necessity_chain(rho: &Relation, theta: &Partition) -> Result<ChainOutcome> {
    let (k, h, t) = (rho.k(), rho.arity(), theta.num_blocks());
    let (a, b) = least_pair_out(theta).expect("θ is not full");
    let chain = Chain { rho, theta, a, b };

    let eta = eta(theta, h)?;
    if !eta.is_subset(rho)? {
        let u = first_outside(rho, &eta);
        let eta1 = rho.intersect(&eta)?;
        let f = separator_f(&u, a, b, theta)?;
        let g = eta_separator(&u, theta)?;
        let certificates = strict_chain("eta1", theta, rho, eta1, Some(f), Some(g))?;
        return Ok(ChainOutcome::Certificate { step: "eta1".into(), certificates });
    }

    let r0 = rho_0_theta(rho, theta)?;
    if r0 == *rho {
        return Ok(ChainOutcome::Exit { step: "rho_0_theta".into(), claimed: CentralType::TypeII });
    }
    if !r0.is_full() {
        return chain.same_arity("rho_0_theta", r0);
    }
    if let Some(out) = chain.extended("rho_0_theta^l", h + 1..=t, |l| extended_family(rho, theta, 0, l))? {
        return Ok(out);
    }

    for n in 1..h {
        let name = if n == 1 { "varsigma".to_string() } else { format!("beta_{}", n + 1) };
        let bn = beta(rho, theta, n + 1)?;
        if bn == *rho {
            let transversal = crate::classify::transversal(rho, theta, n - 1)?.unwrap_or_default();
            return Ok(ChainOutcome::Exit { step: name, claimed: CentralType::TypeIII { order: n, transversal } });
        }
        if !bn.is_full() {
            return chain.same_arity(&name, bn);
        }
        let top = if n == h - 1 { k } else { t };
        if let Some(out) = chain.extended(&format!("{name}^l"), h + 1..=top, |l| beta_l(rho, theta, n, l))? {
            return Ok(out);
        }
        let primed = if n == 1 { "gamma'".to_string() } else { format!("beta'_{}", n + 1) };
        if let Some(out) = chain.primed(&primed, n)? {
            return Ok(out);
        }
        if n == 1 {
            let z = zeta(rho, theta)?;
            if !z.is_full() {
                return chain.same_arity("zeta", z);
            }
            if let Some(out) = chain.extended("zeta^k", k..=k, |l| zeta_l(rho, theta, l))? {
                return Ok(out);
            }
        }
    }
    Ok(ChainOutcome::Exit { step: "end".into(), claimed: CentralType::TypeI })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::is_central;
    use crate::fixtures::*;

    #[test]
    fn type_two_exits_at_saturation() {
        match necessity_chain(&upsilon2(), &theta2()).unwrap() {
            ChainOutcome::Exit { claimed, .. } => assert_eq!(claimed, CentralType::TypeII),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_eta_gives_eta1() {
        // Central on E₄ with center {0} and (1,1,2)-style θ-pairs removed.
        let theta = Partition::new(4, vec![vec![0], vec![1, 2], vec![3]]).unwrap();
        let rho = full_minus_rearrangements(4, 3, &[&[1, 2, 3]]);
        assert!(is_central(&rho));
        match necessity_chain(&rho, &theta).unwrap() {
            ChainOutcome::Certificate { step, certificates } => {
                assert_eq!(step, "eta1");
                let verified = certificates
                    .iter()
                    .filter(|c| matches!(&c.payload, super::super::Payload::Witness(w) if w.verified))
                    .count();
                assert_eq!(verified, 2);
            }
            other => panic!("{other:?}"),
        }
    }
}
