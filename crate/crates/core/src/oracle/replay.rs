//! Fixture-suite replay: every optimized construction and predicate against its brute mirror.

use rayon::prelude::*;

use super::brute;
use crate::classify;
use crate::constructions::{self, default_shape, gamma_shape, RegularFamily};
use crate::error::Result;
use crate::finite::{center, Partition, Relation};
use crate::fixtures::*;

/// Largest relation the brute mirrors are asked to materialize for the extended families.
pub const REPLAY_CELLS: usize = 1 << 15;

/// One optimized/brute agreement check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub name: String,
    pub agree: bool,
}

/// The central and regular worked examples with their equivalence relations.
pub fn example_cases() -> Vec<(&'static str, Relation, Partition)> {
    vec![
        ("upsilon1/theta1", upsilon1(), theta1()),
        ("upsilon2/theta2", upsilon2(), theta2()),
        ("upsilon3/theta3", upsilon3(), theta3()),
        ("upsilon4/theta4", upsilon4(), theta4()),
        ("upsilon5/theta5", upsilon5(), theta5()),
        ("upsilon6/theta6", upsilon6(), theta6()),
        ("upsilon7/theta8", upsilon7(), theta8()),
    ]
}

/// Ordered pairs of distinct nontrivial partitions of E_k.
pub fn nontrivial_pairs(k: usize) -> Vec<(Partition, Partition)> {
    let parts: Vec<Partition> = Partition::all(k).into_iter().filter(|p| p.is_nontrivial()).collect();
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            if a != b {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn fits(k: usize, arity: usize) -> bool {
    k.checked_pow(arity as u32).is_some_and(|c| c <= REPLAY_CELLS)
}

struct Log(Vec<Comparison>);

impl Log {
    fn eq<T: PartialEq>(
        &mut self,
        name: String,
        fast: impl FnOnce() -> Result<T>,
        slow: impl FnOnce() -> Result<T>,
    ) -> Result<()> {
        let agree = fast()? == slow()?;
        self.0.push(Comparison { name, agree });
        Ok(())
    }
}

fn relation_case(label: &str, rho: &Relation, theta: &Partition) -> Result<Vec<Comparison>> {
    let mut log = Log(Vec::new());
    let (k, h, t) = (rho.k(), rho.arity(), theta.num_blocks());
    let name = |what: String| format!("{label} {what}");
    log.eq(name("center".into()), || center(rho), || Ok(brute::center(rho)))?;
    for i in 0..h {
        log.eq(
            name(format!("rho_i_theta i={i}")),
            || constructions::rho_i_theta(rho, theta, i),
            || brute::rho_i_theta(rho, theta, i),
        )?;
    }
    for n in 1..=h {
        log.eq(name(format!("beta n={n}")), || constructions::beta(rho, theta, n), || brute::beta(rho, theta, n))?;
    }
    if h >= 2 {
        log.eq(
            name("varsigma".into()),
            || constructions::varsigma(rho, theta),
            || brute::varsigma_literal(rho, theta),
        )?;
        log.eq(name("eta".into()), || constructions::eta(theta, h), || brute::eta(theta, h))?;
    }
    if h == 2 {
        let th = theta.to_relation();
        log.eq(name("compose".into()), || rho.compose(&th), || brute::compose(rho, &th))?;
        return Ok(log.0);
    }
    log.eq(name("zeta".into()), || constructions::zeta(rho, theta), || brute::zeta(rho, theta))?;
    log.eq(name("theta_closed".into()), || classify::theta_closed(rho, theta), || brute::theta_closed(rho, theta))?;
    for l in 0..h {
        log.eq(
            name(format!("transversal l={l}")),
            || classify::transversal(rho, theta, l),
            || brute::transversal(rho, theta, l),
        )?;
    }
    log.eq(
        name("weak_closure_order".into()),
        || classify::weak_closure_order(rho, theta),
        || brute::weak_closure_order(rho, theta),
    )?;
    for l in h + 1..=k {
        if !fits(k, l) {
            break;
        }
        for n in 1..l.min(h + 1) {
            log.eq(
                name(format!("extended_family n={n} l={l}")),
                || constructions::extended_family(rho, theta, n, l),
                || brute::extended_family(rho, theta, n, l),
            )?;
            log.eq(
                name(format!("beta_l n={n} l={l}")),
                || constructions::beta_l(rho, theta, n, l),
                || brute::beta_l(rho, theta, n, l),
            )?;
        }
        log.eq(
            name(format!("zeta_l l={l}")),
            || constructions::zeta_l(rho, theta, l),
            || brute::zeta_l(rho, theta, l),
        )?;
    }
    let mut shapes = vec![gamma_shape(theta)];
    shapes.extend((2..h).filter_map(|n| default_shape(theta, n)));
    for shape in shapes {
        let arity = shape.iter().sum::<usize>() + t - shape.len();
        if constructions::validate_shape(theta, &shape).is_err() || !fits(k, arity) {
            continue;
        }
        log.eq(
            name(format!("gamma_prime shape={shape:?}")),
            || constructions::gamma_prime(rho, theta, &shape).map(|g| g.relation),
            || brute::gamma_prime(rho, theta, &shape),
        )?;
    }
    Ok(log.0)
}

fn family_case(label: &str, family: &RegularFamily) -> Result<Vec<Comparison>> {
    let mut log = Log(Vec::new());
    log.eq(format!("{label} h_regular"), || Ok(constructions::h_regular(family)), || brute::h_regular(family))?;
    let members = family.members().to_vec();
    log.eq(
        format!("{label} is_regular_family"),
        || Ok(constructions::is_regular_family(&members)),
        || Ok(brute::is_regular_family(&members)),
    )?;
    // a repeated member breaks the cross-intersection property
    let mut doubled = members.clone();
    doubled.push(members[0].clone());
    log.eq(
        format!("{label} doubled is_regular_family"),
        || Ok(constructions::is_regular_family(&doubled)),
        || Ok(brute::is_regular_family(&doubled)),
    )?;
    Ok(log.0)
}

/// Every construction on the worked examples and on all nontrivial partition pairs of E₄.
pub fn construction_suite() -> Result<Vec<Comparison>> {
    let cases = example_cases();
    let mut out: Vec<Vec<Comparison>> =
        cases.par_iter().map(|(label, rho, theta)| relation_case(label, rho, theta)).collect::<Result<_>>()?;
    out.push(family_case("family6", &family6())?);
    out.push(family_case("family67", &family67())?);
    let pairs = nontrivial_pairs(4);
    let pair_logs: Vec<Vec<Comparison>> = pairs
        .par_iter()
        .map(|(theta, rho)| {
            let label = format!("E4 pair {:?}/{:?}", theta.blocks(), rho.blocks());
            relation_case(&label, &rho.to_relation(), theta)
        })
        .collect::<Result<_>>()?;
    out.extend(pair_logs);
    Ok(out.into_iter().flatten().collect())
}
