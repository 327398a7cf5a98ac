use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::finite::tuple::product;
use crate::finite::{Elem, Partition, Relation};

pub(crate) fn same_domain(rho: &Relation, theta: &Partition) -> Result<()> {
    if rho.k() != theta.k() {
        return Err(Error::IncompatibleDomains { left: rho.k(), right: theta.k() });
    }
    Ok(())
}

/// η = {u ∈ E_k^h : u₁ θ u₂}.
pub fn eta(theta: &Partition, h: usize) -> Result<Relation> {
    if h < 2 {
        return Err(Error::Range(format!("eta needs h >= 2, got {h}")));
    }
    Relation::from_predicate(theta.k(), h, |t| theta.related(t[0], t[1]))
}

/// ρ_{i,θ}: the first i components fixed, the remaining ones free within their θ-classes.
pub fn rho_i_theta(rho: &Relation, theta: &Partition, i: usize) -> Result<Relation> {
    same_domain(rho, theta)?;
    let h = rho.arity();
    if i >= h {
        return Err(Error::Range(format!("i = {i} outside 0..{h}")));
    }
    let mut patterns: HashSet<Vec<usize>> = HashSet::new();
    for t in rho.iter() {
        let key: Vec<usize> =
            t.iter().enumerate().map(|(j, &x)| if j < i { x as usize } else { theta.class_of(x) }).collect();
        patterns.insert(key);
    }
    let mut out = Relation::empty(rho.k(), h)?;
    for key in patterns {
        let singletons: Vec<[Elem; 1]> = key[..i].iter().map(|&x| [x as Elem]).collect();
        let mut lists: Vec<&[Elem]> = singletons.iter().map(|s| &s[..]).collect();
        lists.extend(key[i..].iter().map(|&c| &theta.blocks()[c][..]));
        for t in product(&lists) {
            out.insert(&t)?;
        }
    }
    Ok(out)
}

/// ρ_{0,θ}, the componentwise θ-saturation.
pub fn rho_0_theta(rho: &Relation, theta: &Partition) -> Result<Relation> {
    rho_i_theta(rho, theta, 0)
}

/// The coordinate-permuted relation {(a_σ(0), …, a_σ(h−1)) : a ∈ ρ}; σ in one-line notation.
pub fn permute(rho: &Relation, sigma: &[usize]) -> Result<Relation> {
    rho.permute(sigma)
}

/// S_n in lexicographic order of one-line notation.
pub fn permutations_of(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

/// ∩_{σ ∈ S_h} γ_σ: the tuples all of whose rearrangements lie in γ.
pub fn symmetric_core(gamma: &Relation) -> Result<Relation> {
    let h = gamma.arity();
    let mut acc = gamma.clone();
    // transpositions generate S_h, and the core is the largest symmetric subrelation
    loop {
        let mut next = acc.clone();
        for i in 0..h.saturating_sub(1) {
            let mut sigma: Vec<usize> = (0..h).collect();
            sigma.swap(i, i + 1);
            next = next.intersect(&acc.permute(&sigma)?)?;
        }
        if next == acc {
            return Ok(acc);
        }
        acc = next;
    }
}

/// ^hβ_n: ρ_{0,θ} for n = 1, otherwise ∩_{σ ∈ S_h}(ρ_{n−1,θ})_σ.
pub fn beta(rho: &Relation, theta: &Partition, n: usize) -> Result<Relation> {
    same_domain(rho, theta)?;
    let h = rho.arity();
    if n == 0 || n > h {
        return Err(Error::Range(format!("n = {n} outside 1..={h}")));
    }
    if n == 1 {
        return rho_0_theta(rho, theta);
    }
    let base = rho_i_theta(rho, theta, n - 1)?;
    let mut acc = base.clone();
    for sigma in permutations_of(h).skip(1) {
        acc = acc.intersect(&base.permute(&sigma)?)?;
    }
    Ok(acc)
}

/// ς = ^hβ₂ = ∩_σ(ρ_{1,θ})_σ.
pub fn varsigma(rho: &Relation, theta: &Partition) -> Result<Relation> {
    beta(rho, theta, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta4() -> Partition {
        Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap()
    }

    #[test]
    fn eta_count() {
        let e = eta(&theta4(), 3).unwrap();
        assert_eq!(e.len(), 32);
        assert_eq!(eta(&Partition::indiscrete(4).unwrap(), 3).unwrap(), Relation::full(4, 3).unwrap());
        let d = eta(&Partition::discrete(3).unwrap(), 2).unwrap();
        assert_eq!(d, Relation::delta(3).unwrap());
        assert!(eta(&theta4(), 1).is_err());
    }

    #[test]
    fn saturation_by_delta_is_identity() {
        let rho = Relation::from_tuples(3, 3, [[0, 1, 2], [1, 1, 0]]).unwrap();
        let d = Partition::discrete(3).unwrap();
        for i in 0..3 {
            assert_eq!(rho_i_theta(&rho, &d, i).unwrap(), rho);
        }
        for n in 1..=3 {
            assert!(beta(&rho, &d, n).unwrap().is_subset(&rho).unwrap());
        }
    }

    #[test]
    fn saturation_relaxes_tail() {
        let rho = Relation::from_tuples(4, 2, [[0, 2]]).unwrap();
        let s0 = rho_i_theta(&rho, &theta4(), 0).unwrap();
        assert_eq!(s0.tuples(), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
        let s1 = rho_i_theta(&rho, &theta4(), 1).unwrap();
        assert_eq!(s1.tuples(), vec![vec![0, 2], vec![0, 3]]);
        assert!(rho_i_theta(&rho, &theta4(), 2).is_err());
    }

    #[test]
    fn permute_identity_and_swap() {
        let rho = Relation::from_tuples(3, 2, [[0, 1], [2, 1]]).unwrap();
        assert_eq!(permute(&rho, &[0, 1]).unwrap(), rho);
        assert_eq!(permute(&rho, &[1, 0]).unwrap(), rho.inverse().unwrap());
        assert!(permute(&rho, &[0, 0]).is_err());
        assert_eq!(permutations_of(3).count(), 6);
        assert_eq!(permutations_of(3).next().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn symmetric_core_matches_full_intersection() {
        let g =
            Relation::from_tuples(3, 3, [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1], [0, 0, 1]])
                .unwrap();
        let mut acc = g.clone();
        for s in permutations_of(3) {
            acc = acc.intersect(&g.permute(&s).unwrap()).unwrap();
        }
        assert_eq!(symmetric_core(&g).unwrap(), acc);
        assert_eq!(acc.len(), 6);
    }
}
