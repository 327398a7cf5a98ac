//! Arity-extended families: ρ_{n,θ}^l, ^hβ_{n+1}^l (ς^l for n = 1), ζ and ζ^l.
//!
//! Membership in ρ_{n,θ}^l depends only on the set of the first n entries and the set of
//! θ-classes met by the others, because the witnesses u_i may coincide within a class and the
//! condition {…}^h ⊆ ρ only weakens as the set grows. The σ-intersections over S_l therefore
//! reduce to a quantifier over n-subsets of positions.

use std::collections::HashMap;

use itertools::Itertools;

use super::clique::{choose_per_class, class_mask, mask_of, CliqueTable, Mask};
use super::saturate::same_domain;
use crate::error::{Error, Result};
use crate::finite::tuple::product_any;
use crate::finite::{Elem, Partition, Relation};

struct FamilyOracle<'a> {
    theta: &'a Partition,
    cliques: CliqueTable,
    memo: HashMap<(Mask, Mask), bool>,
}

impl<'a> FamilyOracle<'a> {
    fn new(rho: &Relation, theta: &'a Partition) -> Result<Self> {
        same_domain(rho, theta)?;
        Ok(FamilyOracle { theta, cliques: CliqueTable::new(rho)?, memo: HashMap::new() })
    }

    /// ∃ one u per class of `classes` with (fixed ∪ U)^h ⊆ ρ.
    fn holds(&mut self, fixed: Mask, classes: Mask) -> bool {
        if let Some(&v) = self.memo.get(&(fixed, classes)) {
            return v;
        }
        let cliques = &self.cliques;
        let v = choose_per_class(self.theta, classes, &mut |u| cliques.ok(fixed | u));
        self.memo.insert((fixed, classes), v);
        v
    }
}

fn check_extension(rho: &Relation, n: usize, l: usize) -> Result<()> {
    let h = rho.arity();
    if l <= h {
        return Err(Error::Range(format!("extended arity l = {l} must exceed h = {h}")));
    }
    if n > l {
        return Err(Error::Range(format!("n = {n} exceeds l = {l}")));
    }
    Ok(())
}

/// ρ_{n,θ}^l = {a ∈ E_k^l : ∃u_i ∈ [a_i]_θ (i > n), {a_1, …, a_n, u_{n+1}, …, u_l}^h ⊆ ρ}.
pub fn extended_family(rho: &Relation, theta: &Partition, n: usize, l: usize) -> Result<Relation> {
    check_extension(rho, n, l)?;
    let mut oracle = FamilyOracle::new(rho, theta)?;
    Relation::from_predicate(rho.k(), l, |a| {
        let fixed = mask_of(&a[..n]);
        let classes = class_mask(theta, &a[n..]);
        oracle.holds(fixed, classes)
    })
}

/// ^hβ_{n+1}^l = ∩_{σ ∈ S_l}(ρ_{n,θ}^l)_σ.
pub fn beta_l(rho: &Relation, theta: &Partition, n: usize, l: usize) -> Result<Relation> {
    check_extension(rho, n, l)?;
    let mut oracle = FamilyOracle::new(rho, theta)?;
    let subsets: Vec<Vec<usize>> = (0..l).combinations(n).collect();
    let mut rest = Vec::with_capacity(l);
    Relation::from_predicate(rho.k(), l, |a| {
        subsets.iter().all(|j| {
            rest.clear();
            rest.extend((0..l).filter(|i| !j.contains(i)).map(|i| a[i]));
            let fixed = j.iter().fold(0, |m, &i| m | 1 << a[i]);
            oracle.holds(fixed, class_mask(theta, &rest))
        })
    })
}

/// ς^l = ∩_{σ ∈ S_l}(ρ_{1,θ}^l)_σ.
pub fn varsigma_l(rho: &Relation, theta: &Partition, l: usize) -> Result<Relation> {
    beta_l(rho, theta, 1, l)
}

/// ζ = {a : ∃u_i ∈ [a_i]_θ with (a_i, u_{i₁}, …, u_{i_{h−1}}) ∈ ρ for every i}, where
/// i₁ < … < i_{h−1} enumerate the other positions.
pub fn zeta(rho: &Relation, theta: &Partition) -> Result<Relation> {
    same_domain(rho, theta)?;
    let k = rho.k();
    let h = rho.arity();
    let mut out = Relation::empty(k, h)?;
    let mut probe = vec![0; h];
    // for every witness vector u, the admissible a_i form a product; add it wholesale
    let mut u = vec![0; h];
    loop {
        let mut allowed: Vec<Vec<Elem>> = Vec::with_capacity(h);
        for i in 0..h {
            let mut ok = Vec::new();
            for &x in theta.block_of(u[i]) {
                probe[0] = x;
                let mut p = 1;
                for (j, &uj) in u.iter().enumerate() {
                    if j != i {
                        probe[p] = uj;
                        p += 1;
                    }
                }
                if rho.contains(&probe) {
                    ok.push(x);
                }
            }
            if ok.is_empty() {
                break;
            }
            allowed.push(ok);
        }
        if allowed.len() == h {
            let lists: Vec<&[Elem]> = allowed.iter().map(|v| &v[..]).collect();
            product_any(&lists, |a| {
                out.insert(a).expect("in range");
                false
            });
        }
        if !crate::finite::tuple::next_tuple(k, &mut u) {
            break;
        }
    }
    Ok(out)
}

/// ζ^l = {a ∈ E_k^l : ∃u_i ∈ [a_i]_θ, ∀i {u_1, …, u_{i−1}, a_i, u_{i+1}, …, u_l}^h ⊆ ρ}.
pub fn zeta_l(rho: &Relation, theta: &Partition, l: usize) -> Result<Relation> {
    check_extension(rho, 0, l)?;
    same_domain(rho, theta)?;
    let cliques = CliqueTable::new(rho)?;
    let mut memo: HashMap<Vec<Elem>, bool> = HashMap::new();
    Relation::from_predicate(rho.k(), l, |a| {
        // the condition is invariant under simultaneous rearrangement of a and u
        let mut key = a.to_vec();
        key.sort_unstable();
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = zeta_l_member(&cliques, theta, &key);
        memo.insert(key, v);
        v
    })
}

fn zeta_l_member(cliques: &CliqueTable, theta: &Partition, a: &[Elem]) -> bool {
    // sets[i] collects a_i and the u_j chosen so far for j ≠ i
    let mut sets: Vec<Mask> = a.iter().map(|&x| 1 << x).collect();
    fn go(cliques: &CliqueTable, theta: &Partition, a: &[Elem], j: usize, sets: &mut [Mask]) -> bool {
        if j == a.len() {
            return true;
        }
        for &u in theta.block_of(a[j]) {
            let saved: Vec<Mask> = sets.to_vec();
            let mut ok = true;
            for (i, s) in sets.iter_mut().enumerate() {
                if i != j {
                    *s |= 1 << u;
                    if !cliques.ok(*s) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && go(cliques, theta, a, j + 1, sets) {
                return true;
            }
            sets.copy_from_slice(&saved);
        }
        false
    }
    if sets.iter().any(|&s| !cliques.ok(s)) {
        return false;
    }
    go(cliques, theta, a, 0, &mut sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::tuple::has_repeat;

    fn minus_perms(k: usize, h: usize, bad: &[&[Elem]]) -> Relation {
        Relation::from_predicate(k, h, |t| {
            let mut v = t.to_vec();
            v.sort_unstable();
            !bad.iter().any(|b| *b == &v[..])
        })
        .unwrap()
    }

    #[test]
    fn delta_forces_own_entries() {
        let rho = minus_perms(4, 3, &[&[1, 2, 3]]);
        let d = Partition::discrete(4).unwrap();
        let e = extended_family(&rho, &d, 0, 4).unwrap();
        let expect = Relation::from_predicate(4, 4, |a| {
            let s = mask_of(a);
            !(s & 0b1110 == 0b1110)
        })
        .unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn arity_must_grow() {
        let rho = minus_perms(4, 3, &[&[1, 2, 3]]);
        let d = Partition::discrete(4).unwrap();
        assert!(extended_family(&rho, &d, 0, 3).is_err());
        assert!(zeta_l(&rho, &d, 2).is_err());
    }

    #[test]
    fn zeta_contains_rho_for_symmetric_reflexive() {
        let rho = minus_perms(4, 3, &[&[1, 2, 3]]);
        let theta = Partition::new(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let z = zeta(&rho, &theta).unwrap();
        assert!(rho.is_subset(&z).unwrap());
        let tau = Relation::from_predicate(4, 3, has_repeat).unwrap();
        assert!(tau.is_subset(&z).unwrap());
    }
}
