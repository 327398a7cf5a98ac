//! Definition-level mirrors: literal quantifier loops over classes, tuple sets instead of
//! bitsets, no memoization. Slow by design.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::constructions::RegularFamily;
use crate::error::{Error, Result};
use crate::finite::tuple::{product, tuples};
use crate::finite::{Elem, Partition, Relation};

type TupleSet = BTreeSet<Vec<Elem>>;

fn to_relation(k: usize, h: usize, set: &TupleSet) -> Result<Relation> {
    Relation::from_tuples(k, h, set)
}

fn class_lists<'a>(theta: &'a Partition, a: &[Elem]) -> Vec<&'a [Elem]> {
    a.iter().map(|&x| theta.block_of(x)).collect()
}

/// S^h ⊆ ρ, checked tuple by tuple.
pub fn set_power_in(rho: &Relation, set: &[Elem]) -> bool {
    let elems: Vec<Elem> = set.iter().copied().unique().collect();
    let lists: Vec<&[Elem]> = vec![&elems[..]; rho.arity()];
    product(&lists).iter().all(|t| rho.contains(t))
}

/// Δ-composition read literally: {(a,c) : ∃b (a,b) ∈ ρ, (b,c) ∈ σ}.
pub fn compose(rho: &Relation, sigma: &Relation) -> Result<Relation> {
    let k = rho.k();
    Relation::from_predicate(k, 2, |ac| {
        (0..k as Elem).any(|b| rho.contains(&[ac[0], b]) && sigma.contains(&[b, ac[1]]))
    })
}

/// Central elements by their definition.
pub fn center(rho: &Relation) -> Vec<Elem> {
    let k = rho.k();
    (0..k as Elem)
        .filter(|&a| tuples(k, rho.arity() - 1).all(|rest| rho.contains(&[&[a][..], &rest[..]].concat())))
        .collect()
}

pub fn eta(theta: &Partition, h: usize) -> Result<Relation> {
    let set: TupleSet = tuples(theta.k(), h).filter(|t| theta.related(t[0], t[1])).collect();
    to_relation(theta.k(), h, &set)
}

/// {a : ∃u_j ∈ [a_j]_θ (j ≥ i), (a_0, …, a_{i−1}, u_i, …, u_{h−1}) ∈ ρ}.
pub fn rho_i_theta(rho: &Relation, theta: &Partition, i: usize) -> Result<Relation> {
    let (k, h) = (rho.k(), rho.arity());
    if i >= h {
        return Err(Error::Range(format!("i = {i} outside 0..{h}")));
    }
    let set: TupleSet = tuples(k, h)
        .filter(|a| {
            let tails = product(&class_lists(theta, &a[i..]));
            tails.iter().any(|u| rho.contains(&[&a[..i], &u[..]].concat()))
        })
        .collect();
    to_relation(k, h, &set)
}

/// {(a_σ(0), …) : a ∈ ρ} as a tuple set.
pub fn permute(rho: &Relation, sigma: &[usize]) -> Result<Relation> {
    crate::finite::check_index_permutation(sigma, rho.arity())?;
    let set: TupleSet = rho.iter().map(|a| sigma.iter().map(|&s| a[s]).collect()).collect();
    to_relation(rho.k(), rho.arity(), &set)
}

fn intersect_permuted(base: &Relation) -> Result<Relation> {
    let h = base.arity();
    let mut acc: Option<TupleSet> = None;
    for sigma in (0..h).permutations(h) {
        let p: TupleSet = permute(base, &sigma)?.iter().collect();
        acc = Some(match acc {
            None => p,
            Some(a) => a.intersection(&p).cloned().collect(),
        });
    }
    to_relation(base.k(), h, &acc.unwrap_or_default())
}

/// ^hβ_n by the literal S_h intersection.
pub fn beta(rho: &Relation, theta: &Partition, n: usize) -> Result<Relation> {
    if n == 0 || n > rho.arity() {
        return Err(Error::Range(format!("n = {n} outside 1..={}", rho.arity())));
    }
    if n == 1 {
        return rho_i_theta(rho, theta, 0);
    }
    intersect_permuted(&rho_i_theta(rho, theta, n - 1)?)
}

/// ς by its ∃u_{ij} display: for every j some u_{ij} ∈ [a_i] (i ≠ j) with
/// (a_j, u_{j₁j}, …, u_{j_{h−1}j}) ∈ ρ.
pub fn varsigma_literal(rho: &Relation, theta: &Partition) -> Result<Relation> {
    let (k, h) = (rho.k(), rho.arity());
    let set: TupleSet = tuples(k, h)
        .filter(|a| {
            (0..h).all(|j| {
                let others: Vec<Elem> = (0..h).filter(|&i| i != j).map(|i| a[i]).collect();
                product(&class_lists(theta, &others)).iter().any(|u| rho.contains(&[&[a[j]][..], &u[..]].concat()))
            })
        })
        .collect();
    to_relation(k, h, &set)
}

/// ρ_{n,θ}^l with one witness per coordinate.
pub fn extended_family(rho: &Relation, theta: &Partition, n: usize, l: usize) -> Result<Relation> {
    let k = rho.k();
    let set: TupleSet = tuples(k, l)
        .filter(|a| {
            product(&class_lists(theta, &a[n..])).iter().any(|u| set_power_in(rho, &[&a[..n], &u[..]].concat()))
        })
        .collect();
    to_relation(k, l, &set)
}

/// ^hβ_{n+1}^l by the literal S_l intersection.
pub fn beta_l(rho: &Relation, theta: &Partition, n: usize, l: usize) -> Result<Relation> {
    if l > 6 {
        return Err(Error::TooLarge(format!("literal S_{l} intersection")));
    }
    intersect_permuted(&extended_family(rho, theta, n, l)?)
}

/// ζ by its display.
pub fn zeta(rho: &Relation, theta: &Partition) -> Result<Relation> {
    let (k, h) = (rho.k(), rho.arity());
    let set: TupleSet = tuples(k, h)
        .filter(|a| {
            product(&class_lists(theta, a)).iter().any(|u| {
                (0..h).all(|i| {
                    let mut t = vec![a[i]];
                    t.extend((0..h).filter(|&j| j != i).map(|j| u[j]));
                    rho.contains(&t)
                })
            })
        })
        .collect();
    to_relation(k, h, &set)
}

/// ζ^l by its display.
pub fn zeta_l(rho: &Relation, theta: &Partition, l: usize) -> Result<Relation> {
    let k = rho.k();
    let set: TupleSet = tuples(k, l)
        .filter(|a| {
            product(&class_lists(theta, a)).iter().any(|u| {
                (0..l).all(|i| {
                    let mut s = u.clone();
                    s[i] = a[i];
                    set_power_in(rho, &s)
                })
            })
        })
        .collect();
    to_relation(k, l, &set)
}

/// γ′ / ^hβ′_{n+1} for a shape, by its display.
pub fn gamma_prime(rho: &Relation, theta: &Partition, shape: &[usize]) -> Result<Relation> {
    crate::constructions::validate_shape(theta, shape)?;
    let k = rho.k();
    let t = theta.num_blocks();
    let m: usize = shape.iter().sum();
    let arity = m + t - shape.len();
    let blocks = crate::constructions::shape_blocks(shape);
    let set: TupleSet = tuples(k, arity)
        .filter(|a| {
            let homogeneous =
                blocks.iter().all(|b| b.iter().array_combinations().all(|[&i, &j]| theta.related(a[i], a[j])));
            homogeneous
                && product(&class_lists(theta, &a[m..])).iter().any(|u| {
                    let picks: Vec<Vec<Elem>> = blocks.iter().map(|b| b.iter().map(|&i| a[i]).collect()).collect();
                    let picks: Vec<&[Elem]> = picks.iter().map(|v| &v[..]).collect();
                    product(&picks).iter().all(|p| set_power_in(rho, &[&p[..], &u[..]].concat()))
                })
        })
        .collect();
    to_relation(k, arity, &set)
}

/// (a₁, …, a_l, v_{l+1}, …, v_h) ∈ ρ for all a and all v from T.
pub fn is_transversal(rho: &Relation, theta: &Partition, l: usize, t: &[Elem]) -> bool {
    let pairwise = t.iter().array_combinations().all(|[&x, &y]| !theta.related(x, y));
    let (k, h) = (rho.k(), rho.arity());
    pairwise
        && t.len() == theta.num_blocks()
        && tuples(k, l).all(|a| {
            let lists: Vec<&[Elem]> = vec![t; h - l];
            product(&lists).iter().all(|v| rho.contains(&[&a[..], &v[..]].concat()))
        })
}

/// Least transversal of order l, listing u_i from the i-th class, over all systems of
/// representatives in lexicographic order.
pub fn transversal(rho: &Relation, theta: &Partition, l: usize) -> Result<Option<Vec<Elem>>> {
    if l >= rho.arity() {
        return Err(Error::Range(format!("order {l} outside 0..{}", rho.arity())));
    }
    let classes: Vec<&[Elem]> = theta.blocks().iter().map(|b| &b[..]).collect();
    Ok(product(&classes).into_iter().find(|u| is_transversal(rho, theta, l, u)))
}

pub fn theta_closed(rho: &Relation, theta: &Partition) -> Result<bool> {
    Ok(rho_i_theta(rho, theta, 0)? == *rho)
}

/// Least l with ρ = ∩_σ(ρ_{l,θ})_σ and a transversal of order l−1.
pub fn weak_closure_order(rho: &Relation, theta: &Partition) -> Result<Option<usize>> {
    for l in 1..rho.arity() {
        if beta(rho, theta, l + 1)? == *rho && transversal(rho, theta, l - 1)?.is_some() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// λ_T by counting classes met per member.
pub fn h_regular(family: &RegularFamily) -> Result<Relation> {
    let (k, h) = (family.k(), family.h());
    let set: TupleSet = tuples(k, h)
        .filter(|a| family.members().iter().all(|p| a.iter().map(|&x| p.class_of(x)).unique().count() < h))
        .collect();
    to_relation(k, h, &set)
}

/// Every choice of one block per member has nonempty intersection; all members have h ≥ 3 blocks.
pub fn is_regular_family(partitions: &[Partition]) -> bool {
    let Some(first) = partitions.first() else { return false };
    let h = first.num_blocks();
    if h < 3 || partitions.iter().any(|p| p.num_blocks() != h || p.k() != first.k()) {
        return false;
    }
    (0..partitions.len())
        .map(|_| 0..h)
        .multi_cartesian_product()
        .all(|choice| (0..first.k() as Elem).any(|x| choice.iter().zip(partitions).all(|(&c, p)| p.class_of(x) == c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn literal_saturation_of_type_two_fixture() {
        assert_eq!(rho_i_theta(&upsilon2(), &theta2(), 0).unwrap(), upsilon2());
    }

    #[test]
    fn literal_transversal_of_order_one() {
        assert_eq!(transversal(&upsilon4(), &theta4(), 1).unwrap(), Some(vec![0, 3, 6]));
    }

    #[test]
    fn literal_regular_relation() {
        assert_eq!(h_regular(&family6()).unwrap(), upsilon6());
        assert!(is_regular_family(&[theta6(), theta7()]));
    }

    #[test]
    fn center_of_small_relation() {
        let rho = Relation::from_predicate(3, 2, |t| !(t == [1, 2] || t == [2, 1])).unwrap();
        assert_eq!(center(&rho), vec![0]);
    }
}
