//! γ′ and its generalization ^hβ′_{n+1} for a block shape m₁ > … > m_n.

use std::collections::HashMap;

use super::clique::{choose_per_class, class_mask, CliqueTable, Mask};
use super::diagonal::{diagonal, DiagonalSpec};
use super::saturate::same_domain;
use crate::error::{Error, Result};
use crate::finite::tuple::product_any;
use crate::finite::{Elem, Partition, Relation};

/// The relation together with its comparison diagonal D_{ϱ₁ϱ₂}.
#[derive(Debug, Clone)]
pub struct GammaPrime {
    pub relation: Relation,
    pub spec: DiagonalSpec,
    pub diagonal: Relation,
}

/// Checks a shape against θ: strictly decreasing positive sizes, at most t blocks, and every
/// class size either at most min(shape) or equal to one of the sizes.
pub fn validate_shape(theta: &Partition, shape: &[usize]) -> Result<()> {
    if shape.is_empty() {
        return Err(Error::Range("shape must be nonempty".into()));
    }
    if shape.windows(2).any(|w| w[0] <= w[1]) || shape.contains(&0) {
        return Err(Error::Range(format!("shape {shape:?} is not strictly decreasing and positive")));
    }
    if shape.len() > theta.num_blocks() {
        return Err(Error::Range(format!("shape {shape:?} has more blocks than θ has classes")));
    }
    let min = *shape.last().unwrap();
    for b in theta.blocks() {
        if b.len() > min && !shape.contains(&b.len()) {
            return Err(Error::Range(format!("class of size {} does not fit shape {shape:?}", b.len())));
        }
    }
    Ok(())
}

/// The γ′ shape: a single block of size max |C_i|.
pub fn gamma_shape(theta: &Partition) -> Vec<usize> {
    vec![theta.max_block()]
}

/// The shape m, m−1, …, m−n+1 with m = max |C_i|, when it is positive.
pub fn default_shape(theta: &Partition, n: usize) -> Option<Vec<usize>> {
    let m = theta.max_block();
    (n >= 1 && n <= m && n <= theta.num_blocks()).then(|| (0..n).map(|i| m - i).collect())
}

/// Blocks of first coordinates for a shape, as index ranges.
pub(crate) fn shape_blocks(shape: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 0;
    shape
        .iter()
        .map(|&s| {
            let b: Vec<usize> = (start..start + s).collect();
            start += s;
            b
        })
        .collect()
}

/// {a ∈ E_k^{m+t−n} : blocks θ-homogeneous; ∃u_i ∈ [a_i]_θ (i > m) such that for every choice
/// (i₁, …, i_n) of one position per block, {a_{i₁}, …, a_{i_n}, u_{m+1}, …}^h ⊆ ρ}.
pub fn gamma_prime(rho: &Relation, theta: &Partition, shape: &[usize]) -> Result<GammaPrime> {
    same_domain(rho, theta)?;
    validate_shape(theta, shape)?;
    let t = theta.num_blocks();
    let n = shape.len();
    let m: usize = shape.iter().sum();
    let arity = m + t - n;
    let blocks = shape_blocks(shape);
    let cliques = CliqueTable::new(rho)?;
    let mut memo: HashMap<(Vec<Mask>, Mask), bool> = HashMap::new();
    let relation = Relation::from_predicate(rho.k(), arity, |a| {
        if !blocks.iter().all(|b| b.iter().all(|&i| theta.related(a[i], a[b[0]]))) {
            return false;
        }
        let values: Vec<Mask> = blocks.iter().map(|b| b.iter().fold(0, |s, &i| s | 1 << a[i])).collect();
        let classes = class_mask(theta, &a[m..]);
        *memo.entry((values.clone(), classes)).or_insert_with(|| {
            let lists: Vec<Vec<Elem>> =
                values.iter().map(|&s| (0..32).filter(|x| s >> x & 1 == 1).map(|x| x as Elem).collect()).collect();
            let lists: Vec<&[Elem]> = lists.iter().map(|v| &v[..]).collect();
            choose_per_class(theta, classes, &mut |u| {
                !product_any(&lists, |pick| {
                    let s = pick.iter().fold(u, |s, &x| s | 1 << x);
                    !cliques.ok(s)
                })
            })
        })
    })?;
    let mut eps2: Vec<Vec<usize>> = blocks.clone();
    eps2.extend((m..arity).map(|i| vec![i]));
    let spec = DiagonalSpec::new(arity, (0..arity).map(|i| vec![i]).collect(), eps2)?;
    let diagonal = diagonal(&spec, theta)?;
    Ok(GammaPrime { relation, spec, diagonal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Partition {
        Partition::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap()
    }

    #[test]
    fn shapes() {
        assert!(validate_shape(&theta(), &[2]).is_ok());
        assert!(validate_shape(&theta(), &[3]).is_ok());
        assert!(validate_shape(&theta(), &[1]).is_err());
        assert!(validate_shape(&theta(), &[2, 2]).is_err());
        assert!(validate_shape(&theta(), &[2, 1]).is_ok());
        assert!(validate_shape(&theta(), &[]).is_err());
        assert_eq!(default_shape(&theta(), 2), Some(vec![2, 1]));
        assert_eq!(default_shape(&theta(), 3), None);
    }

    #[test]
    fn gamma_inside_diagonal() {
        let rho = Relation::from_predicate(6, 3, |t| {
            let mut v = t.to_vec();
            v.sort_unstable();
            v != [1, 2, 5]
        })
        .unwrap();
        let g = gamma_prime(&rho, &theta(), &[2]).unwrap();
        assert_eq!(g.relation.arity(), 4);
        assert!(g.relation.is_subset(&g.diagonal).unwrap());
    }
}
