use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finite::tuple::has_repeat;
use crate::finite::{Elem, Partition, Relation};

/// A family of equivalence relations, each with exactly h ≥ 3 blocks, such that every choice of
/// one block per member has nonempty intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularFamily {
    h: usize,
    members: Vec<Partition>,
}

impl RegularFamily {
    pub fn new(members: Vec<Partition>) -> Result<Self> {
        let first = members.first().ok_or_else(|| Error::Family("empty family".into()))?;
        let h = first.num_blocks();
        if h < 3 {
            return Err(Error::Family(format!("members need at least 3 blocks, found {h}")));
        }
        if let Some(p) = members.iter().find(|p| p.k() != first.k()) {
            return Err(Error::IncompatibleDomains { left: first.k(), right: p.k() });
        }
        if members.iter().any(|p| p.num_blocks() != h) {
            return Err(Error::Family("members have different block counts".into()));
        }
        if !cross_intersections_nonempty(&members, h) {
            return Err(Error::Family("some choice of one block per member has empty intersection".into()));
        }
        Ok(RegularFamily { h, members })
    }

    pub fn k(&self) -> usize {
        self.members[0].k()
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }
}

fn cross_intersections_nonempty(members: &[Partition], h: usize) -> bool {
    let k = members[0].k();
    let needed = (0..members.len()).try_fold(1usize, |acc, _| acc.checked_mul(h));
    let Some(needed) = needed.filter(|&n| n <= k) else {
        return false;
    };
    let signatures: HashSet<Vec<usize>> =
        (0..k).map(|x| members.iter().map(|p| p.class_of(x as Elem)).collect()).collect();
    signatures.len() == needed
}

/// True when the partitions form a valid h-regular family.
pub fn is_regular_family(partitions: &[Partition]) -> bool {
    RegularFamily::new(partitions.to_vec()).is_ok()
}

/// λ_T: the h-tuples meeting at most h−1 classes of every member.
pub fn h_regular(family: &RegularFamily) -> Relation {
    let h = family.h;
    Relation::from_predicate(family.k(), h, |a| {
        has_repeat(a)
            || family.members.iter().all(|p| {
                let classes: Vec<usize> = a.iter().map(|&x| p.class_of(x)).collect();
                has_repeat_usize(&classes)
            })
    })
    .expect("valid family")
}

fn has_repeat_usize(t: &[usize]) -> bool {
    t.iter().enumerate().any(|(i, x)| t[i + 1..].contains(x))
}

/// φ(β) on E_t, where φ sends x to the index of its θ-class.
pub fn quotient(rel: &Relation, theta: &Partition) -> Result<Relation> {
    super::saturate::same_domain(rel, theta)?;
    let t = theta.num_blocks();
    if t < 2 {
        return Err(Error::Range("quotient by ∇ is a one-point domain".into()));
    }
    let mut out = Relation::empty(t, rel.arity())?;
    for a in rel.iter() {
        let b: Vec<Elem> = a.iter().map(|&x| theta.class_of(x) as Elem).collect();
        out.insert(&b)?;
    }
    Ok(out)
}

/// φ⁻¹(α) on E_k for α on E_t.
pub fn preimage(alpha: &Relation, theta: &Partition) -> Result<Relation> {
    if alpha.k() != theta.num_blocks() {
        return Err(Error::IncompatibleDomains { left: alpha.k(), right: theta.num_blocks() });
    }
    Relation::from_predicate(theta.k(), alpha.arity(), |a| {
        let b: Vec<Elem> = a.iter().map(|&x| theta.class_of(x) as Elem).collect();
        alpha.contains(&b)
    })
}

/// φ(θ_i) on E_t for a partition θ_i that is a union of θ-classes.
pub fn quotient_partition(p: &Partition, theta: &Partition) -> Result<Partition> {
    if !theta.refines(p) {
        return Err(Error::Precondition("partition is not a union of θ-classes".into()));
    }
    let labels: Vec<usize> = theta.blocks().iter().map(|b| p.class_of(b[0])).collect();
    Ok(Partition::from_class_map(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, blocks: &[&[Elem]]) -> Partition {
        Partition::new(k, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_member_always_regular() {
        let t = p(5, &[&[0, 1], &[2], &[3, 4]]);
        assert!(is_regular_family(std::slice::from_ref(&t)));
        let lam = h_regular(&RegularFamily::new(vec![t]).unwrap());
        assert!(!lam.contains(&[0, 2, 3]));
        assert!(lam.contains(&[0, 1, 3]));
    }

    #[test]
    fn cross_intersection_failure() {
        let a = p(6, &[&[0, 1], &[2, 3], &[4, 5]]);
        let b = p(6, &[&[0, 2], &[1, 4], &[3, 5]]);
        assert!(!is_regular_family(&[a.clone(), b]));
        assert!(!is_regular_family(&[p(4, &[&[0, 1], &[2, 3]])]));
        assert!(!is_regular_family(&[]));
        assert!(is_regular_family(&[a]));
    }

    #[test]
    fn quotient_roundtrip() {
        let theta = p(4, &[&[0, 1], &[2], &[3]]);
        let alpha = Relation::from_tuples(3, 2, [[0, 1], [2, 2]]).unwrap();
        let pre = preimage(&alpha, &theta).unwrap();
        assert_eq!(pre.len(), 2 + 1);
        assert_eq!(quotient(&pre, &theta).unwrap(), alpha);
        let coarse = p(4, &[&[0, 1, 2], &[3]]);
        assert_eq!(quotient_partition(&coarse, &theta).unwrap(), p(3, &[&[0, 1], &[2]]));
        assert!(quotient_partition(&theta, &coarse).is_err());
    }
}
