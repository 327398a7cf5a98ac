//! The worked examples Υ₁–Υ₇ with their equivalence relations θ₁–θ₈.

use crate::constructions::{h_regular, RegularFamily};
use crate::finite::{Elem, Partition, Relation};

fn partition(k: usize, blocks: &[&[Elem]]) -> Partition {
    Partition::new(k, blocks.iter().map(|b| b.to_vec()).collect()).expect("fixture partition")
}

/// E_k^h minus every rearrangement of the listed tuples.
pub fn full_minus_rearrangements(k: usize, h: usize, removed: &[&[Elem]]) -> Relation {
    let removed: Vec<Vec<Elem>> = removed
        .iter()
        .map(|r| {
            let mut v = r.to_vec();
            v.sort_unstable();
            v
        })
        .collect();
    Relation::from_predicate(k, h, |t| {
        let mut v = t.to_vec();
        v.sort_unstable();
        !removed.contains(&v)
    })
    .expect("fixture relation")
}

/// {0,1},{2,3},{4,5} on E₆.
pub fn theta1() -> Partition {
    partition(6, &[&[0, 1], &[2, 3], &[4, 5]])
}

/// {0,1},{2},{3},{4} on E₅.
pub fn theta2() -> Partition {
    partition(5, &[&[0, 1], &[2], &[3], &[4]])
}

/// {0,1},{2},{3} on E₄.
pub fn theta3() -> Partition {
    partition(4, &[&[0, 1], &[2], &[3]])
}

/// {0,1,2},{3,4,5},{6,7} on E₈.
pub fn theta4() -> Partition {
    partition(8, &[&[0, 1, 2], &[3, 4, 5], &[6, 7]])
}

/// {0,1,2},{3,4},{5,6},{7} on E₈.
pub fn theta5() -> Partition {
    partition(8, &[&[0, 1, 2], &[3, 4], &[5, 6], &[7]])
}

/// {0,…,4},{5,6,7},{8,…,11} on E₁₂.
pub fn theta6() -> Partition {
    partition(12, &[&[0, 1, 2, 3, 4], &[5, 6, 7], &[8, 9, 10, 11]])
}

/// {0,1,5,8},{2,6,9,11},{3,4,7,10} on E₁₂.
pub fn theta7() -> Partition {
    partition(12, &[&[0, 1, 5, 8], &[2, 6, 9, 11], &[3, 4, 7, 10]])
}

/// {0,1},{3,4} and singletons on E₁₂.
pub fn theta8() -> Partition {
    partition(12, &[&[0, 1], &[2], &[3, 4], &[5], &[6], &[7], &[8], &[9], &[10], &[11]])
}

/// E₆³ minus the rearrangements of (1,2,5).
pub fn upsilon1() -> Relation {
    full_minus_rearrangements(6, 3, &[&[1, 2, 5]])
}

/// E₅³ minus the rearrangements of (2,3,4).
pub fn upsilon2() -> Relation {
    full_minus_rearrangements(5, 3, &[&[2, 3, 4]])
}

/// E₄³ minus the rearrangements of (1,2,3).
pub fn upsilon3() -> Relation {
    full_minus_rearrangements(4, 3, &[&[1, 2, 3]])
}

/// E₈³ minus the rearrangements of nine triples.
pub fn upsilon4() -> Relation {
    full_minus_rearrangements(
        8,
        3,
        &[&[1, 4, 6], &[1, 4, 7], &[1, 5, 7], &[1, 5, 6], &[2, 3, 7], &[2, 4, 6], &[2, 4, 7], &[2, 5, 6], &[2, 5, 7]],
    )
}

/// E₈⁴ minus the rearrangements of (1,4,6,7) and (2,4,6,7).
pub fn upsilon5() -> Relation {
    full_minus_rearrangements(8, 4, &[&[1, 4, 6, 7], &[2, 4, 6, 7]])
}

/// Triples on E₁₂ with two θ₆-related components.
pub fn upsilon6() -> Relation {
    let theta = theta6();
    Relation::from_predicate(12, 3, |t| {
        theta.related(t[0], t[1]) || theta.related(t[0], t[2]) || theta.related(t[1], t[2])
    })
    .expect("fixture relation")
}

/// λ_{θ₆,θ₇}.
pub fn upsilon7() -> Relation {
    h_regular(&family67())
}

/// {θ₆}.
pub fn family6() -> RegularFamily {
    RegularFamily::new(vec![theta6()]).expect("fixture family")
}

/// {θ₆, θ₇}.
pub fn family67() -> RegularFamily {
    RegularFamily::new(vec![theta6(), theta7()]).expect("fixture family")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{is_central, is_totally_reflexive, is_totally_symmetric};

    #[test]
    fn sizes() {
        assert_eq!(upsilon1().len(), 216 - 6);
        assert_eq!(upsilon2().len(), 125 - 6);
        assert_eq!(upsilon3().len(), 64 - 6);
        assert_eq!(upsilon4().len(), 512 - 54);
        assert_eq!(upsilon5().len(), 4096 - 48);
        assert_eq!(upsilon6().len(), 1368);
        assert_eq!(upsilon7().len(), 1068);
    }

    #[test]
    fn central_fixtures_are_central() {
        for rho in [upsilon1(), upsilon2(), upsilon3(), upsilon4(), upsilon5()] {
            assert!(is_central(&rho));
        }
    }

    #[test]
    fn regular_fixtures_are_symmetric_and_reflexive() {
        for rho in [upsilon6(), upsilon7()] {
            assert!(is_totally_reflexive(&rho).unwrap());
            assert!(is_totally_symmetric(&rho).unwrap());
            assert!(!is_central(&rho));
        }
        assert_eq!(upsilon6(), h_regular(&family6()));
    }
}
