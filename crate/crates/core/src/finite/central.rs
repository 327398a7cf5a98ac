//! Total reflexivity, total symmetry and centers.

use super::relation::Relation;
use super::tuple::{has_repeat, next_tuple, Elem};
use crate::error::{Error, Result};

/// Every h-tuple with a repeated component lies in ρ.
pub fn is_totally_reflexive(rho: &Relation) -> Result<bool> {
    if rho.arity() < 2 {
        return Err(Error::Unary);
    }
    let mut t = vec![0; rho.arity()];
    let mut r = 0;
    loop {
        if has_repeat(&t) && !rho.contains_rank(r) {
            return Ok(false);
        }
        r += 1;
        if !next_tuple(rho.k(), &mut t) {
            return Ok(true);
        }
    }
}

/// ρ is closed under every permutation of coordinates.
pub fn is_totally_symmetric(rho: &Relation) -> Result<bool> {
    let h = rho.arity();
    if h < 2 {
        return Err(Error::Unary);
    }
    // adjacent transpositions generate S_h
    for i in 0..h - 1 {
        let mut sigma: Vec<usize> = (0..h).collect();
        sigma.swap(i, i + 1);
        if rho.permute(&sigma)? != *rho {
            return Ok(false);
        }
    }
    Ok(true)
}

/// C_ρ = {a : (a, a₂, …, a_h) ∈ ρ for all a₂, …, a_h}.
pub fn center(rho: &Relation) -> Result<Vec<Elem>> {
    if !is_totally_reflexive(rho)? || !is_totally_symmetric(rho)? {
        return Err(Error::Precondition(
            "center undefined: relation is not totally reflexive and totally symmetric".into(),
        ));
    }
    Ok(first_coordinate_universal(rho))
}

pub(crate) fn first_coordinate_universal(rho: &Relation) -> Vec<Elem> {
    let k = rho.k();
    let block = rho.cells() / k;
    (0..k).filter(|&a| rho.bits().count_ones(a * block..(a + 1) * block) == block).map(|a| a as Elem).collect()
}

/// Unary: nonempty proper subset. Otherwise totally reflexive, totally symmetric, with a
/// nonempty proper center.
pub fn is_central(rho: &Relation) -> bool {
    if rho.arity() == 1 {
        return !rho.is_empty() && !rho.is_full();
    }
    match center(rho) {
        Ok(c) => !c.is_empty() && c.len() < rho.k(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::Permutation;

    fn minus_pair(k: usize, a: Elem, b: Elem) -> Relation {
        Relation::from_predicate(k, 2, |t| !(t == [a, b] || t == [b, a])).unwrap()
    }

    #[test]
    fn binary_center() {
        let rho = minus_pair(3, 1, 2);
        assert_eq!(center(&rho).unwrap(), vec![0]);
        assert!(is_central(&rho));
    }

    #[test]
    fn delta_is_symmetric_not_reflexive() {
        let d = Relation::from_tuples(3, 3, (0..3).map(|x| [x, x, x])).unwrap();
        assert!(is_totally_symmetric(&d).unwrap());
        assert!(!is_totally_reflexive(&d).unwrap());
        // for h = 2 the repeated-component tuples are exactly Δ
        let d2 = Relation::delta(3).unwrap();
        assert!(is_totally_symmetric(&d2).unwrap());
        assert!(is_totally_reflexive(&d2).unwrap());
        assert!(!is_central(&d2));
    }

    #[test]
    fn graph_is_not_reflexive() {
        let g = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap().graph();
        assert!(!is_totally_reflexive(&g).unwrap());
    }

    #[test]
    fn full_and_tau_are_not_central() {
        assert!(!is_central(&Relation::full(4, 3).unwrap()));
        let tau = Relation::from_predicate(3, 3, has_repeat).unwrap();
        assert!(is_totally_reflexive(&tau).unwrap());
        assert_eq!(center(&tau).unwrap(), Vec::<Elem>::new());
        assert!(!is_central(&tau));
    }

    #[test]
    fn unary_cases() {
        assert_eq!(is_totally_reflexive(&Relation::full(3, 1).unwrap()), Err(Error::Unary));
        assert!(is_central(&Relation::from_tuples(3, 1, [[0]]).unwrap()));
        assert!(!is_central(&Relation::full(3, 1).unwrap()));
        assert!(!is_central(&Relation::empty(3, 1).unwrap()));
    }
}
