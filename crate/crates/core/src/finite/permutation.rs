use std::fmt;

use super::relation::Relation;
use super::tuple::{check_k, Elem};
use crate::error::{Error, Result};

/// A bijection of E_k.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Elem>,
}

impl Permutation {
    pub fn new(images: Vec<Elem>) -> Result<Self> {
        let k = images.len();
        check_k(k)?;
        let mut seen = vec![false; k];
        for &y in &images {
            if y as usize >= k {
                return Err(Error::Element { elem: y as usize, k });
            }
            if std::mem::replace(&mut seen[y as usize], true) {
                return Err(Error::Permutation(format!("{y} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of E_k from disjoint cycles; unmentioned points are fixed.
    pub fn from_cycles(k: usize, cycles: &[Vec<Elem>]) -> Result<Self> {
        check_k(k)?;
        let mut images: Vec<Elem> = (0..k).map(|x| x as Elem).collect();
        let mut seen = vec![false; k];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x as usize >= k {
                    return Err(Error::Element { elem: x as usize, k });
                }
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::Permutation(format!("{x} occurs in two cycles")));
                }
                images[x as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn identity(k: usize) -> Result<Self> {
        Self::new((0..k).map(|x| x as Elem).collect())
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x as usize]
    }

    /// Cycles including fixed points, each starting at its least element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<Elem>> {
        let k = self.k();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as Elem);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// The common prime cycle length, if every cycle has the same prime length.
    pub fn prime_order(&self) -> Option<usize> {
        let lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let p = lens[0];
        (is_prime(p) && lens.iter().all(|&l| l == p)).then_some(p)
    }

    pub fn is_prime(&self) -> bool {
        self.prime_order().is_some()
    }

    /// {(x, π(x)) : x ∈ E_k}.
    pub fn graph(&self) -> Relation {
        Relation::from_tuples(self.k(), 2, (0..self.k()).map(|x| [x as Elem, self.images[x]]))
            .expect("valid permutation")
    }

    /// All permutations of E_k in lexicographic order of the image vector.
    pub fn all(k: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (0..k as Elem).permutations(k).map(|images| Permutation { images }).collect()
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Same as [`Permutation::is_prime`].
pub fn is_prime_permutation(pi: &Permutation) -> bool {
    pi.is_prime()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[k={}]{}", self.k(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(k: usize, cycles: &[&[Elem]]) -> Permutation {
        Permutation::from_cycles(k, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn prime_examples() {
        assert!(perm(4, &[&[0, 1], &[2, 3]]).is_prime());
        assert!(!perm(4, &[&[0, 1, 2]]).is_prime());
        assert_eq!(perm(6, &[&[0, 1, 2], &[3, 4, 5]]).prime_order(), Some(3));
        assert!(!perm(4, &[&[0, 1, 2, 3]]).is_prime());
        assert!(!Permutation::identity(3).unwrap().is_prime());
    }

    #[test]
    fn canonical_cycles() {
        let p = perm(5, &[&[3, 1], &[4, 2, 0]]);
        assert_eq!(p.cycles(), vec![vec![0, 4, 2], vec![1, 3]]);
        assert_eq!(p.to_string(), "(0 4 2)(1 3)");
    }

    #[test]
    fn graph_has_k_pairs() {
        let p = perm(4, &[&[0, 1], &[2, 3]]);
        let g = p.graph();
        assert_eq!(g.tuples(), vec![vec![0, 1], vec![1, 0], vec![2, 3], vec![3, 2]]);
        assert_eq!(Permutation::identity(4).unwrap().graph(), Relation::delta(4).unwrap());
    }

    #[test]
    fn rejects_overlapping_cycles() {
        assert!(Permutation::from_cycles(4, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }
}
