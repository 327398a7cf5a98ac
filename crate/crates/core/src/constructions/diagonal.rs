use crate::error::{Error, Result};
use crate::finite::{Partition, Relation};

/// Index partitions of a diagonal relation through θ: equality on the blocks of ε₁ and
/// θ-relatedness on the blocks of ε₂, whose ground set is the least elements of ε₁'s blocks.
/// Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalSpec {
    h: usize,
    eps1: Vec<Vec<usize>>,
    eps2: Vec<Vec<usize>>,
}

fn canonical_blocks(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

impl DiagonalSpec {
    pub fn new(h: usize, eps1: Vec<Vec<usize>>, eps2: Vec<Vec<usize>>) -> Result<Self> {
        if h == 0 {
            return Err(Error::Diagonal("h must be positive".into()));
        }
        let eps1 = canonical_blocks(eps1);
        let eps2 = canonical_blocks(eps2);
        let mut seen = vec![false; h];
        for b in &eps1 {
            if b.is_empty() {
                return Err(Error::Diagonal("empty block in eps1".into()));
            }
            for &i in b {
                if i >= h || std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Diagonal(format!("eps1 is not a partition of 0..{h}")));
                }
            }
        }
        if seen.contains(&false) {
            return Err(Error::Diagonal(format!("eps1 does not cover 0..{h}")));
        }
        let mut minima: Vec<usize> = eps1.iter().map(|b| b[0]).collect();
        let mut ground: Vec<usize> = eps2.iter().flatten().copied().collect();
        if eps2.iter().any(Vec::is_empty) {
            return Err(Error::Diagonal("empty block in eps2".into()));
        }
        minima.sort_unstable();
        ground.sort_unstable();
        if minima != ground {
            return Err(Error::Diagonal("eps2 must partition the least elements of the eps1 blocks".into()));
        }
        Ok(DiagonalSpec { h, eps1, eps2 })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn eps1(&self) -> &[Vec<usize>] {
        &self.eps1
    }

    pub fn eps2(&self) -> &[Vec<usize>] {
        &self.eps2
    }
}

/// D_{ε₁ε₂} = {a : (i ε₁ j ⇒ a_i = a_j) and (i ε₂ j ⇒ a_i θ a_j)}.
pub fn diagonal(spec: &DiagonalSpec, theta: &Partition) -> Result<Relation> {
    Relation::from_predicate(theta.k(), spec.h, |a| {
        spec.eps1.iter().all(|b| b.iter().all(|&i| a[i] == a[b[0]]))
            && spec.eps2.iter().all(|b| b.iter().all(|&i| theta.related(a[i], a[b[0]])))
    })
}

/// Recognizes τ as D_{ε₁ε₂} through θ. ε₁ is the equality pattern of τ; ε₂ is its θ-pattern on
/// the ε₁-minima, taken discrete when θ = ∇ (the finest choice).
pub fn is_diagonal_through(tau: &Relation, theta: &Partition) -> Result<Option<DiagonalSpec>> {
    super::saturate::same_domain(tau, theta)?;
    if tau.is_empty() {
        return Ok(None);
    }
    let h = tau.arity();
    let tuples = tau.tuples();
    let eps1 = group(h, |i, j| tuples.iter().all(|a| a[i] == a[j]));
    let minima: Vec<usize> = eps1.iter().map(|b| b[0]).collect();
    let eps2 = if theta.is_indiscrete() {
        minima.iter().map(|&m| vec![m]).collect()
    } else {
        let g = group(minima.len(), |x, y| tuples.iter().all(|a| theta.related(a[minima[x]], a[minima[y]])));
        g.into_iter().map(|b| b.into_iter().map(|x| minima[x]).collect()).collect()
    };
    let spec = DiagonalSpec::new(h, eps1, eps2)?;
    Ok((diagonal(&spec, theta)? == *tau).then_some(spec))
}

/// Blocks of an equivalence on 0..n given by a relatedness test against block leaders.
fn group(n: usize, mut related: impl FnMut(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match blocks.iter_mut().find(|b| related(b[0], i)) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::eta;

    fn theta() -> Partition {
        Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap()
    }

    #[test]
    fn extreme_specs() {
        let all = DiagonalSpec::new(3, vec![vec![0, 1, 2]], vec![vec![0]]).unwrap();
        let d = diagonal(&all, &theta()).unwrap();
        assert_eq!(d.tuples(), (0..4).map(|x| vec![x, x, x]).collect::<Vec<_>>());
        let none = DiagonalSpec::new(3, vec![vec![0], vec![1], vec![2]], vec![vec![0], vec![1], vec![2]]).unwrap();
        assert!(diagonal(&none, &theta()).unwrap().is_full());
    }

    #[test]
    fn recognizes_eta() {
        let spec = is_diagonal_through(&eta(&theta(), 3).unwrap(), &theta()).unwrap().unwrap();
        assert_eq!(spec.eps1(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(spec.eps2(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn rejects_non_diagonal() {
        let r = Relation::from_tuples(4, 2, [[0, 1], [1, 0]]).unwrap();
        assert_eq!(is_diagonal_through(&r, &theta()).unwrap(), None);
    }

    #[test]
    fn malformed_specs() {
        assert!(DiagonalSpec::new(3, vec![vec![0, 1]], vec![vec![0]]).is_err());
        assert!(DiagonalSpec::new(3, vec![vec![0, 1], vec![2]], vec![vec![0, 1], vec![2]]).is_err());
        assert!(DiagonalSpec::new(2, vec![vec![0], vec![1]], vec![vec![0]]).is_err());
    }
}
