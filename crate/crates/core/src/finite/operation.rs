use std::fmt;

use super::tuple::{cells, check_k, next_tuple, rank, Elem};
use crate::error::{Error, Result};

/// An n-ary operation on E_k as a value table in lexicographic argument order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Operation {
    k: usize,
    arity: usize,
    table: Vec<Elem>,
}

impl Operation {
    pub fn new(k: usize, arity: usize, table: Vec<Elem>) -> Result<Self> {
        check_k(k)?;
        if arity == 0 {
            return Err(Error::Operation("arity must be at least 1".into()));
        }
        let n = cells(k, arity)?;
        if table.len() != n {
            return Err(Error::Operation(format!("expected {n} entries, found {}", table.len())));
        }
        if let Some(&x) = table.iter().find(|&&x| x as usize >= k) {
            return Err(Error::Element { elem: x as usize, k });
        }
        Ok(Operation { k, arity, table })
    }

    /// Tabulates `f` over E_k^n.
    pub fn from_fn(k: usize, arity: usize, mut f: impl FnMut(&[Elem]) -> Elem) -> Result<Self> {
        check_k(k)?;
        let n = cells(k, arity)?;
        let mut table = Vec::with_capacity(n);
        let mut x = vec![0; arity];
        loop {
            table.push(f(&x));
            if !next_tuple(k, &mut x) {
                break;
            }
        }
        Self::new(k, arity, table)
    }

    /// The i-th n-ary projection.
    pub fn projection(k: usize, arity: usize, i: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::Range(format!("projection index {i} for arity {arity}")));
        }
        Self::from_fn(k, arity, |x| x[i])
    }

    pub fn constant(k: usize, arity: usize, c: Elem) -> Result<Self> {
        Self::from_fn(k, arity, |_| c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: &[Elem]) -> Elem {
        debug_assert_eq!(x.len(), self.arity);
        self.table[rank(self.k, x)]
    }

    /// f(x, …, x) = x for all x.
    pub fn is_idempotent(&self) -> bool {
        (0..self.k).all(|x| self.apply(&vec![x as Elem; self.arity]) == x as Elem)
    }

    /// f returns x whenever at most one argument differs from x. Requires arity ≥ 3.
    pub fn is_near_unanimity(&self) -> bool {
        if self.arity < 3 {
            return false;
        }
        let mut args = vec![0; self.arity];
        for x in 0..self.k as Elem {
            for y in 0..self.k as Elem {
                for pos in 0..self.arity {
                    args.fill(x);
                    args[pos] = y;
                    if self.apply(&args) != x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Ternary near-unanimity.
    pub fn is_majority(&self) -> bool {
        self.arity == 3 && self.is_near_unanimity()
    }
}

impl fmt::Debug for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operation(k={}, arity={}, table={:?})", self.k, self.arity, self.table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layout_is_row_major() {
        let f = Operation::from_fn(3, 2, |x| (x[0] * 3 + x[1]) as Elem % 3).unwrap();
        assert_eq!(f.table(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert_eq!(f.apply(&[2, 1]), 1);
    }

    #[test]
    fn projections_and_constants() {
        let p = Operation::projection(4, 3, 1).unwrap();
        assert_eq!(p.apply(&[0, 3, 2]), 3);
        assert!(p.is_idempotent());
        assert!(!p.is_near_unanimity());
        assert!(!Operation::constant(4, 1, 0).unwrap().is_idempotent());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(Operation::new(2, 2, vec![0, 1, 1]).is_err());
        assert!(Operation::new(2, 1, vec![0, 2]).is_err());
    }

    #[test]
    fn median_on_chain_is_majority() {
        let m = Operation::from_fn(4, 3, |x| {
            let mut v = x.to_vec();
            v.sort();
            v[1]
        })
        .unwrap();
        assert!(m.is_majority());
    }
}
