use crate::error::{Error, Result};
use crate::finite::tuple::{cells, check_k};
use crate::finite::{Elem, Operation};

/// Number of n-ary operations on E_k, when it fits in a u64.
pub fn operation_count(k: usize, n: usize) -> Option<u64> {
    let size = cells(k, n).ok()?;
    (0..size).try_fold(1u64, |acc, _| acc.checked_mul(k as u64))
}

/// The operation whose table, read as base-k digits with the first entry most significant,
/// spells `index`. Index order is lexicographic table order.
pub fn operation_at(k: usize, n: usize, mut index: u64) -> Result<Operation> {
    let size = cells(k, n)?;
    let mut table = vec![0 as Elem; size];
    for slot in table.iter_mut().rev() {
        *slot = (index % k as u64) as Elem;
        index /= k as u64;
    }
    Operation::new(k, n, table)
}

/// Every n-ary operation on E_k in lexicographic table order.
#[derive(Debug, Clone)]
pub struct Operations {
    k: usize,
    n: usize,
    table: Vec<Elem>,
    done: bool,
}

impl Iterator for Operations {
    type Item = Operation;

    fn next(&mut self) -> Option<Operation> {
        if self.done {
            return None;
        }
        let op = Operation::new(self.k, self.n, self.table.clone()).expect("in range");
        self.done = !crate::finite::tuple::next_tuple(self.k, &mut self.table);
        Some(op)
    }
}

/// Streams all k^(k^n) operations, refusing with an inconclusive error beyond `max_candidates`.
pub fn enumerate_operations(k: usize, n: usize, max_candidates: u64) -> Result<Operations> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::Range("arity must be at least 1".into()));
    }
    match operation_count(k, n) {
        Some(c) if c <= max_candidates => {}
        _ => {
            return Err(Error::Inconclusive(format!("{k}^({k}^{n}) operations exceed the budget of {max_candidates}")))
        }
    }
    Ok(Operations { k, n, table: vec![0; cells(k, n)?], done: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_operations(2, 1, 1 << 20).unwrap().count(), 4);
        assert_eq!(enumerate_operations(3, 1, 1 << 20).unwrap().count(), 27);
        assert_eq!(enumerate_operations(3, 2, 1 << 20).unwrap().count(), 19683);
        assert_eq!(operation_count(4, 2), Some(1 << 32));
        assert!(enumerate_operations(4, 2, 1000).is_err());
    }

    #[test]
    fn index_order_matches_stream() {
        for (i, op) in enumerate_operations(3, 1, 100).unwrap().enumerate() {
            assert_eq!(operation_at(3, 1, i as u64).unwrap(), op);
        }
    }

    #[test]
    fn stream_is_duplicate_free() {
        let all: std::collections::HashSet<_> = enumerate_operations(2, 2, 100).unwrap().collect();
        assert_eq!(all.len(), 16);
    }
}
