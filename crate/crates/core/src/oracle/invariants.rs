use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::finite::tuple::cells;
use crate::finite::{preserves, Operation, Relation};

/// Largest k^h for which all 2^(k^h) candidate relations are enumerated.
pub const MAX_INVARIANT_CELLS: usize = 24;

/// All h-ary relations on E_k preserved by every operation of `ops`, in order of the candidate
/// bitmask (bit r set means the tuple of rank r is present).
pub fn invariants_h(k: usize, ops: &[Operation], h: usize) -> Result<Vec<Relation>> {
    if let Some(op) = ops.iter().find(|op| op.k() != k) {
        return Err(Error::IncompatibleDomains { left: k, right: op.k() });
    }
    let size = cells(k, h)?;
    if size > MAX_INVARIANT_CELLS {
        return Err(Error::Inconclusive(format!("2^{size} candidate relations exceed the budget")));
    }
    let total: u64 = 1 << size;
    Ok((0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let mut bits = FixedBitSet::with_capacity(size);
            for r in 0..size {
                if mask >> r & 1 == 1 {
                    bits.insert(r);
                }
            }
            let rel = Relation::from_bits(k, h, bits);
            ops.iter().all(|f| preserves(f, &rel).expect("same domain")).then_some(rel)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections_keep_everything() {
        let p = Operation::projection(2, 2, 0).unwrap();
        assert_eq!(invariants_h(2, &[p], 2).unwrap().len(), 16);
    }

    #[test]
    fn all_unary_maps_on_e3() {
        let ops: Vec<Operation> = super::super::enumerate_operations(3, 1, 100).unwrap().collect();
        let inv = invariants_h(3, &ops, 2).unwrap();
        let names: Vec<Vec<Vec<u8>>> = inv.iter().map(Relation::tuples).collect();
        assert_eq!(inv.len(), 3);
        assert!(names.contains(&vec![]));
        assert!(names.contains(&Relation::delta(3).unwrap().tuples()));
        assert!(names.contains(&Relation::nabla(3).unwrap().tuples()));
    }

    #[test]
    fn antitone_in_the_operation_set() {
        let ops: Vec<Operation> = super::super::enumerate_operations(2, 1, 100).unwrap().collect();
        let small = invariants_h(2, &ops[..2], 2).unwrap();
        let big = invariants_h(2, &ops, 2).unwrap();
        assert!(big.iter().all(|r| small.contains(r)));
        assert!(big.len() <= small.len());
    }
}
