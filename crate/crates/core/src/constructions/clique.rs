//! Subsets S ⊆ E_k with S^h ⊆ ρ, tabulated over bitmasks.

use crate::error::{Error, Result};
use crate::finite::tuple::next_tuple;
use crate::finite::{Elem, Partition, Relation};

/// Largest k for which subset tables are built.
pub const MAX_SUBSET_K: usize = 20;

pub(crate) type Mask = u32;

pub(crate) fn mask_of(xs: &[Elem]) -> Mask {
    xs.iter().fold(0, |m, &x| m | 1 << x)
}

pub(crate) fn class_mask(theta: &Partition, xs: &[Elem]) -> Mask {
    xs.iter().fold(0, |m, &x| m | 1 << theta.class_of(x))
}

/// `ok[S]` holds iff S^h ⊆ ρ.
pub(crate) struct CliqueTable {
    ok: Vec<bool>,
}

impl CliqueTable {
    pub fn new(rho: &Relation) -> Result<Self> {
        let k = rho.k();
        if k > MAX_SUBSET_K {
            return Err(Error::TooLarge(format!("subset tables need k <= {MAX_SUBSET_K}")));
        }
        let mut ok = vec![true; 1 << k];
        let mut t = vec![0; rho.arity()];
        let mut r = 0;
        loop {
            if !rho.contains_rank(r) {
                ok[mask_of(&t) as usize] = false;
            }
            r += 1;
            if !next_tuple(k, &mut t) {
                break;
            }
        }
        for s in 1..ok.len() {
            if ok[s] {
                let mut bits = s;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    if !ok[s ^ low] {
                        ok[s] = false;
                        break;
                    }
                    bits ^= low;
                }
            }
        }
        Ok(CliqueTable { ok })
    }

    #[inline]
    pub fn ok(&self, s: Mask) -> bool {
        self.ok[s as usize]
    }
}

/// Searches one element per class of `classes` such that `accept(U)` holds for U the chosen
/// set; `accept` must be antitone in U so that failing partial choices prune.
pub(crate) fn choose_per_class(theta: &Partition, classes: Mask, accept: &mut impl FnMut(Mask) -> bool) -> bool {
    let list: Vec<usize> = (0..theta.num_blocks()).filter(|&c| classes >> c & 1 == 1).collect();
    fn go(theta: &Partition, list: &[usize], u: Mask, accept: &mut impl FnMut(Mask) -> bool) -> bool {
        if !accept(u) {
            return false;
        }
        match list.split_first() {
            None => true,
            Some((&c, rest)) => theta.blocks()[c].iter().any(|&e| go(theta, rest, u | 1 << e, accept)),
        }
    }
    go(theta, &list, 0, accept)
}
