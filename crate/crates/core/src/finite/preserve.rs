//! The preservation predicate f ▷ ρ.
//!
//! [`preserves`] walks the column choices level by level and merges argument prefixes that
//! induce the same residual function of the remaining arguments. [`preserves_naive`] is the
//! literal |ρ|^n loop and serves as its differential oracle.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::operation::Operation;
use super::relation::Relation;
use super::tuple::Elem;
use crate::error::{Error, Result};

fn check_domains(f: &Operation, rho: &Relation) -> Result<()> {
    if f.k() != rho.k() {
        return Err(Error::IncompatibleDomains { left: f.k(), right: rho.k() });
    }
    Ok(())
}

/// Prefix automaton of an operation: `levels[j][id * k + x]` is the class at level j+1 reached
/// from prefix class `id` by appending x. At the last level the entry is the output value.
struct Automaton {
    levels: Vec<Vec<u32>>,
}

impl Automaton {
    fn build(f: &Operation) -> Automaton {
        Self::from_table(f.k(), f.arity(), f.table().iter().map(|&v| v as u32).collect())
    }

    /// `values[rank]` is the output on the tuple of that lexicographic rank.
    fn from_table(k: usize, n: usize, mut ids: Vec<u32>) -> Automaton {
        let mut levels = vec![Vec::new(); n];
        for j in (0..n).rev() {
            let count = ids.len() / k;
            let mut seen: HashMap<&[u32], u32> = HashMap::new();
            let mut trans: Vec<u32> = Vec::new();
            let mut next_ids = Vec::with_capacity(count);
            for p in 0..count {
                let key = &ids[p * k..(p + 1) * k];
                let id = *seen.entry(key).or_insert_with(|| {
                    let id = (trans.len() / k) as u32;
                    trans.extend_from_slice(key);
                    id
                });
                next_ids.push(id);
            }
            drop(seen);
            levels[j] = trans;
            ids = next_ids;
        }
        Automaton { levels }
    }

    fn width(&self, level: usize, k: usize) -> usize {
        self.levels[level].len() / k
    }
}

/// Cell bound for the row-wise strategy, which tabulates both ρ and f.
const ROW_WISE_CELLS: usize = 1 << 24;

/// True iff applying f row-wise to any n columns drawn from ρ yields a tuple of ρ.
pub fn preserves(f: &Operation, rho: &Relation) -> Result<bool> {
    check_domains(f, rho)?;
    if rho.is_empty() {
        return Ok(true);
    }
    let k = f.k();
    let n = f.arity();
    let h = rho.arity();
    if 2 * rho.len() > rho.cells() && rho.cells() <= ROW_WISE_CELLS && f.table().len() <= ROW_WISE_CELLS {
        return Ok(row_wise(f, rho));
    }
    let cols: Vec<Vec<Elem>> = rho.tuples();
    let auto = Automaton::build(f);
    let mut states: Vec<Vec<u32>> = vec![vec![0; h]];
    for trans in &auto.levels[..n - 1] {
        let mut next: HashSet<Vec<u32>> = HashSet::new();
        for s in &states {
            for c in &cols {
                let s2: Vec<u32> = s.iter().zip(c).map(|(&id, &x)| trans[id as usize * k + x as usize]).collect();
                next.insert(s2);
            }
        }
        states = next.into_iter().collect();
    }
    let last = &auto.levels[n - 1];
    Ok(states.par_iter().all(|s| {
        cols.iter().all(|c| {
            let r = s.iter().zip(c).fold(0usize, |r, (&id, &x)| r * k + last[id as usize * k + x as usize] as usize);
            rho.contains_rank(r)
        })
    }))
}

/// Searches for a matrix whose columns lie in ρ and whose row image does not, one row at a time.
/// A state holds the ρ-prefix class of the image and of each column; states that can no longer
/// leave ρ (image) or enter ρ (some column) are dropped.
fn row_wise(f: &Operation, rho: &Relation) -> bool {
    let k = f.k();
    let n = f.arity();
    let h = rho.arity();
    let auto = Automaton::from_table(k, h, (0..rho.cells()).map(|r| rho.contains_rank(r) as u32).collect());
    // can_in[j][id] / can_out[j][id]: some completion of a level-j prefix lies in / outside ρ
    let mut can_in: Vec<Vec<bool>> = vec![Vec::new(); h + 1];
    let mut can_out: Vec<Vec<bool>> = vec![Vec::new(); h + 1];
    can_in[h] = vec![false, true];
    can_out[h] = vec![true, false];
    for j in (0..h).rev() {
        let w = auto.width(j, k);
        let t = &auto.levels[j];
        can_in[j] = (0..w).map(|id| (0..k).any(|x| can_in[j + 1][t[id * k + x] as usize])).collect();
        can_out[j] = (0..w).map(|id| (0..k).any(|x| can_out[j + 1][t[id * k + x] as usize])).collect();
    }
    let table = f.table();
    let mut states: HashSet<Vec<u32>> = HashSet::from([vec![0; n + 1]]);
    for (i, trans) in auto.levels.iter().enumerate() {
        let w = auto.width(i, k);
        // elements with identical transitions at this level are interchangeable
        let mut sig: HashMap<Vec<u32>, u32> = HashMap::new();
        let cls: Vec<u32> = (0..k)
            .map(|x| {
                let key: Vec<u32> = (0..w).map(|id| trans[id * k + x]).collect();
                let next = sig.len() as u32;
                *sig.entry(key).or_insert(next)
            })
            .collect();
        let mut letters: Vec<Vec<Elem>> = Vec::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut x = vec![0 as Elem; n];
        for &out in table {
            let key: Vec<u32> = x.iter().map(|&e| cls[e as usize]).chain([cls[out as usize]]).collect();
            if seen.insert(key) {
                let mut letter = x.clone();
                letter.push(out);
                letters.push(letter);
            }
            super::tuple::next_tuple(k, &mut x);
        }
        let step = |s: &Vec<u32>, l: &Vec<Elem>| -> Vec<u32> {
            let mut s2: Vec<u32> = Vec::with_capacity(n + 1);
            s2.push(trans[s[0] as usize * k + l[n] as usize]);
            s2.extend(s[1..].iter().zip(l).map(|(&id, &e)| trans[id as usize * k + e as usize]));
            s2
        };
        let states_v: Vec<Vec<u32>> = states.into_iter().collect();
        if i + 1 == h {
            return !states_v.par_iter().any(|s| {
                letters.iter().any(|l| {
                    let s2 = step(s, l);
                    s2[0] == 0 && s2[1..].iter().all(|&c| c == 1)
                })
            });
        }
        let (ci, co) = (&can_in[i + 1], &can_out[i + 1]);
        states = states_v
            .par_iter()
            .fold(HashSet::new, |mut acc, s| {
                for l in &letters {
                    let s2 = step(s, l);
                    if co[s2[0] as usize] && s2[1..].iter().all(|&c| ci[c as usize]) {
                        acc.insert(s2);
                    }
                }
                acc
            })
            .reduce(HashSet::new, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        if states.is_empty() {
            return true;
        }
    }
    unreachable!("the last level returns")
}

/// True iff f preserves every relation in `rels`.
pub fn preserves_all<'a>(f: &Operation, rels: impl IntoIterator<Item = &'a Relation>) -> Result<bool> {
    for r in rels {
        if !preserves(f, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Literal |ρ|^n enumeration of column choices with early exit.
pub fn preserves_naive(f: &Operation, rho: &Relation) -> Result<bool> {
    check_domains(f, rho)?;
    if rho.is_empty() {
        return Ok(true);
    }
    let cols: Vec<Vec<Elem>> = rho.tuples();
    let n = f.arity();
    Ok(cols.par_iter().all(|c0| {
        let mut acc: Vec<Vec<usize>> = vec![vec![0; rho.arity()]; n];
        for (slot, &x) in acc[0].iter_mut().zip(c0) {
            *slot = x as usize;
        }
        naive_level(f, rho, &cols, 1, &mut acc)
    }))
}

fn naive_level(f: &Operation, rho: &Relation, cols: &[Vec<Elem>], level: usize, acc: &mut [Vec<usize>]) -> bool {
    let k = f.k();
    let n = f.arity();
    let table = f.table();
    if level == n {
        let r = acc[n - 1].iter().fold(0usize, |r, &i| r * k + table[i] as usize);
        return rho.contains_rank(r);
    }
    if level == n - 1 {
        let base = &acc[level - 1];
        return cols.iter().all(|c| {
            let r = base.iter().zip(c).fold(0usize, |r, (&i, &x)| r * k + table[i * k + x as usize] as usize);
            rho.contains_rank(r)
        });
    }
    for c in cols {
        let (done, rest) = acc.split_at_mut(level);
        for ((slot, &prev), &x) in rest[0].iter_mut().zip(&done[level - 1]).zip(c) {
            *slot = prev * k + x as usize;
        }
        if !naive_level(f, rho, cols, level + 1, acc) {
            return false;
        }
    }
    true
}
