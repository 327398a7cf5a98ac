//! Tuples over E_k and their lexicographic ranks.

use crate::error::{Error, Result};

/// An element of E_k.
pub type Elem = u8;

/// Upper bound on k^h for any materialized relation or operation table.
pub const MAX_CELLS: usize = 1 << 28;

/// Returns k^h, or an error when it exceeds [`MAX_CELLS`].
pub fn cells(k: usize, h: usize) -> Result<usize> {
    let mut n: usize = 1;
    for _ in 0..h {
        n = n.checked_mul(k).filter(|&n| n <= MAX_CELLS).ok_or_else(|| Error::TooLarge(format!("{k}^{h} cells")))?;
    }
    Ok(n)
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if (2..=255).contains(&k) {
        Ok(())
    } else {
        Err(Error::DomainSize(k))
    }
}

/// Lexicographic rank of `t` among all tuples of its length over E_k.
#[inline]
pub fn rank(k: usize, t: &[Elem]) -> usize {
    t.iter().fold(0, |r, &x| r * k + x as usize)
}

/// Inverse of [`rank`]: writes the tuple of rank `r` into `out`.
#[inline]
pub fn unrank(k: usize, mut r: usize, out: &mut [Elem]) {
    for slot in out.iter_mut().rev() {
        *slot = (r % k) as Elem;
        r /= k;
    }
}

/// Advances `t` to its lexicographic successor. Returns false after the last tuple.
#[inline]
pub fn next_tuple(k: usize, t: &mut [Elem]) -> bool {
    for slot in t.iter_mut().rev() {
        if (*slot as usize) + 1 < k {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

/// Iterator over E_k^h in lexicographic order.
#[derive(Debug, Clone)]
pub struct Tuples {
    k: usize,
    cur: Vec<Elem>,
    done: bool,
}

impl Iterator for Tuples {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        self.done = !next_tuple(self.k, &mut self.cur);
        Some(out)
    }
}

/// All tuples of E_k^h in lexicographic order.
pub fn tuples(k: usize, h: usize) -> Tuples {
    Tuples { k, cur: vec![0; h], done: false }
}

/// All tuples of a cartesian product of element lists, lexicographic in list order.
pub fn product(lists: &[&[Elem]]) -> Vec<Vec<Elem>> {
    let mut out = vec![Vec::with_capacity(lists.len())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for &x in *list {
                let mut t = prefix.clone();
                t.push(x);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Visits every tuple of a cartesian product until `visit` returns true. Returns whether it did.
pub fn product_any(lists: &[&[Elem]], mut visit: impl FnMut(&[Elem]) -> bool) -> bool {
    if lists.iter().any(|l| l.is_empty()) {
        return false;
    }
    let n = lists.len();
    let mut idx = vec![0usize; n];
    let mut cur: Vec<Elem> = lists.iter().map(|l| l[0]).collect();
    loop {
        if visit(&cur) {
            return true;
        }
        let mut p = n;
        loop {
            if p == 0 {
                return false;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < lists[p].len() {
                cur[p] = lists[p][idx[p]];
                break;
            }
            idx[p] = 0;
            cur[p] = lists[p][0];
        }
    }
}

/// True when `t` has two equal components.
pub fn has_repeat(t: &[Elem]) -> bool {
    t.iter().enumerate().any(|(i, x)| t[i + 1..].contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_roundtrip() {
        let mut buf = [0u8; 3];
        for (r, t) in tuples(4, 3).enumerate() {
            assert_eq!(rank(4, &t), r);
            unrank(4, r, &mut buf);
            assert_eq!(&buf[..], &t[..]);
        }
        assert_eq!(tuples(4, 3).count(), 64);
    }

    #[test]
    fn zero_arity_has_one_tuple() {
        assert_eq!(tuples(3, 0).count(), 1);
    }

    #[test]
    fn product_order() {
        let p = product(&[&[1, 0], &[2, 3]]);
        assert_eq!(p, vec![vec![1, 2], vec![1, 3], vec![0, 2], vec![0, 3]]);
        let mut seen = Vec::new();
        product_any(&[&[1, 0], &[2, 3]], |t| {
            seen.push(t.to_vec());
            false
        });
        assert_eq!(seen, p);
    }

    #[test]
    fn cell_limit() {
        assert_eq!(cells(12, 4).unwrap(), 20736);
        assert!(cells(12, 12).is_err());
    }
}
