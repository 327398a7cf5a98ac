use std::fmt;

use fixedbitset::FixedBitSet;

use super::tuple::{cells, check_k, next_tuple, rank, unrank, Elem};
use crate::error::{Error, Result};

/// An h-ary relation on E_k, stored as a bitset over the lexicographic ranks of E_k^h.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    k: usize,
    arity: usize,
    bits: FixedBitSet,
}

impl Relation {
    /// The empty h-ary relation.
    pub fn empty(k: usize, arity: usize) -> Result<Self> {
        check_k(k)?;
        if arity == 0 {
            return Err(Error::Range("arity must be at least 1".into()));
        }
        let n = cells(k, arity)?;
        Ok(Relation { k, arity, bits: FixedBitSet::with_capacity(n) })
    }

    /// E_k^h.
    pub fn full(k: usize, arity: usize) -> Result<Self> {
        let mut r = Self::empty(k, arity)?;
        r.bits.insert_range(..);
        Ok(r)
    }

    /// The relation holding exactly the given tuples. Duplicates collapse.
    pub fn from_tuples<I, T>(k: usize, arity: usize, tuples: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<[Elem]>,
    {
        let mut r = Self::empty(k, arity)?;
        for t in tuples {
            r.insert(t.as_ref())?;
        }
        Ok(r)
    }

    /// The relation {a ∈ E_k^h : pred(a)}.
    pub fn from_predicate(k: usize, arity: usize, mut pred: impl FnMut(&[Elem]) -> bool) -> Result<Self> {
        let mut r = Self::empty(k, arity)?;
        let mut t = vec![0; arity];
        let mut i = 0;
        loop {
            if pred(&t) {
                r.bits.insert(i);
            }
            i += 1;
            if !next_tuple(k, &mut t) {
                break;
            }
        }
        Ok(r)
    }

    /// Builds a relation directly from a rank bitset of length k^h.
    pub(crate) fn from_bits(k: usize, arity: usize, bits: FixedBitSet) -> Self {
        debug_assert_eq!(bits.len(), k.pow(arity as u32));
        Relation { k, arity, bits }
    }

    /// Δ_{E_k} as a binary relation.
    pub fn delta(k: usize) -> Result<Self> {
        Self::from_tuples(k, 2, (0..k).map(|x| [x as Elem, x as Elem]))
    }

    /// ∇_{E_k} = E_k².
    pub fn nabla(k: usize) -> Result<Self> {
        Self::full(k, 2)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of tuples.
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// True when the relation is all of E_k^h.
    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    /// k^h.
    pub fn cells(&self) -> usize {
        self.bits.len()
    }

    pub fn rank(&self, t: &[Elem]) -> usize {
        rank(self.k, t)
    }

    pub fn unrank(&self, r: usize) -> Vec<Elem> {
        let mut t = vec![0; self.arity];
        unrank(self.k, r, &mut t);
        t
    }

    /// Membership. Tuples of the wrong length or with out-of-range elements are not members.
    pub fn contains(&self, t: &[Elem]) -> bool {
        t.len() == self.arity && t.iter().all(|&x| (x as usize) < self.k) && self.bits.contains(rank(self.k, t))
    }

    #[inline]
    pub fn contains_rank(&self, r: usize) -> bool {
        self.bits.contains(r)
    }

    /// Adds a tuple. Returns true when it was not present before.
    pub fn insert(&mut self, t: &[Elem]) -> Result<bool> {
        self.check_tuple(t)?;
        let r = rank(self.k, t);
        Ok(!self.bits.put(r))
    }

    /// Removes a tuple. Returns true when it was present.
    pub fn remove(&mut self, t: &[Elem]) -> Result<bool> {
        self.check_tuple(t)?;
        let r = rank(self.k, t);
        let was = self.bits.contains(r);
        self.bits.set(r, false);
        Ok(was)
    }

    fn check_tuple(&self, t: &[Elem]) -> Result<()> {
        if t.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, found: t.len() });
        }
        if let Some(&x) = t.iter().find(|&&x| (x as usize) >= self.k) {
            return Err(Error::Element { elem: x as usize, k: self.k });
        }
        Ok(())
    }

    /// Ranks of the member tuples, ascending.
    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Member tuples in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<Elem>> + '_ {
        self.bits.ones().map(move |r| self.unrank(r))
    }

    /// Member tuples in lexicographic order, collected.
    pub fn tuples(&self) -> Vec<Vec<Elem>> {
        self.iter().collect()
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    fn same_shape(&self, other: &Relation) -> Result<()> {
        if self.k != other.k {
            return Err(Error::IncompatibleDomains { left: self.k, right: other.k });
        }
        if self.arity != other.arity {
            return Err(Error::Arity { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.same_shape(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(Relation::from_bits(self.k, self.arity, bits))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_shape(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(Relation::from_bits(self.k, self.arity, bits))
    }

    pub fn difference(&self, other: &Relation) -> Result<Relation> {
        self.same_shape(other)?;
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Ok(Relation::from_bits(self.k, self.arity, bits))
    }

    /// self ⊆ other.
    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    /// E_k^h minus self.
    pub fn complement(&self) -> Relation {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Relation::from_bits(self.k, self.arity, bits)
    }

    fn require_binary(&self) -> Result<()> {
        if self.arity != 2 {
            return Err(Error::Arity { expected: 2, found: self.arity });
        }
        Ok(())
    }

    /// {(a,c) : ∃b, (a,b) ∈ self and (b,c) ∈ other}.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.require_binary()?;
        self.same_shape(other)?;
        let k = self.k;
        let mut bits = FixedBitSet::with_capacity(k * k);
        for r in self.bits.ones() {
            let (a, b) = (r / k, r % k);
            for c in 0..k {
                if other.bits.contains(b * k + c) {
                    bits.insert(a * k + c);
                }
            }
        }
        Ok(Relation::from_bits(k, 2, bits))
    }

    /// {(b,a) : (a,b) ∈ self}.
    pub fn inverse(&self) -> Result<Relation> {
        self.require_binary()?;
        self.permute(&[1, 0])
    }

    /// {(a_σ(0), …, a_σ(h−1)) : a ∈ self} for σ given in one-line notation over 0..h.
    pub fn permute(&self, sigma: &[usize]) -> Result<Relation> {
        check_index_permutation(sigma, self.arity)?;
        let k = self.k;
        let mut bits = FixedBitSet::with_capacity(self.bits.len());
        let mut a = vec![0; self.arity];
        let mut b = vec![0; self.arity];
        for r in self.bits.ones() {
            unrank(k, r, &mut a);
            for (slot, &s) in b.iter_mut().zip(sigma) {
                *slot = a[s];
            }
            bits.insert(rank(k, &b));
        }
        Ok(Relation::from_bits(k, self.arity, bits))
    }

    pub fn is_reflexive(&self) -> Result<bool> {
        self.require_binary()?;
        Ok((0..self.k).all(|x| self.bits.contains(x * self.k + x)))
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        self.require_binary()?;
        let k = self.k;
        Ok(self.bits.ones().all(|r| self.bits.contains((r % k) * k + r / k)))
    }

    pub fn is_antisymmetric(&self) -> Result<bool> {
        self.require_binary()?;
        let k = self.k;
        Ok(self.bits.ones().all(|r| r / k == r % k || !self.bits.contains((r % k) * k + r / k)))
    }

    pub fn is_transitive(&self) -> Result<bool> {
        self.compose(self)?.is_subset(self)
    }

    /// Reflexive, symmetric and transitive.
    pub fn is_equivalence(&self) -> Result<bool> {
        Ok(self.is_reflexive()? && self.is_symmetric()? && self.is_transitive()?)
    }
}

/// Validates a permutation of 0..n given in one-line notation.
pub fn check_index_permutation(sigma: &[usize], n: usize) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::Permutation(format!("expected {n} indices, found {}", sigma.len())));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::Permutation(format!("{sigma:?} is not a permutation of 0..{n}")));
        }
    }
    Ok(())
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(k={}, arity={}, {{", self.k, self.arity)?;
        for (i, t) in self.iter().enumerate() {
            if i == 32 {
                write!(f, ", … {} total", self.len())?;
                break;
            }
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t:?}")?;
        }
        write!(f, "}})")
    }
}
