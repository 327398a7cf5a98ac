use std::fmt;

use super::relation::Relation;
use super::tuple::{check_k, Elem};
use crate::error::{Error, Result};

/// An equivalence relation on E_k as blocks sorted by least element, each block ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    k: usize,
    blocks: Vec<Vec<Elem>>,
    class_of: Vec<usize>,
}

impl Partition {
    /// Validates and canonicalizes a block list.
    pub fn new(k: usize, blocks: Vec<Vec<Elem>>) -> Result<Self> {
        check_k(k)?;
        let mut class_of = vec![usize::MAX; k];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Partition("empty block".into()));
            }
            for &x in block {
                let x = x as usize;
                if x >= k {
                    return Err(Error::Element { elem: x, k });
                }
                if class_of[x] != usize::MAX {
                    return Err(Error::Partition(format!("element {x} occurs twice")));
                }
                class_of[x] = i;
            }
        }
        if let Some(x) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::Partition(format!("element {x} is not covered")));
        }
        Ok(Self::from_class_map(&class_of))
    }

    /// Builds the partition whose classes are the fibres of `labels` (labels are arbitrary).
    pub fn from_class_map(labels: &[usize]) -> Self {
        let k = labels.len();
        let mut blocks: Vec<Vec<Elem>> = Vec::new();
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let mut class_of = vec![0; k];
        for (x, &l) in labels.iter().enumerate() {
            let idx = match seen.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, idx)) => idx,
                None => {
                    seen.push((l, blocks.len()));
                    blocks.push(Vec::new());
                    blocks.len() - 1
                }
            };
            blocks[idx].push(x as Elem);
            class_of[x] = idx;
        }
        Partition { k, blocks, class_of }
    }

    /// Converts an equivalence relation.
    pub fn from_relation(rel: &Relation) -> Result<Self> {
        if !rel.is_equivalence()? {
            return Err(Error::Partition("relation is not an equivalence".into()));
        }
        let k = rel.k();
        let labels: Vec<usize> =
            (0..k).map(|x| (0..k).find(|&y| rel.contains(&[x as Elem, y as Elem])).unwrap()).collect();
        Ok(Self::from_class_map(&labels))
    }

    /// The binary relation {(a,b) : a and b share a block}.
    pub fn to_relation(&self) -> Relation {
        let mut r = Relation::empty(self.k, 2).expect("valid domain");
        for b in &self.blocks {
            for &x in b {
                for &y in b {
                    r.insert(&[x, y]).expect("in range");
                }
            }
        }
        r
    }

    /// Δ_{E_k}.
    pub fn discrete(k: usize) -> Result<Self> {
        Self::new(k, (0..k).map(|x| vec![x as Elem]).collect())
    }

    /// ∇_{E_k}.
    pub fn indiscrete(k: usize) -> Result<Self> {
        Self::new(k, vec![(0..k).map(|x| x as Elem).collect()])
    }

    /// Every partition of E_k, ordered by restricted growth string.
    pub fn all(k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; k];
        loop {
            out.push(Self::from_class_map(&rgs));
            let mut i = k;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let cap = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
                if rgs[i] < cap {
                    rgs[i] += 1;
                    for r in rgs.iter_mut().skip(i + 1) {
                        *r = 0;
                    }
                    break;
                }
            }
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<Elem>] {
        &self.blocks
    }

    /// Number of blocks t.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing x.
    #[inline]
    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x as usize]
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    /// The block containing x.
    pub fn block_of(&self, x: Elem) -> &[Elem] {
        &self.blocks[self.class_of(x)]
    }

    #[inline]
    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a as usize] == self.class_of[b as usize]
    }

    /// Componentwise relatedness of two tuples.
    pub fn related_tuples(&self, a: &[Elem], b: &[Elem]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(&x, &y)| self.related(x, y))
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.k
    }

    pub fn is_indiscrete(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Neither Δ nor ∇.
    pub fn is_nontrivial(&self) -> bool {
        !self.is_discrete() && !self.is_indiscrete()
    }

    /// self ⊆ other as binary relations.
    pub fn refines(&self, other: &Partition) -> bool {
        self.k == other.k && self.blocks.iter().all(|b| b.iter().all(|&x| other.related(b[0], x)))
    }

    /// Largest block size.
    pub fn max_block(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Least element of each block, in block order.
    pub fn representatives(&self) -> Vec<Elem> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// Meet (intersection) of two partitions.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        if self.k != other.k {
            return Err(Error::IncompatibleDomains { left: self.k, right: other.k });
        }
        let labels: Vec<usize> = (0..self.k).map(|x| self.class_of[x] * self.k + other.class_of[x]).collect();
        Ok(Self::from_class_map(&labels))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let parts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}
