use crate::error::{Error, Result};
use crate::finite::{is_prime, Elem, Operation, Partition, Relation};

/// An abelian group (E_k, +, zero) given by its addition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    add: Operation,
    zero: Elem,
}

impl GroupTable {
    pub fn new(add: Operation, zero: Elem) -> Result<Self> {
        if add.arity() != 2 {
            return Err(Error::Group("addition must be binary".into()));
        }
        let k = add.k();
        if zero as usize >= k {
            return Err(Error::Element { elem: zero as usize, k });
        }
        let e = |x: usize| x as Elem;
        for x in 0..k {
            if add.apply(&[zero, e(x)]) != e(x) {
                return Err(Error::Group(format!("{zero} is not an identity")));
            }
            if !(0..k).any(|y| add.apply(&[e(x), e(y)]) == zero) {
                return Err(Error::Group(format!("{x} has no inverse")));
            }
            for y in 0..k {
                if add.apply(&[e(x), e(y)]) != add.apply(&[e(y), e(x)]) {
                    return Err(Error::Group(format!("not abelian: {x}+{y} ≠ {y}+{x}")));
                }
                for z in 0..k {
                    let l = add.apply(&[add.apply(&[e(x), e(y)]), e(z)]);
                    let r = add.apply(&[e(x), add.apply(&[e(y), e(z)])]);
                    if l != r {
                        return Err(Error::Group(format!("not associative at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(GroupTable { add, zero })
    }

    /// Z_k with zero 0.
    pub fn cyclic(k: usize) -> Result<Self> {
        Self::new(Operation::from_fn(k, 2, |x| ((x[0] as usize + x[1] as usize) % k) as Elem)?, 0)
    }

    /// Z_p^n on E_{p^n}, elements read as base-p digit vectors.
    pub fn elementary(p: usize, n: u32) -> Result<Self> {
        let k = p.pow(n);
        Self::new(
            Operation::from_fn(k, 2, |x| {
                let (mut a, mut b, mut out, mut place) = (x[0] as usize, x[1] as usize, 0, 1);
                for _ in 0..n {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out as Elem
            })?,
            0,
        )
    }

    pub fn k(&self) -> usize {
        self.add.k()
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn add(&self) -> &Operation {
        &self.add
    }

    #[inline]
    pub fn sum(&self, a: Elem, b: Elem) -> Elem {
        self.add.apply(&[a, b])
    }

    /// Additive order of x.
    pub fn order(&self, x: Elem) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != self.zero {
            acc = self.sum(acc, x);
            n += 1;
        }
        n
    }

    /// The prime p when every nonzero element has order p.
    pub fn prime_exponent(&self) -> Option<usize> {
        let orders: Vec<usize> =
            (0..self.k()).map(|x| x as Elem).filter(|&x| x != self.zero).map(|x| self.order(x)).collect();
        let p = orders[0];
        (is_prime(p) && orders.iter().all(|&o| o == p)).then_some(p)
    }

    pub fn is_elementary(&self) -> bool {
        self.prime_exponent().is_some()
    }
}

/// α = {(a,b,c,d) : a + b = c + d}.
pub fn affine(g: &GroupTable) -> Relation {
    Relation::from_predicate(g.k(), 4, |t| g.sum(t[0], t[1]) == g.sum(t[2], t[3])).expect("valid group")
}

/// α₁ = {(a,b,c,d) ∈ α : (a,b), (a,c), (a,d) ∈ θ}.
pub fn alpha_1(alpha: &Relation, theta: &Partition) -> Result<Relation> {
    super::saturate::same_domain(alpha, theta)?;
    if alpha.arity() != 4 {
        return Err(Error::Arity { expected: 4, found: alpha.arity() });
    }
    Relation::from_predicate(alpha.k(), 4, |t| {
        alpha.contains(t) && theta.related(t[0], t[1]) && theta.related(t[0], t[2]) && theta.related(t[0], t[3])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_affine() {
        let g = GroupTable::elementary(2, 2).unwrap();
        assert_eq!(g.prime_exponent(), Some(2));
        let a = affine(&g);
        assert_eq!(a.len(), 64);
        assert!(a.contains(&[0, 0, 0, 0]));
        // 0 + 1 = 1 and 2 + 3 = 1 in Z_2^2
        assert!(a.contains(&[0, 1, 2, 3]));
        assert!(!a.contains(&[0, 1, 2, 2]));
    }

    #[test]
    fn exponents() {
        assert_eq!(GroupTable::cyclic(3).unwrap().prime_exponent(), Some(3));
        assert_eq!(GroupTable::cyclic(4).unwrap().prime_exponent(), None);
        assert_eq!(affine(&GroupTable::cyclic(5).unwrap()).len(), 125);
    }

    #[test]
    fn alpha_1_with_delta() {
        let g = GroupTable::cyclic(3).unwrap();
        let a1 = alpha_1(&affine(&g), &Partition::discrete(3).unwrap()).unwrap();
        assert_eq!(a1.tuples(), (0..3).map(|x| vec![x; 4]).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_non_groups() {
        let not_assoc = Operation::from_fn(3, 2, |x| {
            if x[0] == 0 {
                x[1]
            } else if x[1] == 0 {
                x[0]
            } else {
                0
            }
        })
        .unwrap();
        assert!(GroupTable::new(not_assoc, 0).is_err());
        let no_identity = Operation::constant(2, 2, 0).unwrap();
        assert!(GroupTable::new(no_identity, 0).is_err());
    }
}
