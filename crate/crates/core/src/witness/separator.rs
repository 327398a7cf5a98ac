use crate::error::{Error, Result};
use crate::finite::{Elem, Operation, Partition};

/// The least (a, b) with a θ b and a ≠ b.
pub fn least_pair_in(theta: &Partition) -> Option<(Elem, Elem)> {
    theta.blocks().iter().filter(|b| b.len() > 1).map(|b| (b[0], b[1])).min()
}

/// The least (a, b) with (a, b) ∉ θ.
pub fn least_pair_out(theta: &Partition) -> Option<(Elem, Elem)> {
    let k = theta.k() as Elem;
    (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).find(|&(a, b)| !theta.related(a, b))
}

fn check_out(theta: &Partition, a: Elem, b: Elem) -> Result<()> {
    let k = theta.k();
    for x in [a, b] {
        if x as usize >= k {
            return Err(Error::Element { elem: x as usize, k });
        }
    }
    if theta.related(a, b) {
        return Err(Error::Precondition(format!("({a}, {b}) lies in θ")));
    }
    Ok(())
}

/// Sends the θ-class of (a, …, a) to `outputs[0]`, the θ-class of the tuple with b at position j
/// to `outputs[j]`, everything else to `default`. Arity is `outputs.len()`.
pub fn pattern_separator(theta: &Partition, a: Elem, b: Elem, outputs: &[Elem], default: Elem) -> Result<Operation> {
    check_out(theta, a, b)?;
    if outputs.is_empty() {
        return Err(Error::Range("a separator needs at least one output".into()));
    }
    let (ca, cb) = (theta.class_of(a), theta.class_of(b));
    Operation::from_fn(theta.k(), outputs.len(), |x| {
        let mut off = x.iter().enumerate().filter(|&(_, &v)| theta.class_of(v) != ca);
        match (off.next(), off.next()) {
            (None, _) => outputs[0],
            (Some((j, &v)), None) if j > 0 && theta.class_of(v) == cb => outputs[j],
            _ => default,
        }
    })
}

/// h-ary f: (a,…,a) ↦ u₁, (a,b,a,…,a) ↦ u₂, …, (a,…,a,b) ↦ u_h up to θ, otherwise u₁.
pub fn separator_f(u: &[Elem], a: Elem, b: Elem, theta: &Partition) -> Result<Operation> {
    let first = *u.first().ok_or_else(|| Error::Range("empty tuple".into()))?;
    pattern_separator(theta, a, b, u, first)
}

/// m-ary h: the same patterns with default branch u_m.
pub fn separator_h(u: &[Elem], a: Elem, b: Elem, theta: &Partition) -> Result<Operation> {
    if u.len() < 2 {
        return Err(Error::Range(format!("separator_h needs m ≥ 2, got {}", u.len())));
    }
    pattern_separator(theta, a, b, u, u[u.len() - 1])
}

/// The (h−1)-ary g built from the vectors W₁, …, W_h for u ∈ η∖ρ: W₁ = (a,…,a), W₂ has b last,
/// W_i (i ≥ 3) has c at position i−2. The whole θ-class of W₁ other than W₂ goes to u₁.
pub fn eta_separator(u: &[Elem], theta: &Partition) -> Result<Operation> {
    let h = u.len();
    if h < 2 {
        return Err(Error::Range(format!("η-separator needs h ≥ 2, got {h}")));
    }
    let (a, b) = least_pair_in(theta).ok_or_else(|| Error::Precondition("θ is the diagonal".into()))?;
    let c = (0..theta.k() as Elem)
        .find(|&c| !theta.related(a, c))
        .ok_or_else(|| Error::Precondition("θ is the full relation".into()))?;
    let n = h - 1;
    let mut w: Vec<Vec<Elem>> = vec![vec![a; n], vec![a; n]];
    w[1][n - 1] = b;
    for i in 3..=h {
        let mut v = vec![a; n];
        v[i - 3] = c;
        w.push(v);
    }
    Operation::from_fn(theta.k(), n, |x| {
        if x == w[1].as_slice() {
            u[1]
        } else if theta.related_tuples(x, &w[0]) {
            u[0]
        } else if let Some(i) = (2..h - 1).find(|&i| theta.related_tuples(x, &w[i])) {
            u[i]
        } else {
            u[h - 1]
        }
    })
}

/// g₁ (binary) and g₂ (ternary) for the prime affine case.
pub fn affine_separators(
    theta: &Partition,
    pair_in: (Elem, Elem),
    pair_out: (Elem, Elem),
) -> Result<(Operation, Operation)> {
    let (a, b) = pair_in;
    if a == b || !theta.related(a, b) {
        return Err(Error::Precondition(format!("({a}, {b}) is not a nontrivial θ-pair")));
    }
    let (c, d) = pair_out;
    check_out(theta, c, d)?;
    let k = theta.k();
    let g1 = Operation::from_fn(k, 2, |x| if [[a, a], [a, b], [b, a]].contains(&[x[0], x[1]]) { a } else { b })?;
    let g2 = Operation::from_fn(k, 3, |x| if theta.related_tuples(x, &[c, c, d]) { d } else { c })?;
    Ok((g1, g2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{preserves, tuple::tuples};
    use crate::fixtures::{theta1, upsilon1};

    #[test]
    fn separator_f_breaks_upsilon1() {
        let t = theta1();
        let f = separator_f(&[1, 2, 5], 0, 2, &t).unwrap();
        assert_eq!(f.apply(&[0, 0, 0]), 1);
        assert!(preserves(&f, &t.to_relation()).unwrap());
        assert!(!preserves(&f, &upsilon1()).unwrap());
    }

    #[test]
    fn separator_h_maps_patterns_to_u() {
        let t = theta1();
        let u = [3, 1, 4, 1];
        let h = separator_h(&u, 0, 2, &t).unwrap();
        for j in 0..4 {
            let mut x = [0; 4];
            if j > 0 {
                x[j] = 2;
            }
            assert_eq!(h.apply(&x), u[j]);
        }
        assert!(preserves(&h, &t.to_relation()).unwrap());
    }

    #[test]
    fn separators_constant_on_theta_branches() {
        let t = theta1();
        let f = separator_f(&[1, 2, 5], 0, 2, &t).unwrap();
        for x in tuples(6, 3) {
            for y in tuples(6, 3) {
                if t.related_tuples(&x, &y) {
                    assert_eq!(f.apply(&x), f.apply(&y));
                }
            }
        }
    }

    #[test]
    fn rejects_theta_pair() {
        assert!(separator_f(&[1, 2, 5], 0, 1, &theta1()).is_err());
    }

    #[test]
    fn affine_g1_definition() {
        let t = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let (g1, g2) = affine_separators(&t, (0, 1), (0, 2)).unwrap();
        assert_eq!(g1.apply(&[0, 0]), 0);
        assert_eq!(g1.apply(&[1, 0]), 0);
        assert_eq!(g1.apply(&[2, 3]), 1);
        assert_eq!(g2.apply(&[1, 0, 3]), 2);
        assert_eq!(g2.apply(&[1, 0, 1]), 0);
    }
}
