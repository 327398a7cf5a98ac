//! Reading input files and checking them against the requested relation class.

use std::fmt;
use std::path::Path;

use subclone::classify::{is_bounded_order, RelationClass, Tagged};
use subclone::constructions::{affine, h_regular, RegularFamily};
use subclone::finite::{is_totally_reflexive, is_totally_symmetric, Elem, Partition, Permutation, Relation};

use crate::format::{parse, Document};

/// A problem with the command line or an input file; exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<subclone::Error> for InputError {
    fn from(e: subclone::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, InputError>;

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(InputError(msg.into()))
}

pub fn read(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// A file holding exactly one partition.
pub fn load_theta(path: &Path) -> Result<(String, Partition)> {
    match read(path)? {
        Document::Partitions(mut ps) if ps.len() == 1 => Ok(ps.pop().expect("one partition")),
        Document::Partitions(ps) => fail(format!("{}: expected one partition, found {}", path.display(), ps.len())),
        d => fail(format!("{}: expected a partition file, found a {} file", path.display(), d.kind())),
    }
}

/// The parsed ρ with its class tag and relational form.
#[derive(Debug, Clone)]
pub struct Rho {
    pub name: String,
    pub tagged: Tagged,
    pub relation: Relation,
}

fn mismatch<T>(kind: RelationClass, what: &str, why: &str) -> Result<T> {
    fail(format!("kind `{}` requires {what}, but {why}", kind.name()))
}

fn permutation_of(k: usize, file_k: Option<usize>, cycles: &[Vec<Elem>]) -> Result<Permutation> {
    if let Some(fk) = file_k.filter(|&fk| fk != k) {
        return fail(format!("permutation is on E_{fk} but theta is on E_{k}"));
    }
    Ok(Permutation::from_cycles(k, cycles)?)
}

/// The permutation whose graph is `r`, if any.
fn as_permutation(r: &Relation) -> Option<Permutation> {
    if r.arity() != 2 || r.len() != r.k() {
        return None;
    }
    let mut images = vec![0 as Elem; r.k()];
    let mut seen = vec![false; r.k()];
    for t in r.iter() {
        if seen[t[0] as usize] {
            return None;
        }
        seen[t[0] as usize] = true;
        images[t[0] as usize] = t[1];
    }
    Permutation::new(images).ok()
}

fn check_binary(kind: RelationClass, what: &str, r: &Relation) -> Result<()> {
    if r.arity() != 2 {
        return mismatch(kind, what, &format!("the relation has arity {}", r.arity()));
    }
    Ok(())
}

fn check_equivalence(r: &Relation) -> Result<Partition> {
    let kind = RelationClass::Equivalence;
    let what = "an equivalence relation";
    check_binary(kind, what, r)?;
    if !r.is_reflexive()? {
        return mismatch(kind, what, "the relation is not reflexive");
    }
    if !r.is_symmetric()? {
        return mismatch(kind, what, "the relation is not symmetric");
    }
    if !r.is_transitive()? {
        return mismatch(kind, what, "the relation is not transitive");
    }
    Ok(Partition::from_relation(r)?)
}

fn check_prime(pi: Permutation) -> Result<Permutation> {
    if !pi.is_prime() {
        return mismatch(
            RelationClass::PrimePermutation,
            "a prime permutation",
            "its cycles do not all have the same prime length",
        );
    }
    Ok(pi)
}

fn check_order(r: &Relation) -> Result<()> {
    let kind = RelationClass::PartialOrder;
    let what = "a bounded partial order";
    check_binary(kind, what, r)?;
    for (ok, name) in [
        (r.is_reflexive()?, "reflexive"),
        (r.is_antisymmetric()?, "antisymmetric"),
        (r.is_transitive()?, "transitive"),
        (is_bounded_order(r)?, "bounded"),
    ] {
        if !ok {
            return mismatch(kind, what, &format!("the relation is not {name}"));
        }
    }
    Ok(())
}

fn check_central(r: &Relation) -> Result<()> {
    let kind = RelationClass::Central;
    let what = "a central relation";
    let k = r.k();
    if r.arity() == 1 {
        if r.is_empty() || r.len() == k {
            return mismatch(kind, what, "a unary central relation must be a nonempty proper subset");
        }
        return Ok(());
    }
    if !is_totally_reflexive(r)? {
        return mismatch(kind, what, "the relation is not totally reflexive");
    }
    if !is_totally_symmetric(r)? {
        return mismatch(kind, what, "the relation is not totally symmetric");
    }
    let center = subclone::finite::center(r)?;
    if center.is_empty() {
        return mismatch(kind, what, "the center is empty");
    }
    if center.len() == k {
        return mismatch(kind, what, "the relation is full");
    }
    Ok(())
}

fn infer(r: &Relation) -> Result<RelationClass> {
    if r.arity() == 2 {
        if r.is_equivalence()? {
            return Ok(RelationClass::Equivalence);
        }
        if as_permutation(r).is_some() {
            return Ok(RelationClass::PrimePermutation);
        }
        if is_bounded_order(r)? {
            return Ok(RelationClass::PartialOrder);
        }
    }
    if check_central(r).is_ok() {
        return Ok(RelationClass::Central);
    }
    fail("could not infer a class: the relation is not an equivalence, a permutation graph, a bounded partial order or a central relation; pass --kind")
}

fn from_relation(name: String, r: Relation, kind: Option<RelationClass>) -> Result<Rho> {
    let kind = match kind {
        Some(k) => k,
        None => infer(&r)?,
    };
    let tagged = match kind {
        RelationClass::Equivalence => Tagged::Equivalence(check_equivalence(&r)?),
        RelationClass::PrimePermutation => {
            check_binary(kind, "a prime permutation", &r)?;
            match as_permutation(&r) {
                Some(pi) => Tagged::PrimePermutation(check_prime(pi)?),
                None => return mismatch(kind, "a prime permutation", "the relation is not the graph of a permutation"),
            }
        }
        RelationClass::PartialOrder => {
            check_order(&r)?;
            Tagged::PartialOrder(r.clone())
        }
        RelationClass::Central => {
            check_central(&r)?;
            Tagged::Central(r.clone())
        }
        RelationClass::PrimeAffine => return mismatch(kind, "a group file", "a relation file was given"),
        RelationClass::HRegular => return mismatch(kind, "a file of partitions", "a relation file was given"),
    };
    Ok(Rho { name, tagged, relation: r })
}

/// Tags ρ, inferring the class when `kind` is absent. `k` is the domain of θ.
pub fn tag(doc: Document, kind: Option<RelationClass>, k: usize) -> Result<Rho> {
    match doc {
        Document::Relation { name, relation } => from_relation(name, relation, kind),
        Document::Partitions(mut ps) => match kind {
            None | Some(RelationClass::Equivalence) | Some(RelationClass::HRegular) => {
                let family = kind == Some(RelationClass::HRegular) || (kind.is_none() && ps.len() > 1);
                if family {
                    let names: Vec<String> = ps.iter().map(|(n, _)| n.clone()).collect();
                    let members = ps.into_iter().map(|(_, p)| p).collect();
                    let f = RegularFamily::new(members)
                        .map_err(|e| InputError(format!("kind `hregular` requires a regular family, but {e}")))?;
                    let relation = h_regular(&f);
                    Ok(Rho { name: names.join("+"), tagged: Tagged::HRegular(f), relation })
                } else if ps.len() != 1 {
                    fail(format!("kind `equiv` requires one partition, found {}", ps.len()))
                } else {
                    let (name, p) = ps.pop().expect("one partition");
                    let relation = p.to_relation();
                    Ok(Rho { name, tagged: Tagged::Equivalence(p), relation })
                }
            }
            Some(other) if ps.len() == 1 => {
                let (name, p) = ps.pop().expect("one partition");
                from_relation(name, p.to_relation(), Some(other))
            }
            Some(other) => fail(format!("kind `{}` cannot be given as a family of partitions", other.name())),
        },
        Document::Permutation { name, k: file_k, cycles } => {
            let pi = permutation_of(k, file_k, &cycles)?;
            let name = name.unwrap_or_else(|| "pi".into());
            match kind {
                None | Some(RelationClass::PrimePermutation) => {
                    let pi = check_prime(pi)?;
                    let relation = pi.graph();
                    Ok(Rho { name, tagged: Tagged::PrimePermutation(pi), relation })
                }
                Some(other) => from_relation(name, pi.graph(), Some(other)),
            }
        }
        Document::Group(g) => match kind {
            None | Some(RelationClass::PrimeAffine) => {
                if !g.is_elementary() {
                    return mismatch(
                        RelationClass::PrimeAffine,
                        "an elementary abelian p-group",
                        "the group is not one",
                    );
                }
                let relation = affine(&g);
                Ok(Rho { name: "affine".into(), tagged: Tagged::PrimeAffine(g), relation })
            }
            Some(other) => fail(format!("kind `{}` cannot be given as a group table", other.name())),
        },
        Document::Operation { .. } => fail("an operation file is not a relation"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use subclone::fixtures::*;

    fn rel(name: &str, r: Relation) -> Document {
        Document::Relation { name: name.into(), relation: r }
    }

    #[test]
    fn inference() {
        assert_eq!(tag(rel("u", upsilon1()), None, 6).unwrap().tagged.class(), RelationClass::Central);
        let eq = rel("t", theta3().to_relation());
        assert_eq!(tag(eq, None, 4).unwrap().tagged.class(), RelationClass::Equivalence);
        let chain = Relation::from_predicate(3, 2, |t| t[0] <= t[1]).unwrap();
        assert_eq!(tag(rel("c", chain), None, 3).unwrap().tagged.class(), RelationClass::PartialOrder);
        let fam = Document::Partitions(vec![("a".into(), theta6()), ("b".into(), theta7())]);
        let rho = tag(fam, None, 12).unwrap();
        assert_eq!(rho.tagged.class(), RelationClass::HRegular);
        assert_eq!(rho.relation, upsilon7());
    }

    #[test]
    fn mismatches_name_the_predicate() {
        let e = tag(rel("u", upsilon1()), Some(RelationClass::PartialOrder), 6).unwrap_err();
        assert!(e.0.contains("arity 3"), "{e}");
        let chain = Relation::from_predicate(3, 2, |t| t[0] <= t[1]).unwrap();
        let e = tag(rel("c", chain), Some(RelationClass::Central), 3).unwrap_err();
        assert!(e.0.contains("totally symmetric"), "{e}");
        let e = tag(rel("t", theta3().to_relation()), Some(RelationClass::PartialOrder), 4).unwrap_err();
        assert!(e.0.contains("antisymmetric"), "{e}");
        let cycle = Document::Permutation { name: None, k: None, cycles: vec![vec![0, 1], vec![2, 3, 4]] };
        let e = tag(cycle, None, 5).unwrap_err();
        assert!(e.0.contains("prime"), "{e}");
    }
}
