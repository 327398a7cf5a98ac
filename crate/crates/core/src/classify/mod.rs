//! Submaximality decisions for Pol(θ) ∩ Pol(ρ) inside Pol(θ), one per relation class, with
//! certificates: witness terms for positive answers, intermediate relations for negative ones.

mod central;
mod chain;
mod equiv;
mod order;
mod regular;

use std::fmt;

pub use central::{central_type, classify_central, theta_closed, transversal, weak_closure_order};
pub use equiv::{decide_equiv_pair, decide_prime_permutation};
pub use order::{decide_partial_order, decide_prime_affine, is_bounded_order};
pub use regular::decide_h_regular;

use crate::constructions::{GroupTable, RegularFamily};
use crate::error::{Error, Result};
use crate::finite::{is_central, is_prime_permutation, Elem, Operation, Partition, Permutation, Relation};
use crate::oracle::{find_separator, Search, SearchBudget};
use crate::witness::WitnessReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decision {
    Submaximal,
    NotSubmaximal,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Submaximal => "Submaximal",
            Decision::NotSubmaximal => "NotSubmaximal",
        })
    }
}

/// The six relation classes of Rosenberg's list that are handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationClass {
    Equivalence,
    PrimePermutation,
    PartialOrder,
    PrimeAffine,
    Central,
    HRegular,
}

impl RelationClass {
    pub const ALL: [RelationClass; 6] = [
        RelationClass::Equivalence,
        RelationClass::PrimePermutation,
        RelationClass::PartialOrder,
        RelationClass::PrimeAffine,
        RelationClass::Central,
        RelationClass::HRegular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationClass::Equivalence => "equiv",
            RelationClass::PrimePermutation => "perm",
            RelationClass::PartialOrder => "order",
            RelationClass::PrimeAffine => "affine",
            RelationClass::Central => "central",
            RelationClass::HRegular => "hregular",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CentralType {
    TypeI,
    TypeII,
    TypeIII { order: usize, transversal: Vec<Elem> },
    None,
}

impl CentralType {
    pub fn name(&self) -> &'static str {
        match self {
            CentralType::TypeI => "I",
            CentralType::TypeII => "II",
            CentralType::TypeIII { .. } => "III",
            CentralType::None => "none",
        }
    }
}

/// Which branch of the decision procedure produced the answer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// θ ⊊ ρ or ρ ⊊ θ.
    EquivNested,
    /// ρ ∩ θ = Δ and ρ ∘ θ = ∇.
    EquivProduct,
    /// Incomparable with ρ ∩ θ ≠ Δ.
    EquivMeet,
    /// Incomparable, ρ ∩ θ = Δ, ρ ∘ θ ≠ ∇.
    EquivJoin,
    PermBelowTheta,
    PermClassMap,
    PermNeither,
    /// θ ∘ ρ ∘ θ ≠ ∇.
    OrderConjugate,
    /// r ∘ r⁻¹ ≠ θ with r = ρ ∩ θ.
    OrderKernel,
    BoundedBlocks,
    AffineAlpha1,
    CentralUnary {
        union_of_classes: bool,
        meets_every_class: bool,
    },
    CentralBinary(CentralType),
    CentralType(CentralType),
    /// h exceeds the number of θ-classes.
    CentralArity,
    /// The first step of the necessity chain that applies.
    CentralChain(String),
    RegularClosed,
    RegularNotClosed,
}

impl Criterion {
    pub fn name(&self) -> String {
        match self {
            Criterion::EquivNested => "(a) nested".into(),
            Criterion::EquivProduct => "(b) product".into(),
            Criterion::EquivMeet => "meet not diagonal".into(),
            Criterion::EquivJoin => "composition not full".into(),
            Criterion::PermBelowTheta => "(a) graph inside theta".into(),
            Criterion::PermClassMap => "(b) permutes classes".into(),
            Criterion::PermNeither => "neither (a) nor (b)".into(),
            Criterion::OrderConjugate => "theta-rho-theta".into(),
            Criterion::OrderKernel => "r-inverse-r".into(),
            Criterion::BoundedBlocks => "bounded-blocks".into(),
            Criterion::AffineAlpha1 => "alpha1".into(),
            Criterion::CentralUnary { union_of_classes, meets_every_class } => {
                match (union_of_classes, meets_every_class) {
                    (true, true) => "unary: union of classes, meets every class".into(),
                    (true, false) => "unary: union of classes".into(),
                    (false, true) => "unary: meets every class".into(),
                    (false, false) => "unary: neither".into(),
                }
            }
            Criterion::CentralBinary(t) => format!("binary central type {}", t.name()),
            Criterion::CentralType(t) => format!("central type {}", t.name()),
            Criterion::CentralArity => "arity exceeds class count".into(),
            Criterion::CentralChain(step) => format!("central type none: {step}"),
            Criterion::RegularClosed => "theta-closed".into(),
            Criterion::RegularNotClosed => "not theta-closed".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Relation(Relation),
    Witness(WitnessReport),
    Elements(Vec<Elem>),
    Note(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub label: String,
    pub payload: Payload,
}

impl Certificate {
    pub fn relation(label: impl Into<String>, r: Relation) -> Self {
        Certificate { label: label.into(), payload: Payload::Relation(r) }
    }

    pub fn witness(label: impl Into<String>, w: WitnessReport) -> Self {
        Certificate { label: label.into(), payload: Payload::Witness(w) }
    }

    pub fn elements(label: impl Into<String>, e: Vec<Elem>) -> Self {
        Certificate { label: label.into(), payload: Payload::Elements(e) }
    }

    pub fn note(label: impl Into<String>, s: impl Into<String>) -> Self {
        Certificate { label: label.into(), payload: Payload::Note(s.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: RelationClass,
    pub decision: Decision,
    pub criterion: Criterion,
    pub central_type: Option<CentralType>,
    pub certificates: Vec<Certificate>,
}

impl Classification {
    pub fn witnesses(&self) -> impl Iterator<Item = (&str, &WitnessReport)> {
        self.certificates.iter().filter_map(|c| match &c.payload {
            Payload::Witness(w) => Some((c.label.as_str(), w)),
            _ => None,
        })
    }

    pub fn relations(&self) -> impl Iterator<Item = (&str, &Relation)> {
        self.certificates.iter().filter_map(|c| match &c.payload {
            Payload::Relation(r) => Some((c.label.as_str(), r)),
            _ => None,
        })
    }
}

/// A relation tagged with its class.
#[derive(Debug, Clone)]
pub enum Tagged {
    Equivalence(Partition),
    PrimePermutation(Permutation),
    PartialOrder(Relation),
    PrimeAffine(GroupTable),
    Central(Relation),
    HRegular(RegularFamily),
}

impl Tagged {
    pub fn class(&self) -> RelationClass {
        match self {
            Tagged::Equivalence(_) => RelationClass::Equivalence,
            Tagged::PrimePermutation(_) => RelationClass::PrimePermutation,
            Tagged::PartialOrder(_) => RelationClass::PartialOrder,
            Tagged::PrimeAffine(_) => RelationClass::PrimeAffine,
            Tagged::Central(_) => RelationClass::Central,
            Tagged::HRegular(_) => RelationClass::HRegular,
        }
    }
}

/// Routes to the class-specific decision after checking the class predicate.
pub fn decide(theta: &Partition, rho: &Tagged) -> Result<Classification> {
    check_theta(theta)?;
    match rho {
        Tagged::Equivalence(p) => decide_equiv_pair(theta, p),
        Tagged::PrimePermutation(pi) => {
            if !is_prime_permutation(pi) {
                return Err(Error::Precondition("not a prime permutation".into()));
            }
            decide_prime_permutation(theta, pi)
        }
        Tagged::PartialOrder(r) => decide_partial_order(theta, r),
        Tagged::PrimeAffine(g) => decide_prime_affine(theta, g),
        Tagged::Central(r) => {
            if !is_central(r) {
                return Err(Error::Precondition("not a central relation".into()));
            }
            classify_central(r, theta).map(|(_, c)| c)
        }
        Tagged::HRegular(t) => decide_h_regular(theta, t),
    }
}

pub(crate) fn check_theta(theta: &Partition) -> Result<()> {
    if theta.is_nontrivial() {
        Ok(())
    } else {
        Err(Error::Precondition("θ is trivial".into()))
    }
}

/// Budget for certificate searches: unary maps up to E₆.
pub const CERTIFICATE_BUDGET: SearchBudget = SearchBudget { max_arity: 1, max_candidates: 1 << 16, time_limit: None };

/// Evidence for Pol(θ) ∩ Pol(ρ) ⊊ Pol(θ) ∩ Pol(σ) ⊊ Pol(θ): σ itself plus an operation for each
/// strict inclusion, taken from the proof's template when it works and from a unary search
/// otherwise.
pub(crate) fn strict_chain(
    label: &str,
    theta: &Partition,
    rho: &Relation,
    sigma: Relation,
    lower: Option<Operation>,
    upper: Option<Operation>,
) -> Result<Vec<Certificate>> {
    let t = theta.to_relation();
    let mut out = vec![Certificate::relation(label, sigma.clone())];
    let steps = [
        ("lower", vec![t.clone(), sigma.clone()], rho.clone(), lower),
        ("upper", vec![t.clone()], sigma.clone(), upper),
    ];
    for (side, preserve, violate, template) in steps {
        let templates: Vec<Operation> = template.iter().cloned().collect();
        let name = format!("{label} {side}");
        match find_separator(&preserve, &violate, &CERTIFICATE_BUDGET, &templates)? {
            Search::Found(op) => {
                out.push(Certificate::witness(name, WitnessReport::new(op, preserve, vec![violate])?));
            }
            Search::Absent => out.push(Certificate::note(name, "no template or unary separator")),
            Search::Inconclusive(why) => match template {
                Some(op) => out.push(Certificate::witness(name, WitnessReport::new(op, preserve, vec![violate])?)),
                None => out.push(Certificate::note(name, format!("inconclusive: {why}"))),
            },
        }
    }
    Ok(out)
}
