//! Submaximal clones of Pol(θ) on a finite set E_k.
//!
//! For a nontrivial equivalence relation θ and a relation ρ from one of Rosenberg's six
//! classes, [`classify::decide`] tells whether Pol(θ) ∩ Pol(ρ) is maximal in Pol(θ), names the
//! criterion that fired and attaches certificates: witness operations, intermediate relations
//! and transversals. [`oracle`] re-derives every construction by literal quantifier loops and
//! searches separating operations exhaustively.

pub mod classify;
pub mod constructions;
pub mod error;
pub mod finite;
pub mod fixtures;
pub mod oracle;
pub mod witness;

pub use error::{Error, Result};
