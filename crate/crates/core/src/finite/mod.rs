//! Domains, tuples, relations, partitions, operations, permutations and preservation.

mod central;
mod operation;
mod partition;
mod permutation;
mod preserve;
mod relation;
pub mod tuple;

pub use central::{center, is_central, is_totally_reflexive, is_totally_symmetric};
pub use operation::Operation;
pub use partition::Partition;
pub(crate) use permutation::is_prime;
pub use permutation::{is_prime_permutation, Permutation};
pub use preserve::{preserves, preserves_all, preserves_naive};
pub use relation::{check_index_permutation, Relation};
pub use tuple::Elem;

/// Same as [`Relation::compose`].
pub fn compose(rho: &Relation, sigma: &Relation) -> crate::Result<Relation> {
    rho.compose(sigma)
}

/// Same as [`Relation::inverse`].
pub fn inverse(rho: &Relation) -> crate::Result<Relation> {
    rho.inverse()
}
