//! Derived relations: η, ρ_{i,θ}, permuted relations, the β sequence, arity-extended families,
//! ζ, γ′, diagonal relations through θ, h-regular relations, affine relations and graphs.
//!
//! The literal subset form ρ_J is not built separately; it coincides with (ρ_{n,θ})_σ for a
//! suitable σ, and [`permute`] covers that.

mod affine;
mod clique;
mod diagonal;
mod extended;
mod gamma;
mod regular;
mod saturate;

pub use affine::{affine, alpha_1, GroupTable};
pub use clique::MAX_SUBSET_K;
pub use diagonal::{diagonal, is_diagonal_through, DiagonalSpec};
pub use extended::{beta_l, extended_family, varsigma_l, zeta, zeta_l};
pub(crate) use gamma::shape_blocks;
pub use gamma::{default_shape, gamma_prime, gamma_shape, validate_shape, GammaPrime};
pub use regular::{h_regular, is_regular_family, preimage, quotient, quotient_partition, RegularFamily};
pub use saturate::{beta, eta, permutations_of, permute, rho_0_theta, rho_i_theta, symmetric_core, varsigma};

use crate::finite::{Permutation, Relation};

/// {(x, π(x)) : x ∈ E_k}.
pub fn graph(pi: &Permutation) -> Relation {
    pi.graph()
}
