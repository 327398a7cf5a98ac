//! Operations built by the proofs: majority and near-unanimity terms for the positive cases,
//! separating templates for the negative ones.

mod majority;
mod separator;

pub use majority::{majority_equiv, near_unanimity, permutation_majority, unary_central_majority};
pub use separator::{
    affine_separators, eta_separator, least_pair_in, least_pair_out, pattern_separator, separator_f, separator_h,
};

use crate::error::Result;
use crate::finite::{preserves, Operation, Relation};

/// An operation with the relations it has to preserve and the ones it has to break.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub operation: Operation,
    pub must_preserve: Vec<Relation>,
    pub must_violate: Vec<Relation>,
    pub verified: bool,
}

impl WitnessReport {
    pub fn new(operation: Operation, must_preserve: Vec<Relation>, must_violate: Vec<Relation>) -> Result<Self> {
        let mut report = WitnessReport { operation, must_preserve, must_violate, verified: false };
        report.verified = report.verify()?;
        Ok(report)
    }

    /// Exhaustive check of every requirement.
    pub fn verify(&self) -> Result<bool> {
        for r in &self.must_preserve {
            if !preserves(&self.operation, r)? {
                return Ok(false);
            }
        }
        for r in &self.must_violate {
            if preserves(&self.operation, r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
