//! Exhaustive verification: operation enumeration, invariant relations, separator search and
//! literal reimplementations of every construction.

pub mod brute;
mod enumerate;
mod invariants;
pub mod replay;
mod search;
pub mod suites;

pub use enumerate::{enumerate_operations, operation_at, operation_count, Operations};
pub use invariants::{invariants_h, MAX_INVARIANT_CELLS};
pub use search::{find_separator, Search, SearchBudget};
