//! Exact computations for the Garside monoid `M(X,S)` of a finite
//! involutive non-degenerate set-theoretic Yang-Baxter solution and for its
//! finite signed-permutation quotient `W(X,S)`.
//!
//! Atoms are 0-based inside the library. Files, reports and cycle strings use
//! 1-based atoms.

pub mod analysis;
pub mod catalog;
pub mod check;
pub mod coset;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod frozen;
pub mod group;
pub mod invariants;
pub mod io;
pub mod monoid;
pub mod perm;
pub mod report;
pub mod signed;
pub mod solution;

pub use error::{Error, Result};
pub use exec::Execution;
pub use group::FiniteGroupTable;
pub use monoid::{ItypeMonoid, SimpleElement, Word};
pub use perm::Permutation;
pub use signed::SignedPermutation;
pub use solution::{FrozenPair, ItypePresentation, Relation, ValidationReport, YbeSolution};
