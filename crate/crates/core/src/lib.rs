//! Well-quasi-order toolkit.
//!
//! Decidable homeomorphic embedding on finite lists and trees, the strict
//! suffix and proper subtree orders, the `Emb` rewrite system on ground
//! trees, and a finite-horizon minimal-bad-sequence engine. Every decision
//! procedure ships with an exhaustive small-universe oracle that it can be
//! checked against.

pub mod emb;
mod error;
mod label;
pub mod list;
pub mod mbs;
pub mod relations;
pub mod tree;

pub use error::{Error, Result};
pub use label::{alphabet, Alphabet, Label};
pub use list::ListVal;
pub use relations::{FiniteSeq, Relation};
pub use tree::Tree;

/// Default bound on the number of objects in an enumerated universe.
pub const DEFAULT_UNIVERSE_GUARD: usize = 10_000;

/// Default bound on the size of a weak closure.
pub const DEFAULT_CLOSURE_GUARD: usize = 100_000;
