//! Exact Wiener, Szeged and revised Szeged indices of small graphs, with
//! isomorphism-free enumeration and extremal-ranking verification.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod rational;
pub mod verify;

pub use canon::{canonical_form, canonical_key, canonical_labeling, CanonicalKey, Labeling};
pub use error::{Error, Result};
pub use graph::{coalesce, DistanceMatrix, Graph, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6};
pub use invariants::{EdgeSplit, Indices};
pub use rational::Rational;
pub use families::{FamilyId, RootedTree};
pub use enumerate::{ClassSpec, Filter, GraphClass, Guards};
