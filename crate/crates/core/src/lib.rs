//! Finite chainmails, their exteriors and connectivity lattices.

pub mod bitset;
pub mod cli;
pub mod connectivity;
pub mod dot;
pub mod enumeration;
pub mod error;
pub mod exterior;
pub mod generators;
pub mod io;
pub mod limits;
pub mod poset;

pub use bitset::ElementSet;
pub use connectivity::{classify, ConnectivityPair, TaxonomyReport};
pub use error::{ChainmailError, Result};
pub use exterior::{exterior, TmdFamily};
pub use limits::Limits;
pub use poset::{CanonicalKey, FinitePoset, Lattice, Relation, Violation};
