//! Finite skew braces, their substructures, and set-theoretic solutions of
//! the Yang–Baxter equation.
//!
//! Everything here is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod brace;
pub mod enumeration;
pub mod families;
pub mod group;
pub mod report;
pub mod set;
pub mod solution;
pub mod substructures;

pub use brace::{BraceError, FiniteSkewBrace};
pub use enumeration::{BraceCatalogEntry, EnumerationError};
pub use group::{FiniteGroup, GroupError};
pub use report::AnalysisReport;
pub use set::ElementSet;
pub use solution::{FiniteSolution, Partition, SolutionError};
pub use substructures::{SubBrace, SubstructureError, TransversalRule};
