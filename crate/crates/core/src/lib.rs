//! Workbench for the group `nu(G)` and the non-abelian tensor square of
//! small finite p-groups.

pub mod coset;
pub mod error;
pub mod harness;
pub mod nu;
pub mod perm;
pub mod pgroup;
pub mod presentation;

pub use error::{Error, Result};
