//! Finite-group rationality toolkit: permutation groups, conjugacy
//! structure, exact character tables, and the cut-group taxonomy, with a
//! curated small-group catalog and census pipeline.

pub mod catalog;
pub mod chartab;
pub mod classes;
pub mod cyclotomic;
pub mod error;
pub mod fpgroups;
pub mod group;
pub mod perm;
pub mod rationality;
pub mod smallgroups;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use group::PermutationGroup;
pub use perm::Permutation;
