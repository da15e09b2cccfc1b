//! Finite permutation group engine: subgroup lattices, permutability,
//! strong 4-quasinormality and the transitivity classes PT and Sq4T.

pub mod audit;
pub mod bitset;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod context;
pub mod error;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod permutability;
pub mod quotient;
pub mod report;
pub mod reproduce;
pub mod sets;
pub mod structure;
pub mod subtable;
pub mod survey;

pub use bitset::BitSet;
pub use catalog::{BuiltGroup, GroupSpec};
pub use classify::{classify, ClassificationReport};
pub use context::GroupContext;
pub use error::{Error, Result};
pub use group::{GroupTable, Limits};
pub use lattice::Lattice;
pub use perm::Permutation;
pub use sets::{ElementSet, SubgroupSet};
