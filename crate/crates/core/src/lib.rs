//! Finite permutation groups, exact character tables over cyclotomic
//! fields, Galois actions on classes and characters, and mechanical checks
//! of rationality statements on a corpus of small groups.

pub mod analysis;
pub mod chartable;
pub mod classes;
pub mod corpus;
pub mod cyclo;
pub mod error;
pub mod families;
pub mod group;
pub mod ingest;
pub mod lab;
pub mod modp;
pub mod perm;
pub mod rationality;

pub use analysis::Analysis;
pub use chartable::CharacterTable;
pub use classes::{ClassData, ClassInfo};
pub use cyclo::{Cyclo, GaloisElement};
pub use error::{CycloError, GroupError, LabError, TableError};
pub use families::Family;
pub use group::PermGroup;
pub use perm::Permutation;
