//! Decide whether two homomorphisms into the symmetric group `S_n` are
//! conjugate, element-conjugate or generator-conjugate, for source groups that
//! are abelian on two generators or dihedral.
//!
//! The decisions in [`abelian`] and [`dihedral`] work through the structure of
//! centralizers ([`centralizer`]); [`oracle`] answers the same questions by
//! exhaustive search, and [`census`] compares the two over whole families of
//! small instances.

pub mod abelian;
pub mod census;
pub mod centralizer;
pub mod cli;
pub mod decision;
pub mod dihedral;
pub mod error;
pub mod oracle;
pub mod perm;

pub use abelian::{AbelianHom, CentSignature, KDecomposition};
pub use centralizer::{BlockQuotientImage, HClass, SigmaBlock, SigmaDecomposition, DEFAULT_CAP};
pub use decision::{ConjugacyDecision, FailedCondition};
pub use dihedral::{BlockReflection, DihedralHom, ReflectionSignature};
pub use error::{Error, Result};
pub use perm::{CycleType, Permutation};
