//! Root systems, formal characters and subgroup embeddings for checking
//! nilpotent-centralizer embedding chains in reductive groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsystem`] builds Cartan data for simple and product types and
//!   provides Weyl-group combinatorics on integral weights.
//! * [`characters`] computes dual Weyl characters (Freudenthal), tensor and
//!   exterior operations, and decompositions into the dual Weyl basis.
//! * [`embeddings`] holds the catalogue of subgroup clauses together with
//!   the weight-lattice maps realising them.
//! * [`nilpotent`] covers classical Jordan types and the orbit table format.
//! * [`verifier`] checks table rows step by step.
//!
//! All weights are integer vectors in fundamental-weight coordinates, with
//! trailing coordinates for central torus factors.

pub mod characters;
pub mod embeddings;
mod error;
pub(crate) mod linalg;
pub mod nilpotent;
pub mod rootsystem;
pub mod verifier;

pub use error::{Error, Result};
pub use rootsystem::{GroupType, Letter, RootDatum, SimpleType, Weight};
