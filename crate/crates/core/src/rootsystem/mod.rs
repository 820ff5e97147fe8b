//! Cartan data and Weyl-group combinatorics.
//!
//! Nodes are numbered as in Bourbaki, starting from 0 in the API:
//!
//! | type | diagram (0-based nodes) |
//! |------|-------------------------|
//! | `An` | `0 - 1 - ... - n-1` |
//! | `Bn` | `0 - ... - n-2 => n-1` (last node short) |
//! | `Cn` | `0 - ... - n-2 <= n-1` (last node long) |
//! | `Dn` | `0 - ... - n-3` branching to `n-2` and `n-1` |
//! | `En` | `0 - 2 - 3 - 4 - ... - n-1`, with `1` attached to `3` |
//! | `F4` | `0 - 1 => 2 - 3` (nodes 2, 3 short) |
//! | `G2` | `0 <= 1` (node 0 short) |
//!
//! `T` factors and `D1` are tori: their coordinates have zero Cartan rows.

mod datum;
mod subdiagram;
mod types;
mod weight;

pub use datum::RootDatum;
pub use subdiagram::{components, normal_form, normalize_type, subdiagram_type, Component};
pub use types::{GroupType, Letter, SimpleType};
pub use weight::Weight;

/// Builds the root datum of a group type.
pub fn build_root_datum(gtype: &GroupType) -> crate::Result<RootDatum> {
    RootDatum::new(gtype)
}
