//! Multi-edge trees, coloured Motzkin paths, and a reversible three-stage
//! bijection between multi-edge trees with `N` edges (counted with
//! multiplicity) and 3-coloured Motzkin paths of length `N - 1`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values; file formats and the command line live in
//! the companion `motzkin-cli` crate.
//!
//! The pipeline, tree to path:
//!
//! 1. [`bijection::strip_multiplicities`] forgets the edge labels,
//! 2. [`bijection::tree_to_dyck`] walks the plain tree into a Dyck path,
//! 3. [`bijection::dyck_to_motzkin2`] drops the outer steps and codes the rest
//!    pairwise into a red/green Motzkin path,
//! 4. [`bijection::weave_blue`] puts the multiplicities back as blue level
//!    steps, one gap per edge in pre-order.
//!
//! [`bijection::forward`] and [`bijection::inverse`] compose the stages.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bijection;
pub mod enumerate;
pub mod path;
pub mod refdata;
pub mod series;
pub mod table;
pub mod tree;
pub mod verify;

pub use bijection::{forward, inverse, BijectionError};
pub use path::{
    AnyPath, DyckPath, Motzkin2Path, Motzkin3Path, Path, PathKind, PathParseError, PathViolation,
    Step,
};
pub use series::{CoeffSeries, SeriesKind};
pub use tree::{Edge, MultiEdgeTree, Multiplicity, TreeParseError};
