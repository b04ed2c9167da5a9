//! Exact plane geometry and exhaustive coloring search for graphs whose
//! edges connect points at Euclidean distance 1 or 2.
//!
//! Everything here is exact: coordinates live in the ring generated by
//! `{1, √3, √11, √33}` over the rationals, squared distances are compared
//! against integers with no tolerance anywhere, and the coloring search
//! enumerates canonical colorings deterministically. The crate is
//! `no_std` + `alloc`; file formats, parallel orchestration and the CLI
//! live in the companion `twodist-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cnf;
pub mod exact;
pub mod geometry;
pub mod graph;
pub mod search;
pub mod verify;

pub use exact::{FieldElem, PlanePoint, Q33, QuadCoord, Rat};
pub use graph::{OrbitPartition, TwoDistGraph, VertexOrder};
pub use search::{CanonicalColoring, SearchConfig};
