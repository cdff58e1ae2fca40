//! Regular tournaments ("games") and the machinery around them.
//!
//! Graphs are dense bit matrices on at most 64 vertices. Every operation is a
//! pure function; nothing here needs `std`.
#![no_std]

extern crate alloc;

pub mod atlas;
pub mod construct;
pub mod digraph;
pub mod error;
pub mod eulerian;
pub mod fixtures;
pub mod groups;
pub mod morph;
pub mod reversal;

pub use digraph::{Classes, Digraph, EdgeSet, Perm};
pub use error::{Error, Result};
