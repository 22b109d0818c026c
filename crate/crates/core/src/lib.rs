//! Counting and gap semantics for nonuniform families of one-way finite
//! automata.
//!
//! Machines are built or parsed in [`machines`], evaluated exactly in
//! [`semantics`], transformed with count-preserving [`constructions`], and
//! exercised against the promise problems in [`families`]. [`analysis`] holds
//! the exact linear algebra over PFA prefix vectors and [`harness`] the class
//! predicates and verification suites behind the `cfa` binary.

pub mod analysis;
pub mod constructions;
pub mod encodings;
pub mod error;
pub mod families;
pub mod harness;
pub mod machines;
pub mod semantics;

pub use error::{Error, Result};
pub use machines::{Alphabet, Machine, Nfa, PathCounts, Symbol, Verdict};
