//! Bijective combinatorics around pattern-avoiding sequences.
//!
//! The crate connects four families of objects:
//!
//! * inversion, ascent and primitive ascent sequences ([`seq`]),
//! * set partitions with their linear and enhanced arc diagrams ([`partition`]),
//! * 01-fillings of the triangular shape `Δ_n` ([`filling`]),
//! * and the explicit maps between them ([`bimaps`]).
//!
//! The two composite maps of interest are
//! [`bimaps::inversion_to_enhanced_partition`], which carries inversion
//! sequences with no weakly decreasing subsequence of length 3 onto enhanced
//! 3-nonnesting partitions, and [`bimaps::ascent_to_partition`], which carries
//! ascent sequences with no decreasing subsequence of length 3 onto
//! 3-nonnesting partitions.
//!
//! Everything is checked exhaustively at small sizes by [`verify`]; the sweeps
//! and enumerators run on rayon when the `parallel` feature is enabled (the
//! default) and fall back to plain loops otherwise.

pub mod bimaps;
pub mod catalog;
pub mod envelope;
mod error;
pub mod filling;
pub mod par;
pub mod partition;
pub mod render;
pub mod seq;
pub mod verify;

pub use error::{Error, Result};
pub use filling::{CriticalProfile, FillingClass, Square, TriangularFilling};
pub use partition::{Arc, ArcDiagram, Flavor, SetPartition};
pub use seq::{Avoidance, IntSequence, Mode, RunDecomposition, SequenceFamily};
