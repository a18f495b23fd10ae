//! Orientations of regular matroids, represented by totally unimodular
//! matrices, together with the parity questions that make them
//! interesting: which orientations admit a set meeting every directed
//! circuit an odd number of times, when do even directed circuits exist,
//! and which digraphs carry odd dijoins.
//!
//! The crate is organised in layers:
//!
//! * [`linalg`] — exact rational/GF(2) linear algebra and conical
//!   feasibility (phase-1 simplex, Bland's rule, no tolerances),
//! * [`matroid`] — signed circuits and cocircuits of a TU representation,
//!   duality, minors, isomorphism, and generalised-bond minors,
//! * [`farkas`] — the directed-circuit/directed-cocircuit dichotomy and
//!   totally cyclic parts, certified by explicit objects,
//! * [`evenness`] — directed circuit bases, parity covers, the reductions
//!   between non-evenness and even-circuit detection, and odd-circuit
//!   search,
//! * [`digraph`] — digraphs, bonds, odd dijoins, cut minors, T-joins, and
//!   the three-layer complete-bipartite families with their closed-form
//!   dijoin criteria,
//! * [`r10`] — the ten-element reference matrix and the exhaustive sweep
//!   of all of its orientations against the forbidden-minor criterion.
//!
//! Everything is deterministic: pivot choices, enumeration orders and
//! tie-breaks are least-index throughout, so equal inputs give
//! byte-identical outputs.

pub mod digraph;
pub mod error;
pub mod evenness;
pub mod farkas;
pub mod linalg;
pub mod matroid;
pub mod r10;

pub use error::{Error, Result};
pub use linalg::{
    check_tu, conical_feasibility, gf2_rank, gf2_solve, GF2Matrix, GF2Vector, Rational, TUMatrix,
    TuRefutation, TuVerdict,
};
pub use matroid::{ElemSet, MinorMap, OrientedMatroid, SignedSet};
