//! Exact linear algebra: totally unimodular matrices over the rationals,
//! GF(2) systems, and conical feasibility by exact simplex.

mod gf2;
mod simplex;
mod tu;

pub use gf2::{gf2_rank, gf2_solve, GF2Matrix, GF2Vector};
pub use simplex::{conical_feasibility, resubstitutes};
pub use tu::{check_tu, Rational, TUMatrix, TuRefutation, TuVerdict};
