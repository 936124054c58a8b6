//! Exact polyhedral computations over reflexive lattice polytopes.
//!
//! The crate is organized bottom-up:
//!
//! * [`exactlin`] - arbitrary-precision integer and rational linear algebra:
//!   Smith normal form, saturated integer kernels, rational solving, linear
//!   feasibility, and double-description cone conversion.
//! * [`polytope`] - integral polytopes with full face lattices, duality,
//!   reflexivity, and lattice-point enumeration.
//! * [`triangulation`] - boundary triangulations whose 0-skeleton is the set
//!   of boundary lattice points away from facet interiors, plus simplex
//!   location and four-dimensional flip moves.
//! * [`divisors`] - the divisor lattice, its kernel vectors, convexity tests,
//!   Kahler cones, and section spaces of convex divisors.
//! * [`mirror`] - Picard/deformation dimension reports, degeneration cones
//!   and their classification, orbit-closure data, and mirror-pair checks.
//! * [`cli`] - file formats and subcommand dispatch for the binary.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod cli;
pub mod divisors;
pub mod error;
pub mod exactlin;
pub mod mirror;
pub mod polytope;
pub mod triangulation;

pub use error::{Error, Result};
