//! Desk-scale machinery for homotopy coherent category theory.
//!
//! The toolkit is organised around a handful of interlocking structures:
//!
//! - [`sset`]: finite (or dimension-capped) simplicial sets stored as graded
//!   tables of nondegenerate simplices in Eilenberg–Zilber normal form,
//!   together with the standard constructions (simplices, boundaries, horns,
//!   cubes, products, joins, function complexes, pullbacks, equalizers) and
//!   simplicial maps between them.
//! - [`homotopy`]: lifting-property checkers built on exhaustive search —
//!   horn filling, quasi-category and Kan detection, (trivial) fibration
//!   tests, homotopy categories, groupoid cores, commas, terminal vertices.
//! - [`scat`]: simplicial categories and simplicial computads, with the
//!   freeness verifier that certifies unique atomic factorisations.
//! - [`coherent`]: the homotopy coherent realisation functor, its computads
//!   of beads and necklaces, the coherent nerve, the realisation–nerve
//!   transposition, and the join decomposition.
//! - [`weights`]: weights as simplicial functors into simplicial sets,
//!   collages, flexibility certification by cell peeling, and a bounded
//!   small-object argument for level-wise Kan replacement.
//! - [`wlimits`]: weighted limits by the end formula (with an independent
//!   brute-force oracle), homotopy limit certification, and the harness that
//!   links pseudo homotopy limit cones to limit cones in coherent nerves.
//!
//! Everything is immutable after construction and all enumeration orders are
//! canonical, so outputs are reproducible byte-for-byte. Enumerative
//! operations take a [`Budget`] and fail loudly rather than run unbounded.

pub mod budget;
pub mod coherent;
pub mod corpus;
pub mod error;
pub mod homotopy;
pub mod interchange;
pub mod monotone;
pub mod scat;
pub mod sset;
pub mod suite;
pub mod weights;
pub mod wlimits;

pub use budget::Budget;
pub use error::{Error, Result};
pub use monotone::MonotoneMap;
pub use sset::{EzSimplex, SimplexId, SimplicialMap, SimplicialSet};
