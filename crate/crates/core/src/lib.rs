//! Exact-arithmetic computation of Casson-Gordon signature obstructions for
//! 3-strand pretzel knots.
//!
//! The library is organized bottom-up:
//!
//! * [`exact_math`] - big-integer/rational linear algebra (Smith normal form,
//!   exact symmetric signatures) and Hermitian signatures over cyclotomic
//!   fields with certified sign determination.
//! * [`pretzel`] - pretzel knot parameters, classification, Seifert matrices
//!   and classical sliceness gates.
//! * [`double_cover`] - surgery presentations of the double branched cover,
//!   its homology, linking form, metabolizers and characters.
//! * [`link_sig`] - Tristram-Levine and colored signatures of the link
//!   families that appear in the satellite constructions.
//! * [`cg`] - the Casson-Gordon signature routes and their cross-checks.
//! * [`verdict`] - the sliceness decision pipeline and parameter scans.

pub mod acceptance;
pub mod cg;
pub mod double_cover;
pub mod error;
pub mod exact_math;
pub mod link_sig;
pub mod pretzel;
pub mod verdict;

pub use error::{Error, Result};
