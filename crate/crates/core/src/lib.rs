//! Exact computation of Khovanov homology, annular Khovanov homology,
//! annular Jones polynomials and Alexander polynomials for the four
//! closure types of a braid word: braid closure, clasp closure, and
//! their augmentations by the braid axis.
//!
//! The crate is `no_std` (alloc only). All arithmetic is exact:
//! bit-packed `Z/2`, `BigRational` for `Q`, `BigInt` for `Z`.
//! IO, file formats and the command line live in the companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alexander;
pub mod annular;
pub mod braid;
pub mod diagram;
pub mod dynnikov;
pub mod khovanov;
pub mod linalg;
pub mod poly;
pub mod verify;

pub use braid::{BraidWord, SigmaSign};
pub use diagram::{ClosureKind, PlanarDiagram, ResolvedState};
pub use khovanov::{GradedComplex, HomologyTable, Ring};
pub use poly::{Laurent2, LaurentPoly};
