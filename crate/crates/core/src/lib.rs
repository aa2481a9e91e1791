//! Domino tableaux of arbitrary rank and the family of hyperoctahedral
//! Robinson-Schensted correspondences `G_r` between signed permutations and
//! same-shape pairs of standard domino tableaux.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`tableau`]: squares and validated domino tableaux,
//! * [`signed`]: signed permutations (elements of `H_n`) and their enumeration,
//! * [`insertion`]: domino insertion, `G_r` and its inverse,
//! * [`cycles`]: cycles and moving-through in one tableau,
//! * [`extended`]: extended cycles of a pair and the minimal moving-through
//!   map which carries `G_r` to `G_{r+1}`,
//! * [`rankmaps`]: exhaustive verification and the rank-change maps
//!   on involution tableaux.
#![no_std]

extern crate alloc;

pub mod cycles;
mod error;
pub mod extended;
pub mod insertion;
pub mod rankmaps;
pub mod signed;
pub mod tableau;

pub use cycles::{Cycle, CycleClass, CycleKind};
pub use error::{Error, Result};
pub use extended::{ExtendedCycle, ExtendedCyclePair};
pub use insertion::{InsertionTriple, TableauPair};
pub use rankmaps::VerificationReport;
pub use signed::{Sign, SignedPermutation};
pub use tableau::{Domino, DominoTableau, ExtendedLabel, Orientation, Shape, Square};
