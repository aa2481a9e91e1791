use core::fmt;

use crate::tableau::Square;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong when building or transforming tableaux.
///
/// Variants tagged "internal" signal a broken invariant of the algorithms
/// rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The two squares of a domino are not edge-adjacent.
    NotAdjacent {
        label: u32,
        first: Square,
        second: Square,
    },
    /// The stored orientation disagrees with the square pair.
    OrientationMismatch {
        label: u32,
    },
    /// A domino square with a non-positive coordinate.
    NonPositiveSquare {
        label: u32,
        square: Square,
    },
    /// Label 0 is reserved for the core.
    ZeroLabel,
    DuplicateLabel(u32),
    /// Two dominoes share a square.
    Overlap {
        square: Square,
        first: u32,
        second: u32,
    },
    /// A domino covers a square with `row + col < rank + 2`.
    SquareInCore {
        label: u32,
        square: Square,
    },
    /// A core extension square off the core-adjacent diagonal.
    BadCoreExtension {
        square: Square,
    },
    /// The covered squares together with the core are not a Young diagram.
    NotYoungDiagram {
        square: Square,
    },
    /// Labels decrease along a row or down a column.
    NotMonotone {
        square: Square,
    },
    /// A domino does not cover exactly one fixed square.
    Checkerboard {
        label: u32,
    },
    /// The labels are not exactly `1..=n`.
    NotStandard,
    LabelNotPresent(u32),
    /// Malformed signed permutation.
    InvalidPermutation(&'static str),
    /// Two tableaux that should form a pair disagree in rank or shape.
    PairMismatch(&'static str),
    /// Two shapes that should differ by one domino do not.
    BadShapeDifference,
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    EmptyPair,
    /// A label set that is not a cycle of the given tableau.
    NotACycle,
    /// A pair of extended cycles that is not a component of the given pair.
    NotAComponent,
    /// A cycle through the core-adjacent diagonal turned out closed.
    ClosedDeltaCycle,
    /// The core-adjacent diagonal was still occupied after moving through.
    DeltaNotCleared {
        square: Square,
    },
    /// No stabilization was observed up to the ceiling.
    NoStabilization {
        ceiling: u32,
    },
    /// Internal: an algorithm reached a state its invariants rule out.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAdjacent { label, first, second } => {
                write!(f, "domino {label}: squares {first} and {second} are not adjacent")
            }
            Error::OrientationMismatch { label } => {
                write!(f, "domino {label}: orientation does not match its squares")
            }
            Error::NonPositiveSquare { label, square } => {
                write!(f, "domino {label}: square {square} has a non-positive coordinate")
            }
            Error::ZeroLabel => f.write_str("label 0 is reserved for the core"),
            Error::DuplicateLabel(l) => write!(f, "label {l} appears more than once"),
            Error::Overlap { square, first, second } => {
                write!(f, "dominoes {first} and {second} both cover {square}")
            }
            Error::SquareInCore { label, square } => {
                write!(f, "domino {label}: square {square} lies in the core")
            }
            Error::BadCoreExtension { square } => {
                write!(f, "square {square} cannot extend the core")
            }
            Error::NotYoungDiagram { square } => {
                write!(f, "square {square} breaks the Young diagram shape")
            }
            Error::NotMonotone { square } => {
                write!(f, "labels decrease into square {square}")
            }
            Error::Checkerboard { label } => {
                write!(f, "domino {label} does not cover exactly one fixed square")
            }
            Error::NotStandard => f.write_str("labels are not exactly 1..=n"),
            Error::LabelNotPresent(l) => write!(f, "label {l} is not in the tableau"),
            Error::InvalidPermutation(why) => write!(f, "invalid signed permutation: {why}"),
            Error::PairMismatch(why) => write!(f, "invalid tableau pair: {why}"),
            Error::BadShapeDifference => f.write_str("shapes do not differ by exactly one domino"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range 0..={len}")
            }
            Error::EmptyPair => f.write_str("the tableau pair is empty"),
            Error::NotACycle => f.write_str("label set is not a cycle of the tableau"),
            Error::NotAComponent => {
                f.write_str("extended cycle pair is not a component of the tableau pair")
            }
            Error::ClosedDeltaCycle => {
                f.write_str("internal: a cycle through the core diagonal is closed")
            }
            Error::DeltaNotCleared { square } => {
                write!(f, "internal: diagonal square {square} still occupied after moving through")
            }
            Error::NoStabilization { ceiling } => {
                write!(f, "no stabilization observed up to rank {ceiling}")
            }
            Error::Internal(why) => write!(f, "internal: {why}"),
        }
    }
}

impl core::error::Error for Error {}
