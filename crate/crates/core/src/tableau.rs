//! Domino tableaux laid over a staircase core.
//!
//! Coordinates are 1-based `(row, col)` with `(1, 1)` the upper-left square.
//! A tableau of rank `r` has the staircase core `{(i, j) : i + j < r + 2}`,
//! labeled 0, and the rest of its Young diagram tiled by labeled dominoes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A square `S_{row,col}`. Coordinates may be non-positive when used as a
/// probe (see [`DominoTableau::label_at`]); squares stored in a tableau are
/// always positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub row: i32,
    pub col: i32,
}

impl Square {
    pub const fn new(row: i32, col: i32) -> Self {
        Square { row, col }
    }

    pub const fn offset(self, d_row: i32, d_col: i32) -> Self {
        Square::new(self.row + d_row, self.col + d_col)
    }

    /// `row + col`, the anti-diagonal index.
    pub const fn diagonal(self) -> i32 {
        self.row + self.col
    }

    pub const fn is_positive(self) -> bool {
        self.row >= 1 && self.col >= 1
    }

    /// True when the square lies in the core of a rank-`rank` tableau.
    pub fn in_core(self, rank: u32) -> bool {
        self.is_positive() && i64::from(self.diagonal()) < i64::from(rank) + 2
    }

    fn is_adjacent(self, other: Square) -> bool {
        (self.row == other.row && (self.col - other.col).abs() == 1)
            || (self.col == other.col && (self.row - other.row).abs() == 1)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Whether `s` is a fixed square for tableaux of the given rank: `row + col`
/// has the opposite parity to `rank`. The other squares are variable.
pub fn is_fixed_square(rank: u32, s: Square) -> bool {
    (i64::from(s.diagonal()) - i64::from(rank)).rem_euclid(2) == 1
}

/// Label of a square with the conventions used by moved dominoes: squares
/// off the top or left edge and core squares read `Zero`, squares outside
/// the diagram read `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedLabel {
    Zero,
    Finite(u32),
    Infinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Row lengths of a Young diagram, weakly decreasing, no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape(Vec<u32>);

impl Shape {
    /// Builds a shape from row lengths. Trailing zeros are dropped; returns
    /// `None` if the lengths increase somewhere.
    pub fn new(mut rows: Vec<u32>) -> Option<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Shape(rows))
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    /// Length of the 1-based row `row`, 0 past the last row.
    pub fn row_len(&self, row: usize) -> u32 {
        row.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    /// Number of squares.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains_square(&self, s: Square) -> bool {
        s.is_positive() && s.col as u32 <= self.row_len(s.row as usize)
    }

    pub fn contains(&self, other: &Shape) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Squares of `self` that are not in `smaller`, in row-major order.
    /// Returns `None` unless `self` contains `smaller`.
    pub fn difference(&self, smaller: &Shape) -> Option<Vec<Square>> {
        if !self.contains(smaller) {
            return None;
        }
        let mut out = Vec::new();
        for (i, &len) in self.0.iter().enumerate() {
            let row = i + 1;
            for col in smaller.row_len(row) + 1..=len {
                out.push(Square::new(row as i32, col as i32));
            }
        }
        Some(out)
    }
}

/// The staircase `(r, r-1, ..., 1)` occupied by the core of a rank-`r`
/// tableau.
pub fn core_shape(rank: u32) -> Shape {
    Shape((1..=rank).rev().collect())
}

/// One labeled domino. The squares are kept sorted so that structurally
/// equal dominoes compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    label: u32,
    squares: [Square; 2],
    orientation: Orientation,
}

impl Domino {
    /// Builds a domino from two adjacent squares, deriving its orientation.
    pub fn new(label: u32, a: Square, b: Square) -> Result<Self> {
        if !a.is_adjacent(b) {
            return Err(Error::NotAdjacent { label, first: a, second: b });
        }
        let orientation =
            if a.row == b.row { Orientation::Horizontal } else { Orientation::Vertical };
        let squares = if a <= b { [a, b] } else { [b, a] };
        Ok(Domino { label, squares, orientation })
    }

    /// Builds a domino and cross-checks the given orientation.
    pub fn with_orientation(
        label: u32,
        a: Square,
        b: Square,
        orientation: Orientation,
    ) -> Result<Self> {
        let d = Domino::new(label, a, b)?;
        if d.orientation != orientation {
            return Err(Error::OrientationMismatch { label });
        }
        Ok(d)
    }

    /// Horizontal domino with leftmost square `(row, col)`.
    pub fn horizontal(label: u32, row: i32, col: i32) -> Self {
        Domino {
            label,
            squares: [Square::new(row, col), Square::new(row, col + 1)],
            orientation: Orientation::Horizontal,
        }
    }

    /// Vertical domino with top square `(row, col)`.
    pub fn vertical(label: u32, row: i32, col: i32) -> Self {
        Domino {
            label,
            squares: [Square::new(row, col), Square::new(row + 1, col)],
            orientation: Orientation::Vertical,
        }
    }

    pub fn label(&self) -> u32 {
        self.label
    }

    /// The two squares, upper-left one first.
    pub fn squares(&self) -> [Square; 2] {
        self.squares
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn is_horizontal(&self) -> bool {
        self.orientation == Orientation::Horizontal
    }

    pub fn contains(&self, s: Square) -> bool {
        self.squares.contains(&s)
    }

    pub fn meets(&self, other: &Domino) -> bool {
        self.squares.iter().any(|&s| other.contains(s))
    }

    fn check_orientation(&self) -> Result<()> {
        let [a, b] = self.squares;
        if !a.is_adjacent(b) {
            return Err(Error::NotAdjacent { label: self.label, first: a, second: b });
        }
        let horizontal = a.row == b.row;
        if horizontal != self.is_horizontal() {
            return Err(Error::OrientationMismatch { label: self.label });
        }
        Ok(())
    }
}

/// A domino tableau of some rank: its core plus a set of labeled dominoes
/// with distinct positive labels.
///
/// Construction always validates. Tableaux built by the correspondences are
/// standard (labels `1..=n`) except for the intermediate left tableaux of a
/// partial insertion, whose labels are the first values of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominoTableau {
    rank: u32,
    // vacated squares of the diagonal row + col = rank + 2, read as core
    extension: BTreeSet<Square>,
    // sorted by label
    dominoes: Vec<Domino>,
    cells: BTreeMap<Square, u32>,
}

impl DominoTableau {
    /// The tableau of the given rank with no dominoes; its shape is the core.
    pub fn empty(rank: u32) -> Self {
        DominoTableau {
            rank,
            extension: BTreeSet::new(),
            dominoes: Vec::new(),
            cells: BTreeMap::new(),
        }
    }

    /// Validates a set of dominoes as a rank-`rank` domino tableau with
    /// distinct positive labels (not necessarily `1..=n`).
    pub fn new(rank: u32, dominoes: impl IntoIterator<Item = Domino>) -> Result<Self> {
        DominoTableau::with_extension(rank, dominoes, BTreeSet::new())
    }

    /// Like [`DominoTableau::new`], but the given squares of the diagonal
    /// `row + col = rank + 2` count as part of the core. Moving through a
    /// cycle that leaves such a square produces these.
    pub fn with_extension(
        rank: u32,
        dominoes: impl IntoIterator<Item = Domino>,
        extension: BTreeSet<Square>,
    ) -> Result<Self> {
        for &s in &extension {
            if !s.is_positive() || i64::from(s.diagonal()) != i64::from(rank) + 2 {
                return Err(Error::BadCoreExtension { square: s });
            }
        }
        let mut dominoes: Vec<Domino> = dominoes.into_iter().collect();
        dominoes.sort_by_key(|d| d.label);

        let mut cells = BTreeMap::new();
        for (i, d) in dominoes.iter().enumerate() {
            if d.label == 0 {
                return Err(Error::ZeroLabel);
            }
            if i > 0 && dominoes[i - 1].label == d.label {
                return Err(Error::DuplicateLabel(d.label));
            }
            d.check_orientation()?;
            for &s in &d.squares {
                if !s.is_positive() {
                    return Err(Error::NonPositiveSquare { label: d.label, square: s });
                }
                if s.in_core(rank) {
                    return Err(Error::SquareInCore { label: d.label, square: s });
                }
                if extension.contains(&s) {
                    return Err(Error::SquareInCore { label: d.label, square: s });
                }
                if let Some(prev) = cells.insert(s, d.label) {
                    return Err(Error::Overlap { square: s, first: prev, second: d.label });
                }
            }
            let fixed = d.squares.iter().filter(|&&s| is_fixed_square(rank, s)).count();
            if fixed != 1 {
                return Err(Error::Checkerboard { label: d.label });
            }
        }

        let t = DominoTableau { rank, extension, dominoes, cells };
        for &s in t.cells.keys().chain(&t.extension) {
            for neighbor in [s.offset(-1, 0), s.offset(0, -1)] {
                if !neighbor.is_positive() {
                    continue;
                }
                if !t.in_diagram(neighbor) {
                    return Err(Error::NotYoungDiagram { square: s });
                }
                if t.label_at(neighbor.row, neighbor.col) > t.label_at(s.row, s.col) {
                    return Err(Error::NotMonotone { square: s });
                }
            }
        }
        Ok(t)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Diagonal squares absorbed into the core by moving through.
    pub fn core_extension(&self) -> &BTreeSet<Square> {
        &self.extension
    }

    /// Whether `s` reads as a core square: the staircase or its extension.
    pub fn is_core(&self, s: Square) -> bool {
        s.in_core(self.rank) || self.extension.contains(&s)
    }

    /// Dominoes in increasing label order.
    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    /// Number of dominoes.
    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.dominoes.iter().map(|d| d.label)
    }

    pub fn max_label(&self) -> Option<u32> {
        self.dominoes.last().map(|d| d.label)
    }

    pub fn domino(&self, label: u32) -> Option<&Domino> {
        self.dominoes.binary_search_by_key(&label, |d| d.label).ok().map(|i| &self.dominoes[i])
    }

    /// Labels are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.dominoes.iter().zip(1..).all(|(d, k)| d.label == k)
    }

    /// Label of the domino covering `s`, if any.
    pub fn label_of(&self, s: Square) -> Option<u32> {
        self.cells.get(&s).copied()
    }

    /// Whether `s` belongs to the underlying diagram (core or a domino).
    pub fn in_diagram(&self, s: Square) -> bool {
        self.is_core(s) || self.cells.contains_key(&s)
    }

    /// Squares covered by dominoes, i.e. with positive labels.
    pub fn covered_squares(&self) -> BTreeSet<Square> {
        self.cells.keys().copied().collect()
    }

    /// Row lengths of the union of core and domino squares.
    pub fn shape(&self) -> Shape {
        let mut rows: Vec<u32> = core_shape(self.rank).0;
        for s in self.cells.keys().chain(&self.extension) {
            let r = s.row as usize;
            if rows.len() < r {
                rows.resize(r, 0);
            }
            rows[r - 1] = rows[r - 1].max(s.col as u32);
        }
        Shape(rows)
    }

    /// Label of `S_{row,col}` with the extended conventions.
    pub fn label_at(&self, row: i32, col: i32) -> ExtendedLabel {
        let s = Square::new(row, col);
        if !s.is_positive() || self.is_core(s) {
            ExtendedLabel::Zero
        } else {
            match self.cells.get(&s) {
                Some(&l) => ExtendedLabel::Finite(l),
                None => ExtendedLabel::Infinity,
            }
        }
    }

    /// Diagram squares on the diagonal `row + col = rank + 2`, the squares
    /// bordering the core. Squares already absorbed into the core are not
    /// included.
    pub fn delta_squares(&self) -> BTreeSet<Square> {
        let d = self.rank as i32 + 2;
        (1..d).map(|row| Square::new(row, d - row)).filter(|s| self.cells.contains_key(s)).collect()
    }

    /// Same dominoes reinterpreted at another rank, revalidated. Any core
    /// extension must be covered by the new staircase.
    pub fn with_rank(&self, rank: u32) -> Result<Self> {
        if let Some(&square) = self.extension.iter().find(|s| !s.in_core(rank)) {
            return Err(Error::BadCoreExtension { square });
        }
        DominoTableau::new(rank, self.dominoes.iter().copied())
    }
}

/// Builds a standard domino tableau, checking every invariant.
pub fn validate_tableau(
    rank: u32,
    dominoes: impl IntoIterator<Item = Domino>,
) -> Result<DominoTableau> {
    let t = DominoTableau::new(rank, dominoes)?;
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(t)
}

pub fn shape_of(t: &DominoTableau) -> Shape {
    t.shape()
}

pub fn label_at(t: &DominoTableau, row: i32, col: i32) -> ExtendedLabel {
    t.label_at(row, col)
}

pub fn delta_squares(t: &DominoTableau) -> BTreeSet<Square> {
    t.delta_squares()
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use alloc::vec;

    fn sq(row: i32, col: i32) -> Square {
        Square::new(row, col)
    }

    #[test]
    fn core_shapes() {
        assert_eq!(core_shape(0).rows(), &[] as &[u32]);
        assert_eq!(core_shape(2).rows(), &[2, 1]);
        assert_eq!(core_shape(4).rows(), &[4, 3, 2, 1]);
    }

    #[test]
    fn validate_accepts_examples() {
        let t = validate_tableau(2, vec![h(1, 1, 3)]).unwrap();
        assert_eq!(t.shape().rows(), &[4, 1]);
        let empty = validate_tableau(0, vec![]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.shape(), Shape::default());
    }

    #[test]
    fn validate_rejects_core_square() {
        let err = validate_tableau(1, vec![h(1, 1, 1)]).unwrap_err();
        assert_eq!(err, Error::SquareInCore { label: 1, square: sq(1, 1) });
    }

    #[test]
    fn validate_rejects_overlap_and_gaps() {
        assert!(matches!(
            validate_tableau(0, vec![h(1, 1, 1), v(2, 1, 2)]),
            Err(Error::Overlap { .. })
        ));
        // hole at (1,3)
        assert!(matches!(
            validate_tableau(0, vec![h(1, 1, 1), h(2, 1, 4)]),
            Err(Error::NotYoungDiagram { .. })
        ));
        // 2 sits left of 1 in row 1
        assert!(matches!(
            validate_tableau(0, vec![h(2, 1, 1), h(1, 1, 3)]),
            Err(Error::NotMonotone { .. })
        ));
        assert_eq!(validate_tableau(0, vec![h(2, 1, 1)]), Err(Error::NotStandard));
        assert_eq!(
            DominoTableau::new(0, vec![h(1, 1, 1), h(1, 2, 1)]),
            Err(Error::DuplicateLabel(1))
        );
        assert!(matches!(Domino::new(1, sq(1, 1), sq(2, 2)), Err(Error::NotAdjacent { .. })));
        assert_eq!(
            Domino::with_orientation(1, sq(1, 1), sq(1, 2), Orientation::Vertical),
            Err(Error::OrientationMismatch { label: 1 })
        );
    }

    #[test]
    fn nonstandard_labels_allowed_by_new() {
        let t = DominoTableau::new(2, vec![h(2, 1, 3), v(4, 3, 1)]).unwrap();
        assert!(!t.is_standard());
        assert_eq!(t.shape().rows(), &[4, 1, 1, 1]);
    }

    #[test]
    fn shapes_and_labels() {
        let t = example_t4();
        assert_eq!(t.shape().rows(), &[4, 3, 3, 1]);
        assert_eq!(DominoTableau::empty(3).shape().rows(), &[3, 2, 1]);
        assert_eq!(t.label_at(0, 3), ExtendedLabel::Zero);
        assert_eq!(t.label_at(2, 1), ExtendedLabel::Zero);
        assert_eq!(t.label_at(3, 2), ExtendedLabel::Finite(4));
        assert_eq!(t.label_at(1, 5), ExtendedLabel::Infinity);
    }

    #[test]
    fn extended_label_order() {
        assert!(ExtendedLabel::Zero < ExtendedLabel::Finite(1));
        assert!(ExtendedLabel::Finite(7) < ExtendedLabel::Finite(8));
        assert!(ExtendedLabel::Finite(u32::MAX) < ExtendedLabel::Infinity);
    }

    #[test]
    fn fixed_squares() {
        assert!(is_fixed_square(0, sq(1, 2)));
        assert!(!is_fixed_square(0, sq(1, 1)));
        assert!(!is_fixed_square(2, sq(1, 3)));
        assert!(is_fixed_square(2, sq(1, 4)));
    }

    #[test]
    fn delta_diagonals() {
        let expected: BTreeSet<_> = [sq(1, 1)].into_iter().collect();
        assert_eq!(example_small_t().delta_squares(), expected);
        assert!(DominoTableau::empty(0).delta_squares().is_empty());
        // enumerate row+col = 4 inside [4,3,3,1] directly from the shape
        let t = example_t4();
        let shape = t.shape();
        let brute: BTreeSet<_> = (1..=4)
            .flat_map(|r| (1..=4).map(move |c| sq(r, c)))
            .filter(|&s| s.diagonal() == 4 && shape.contains_square(s))
            .collect();
        assert_eq!(t.delta_squares(), brute);
        assert_eq!(brute.len(), 3);
        assert!(brute.iter().all(|&s| !is_fixed_square(2, s)));
    }

    #[test]
    fn shape_difference() {
        let a = Shape::new(vec![4, 3, 3, 1]).unwrap();
        let b = Shape::new(vec![4, 3, 1, 1]).unwrap();
        assert_eq!(a.difference(&b), Some(vec![sq(3, 2), sq(3, 3)]));
        assert_eq!(b.difference(&a), None);
        assert!(Shape::new(vec![1, 2]).is_none());
        assert_eq!(Shape::new(vec![2, 0, 0]).unwrap().rows(), &[2]);
    }
}
