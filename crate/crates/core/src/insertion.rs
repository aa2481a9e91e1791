//! Domino insertion and the rank-`r` Robinson-Schensted correspondences.
//!
//! `insert_domino` adds one labeled domino to a tableau by bumping; running
//! it over the triples of a signed permutation builds the left tableau while
//! the right tableau records where each new domino appeared. The inverse
//! walks the same bumps backwards.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::signed::{Sign, SignedPermutation};
use crate::tableau::{Domino, DominoTableau, Orientation, Shape, Square};

/// The triple `(value, position, sign)` being inserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InsertionTriple {
    pub value: u32,
    pub position: u32,
    pub sign: Sign,
}

impl InsertionTriple {
    pub fn new(value: u32, position: u32, sign: Sign) -> Self {
        InsertionTriple { value, position, sign }
    }
}

/// A left/right pair of tableaux of equal rank and shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableauPair {
    pub left: DominoTableau,
    pub right: DominoTableau,
}

impl TableauPair {
    pub fn new(left: DominoTableau, right: DominoTableau) -> Result<Self> {
        if left.rank() != right.rank() {
            return Err(Error::PairMismatch("ranks differ"));
        }
        if left.len() != right.len() {
            return Err(Error::PairMismatch("sizes differ"));
        }
        if left.shape() != right.shape() {
            return Err(Error::PairMismatch("shapes differ"));
        }
        Ok(TableauPair { left, right })
    }

    pub fn empty(rank: u32) -> Self {
        TableauPair { left: DominoTableau::empty(rank), right: DominoTableau::empty(rank) }
    }

    pub fn rank(&self) -> u32 {
        self.left.rank()
    }

    pub fn len(&self) -> usize {
        self.left.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }

    pub fn shape(&self) -> Shape {
        self.left.shape()
    }

    pub fn swapped(&self) -> Self {
        TableauPair { left: self.right.clone(), right: self.left.clone() }
    }

    /// Both tableaux standard.
    pub fn is_standard(&self) -> bool {
        self.left.is_standard() && self.right.is_standard()
    }
}

/// Mutable scratch tableau used while bumping. Its label set need not be
/// contiguous.
#[derive(Clone)]
struct Working {
    rank: u32,
    extension: BTreeSet<Square>,
    dominoes: BTreeMap<u32, Domino>,
    cells: BTreeMap<Square, u32>,
}

impl Working {
    fn from_tableau(t: &DominoTableau) -> Self {
        let mut w = Working {
            rank: t.rank(),
            extension: t.core_extension().clone(),
            dominoes: BTreeMap::new(),
            cells: BTreeMap::new(),
        };
        for &d in t.dominoes() {
            w.place(d);
        }
        w
    }

    fn occupied(&self, s: Square) -> bool {
        self.is_core(s) || self.cells.contains_key(&s)
    }

    fn is_core(&self, s: Square) -> bool {
        s.in_core(self.rank) || self.extension.contains(&s)
    }

    fn place(&mut self, d: Domino) {
        for s in d.squares() {
            self.cells.insert(s, d.label());
        }
        self.dominoes.insert(d.label(), d);
    }

    fn remove(&mut self, label: u32) -> Option<Domino> {
        let d = self.dominoes.remove(&label)?;
        for s in d.squares() {
            self.cells.remove(&s);
        }
        Some(d)
    }

    fn row_len(&self, row: i32) -> i32 {
        let mut col = 0;
        while self.occupied(Square::new(row, col + 1)) {
            col += 1;
        }
        col
    }

    fn col_len(&self, col: i32) -> i32 {
        let mut row = 0;
        while self.occupied(Square::new(row + 1, col)) {
            row += 1;
        }
        row
    }

    /// Horizontal domino in the first two free squares of `row`.
    fn row_end(&self, label: u32, row: i32) -> Domino {
        Domino::horizontal(label, row, self.row_len(row) + 1)
    }

    /// Vertical domino in the first two free squares of `col`.
    fn col_end(&self, label: u32, col: i32) -> Domino {
        Domino::vertical(label, self.col_len(col) + 1, col)
    }

    fn into_tableau(self) -> Result<DominoTableau> {
        DominoTableau::with_extension(self.rank, self.dominoes.into_values(), self.extension)
    }
}

fn append_new(w: &Working, label: u32, sign: Sign) -> Domino {
    match sign {
        Sign::Plus => w.row_end(label, 1),
        Sign::Minus => w.col_end(label, 1),
    }
}

/// Inserts the domino labeled `triple.value` into `t`.
///
/// If the new label exceeds every label of `t`, a horizontal domino goes to
/// the end of row 1 (sign +1) or a vertical one to the end of column 1
/// (sign -1). Otherwise every domino with a larger label is lifted out, the
/// new label is placed as above, and the lifted dominoes are put back one at
/// a time in increasing order: in place if both old squares are free, shifted
/// diagonally if exactly one is taken, and bumped to the end of the next
/// row (or column) if both are taken.
pub fn insert_domino(triple: InsertionTriple, t: &DominoTableau) -> Result<DominoTableau> {
    let value = triple.value;
    if value == 0 {
        return Err(Error::ZeroLabel);
    }
    if t.domino(value).is_some() {
        return Err(Error::DuplicateLabel(value));
    }
    let mut w = Working::from_tableau(t);
    let bumped: Vec<Domino> = t.dominoes().iter().copied().filter(|d| d.label() > value).collect();
    for d in &bumped {
        w.remove(d.label());
    }
    let new = append_new(&w, value, triple.sign);
    w.place(new);

    for old in bumped {
        let [a, b] = old.squares();
        let hits: Vec<Square> = [a, b].into_iter().filter(|&s| w.occupied(s)).collect();
        let placed = match hits.as_slice() {
            [] => old,
            [s] => match old.orientation() {
                Orientation::Horizontal => Domino::vertical(old.label(), s.row, s.col + 1),
                Orientation::Vertical => Domino::horizontal(old.label(), s.row + 1, s.col),
            },
            _ => match old.orientation() {
                Orientation::Horizontal => w.row_end(old.label(), a.row + 1),
                Orientation::Vertical => w.col_end(old.label(), a.col + 1),
            },
        };
        if placed.squares().iter().any(|&s| w.occupied(s)) {
            return Err(Error::Internal("re-added domino lands on an occupied square"));
        }
        w.place(placed);
    }
    w.into_tableau()
}

/// Adds domino `label` to `s` on the two squares by which `new_shape`
/// exceeds `old_shape`.
pub fn track_right(
    s: &DominoTableau,
    old_shape: &Shape,
    new_shape: &Shape,
    label: u32,
) -> Result<DominoTableau> {
    if s.shape() != *old_shape {
        return Err(Error::PairMismatch("right tableau does not have the old shape"));
    }
    let diff = new_shape.difference(old_shape).ok_or(Error::BadShapeDifference)?;
    let [a, b] = diff[..] else {
        return Err(Error::BadShapeDifference);
    };
    let d = Domino::new(label, a, b).map_err(|_| Error::BadShapeDifference)?;
    DominoTableau::with_extension(
        s.rank(),
        s.dominoes().iter().copied().chain([d]),
        s.core_extension().clone(),
    )
}

/// One insertion step on a pair: inserts `triple` into the left tableau and
/// records the new squares in the right tableau under `triple.position`.
pub fn insert_pair(triple: InsertionTriple, pair: &TableauPair) -> Result<TableauPair> {
    let old_shape = pair.left.shape();
    let left = insert_domino(triple, &pair.left)?;
    let right = track_right(&pair.right, &old_shape, &left.shape(), triple.position)?;
    Ok(TableauPair { left, right })
}

/// `G_r^k(sigma)`: the pair after inserting the first `k` triples of `sigma`
/// into the empty rank-`rank` tableau.
pub fn rs_partial(sigma: &SignedPermutation, rank: u32, k: usize) -> Result<TableauPair> {
    if k > sigma.len() {
        return Err(Error::IndexOutOfRange { index: k, len: sigma.len() });
    }
    sigma.triples().take(k).try_fold(TableauPair::empty(rank), |pair, t| insert_pair(t, &pair))
}

/// `G_r(sigma)`, the rank-`rank` domino Robinson-Schensted pair.
pub fn robinson_schensted(sigma: &SignedPermutation, rank: u32) -> TableauPair {
    rs_partial(sigma, rank, sigma.len()).expect("insertion of a valid signed permutation failed")
}

/// Undoes the last insertion step of a pair.
///
/// The highest domino of the right tableau marks the squares the last step
/// added to the left tableau. Walking the left labels downwards, each domino
/// is returned to where it sat before the step, tracking the two squares by
/// which the partially restored tableau still exceeds the old one, until the
/// domino that was appended to row 1 or column 1 is reached.
pub fn reverse_insert(pair: &TableauPair) -> Result<(TableauPair, InsertionTriple)> {
    let position = pair.right.max_label().ok_or(Error::EmptyPair)?;
    let last = *pair.right.domino(position).expect("max label present");
    let right = DominoTableau::new(
        pair.right.rank(),
        pair.right.dominoes().iter().copied().filter(|d| d.label() != position),
    )?;

    let mut w = Working::from_tableau(&pair.left);
    let mut extra: BTreeSet<Square> = last.squares().into_iter().collect();
    let mut restored = Vec::new();
    let mut inserted = None;

    let labels: Vec<u32> = pair.left.labels().collect();
    for &label in labels.iter().rev() {
        let now = w.remove(label).expect("label present");
        let hits: Vec<Square> = now.squares().into_iter().filter(|s| extra.contains(s)).collect();
        match hits.len() {
            0 => restored.push(now),
            1 => {
                // diagonal shift: undo by moving back up-left
                let hit = hits[0];
                let (old, pivot, expected_hit) = if now.is_horizontal() {
                    let [p, q] = now.squares();
                    (Domino::vertical(label, p.row - 1, p.col), p.offset(-1, 0), q)
                } else {
                    let [p, q] = now.squares();
                    (Domino::horizontal(label, p.row, p.col - 1), p.offset(0, -1), q)
                };
                if hit != expected_hit {
                    return Err(Error::Internal("shifted domino meets the wrong square"));
                }
                extra.remove(&hit);
                extra.insert(pivot);
                restored.push(old);
            }
            _ => {
                let [a, _] = now.squares();
                let appended = if now.is_horizontal() { a.row == 1 } else { a.col == 1 };
                if appended {
                    let sign = if now.is_horizontal() { Sign::Plus } else { Sign::Minus };
                    inserted = Some(InsertionTriple::new(label, position, sign));
                    break;
                }
                let old = if now.is_horizontal() {
                    let row = a.row - 1;
                    Domino::horizontal(label, row, w.row_len(row) - 1)
                } else {
                    let col = a.col - 1;
                    Domino::vertical(label, w.col_len(col) - 1, col)
                };
                if old.squares().iter().any(|&s| w.is_core(s) || !w.occupied(s)) {
                    return Err(Error::Internal("bumped domino has no removable origin"));
                }
                extra = old.squares().into_iter().collect();
                restored.push(old);
            }
        }
    }
    let triple = inserted.ok_or(Error::Internal("no appended domino found while un-inserting"))?;
    let mut left = w;
    for d in restored {
        if d.squares().iter().any(|&s| left.occupied(s)) {
            return Err(Error::Internal("restored domino overlaps"));
        }
        left.place(d);
    }
    let smaller = TableauPair::new(left.into_tableau()?, right)?;
    Ok((smaller, triple))
}

/// `G_r^{-1}`: recovers the signed permutation from a standard pair.
pub fn rs_inverse(pair: &TableauPair) -> Result<SignedPermutation> {
    let pair = TableauPair::new(pair.left.clone(), pair.right.clone())?;
    if !pair.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut triples = Vec::with_capacity(pair.len());
    let mut current = pair;
    while !current.is_empty() {
        let (smaller, t) = reverse_insert(&current)?;
        triples.push(t);
        current = smaller;
    }
    SignedPermutation::from_triples(&triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::fixtures::*;
    use crate::tableau::validate_tableau;
    use alloc::vec;

    fn w(xs: &[i32]) -> SignedPermutation {
        SignedPermutation::from_window(xs).unwrap()
    }

    fn tab(rank: u32, ds: Vec<Domino>) -> DominoTableau {
        DominoTableau::new(rank, ds).unwrap()
    }

    // Intermediate pairs of `G_2(2 -4 -3 1)`, transcribed from the drawings.
    fn example_steps() -> Vec<TableauPair> {
        vec![
            TableauPair::empty(2),
            TableauPair { left: tab(2, vec![h(2, 1, 3)]), right: tab(2, vec![h(1, 1, 3)]) },
            TableauPair {
                left: tab(2, vec![h(2, 1, 3), v(4, 3, 1)]),
                right: tab(2, vec![h(1, 1, 3), v(2, 3, 1)]),
            },
            TableauPair {
                left: tab(2, vec![h(2, 1, 3), v(4, 2, 2), v(3, 3, 1)]),
                right: tab(2, vec![h(1, 1, 3), v(2, 3, 1), v(3, 2, 2)]),
            },
            TableauPair {
                left: example_t4(),
                right: tab(2, vec![h(1, 1, 3), v(2, 3, 1), v(3, 2, 2), v(4, 2, 3)]),
            },
        ]
    }

    #[test]
    fn insertion_examples() {
        let t1 = insert_domino(InsertionTriple::new(2, 1, Sign::Plus), &DominoTableau::empty(2))
            .unwrap();
        assert_eq!(t1, tab(2, vec![h(2, 1, 3)]));
        let steps = example_steps();
        let t3 = insert_domino(InsertionTriple::new(3, 3, Sign::Minus), &steps[2].left).unwrap();
        assert_eq!(t3, steps[3].left);
        let t4 = insert_domino(InsertionTriple::new(1, 4, Sign::Plus), &t3).unwrap();
        assert_eq!(t4, example_t4());
    }

    #[test]
    fn insertion_rejects_duplicates() {
        let t = tab(0, vec![h(1, 1, 1)]);
        assert_eq!(
            insert_domino(InsertionTriple::new(1, 2, Sign::Plus), &t),
            Err(Error::DuplicateLabel(1))
        );
    }

    #[test]
    fn track_right_examples() {
        let steps = example_steps();
        let s1 = track_right(
            &DominoTableau::empty(2),
            &DominoTableau::empty(2).shape(),
            &steps[1].left.shape(),
            1,
        )
        .unwrap();
        assert_eq!(s1, steps[1].right);
        for k in 2..=4 {
            let s = track_right(
                &steps[k - 1].right,
                &steps[k - 1].left.shape(),
                &steps[k].left.shape(),
                k as u32,
            )
            .unwrap();
            assert_eq!(s, steps[k].right);
        }
        let bad = Shape::new(vec![3, 1, 1, 1]).unwrap();
        assert_eq!(
            track_right(&DominoTableau::empty(2), &DominoTableau::empty(2).shape(), &bad, 1),
            Err(Error::BadShapeDifference)
        );
    }

    #[test]
    fn worked_example_all_steps() {
        let sigma = w(&[2, -4, -3, 1]);
        for (k, expected) in example_steps().into_iter().enumerate() {
            assert_eq!(rs_partial(&sigma, 2, k).unwrap(), expected, "step {k}");
        }
        assert_eq!(robinson_schensted(&sigma, 2), example_steps()[4]);
        assert!(rs_partial(&sigma, 2, 5).is_err());
    }

    #[test]
    fn small_rank_zero_example() {
        let pair = robinson_schensted(&w(&[-2, 1]), 0);
        assert_eq!(pair.left, example_small_t());
        assert_eq!(pair.right, example_small_s());
        assert_eq!(robinson_schensted(&w(&[]), 3), TableauPair::empty(3));
    }

    #[test]
    fn reverse_insert_examples() {
        let sigma = w(&[2, -4, -3, 1]);
        let (smaller, t) = reverse_insert(&robinson_schensted(&sigma, 2)).unwrap();
        assert_eq!(smaller, rs_partial(&sigma, 2, 3).unwrap());
        assert_eq!(t, InsertionTriple::new(1, 4, Sign::Plus));

        let single = TableauPair {
            left: validate_tableau(0, vec![h(1, 1, 1)]).unwrap(),
            right: validate_tableau(0, vec![h(1, 1, 1)]).unwrap(),
        };
        let (smaller, t) = reverse_insert(&single).unwrap();
        assert_eq!(smaller, TableauPair::empty(0));
        assert_eq!(t, InsertionTriple::new(1, 1, Sign::Plus));

        let small = w(&[-2, 1]);
        let (smaller, t) = reverse_insert(&robinson_schensted(&small, 0)).unwrap();
        assert_eq!(smaller, rs_partial(&small, 0, 1).unwrap());
        assert_eq!(t, InsertionTriple::new(1, 2, Sign::Plus));

        assert_eq!(reverse_insert(&TableauPair::empty(1)), Err(Error::EmptyPair));
    }

    #[test]
    fn inverse_examples() {
        for (xs, r) in [(&[2, -4, -3, 1][..], 2), (&[][..], 0), (&[-2, 1][..], 0)] {
            let sigma = w(xs);
            assert_eq!(rs_inverse(&robinson_schensted(&sigma, r)).unwrap(), sigma);
        }
    }

    #[test]
    fn pair_validation() {
        let a = tab(0, vec![h(1, 1, 1)]);
        let b = tab(0, vec![v(1, 1, 1)]);
        assert_eq!(TableauPair::new(a.clone(), b), Err(Error::PairMismatch("shapes differ")));
        assert_eq!(
            TableauPair::new(a, DominoTableau::empty(0)),
            Err(Error::PairMismatch("sizes differ"))
        );
    }
}
