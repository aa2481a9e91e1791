//! Cycles and moving-through inside a single domino tableau.
//!
//! Every domino covers one fixed square. Its moved position `D'` pivots
//! about that square, with the direction decided by comparing the label
//! against a diagonal neighbour. A cycle is a set of labels closed under
//! overlap between original and moved positions; moving through a cycle
//! replaces all of its dominoes by their moved positions at once.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tableau::{is_fixed_square, Domino, DominoTableau, ExtendedLabel, Square};

/// A set of domino labels of one tableau closed under the cycle relation.
/// Ordered by smallest label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    labels: BTreeSet<u32>,
}

impl Cycle {
    /// Wraps a label set without checking it; use [`cycle_through`] or
    /// [`all_cycles`] to obtain verified cycles.
    pub fn from_labels(labels: impl IntoIterator<Item = u32>) -> Self {
        Cycle { labels: labels.into_iter().collect() }
    }

    pub fn labels(&self) -> &BTreeSet<u32> {
        &self.labels
    }

    pub fn min_label(&self) -> u32 {
        *self.labels.first().expect("cycles are nonempty")
    }

    pub fn contains(&self, label: u32) -> bool {
        self.labels.contains(&label)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleKind {
    Closed,
    Open,
}

/// Whether moving through a cycle keeps the shape, and if not, which square
/// it vacates (`back`, `S_b`) and which it adds (`front`, `S_f`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleClass {
    pub kind: CycleKind,
    pub back: Option<Square>,
    pub front: Option<Square>,
}

impl CycleClass {
    pub fn is_open(&self) -> bool {
        self.kind == CycleKind::Open
    }
}

fn fixed_square(rank: u32, d: &Domino) -> (Square, Square) {
    let [a, b] = d.squares();
    if is_fixed_square(rank, a) {
        (a, b)
    } else {
        (b, a)
    }
}

/// `D'(k, T)`, the moved position of domino `k`.
pub fn moved_domino(label: u32, t: &DominoTableau) -> Result<Domino> {
    let d = t.domino(label).ok_or(Error::LabelNotPresent(label))?;
    let (f, other) = fixed_square(t.rank(), d);
    let k = ExtendedLabel::Finite(label);
    // fixed square on top of a vertical domino or at the right of a
    // horizontal one: pivot up or right
    let moved = if other == f.offset(1, 0) || other == f.offset(0, -1) {
        if k < t.label_at(f.row - 1, f.col + 1) {
            f.offset(-1, 0)
        } else {
            f.offset(0, 1)
        }
    } else if k < t.label_at(f.row + 1, f.col - 1) {
        f.offset(0, -1)
    } else {
        f.offset(1, 0)
    };
    Domino::new(label, f, moved)
}

/// Moved positions of every domino, keyed by label.
fn moved_all(t: &DominoTableau) -> BTreeMap<u32, Domino> {
    t.labels().map(|l| (l, moved_domino(l, t).expect("label present"))).collect()
}

fn closure(start: u32, t: &DominoTableau, moved: &BTreeMap<u32, Domino>) -> BTreeSet<u32> {
    let mut members = BTreeSet::from([start]);
    let mut frontier = alloc::vec![start];
    while let Some(m) = frontier.pop() {
        let dm = t.domino(m).expect("member present");
        let mm = &moved[&m];
        for d in t.dominoes() {
            let l = d.label();
            if members.contains(&l) {
                continue;
            }
            if d.meets(mm) || moved[&l].meets(dm) {
                members.insert(l);
                frontier.push(l);
            }
        }
    }
    members
}

/// The cycle `c(k, T)` through label `k`.
pub fn cycle_through(label: u32, t: &DominoTableau) -> Result<Cycle> {
    if t.domino(label).is_none() {
        return Err(Error::LabelNotPresent(label));
    }
    Ok(Cycle { labels: closure(label, t, &moved_all(t)) })
}

/// The partition of the labels of `t` into cycles, by smallest label.
pub fn all_cycles(t: &DominoTableau) -> Vec<Cycle> {
    let moved = moved_all(t);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for l in t.labels() {
        if seen.contains(&l) {
            continue;
        }
        let labels = closure(l, t, &moved);
        seen.extend(labels.iter().copied());
        out.push(Cycle { labels });
    }
    out
}

/// Whether `c` is exactly one cycle of `t`.
pub fn is_cycle_of(t: &DominoTableau, c: &Cycle) -> bool {
    match c.labels.first() {
        Some(&first) => t.domino(first).is_some() && closure(first, t, &moved_all(t)) == c.labels,
        None => false,
    }
}

/// `MT(T, c)`: replaces every domino of `c` by its moved position, all
/// computed against `t`.
pub fn move_through(t: &DominoTableau, c: &Cycle) -> Result<DominoTableau> {
    if !is_cycle_of(t, c) {
        return Err(Error::NotACycle);
    }
    let dominoes: Vec<Domino> = t
        .dominoes()
        .iter()
        .map(|d| if c.contains(d.label()) { moved_domino(d.label(), t) } else { Ok(*d) })
        .collect::<Result<_>>()?;
    // vacated diagonal squares join the core; re-covered ones leave it
    let covered: BTreeSet<Square> = dominoes.iter().flat_map(|d| d.squares()).collect();
    let extension = t
        .core_extension()
        .iter()
        .chain(&t.delta_squares())
        .filter(|s| !covered.contains(s))
        .copied()
        .collect();
    DominoTableau::with_extension(t.rank(), dominoes, extension)
}

/// Open or closed, by comparing covered squares before and after moving
/// through.
pub fn classify_cycle(t: &DominoTableau, c: &Cycle) -> Result<CycleClass> {
    let moved = move_through(t, c)?;
    let before = t.covered_squares();
    let after = moved.covered_squares();
    let vacated: Vec<Square> = before.difference(&after).copied().collect();
    let added: Vec<Square> = after.difference(&before).copied().collect();
    match (vacated.as_slice(), added.as_slice()) {
        ([], []) => Ok(CycleClass { kind: CycleKind::Closed, back: None, front: None }),
        ([b], [f]) => Ok(CycleClass { kind: CycleKind::Open, back: Some(*b), front: Some(*f) }),
        _ => Err(Error::Internal("moving through changed more than one square")),
    }
}

/// `MT(T, U)`: moves through each cycle of `cycles` in turn. Each must be a
/// cycle of `t`; they remain cycles after the others are moved.
pub fn move_through_set(t: &DominoTableau, cycles: &[Cycle]) -> Result<DominoTableau> {
    for c in cycles {
        if !is_cycle_of(t, c) {
            return Err(Error::NotACycle);
        }
    }
    let mut current = t.clone();
    for c in cycles {
        current = move_through(&current, c)?;
    }
    Ok(current)
}

/// `Delta(T)`: the cycles with a domino on the core-adjacent diagonal.
pub fn delta_cycles(t: &DominoTableau) -> Vec<Cycle> {
    let delta = t.delta_squares();
    all_cycles(t)
        .into_iter()
        .filter(|c| {
            c.labels.iter().any(|&l| {
                let d = t.domino(l).expect("label present");
                d.squares().iter().any(|s| delta.contains(s))
            })
        })
        .collect()
}
