//! Extended cycles of a same-shape pair and the minimal moving-through map.
//!
//! Open cycles of the two tableaux are linked whenever they share a vacated
//! square or a newly covered square. The connected components of that
//! linkage are the corresponding pairs of extended cycles: moving through
//! both sides of one component keeps the two tableaux the same shape.
//! Moving through the components that reach the core-adjacent diagonal of
//! either tableau empties that diagonal, after which it joins the core.

use alloc::vec::Vec;

use crate::cycles::{
    all_cycles, classify_cycle, delta_cycles, move_through_set, Cycle, CycleClass,
};
use crate::error::{Error, Result};
use crate::insertion::TableauPair;
use crate::tableau::DominoTableau;

/// A union of cycles of one tableau of a pair. Empty only as the partner
/// side of a closed cycle.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedCycle {
    cycles: Vec<Cycle>,
}

impl ExtendedCycle {
    fn new(mut cycles: Vec<Cycle>) -> Self {
        cycles.sort();
        ExtendedCycle { cycles }
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn contains_label(&self, label: u32) -> bool {
        self.cycles.iter().any(|c| c.contains(label))
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.cycles.iter().flat_map(|c| c.labels().iter().copied())
    }
}

/// Corresponding extended cycles in the left and right tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedCyclePair {
    pub in_left: ExtendedCycle,
    pub in_right: ExtendedCycle,
}

struct Classified {
    cycle: Cycle,
    class: CycleClass,
}

fn classified(t: &DominoTableau) -> Result<Vec<Classified>> {
    all_cycles(t)
        .into_iter()
        .map(|cycle| Ok(Classified { class: classify_cycle(t, &cycle)?, cycle }))
        .collect()
}

fn linked(a: &CycleClass, b: &CycleClass) -> bool {
    a.is_open() && b.is_open() && (a.back == b.back || a.front == b.front)
}

/// Splits the cycles of both tableaux into corresponding extended cycles.
///
/// Components are ordered by the smallest left label (left-only components
/// first by that rule, then right-only ones by smallest right label).
pub fn correspondence_components(pair: &TableauPair) -> Result<Vec<ExtendedCyclePair>> {
    let left = classified(&pair.left)?;
    let right = classified(&pair.right)?;
    let nl = left.len();
    // nodes 0..nl are left cycles, nl.. right cycles
    let mut component = alloc::vec![usize::MAX; nl + right.len()];
    let mut count = 0;
    for start in 0..component.len() {
        if component[start] != usize::MAX {
            continue;
        }
        component[start] = count;
        let mut stack = alloc::vec![start];
        while let Some(node) = stack.pop() {
            let (class, others, offset) = if node < nl {
                (&left[node].class, &right, nl)
            } else {
                (&right[node - nl].class, &left, 0)
            };
            for (i, other) in others.iter().enumerate() {
                let j = i + offset;
                if component[j] == usize::MAX && linked(class, &other.class) {
                    component[j] = count;
                    stack.push(j);
                }
            }
        }
        count += 1;
    }

    let mut out: Vec<ExtendedCyclePair> = (0..count)
        .map(|_| ExtendedCyclePair {
            in_left: ExtendedCycle::default(),
            in_right: ExtendedCycle::default(),
        })
        .collect();
    for (i, c) in left.into_iter().enumerate() {
        out[component[i]].in_left.cycles.push(c.cycle);
    }
    for (i, c) in right.into_iter().enumerate() {
        out[component[nl + i]].in_right.cycles.push(c.cycle);
    }
    for b in &mut out {
        if b.in_left.is_empty() && b.in_right.is_empty() {
            return Err(Error::Internal("empty extended cycle component"));
        }
        b.in_left = ExtendedCycle::new(core::mem::take(&mut b.in_left.cycles));
        b.in_right = ExtendedCycle::new(core::mem::take(&mut b.in_right.cycles));
    }
    out.sort();
    Ok(out)
}

/// The extended cycle of `label` in `t` relative to `s`.
pub fn extended_cycle(label: u32, t: &DominoTableau, s: &DominoTableau) -> Result<ExtendedCycle> {
    if t.domino(label).is_none() {
        return Err(Error::LabelNotPresent(label));
    }
    let pair = TableauPair::new(t.clone(), s.clone())?;
    correspondence_components(&pair)?
        .into_iter()
        .find(|b| b.in_left.contains_label(label))
        .map(|b| b.in_left)
        .ok_or(Error::Internal("label missing from every component"))
}

fn move_components(pair: &TableauPair, components: &[ExtendedCyclePair]) -> Result<TableauPair> {
    let left: Vec<Cycle> =
        components.iter().flat_map(|b| b.in_left.cycles.iter().cloned()).collect();
    let right: Vec<Cycle> =
        components.iter().flat_map(|b| b.in_right.cycles.iter().cloned()).collect();
    let moved_left = move_through_set(&pair.left, &left)?;
    let moved_right = move_through_set(&pair.right, &right)?;
    TableauPair::new(moved_left, moved_right)
        .map_err(|_| Error::Internal("moving through a component broke same-shapeness"))
}

/// `MT((T, S), b)` for one component `b` of the pair.
pub fn move_through_pair(pair: &TableauPair, b: &ExtendedCyclePair) -> Result<TableauPair> {
    if !correspondence_components(pair)?.contains(b) {
        return Err(Error::NotAComponent);
    }
    move_components(pair, core::slice::from_ref(b))
}

/// Moves through several components at once; each must be a component of
/// the pair.
pub fn move_through_pair_set(
    pair: &TableauPair,
    components: &[ExtendedCyclePair],
) -> Result<TableauPair> {
    let all = correspondence_components(pair)?;
    if components.iter().any(|b| !all.contains(b)) {
        return Err(Error::NotAComponent);
    }
    move_components(pair, components)
}

/// The components that contain a cycle through the core-adjacent diagonal
/// of either tableau.
pub fn gamma(pair: &TableauPair) -> Result<Vec<ExtendedCyclePair>> {
    let delta_left = delta_cycles(&pair.left);
    let delta_right = delta_cycles(&pair.right);
    Ok(correspondence_components(pair)?
        .into_iter()
        .filter(|b| {
            b.in_left.cycles.iter().any(|c| delta_left.contains(c))
                || b.in_right.cycles.iter().any(|c| delta_right.contains(c))
        })
        .collect())
}

fn check_delta_open(t: &DominoTableau) -> Result<()> {
    for c in delta_cycles(t) {
        if !classify_cycle(t, &c)?.is_open() {
            return Err(Error::ClosedDeltaCycle);
        }
    }
    Ok(())
}

/// Moves `t` to rank `rank + 1`, requiring the diagonal `row + col =
/// rank + 2` to be free of dominoes.
pub(crate) fn promote(t: &DominoTableau) -> Result<DominoTableau> {
    let diagonal = t.rank() as i32 + 2;
    if let Some(d) =
        t.dominoes().iter().find(|d| d.squares().iter().any(|s| s.diagonal() == diagonal))
    {
        let square = *d.squares().iter().find(|s| s.diagonal() == diagonal).unwrap();
        return Err(Error::DeltaNotCleared { square });
    }
    t.with_rank(t.rank() + 1)
}

/// `MMT`: moves through every component of [`gamma`] and raises the rank by
/// one.
pub fn mmt(pair: &TableauPair) -> Result<TableauPair> {
    check_delta_open(&pair.left)?;
    check_delta_open(&pair.right)?;
    let moved = move_components(pair, &gamma(pair)?)?;
    let left = promote(&moved.left)?;
    let right = promote(&moved.right)?;
    TableauPair::new(left, right).map_err(|_| Error::Internal("promoted pair differs in shape"))
}
