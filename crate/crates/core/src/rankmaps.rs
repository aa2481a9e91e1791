//! Relations between correspondences of different rank.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cycles::{delta_cycles, move_through_set};
use crate::error::{Error, Result};
use crate::extended::{mmt, promote};
use crate::insertion::{robinson_schensted, rs_inverse, TableauPair};
use crate::signed::{enumerate_hyperoctahedral, SignedPermutation};
use crate::tableau::{DominoTableau, Square};

/// Outcome of checking `MMT(G_r(sigma)) = G_{r+1}(sigma)` over many `sigma`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub rank_from: u32,
    pub count_checked: u64,
    pub count_failed: u64,
    pub failures: Vec<(SignedPermutation, String)>,
}

impl VerificationReport {
    pub fn new(n: usize, rank_from: u32) -> Self {
        VerificationReport { n, rank_from, ..Default::default() }
    }

    pub fn record(&mut self, sigma: &SignedPermutation) {
        self.count_checked += 1;
        if let Err(why) = check_relation(sigma, self.rank_from) {
            self.count_failed += 1;
            self.failures.push((sigma.clone(), why));
        }
    }

    /// Folds another report for the same `n` and rank into this one.
    pub fn merge(&mut self, other: VerificationReport) {
        self.count_checked += other.count_checked;
        self.count_failed += other.count_failed;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.count_failed == 0
    }
}

fn check_relation(sigma: &SignedPermutation, rank: u32) -> core::result::Result<(), String> {
    let promoted = mmt(&robinson_schensted(sigma, rank)).map_err(|e| format!("{e}"))?;
    let direct = robinson_schensted(sigma, rank + 1);
    if promoted == direct {
        Ok(())
    } else {
        Err(format!("MMT gives {:?}, G_{} gives {:?}", promoted, rank + 1, direct))
    }
}

/// True iff `MMT(G_r(sigma)) = G_{r+1}(sigma)` domino for domino.
pub fn verify_relation(sigma: &SignedPermutation, rank: u32) -> bool {
    check_relation(sigma, rank).is_ok()
}

/// Checks the rank relation for every element of `H_n`.
pub fn verify_all(n: usize, rank: u32) -> VerificationReport {
    let mut report = VerificationReport::new(n, rank);
    for sigma in enumerate_hyperoctahedral(n) {
        report.record(&sigma);
    }
    report
}

/// `t_{r,r+1}`: moves through the cycles on the core-adjacent diagonal and
/// raises the rank by one.
pub fn t_step(t: &DominoTableau) -> Result<DominoTableau> {
    promote(&move_through_set(t, &delta_cycles(t))?)
}

/// `t_{r,r'}`: the rank-`to_rank` tableau `T'` with
/// `G_{r'}^{-1}(T', T') = G_r^{-1}(T, T)`.
pub fn t_map(t: &DominoTableau, to_rank: u32) -> Result<DominoTableau> {
    let sigma = rs_inverse(&TableauPair::new(t.clone(), t.clone())?)?;
    Ok(robinson_schensted(&sigma, to_rank).left)
}

/// Position of a square measured from the core boundary rather than from
/// the corner: `offset = row + col - rank - 1` is its distance from the core.
/// Squares right of the main diagonal belong to the arm and keep their row;
/// squares below it belong to the leg and keep their column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelativeSquare {
    Arm { row: i32, offset: i32 },
    Leg { col: i32, offset: i32 },
    Diagonal { offset: i32 },
}

impl RelativeSquare {
    pub fn of(rank: u32, s: Square) -> Self {
        let offset = s.diagonal() - rank as i32 - 1;
        match s.col.cmp(&s.row) {
            core::cmp::Ordering::Greater => RelativeSquare::Arm { row: s.row, offset },
            core::cmp::Ordering::Less => RelativeSquare::Leg { col: s.col, offset },
            core::cmp::Ordering::Equal => RelativeSquare::Diagonal { offset },
        }
    }
}

/// Every domino of `t` as `(label, squares)` in core-relative coordinates.
/// Once the arm and leg of a tableau are far apart, raising the rank only
/// slides them away from each other and this description stops changing.
pub fn core_relative_placement(t: &DominoTableau) -> Vec<(u32, [RelativeSquare; 2])> {
    t.dominoes()
        .iter()
        .map(|d| {
            let [a, b] = d.squares();
            (d.label(), [RelativeSquare::of(t.rank(), a), RelativeSquare::of(t.rank(), b)])
        })
        .collect()
}

/// Least rank `r0` from which `G_r(sigma)` keeps the same core-relative
/// placement (both tableaux) for every `sigma` in `H_n` and every rank in
/// `r0..=ceiling`. Fails if the last two ranks below the ceiling still
/// differ, since then nothing was observed to settle.
pub fn stabilization_rank(n: usize, ceiling: u32) -> Result<u32> {
    let sigmas: Vec<SignedPermutation> = enumerate_hyperoctahedral(n).collect();
    let placements = |rank: u32| -> Vec<Placement> {
        sigmas
            .iter()
            .map(|s| {
                let pair = robinson_schensted(s, rank);
                (core_relative_placement(&pair.left), core_relative_placement(&pair.right))
            })
            .collect()
    };
    let per_rank: Vec<Vec<Placement>> = (0..=ceiling).map(placements).collect();
    let mut r0 = ceiling as usize;
    while r0 > 0 && per_rank[r0 - 1] == per_rank[r0] {
        r0 -= 1;
    }
    if n > 0 && r0 == ceiling as usize {
        return Err(Error::NoStabilization { ceiling });
    }
    Ok(r0 as u32)
}

type Placement = (Vec<(u32, [RelativeSquare; 2])>, Vec<(u32, [RelativeSquare; 2])>);
