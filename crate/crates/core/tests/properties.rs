//! Structural checks on every tableau reachable from small hyperoctahedral
//! groups, plus randomized ones on larger inputs.

use std::collections::{BTreeMap, BTreeSet};

use domino_core::cycles::{
    all_cycles, classify_cycle, cycle_through, delta_cycles, move_through, move_through_set,
    moved_domino,
};
use domino_core::extended::{
    correspondence_components, gamma, mmt, move_through_pair, move_through_pair_set,
};
use domino_core::insertion::{insert_pair, robinson_schensted, rs_inverse, rs_partial};
use domino_core::rankmaps::{t_map, t_step};
use domino_core::signed::enumerate_hyperoctahedral;
use domino_core::tableau::{core_shape, is_fixed_square, validate_tableau, Square};
use domino_core::{CycleKind, DominoTableau, ExtendedLabel, SignedPermutation, TableauPair};
use proptest::prelude::*;

fn reachable_pairs(max_n: usize, max_rank: u32) -> Vec<(SignedPermutation, u32, TableauPair)> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for sigma in enumerate_hyperoctahedral(n) {
            for r in 0..=max_rank {
                out.push((sigma.clone(), r, robinson_schensted(&sigma, r)));
            }
        }
    }
    out
}

fn reachable_tableaux(max_n: usize, max_rank: u32) -> BTreeSet<DominoTableau> {
    reachable_pairs(max_n, max_rank).into_iter().flat_map(|(_, _, p)| [p.left, p.right]).collect()
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1u32 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

#[test]
fn reachable_tableaux_are_well_formed() {
    for t in reachable_tableaux(5, 4) {
        let r = t.rank();
        assert!(t.is_standard());
        for d in t.dominoes() {
            let fixed = d.squares().iter().filter(|&&s| is_fixed_square(r, s)).count();
            assert_eq!(fixed, 1);
        }
        let shape = t.shape();
        let core = core_shape(r);
        for row in 1..=shape.rows().len() + 1 {
            for col in 1..=shape.row_len(1) as i32 + 1 {
                let s = Square::new(row as i32, col);
                assert_eq!(s.in_core(r), core.contains_square(s));
                let expected = if s.in_core(r) {
                    assert!(shape.contains_square(s));
                    ExtendedLabel::Zero
                } else if let Some(l) = t.label_of(s) {
                    ExtendedLabel::Finite(l)
                } else {
                    assert!(!shape.contains_square(s));
                    ExtendedLabel::Infinity
                };
                assert_eq!(t.label_at(row as i32, col), expected);
            }
            assert_eq!(t.label_at(row as i32, 0), ExtendedLabel::Zero);
            assert_eq!(t.label_at(0, row as i32), ExtendedLabel::Zero);
        }
        // rebuild through the validator
        assert_eq!(validate_tableau(r, t.dominoes().iter().copied()).unwrap(), t);
    }
}

#[test]
fn each_insertion_adds_one_domino_to_the_shape() {
    for n in 0..=4 {
        for sigma in enumerate_hyperoctahedral(n) {
            for r in 0..=3 {
                for k in 1..=n {
                    let before = rs_partial(&sigma, r, k - 1).unwrap().shape();
                    let after = rs_partial(&sigma, r, k).unwrap().shape();
                    let diff = after.difference(&before).expect("shapes grow");
                    assert_eq!(diff.len(), 2);
                    assert!(
                        (diff[0].row == diff[1].row && diff[1].col == diff[0].col + 1)
                            || (diff[0].col == diff[1].col && diff[1].row == diff[0].row + 1)
                    );
                }
            }
        }
    }
}

#[test]
fn inverse_symmetry_and_round_trip() {
    for (sigma, r, pair) in reachable_pairs(4, 3) {
        assert_eq!(robinson_schensted(&sigma.inverse(), r), pair.swapped());
        assert_eq!(rs_inverse(&pair).unwrap(), sigma);
        if sigma.is_involution() {
            assert_eq!(pair.left, pair.right);
        }
    }
}

#[test]
fn moved_domino_keeps_the_fixed_square() {
    for t in reachable_tableaux(5, 4) {
        for d in t.dominoes() {
            let moved = moved_domino(d.label(), &t).unwrap();
            let shared: Vec<Square> =
                d.squares().into_iter().filter(|&s| moved.contains(s)).collect();
            assert_eq!(shared.len(), 1);
            assert!(is_fixed_square(t.rank(), shared[0]));
        }
    }
}

#[test]
fn cycles_partition_and_move_cleanly() {
    for t in reachable_tableaux(4, 3) {
        let cycles = all_cycles(&t);
        let mut seen = BTreeSet::new();
        for c in &cycles {
            for &l in c.labels() {
                assert!(seen.insert(l));
                assert_eq!(&cycle_through(l, &t).unwrap(), c);
            }
            let moved = move_through(&t, c).unwrap();
            assert_eq!(moved.rank(), t.rank());
            assert!(moved.is_standard());
            let class = classify_cycle(&t, c).unwrap();
            let before = t.covered_squares();
            let after = moved.covered_squares();
            match class.kind {
                CycleKind::Closed => {
                    assert_eq!(before, after);
                    assert_eq!(moved.shape(), t.shape());
                }
                CycleKind::Open => {
                    assert_eq!(before.difference(&after).count(), 1);
                    assert_eq!(after.difference(&before).count(), 1);
                }
            }
            // moving back through the same labels restores the tableau
            assert_eq!(move_through(&moved, c).unwrap(), t);
        }
        assert_eq!(seen, t.labels().collect());
    }
}

#[test]
fn moving_through_is_order_independent() {
    for t in reachable_tableaux(4, 3) {
        let cycles = all_cycles(&t);
        for subset in subsets(&cycles) {
            let forward = move_through_set(&t, &subset).unwrap();
            let mut reversed = subset.clone();
            reversed.reverse();
            assert_eq!(move_through_set(&t, &reversed).unwrap(), forward);
            if subset.len() > 2 {
                let mut rotated = subset.clone();
                rotated.rotate_left(1);
                assert_eq!(move_through_set(&t, &rotated).unwrap(), forward);
            }
        }
    }
}

#[test]
fn delta_cycles_are_open_and_clear_the_diagonal() {
    for t in reachable_tableaux(5, 4) {
        let delta = delta_cycles(&t);
        for c in &delta {
            assert!(classify_cycle(&t, c).unwrap().is_open());
        }
        let cleared = move_through_set(&t, &delta).unwrap();
        assert!(cleared.delta_squares().is_empty());
        // every nonempty tableau has a domino next to its core
        assert_eq!(delta.is_empty(), t.is_empty());
    }
}

#[test]
fn components_pair_backs_and_fronts() {
    for (_, _, pair) in reachable_pairs(4, 3) {
        for b in correspondence_components(&pair).unwrap() {
            let class_multiset = |t: &DominoTableau, cycles: &[domino_core::Cycle]| {
                let mut backs = BTreeMap::new();
                let mut fronts = BTreeMap::new();
                for c in cycles {
                    let class = classify_cycle(t, c).unwrap();
                    *backs.entry(class.back).or_insert(0) += 1;
                    *fronts.entry(class.front).or_insert(0) += 1;
                }
                (backs, fronts)
            };
            if !b.in_left.is_empty() && !b.in_right.is_empty() {
                assert_eq!(
                    class_multiset(&pair.left, b.in_left.cycles()),
                    class_multiset(&pair.right, b.in_right.cycles())
                );
            } else {
                // only a closed cycle stands alone
                let (t, side) = if b.in_left.is_empty() {
                    (&pair.right, &b.in_right)
                } else {
                    (&pair.left, &b.in_left)
                };
                assert_eq!(side.len(), 1);
                assert!(!classify_cycle(t, &side.cycles()[0]).unwrap().is_open());
            }
            let moved = move_through_pair(&pair, &b).unwrap();
            assert_eq!(moved.rank(), pair.rank());
            assert_eq!(moved.left.shape(), moved.right.shape());
        }
    }
}

#[test]
fn gamma_is_minimal() {
    for (_, _, pair) in reachable_pairs(3, 3) {
        let g = gamma(&pair).unwrap();
        if g.len() < 2 {
            continue;
        }
        for subset in subsets(&g) {
            if subset.is_empty() || subset.len() == g.len() {
                continue;
            }
            let moved = move_through_pair_set(&pair, &subset).unwrap();
            let cleared =
                moved.left.delta_squares().is_empty() && moved.right.delta_squares().is_empty();
            assert!(!cleared);
        }
    }
}

#[test]
fn mmt_raises_rank_by_one() {
    for (_, r, pair) in reachable_pairs(4, 3) {
        let out = mmt(&pair).unwrap();
        assert_eq!(out.rank(), r + 1);
        assert_eq!(out.len(), pair.len());
        assert!(out.is_standard());
        assert_eq!(out.left.shape(), out.right.shape());
    }
}

#[test]
fn insertion_commutes_with_mmt() {
    for n in 1..=4 {
        for sigma in enumerate_hyperoctahedral(n) {
            let triples: Vec<_> = sigma.triples().collect();
            for r in 0..=3 {
                for (k, &triple) in triples.iter().enumerate() {
                    let partial = rs_partial(&sigma, r, k).unwrap();
                    let lhs = mmt(&insert_pair(triple, &partial).unwrap()).unwrap();
                    let rhs = insert_pair(triple, &mmt(&partial).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "sigma {sigma}, r {r}, k {k}");
                }
            }
        }
    }
}

#[test]
fn involution_tableaux_step_by_delta() {
    for (sigma, r, pair) in reachable_pairs(5, 4) {
        if !sigma.is_involution() {
            continue;
        }
        let t = &pair.left;
        // closed cycles sit alone with an empty partner; open ones pair up
        for b in correspondence_components(&pair).unwrap() {
            assert!(b.in_left.len() <= 1 && b.in_right.len() <= 1);
            if let (Some(c), Some(d)) = (b.in_left.cycles().first(), b.in_right.cycles().first()) {
                assert_eq!(c, d);
            }
        }
        let stepped = t_step(t).unwrap();
        assert_eq!(stepped, robinson_schensted(&sigma, r + 1).left);
        assert_eq!(
            mmt(&pair).unwrap(),
            TableauPair::new(stepped.clone(), stepped.clone()).unwrap()
        );
        assert_eq!(t_map(t, r + 1).unwrap(), stepped);
        if r <= 2 {
            let mut iterated = t.clone();
            for target in r + 1..=r + 2 {
                iterated = t_step(&iterated).unwrap();
                assert_eq!(t_map(t, target).unwrap(), iterated);
            }
        }
    }
}

fn signed_permutation(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (0..=max_n)
        .prop_flat_map(|n| {
            (
                Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(values, signs)| {
            let window: Vec<i32> =
                values.iter().zip(signs).map(|(&v, neg)| if neg { -v } else { v }).collect();
            SignedPermutation::from_window(&window).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_relation_beyond_exhaustive_sizes(sigma in signed_permutation(8), r in 0u32..7) {
        let pair = robinson_schensted(&sigma, r);
        prop_assert_eq!(mmt(&pair).unwrap(), robinson_schensted(&sigma, r + 1));
    }

    #[test]
    fn inverse_and_transpose(sigma in signed_permutation(8), r in 0u32..7) {
        let pair = robinson_schensted(&sigma, r);
        prop_assert_eq!(rs_inverse(&pair).unwrap(), sigma.clone());
        prop_assert_eq!(robinson_schensted(&sigma.inverse(), r), pair.swapped());
    }
}
