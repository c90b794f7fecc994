use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use chutelat::chute::{apply, find_inverse_moves, find_moves, inverse_apply};
use chutelat::pipedream::Tile;
use chutelat::poset::{chute_path, ChutePoset, PolygonKind};
use chutelat::schubert::{schubert_divided_difference, schubert_from_pipedreams, AscentChoice};
use chutelat::tableaux::{
    balance_equivalence_check, check_column_injective, increment, increment_multiset, is_balanced,
    lehmer_form, lehmer_form_inverse, restrict, validate_inversions_tableau, Multiset,
};
use chutelat::{Permutation, PipeDream, StairTableau};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn all(n: usize) -> Vec<Permutation> {
    Permutation::all(n).collect()
}

fn posets(n: usize) -> Vec<ChutePoset> {
    all(n)
        .iter()
        .map(|w| ChutePoset::enumerate(w).unwrap())
        .collect()
}

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn random_perm(rng: &mut StdRng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

/// Random tableau with the zero pattern of `w` and distinct nonzero entries per column.
fn random_column_injective(rng: &mut StdRng, w: &Permutation) -> StairTableau {
    let n = w.n();
    let winv = w.inverse();
    let mut t = StairTableau::zeros(n);
    for j in 2..=n {
        let mut values: Vec<u32> = (1..=n as u32 + 2).collect();
        values.shuffle(rng);
        let mut values = values.into_iter();
        for i in 1..j {
            if winv.at(i) > winv.at(j) {
                t.set(i, j, values.next().unwrap());
            }
        }
    }
    t
}

proptest! {
    #[test]
    fn inverse_is_an_involution(w in perm_strategy(9)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(w.n()));
    }

    #[test]
    fn inversions_transfer_to_inverse(w in perm_strategy(9)) {
        let winv = w.inverse();
        let mapped: BTreeSet<(usize, usize)> = w
            .inversions()
            .into_iter()
            .map(|(i, j)| (winv.at(j), winv.at(i)))
            .collect();
        let direct: BTreeSet<(usize, usize)> = winv.inversions().into_iter().collect();
        prop_assert_eq!(mapped, direct);
    }

    #[test]
    fn triforce_fixes_the_front_and_folds_back(w in perm_strategy(8)) {
        let n = w.n();
        let t = w.triforce();
        prop_assert_eq!(t.n(), 2 * n);
        for i in 1..=n {
            prop_assert_eq!(t.at(i), i);
        }
        let folded: Vec<usize> = (1..=n).map(|i| 2 * n + 1 - t.at(2 * n + 1 - i)).collect();
        prop_assert_eq!(folded, w.word().to_vec());
    }

    #[test]
    fn any_filling_traces_to_a_permutation(n in 1usize..8, bits in prop::collection::vec(any::<bool>(), 28)) {
        let interior: Vec<(usize, usize)> = (1..n)
            .flat_map(|r| (1..=n - r).map(move |c| (r, c)))
            .collect();
        let crosses: Vec<(usize, usize)> = interior
            .iter()
            .zip(&bits)
            .filter(|(_, &b)| b)
            .map(|(&cell, _)| cell)
            .collect();
        let dream = PipeDream::with_crosses(n, &crosses).unwrap();
        let wiring = dream.wiring();
        prop_assert_eq!(wiring.n(), n);
        let reduced = dream.is_reduced();
        prop_assert_eq!(reduced, dream.trace().crossing_map().is_ok());
        if reduced {
            prop_assert_eq!(wiring.length(), crosses.len());
        }
    }
}

#[test]
fn lehmer_code_extremes() {
    for n in 1..8 {
        assert!(Permutation::identity(n)
            .lehmer_code()
            .iter()
            .all(|&c| c == 0));
        let expected: Vec<usize> = (0..n).rev().collect();
        assert_eq!(Permutation::longest(n).lehmer_code(), expected);
    }
}

#[test]
fn balance_by_shapes_equals_balance_by_hooks() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut balanced = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=6);
        let mut t = StairTableau::zeros(n);
        for j in 2..=n {
            for i in 1..j {
                t.set(i, j, rng.gen_range(0..=3));
            }
        }
        if balance_equivalence_check(&t).unwrap() {
            balanced += 1;
        }
    }
    // both outcomes occur, so the comparison is not vacuous
    assert!(balanced > 0 && balanced < 10_000, "{balanced}");
}

#[test]
fn lehmer_form_round_trips_on_random_column_injective_tableaux() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..2_000 {
        let n = rng.gen_range(2..=7);
        let w = random_perm(&mut rng, n);
        let t = random_column_injective(&mut rng, &w);
        check_column_injective(&t, &w).unwrap();
        let l = lehmer_form(&t, &w).unwrap();
        assert_eq!(lehmer_form_inverse(&l), t, "{w}");
        assert_eq!(lehmer_form(&lehmer_form_inverse(&l), &w).unwrap(), l);
    }
}

#[test]
fn increments_commute() {
    let mut rng = StdRng::seed_from_u64(13);
    let mut done = 0;
    while done < 1_000 {
        let n = rng.gen_range(3..=6);
        let w = random_perm(&mut rng, n);
        let inv = w.inversions();
        if inv.len() < 2 {
            continue;
        }
        let t = random_column_injective(&mut rng, &w);
        let a = *inv.choose(&mut rng).unwrap();
        let b = *inv.choose(&mut rng).unwrap();
        let ab = increment(&increment(&t, a).unwrap().0, b).unwrap().0;
        let ba = increment(&increment(&t, b).unwrap().0, a).unwrap().0;
        assert_eq!(ab, ba, "{w} {t:?} {a:?} {b:?}");
        done += 1;
    }
}

#[test]
fn increment_raises_one_lehmer_entry() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..2_000 {
        let n = rng.gen_range(2..=6);
        let w = random_perm(&mut rng, n);
        let Some(&b) = w.inversions().choose(&mut rng) else {
            continue;
        };
        let t = random_column_injective(&mut rng, &w);
        let before = lehmer_form(&t, &w).unwrap();
        let bumped = increment(&t, b).unwrap().0;
        let after = lehmer_form(&bumped, &w).unwrap();
        for (i, j) in w.inversions() {
            let raise = u32::from((i, j) == b);
            assert_eq!(after.get(i, j), before.get(i, j) + raise);
        }
    }
}

#[test]
fn increments_in_the_last_column_only_grow_entries() {
    for poset in posets(5) {
        let w = poset.w();
        let n = w.n();
        if n < 2 {
            continue;
        }
        for a in 0..poset.len() {
            for b in 0..poset.len() {
                let (t, t2) = (poset.theta(a), poset.theta(b));
                let off_last_agree = (2..n).all(|j| (1..j).all(|i| t.get(i, j) == t2.get(i, j)));
                if off_last_agree && poset.leq(a, b) {
                    assert!(t.le(t2), "{w}: {a} {b}");
                }
            }
        }
    }
}

#[test]
fn column_injective_equality_case() {
    let mut rng = StdRng::seed_from_u64(19);
    for _ in 0..2_000 {
        let n = rng.gen_range(3..=6);
        let w = random_perm(&mut rng, n);
        let inv = w.inversions();
        if inv.is_empty() {
            continue;
        }
        let t = random_column_injective(&mut rng, &w);
        let mut m = Multiset::new();
        for _ in 0..rng.gen_range(1..=4) {
            *m.entry(*inv.choose(&mut rng).unwrap()).or_insert(0) += 1;
        }
        let t2 = increment_multiset(&t, &m).unwrap();
        for &(i, j) in &inv {
            if m.contains_key(&(i, j)) {
                continue;
            }
            let flipped = (1..i)
                .filter(|&r| {
                    t.get(r, j) != 0 && t.get(r, j) < t.get(i, j) && t2.get(r, j) > t2.get(i, j)
                })
                .count() as i64;
            assert_eq!(
                flipped,
                i64::from(t.get(i, j)) - i64::from(t2.get(i, j)),
                "{w} {t:?} {m:?}"
            );
        }
    }
}

#[test]
fn restricted_inversions_tableaux_stay_valid() {
    for poset in posets(5) {
        let w = poset.w();
        for k in 0..poset.len() {
            for j in 2..=w.n() {
                let r = restrict(poset.theta(k), j).unwrap();
                validate_inversions_tableau(&r, &w.restrict_values(j)).unwrap();
            }
        }
    }
}

#[test]
fn theta_is_balanced_and_crossings_match_inversions() {
    for poset in posets(5) {
        let w = poset.w();
        let inv: BTreeSet<(usize, usize)> = w.inversions().into_iter().collect();
        for dream in poset.elements() {
            assert!(is_balanced(&dream.theta().unwrap()));
            let crossed: BTreeSet<(usize, usize)> =
                dream.trace().crossing_map().unwrap().into_keys().collect();
            assert_eq!(crossed, inv, "{w}");
        }
    }
}

#[test]
fn crossing_formulas_match_lehmer_forms() {
    for poset in posets(5) {
        let w = poset.w();
        let winv = w.inverse();
        for (k, dream) in poset.elements().iter().enumerate() {
            let transposed = dream.transpose();
            assert_eq!(transposed.transpose(), *dream);
            let lt = lehmer_form(&transposed.theta().unwrap(), &winv).unwrap();
            for (i, j) in w.inversions() {
                assert_eq!(
                    dream.phi_row_entry(i, j).unwrap(),
                    poset.lehmer(k).get(i, j)
                );
                let (a, b) = (winv.at(j), winv.at(i));
                assert_eq!(
                    dream.phi_transpose_entry(i, j).unwrap(),
                    lt.get(a, b),
                    "{w} ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn deleting_the_last_pipe_restricts_theta() {
    let mut perms = all(5);
    perms.push(p("41386752"));
    for w in perms {
        if w.n() < 2 {
            continue;
        }
        let hat = w.hat().unwrap();
        for dream in ChutePoset::enumerate(&w).unwrap().elements() {
            let small = dream.hat_delete().unwrap();
            assert_eq!(small.wiring(), hat, "{w}");
            assert!(small.is_reduced());
            assert_eq!(
                small.theta().unwrap(),
                restrict(&dream.theta().unwrap(), w.n() - 1).unwrap()
            );
        }
    }
    assert_eq!(p("41386752").hat().unwrap(), p("4136752"));
}

#[test]
fn triforce_embedding_is_injective_and_lands_in_the_doubled_permutation() {
    for poset in posets(4) {
        let target = poset.w().triforce();
        let images: BTreeSet<PipeDream> = poset
            .elements()
            .iter()
            .map(|d| d.triforce_embed().unwrap())
            .collect();
        assert_eq!(images.len(), poset.len());
        assert!(images
            .iter()
            .all(|d| d.wiring() == target && d.is_reduced()));
    }
}

#[test]
fn moves_are_never_degenerate_and_undo_cleanly() {
    for poset in posets(5) {
        for (k, dream) in poset.elements().iter().enumerate() {
            for m in find_moves(dream).unwrap() {
                assert!(m.rect.bottom > m.rect.top && m.rect.right > m.rect.left);
                let up = apply(dream, &m).unwrap();
                let j = poset.index_of(&up).unwrap();
                assert!(poset.leq(k, j) && k != j);
                assert!(find_inverse_moves(&up).unwrap().contains(&m));
                assert_eq!(inverse_apply(&up, &m).unwrap(), *dream);
                // Lehmer entries grow exactly on the increment boxes
                let (l1, l2) = (poset.lehmer(k), poset.lehmer(j));
                let grown: Vec<(usize, usize)> = poset
                    .w()
                    .inversions()
                    .into_iter()
                    .filter(|&(a, b)| l2.get(a, b) != l1.get(a, b))
                    .collect();
                assert!(grown.iter().all(|&(a, b)| l2.get(a, b) == l1.get(a, b) + 1));
                assert!(grown.iter().all(|&(a, _)| a == m.pipes.0));
                assert!(grown.contains(&m.pipes));
            }
        }
    }
}

#[test]
fn random_move_undo_pairs() {
    let mut rng = StdRng::seed_from_u64(23);
    let s6 = all(6);
    let mut done = 0;
    while done < 1_000 {
        let w = s6.choose(&mut rng).unwrap();
        let poset = ChutePoset::enumerate(w).unwrap();
        let dream = poset.element(rng.gen_range(0..poset.len()));
        let Some(m) = find_moves(dream).unwrap().choose(&mut rng).cloned() else {
            continue;
        };
        assert_eq!(
            inverse_apply(&apply(dream, &m).unwrap(), &m).unwrap(),
            *dream
        );
        done += 1;
    }
}

#[test]
fn extremes_and_full_interval() {
    for poset in posets(5) {
        let (lo, hi) = (poset.min_element().unwrap(), poset.max_element().unwrap());
        assert!(find_inverse_moves(poset.element(lo)).unwrap().is_empty());
        assert!(find_moves(poset.element(hi)).unwrap().is_empty());
        assert_eq!(poset.interval(lo, hi).unwrap().len(), poset.len());
    }
}

#[test]
fn cover_forks_close_into_diamonds_or_pentagons() {
    for poset in posets(5) {
        for (p0, (p1, _), (p2, _)) in poset.up_forks() {
            let top = poset.join(p1, p2).unwrap();
            let kind = poset.classify_polygon(p0, top).unwrap();
            assert!(
                matches!(kind, PolygonKind::Diamond | PolygonKind::Pentagon),
                "{} {p0} {top}",
                poset.w()
            );
        }
    }
}

#[test]
fn path_steps_raise_lehmer_entries_on_their_boxes() {
    for poset in posets(5) {
        let w = poset.w();
        let (lo, hi) = (poset.min_element().unwrap(), poset.max_element().unwrap());
        let steps = chute_path(poset.theta(lo), poset.theta(hi), w).unwrap();
        let mut cur = poset.theta(lo).clone();
        let mut total = 0;
        for s in &steps {
            let m: Multiset = s.boxes.iter().map(|&b| (b, 1)).collect();
            let next = increment_multiset(&cur, &m).unwrap();
            let (l1, l2) = (
                lehmer_form(&cur, w).unwrap(),
                lehmer_form(&next, w).unwrap(),
            );
            for (i, j) in w.inversions() {
                let raise = u32::from(s.boxes.contains(&(i, j)));
                assert_eq!(l2.get(i, j), l1.get(i, j) + raise);
            }
            total += s.boxes.len() as u32;
            cur = next;
        }
        let (l_lo, l_hi) = (poset.lehmer(lo), poset.lehmer(hi));
        let spread: u32 = w
            .inversions()
            .into_iter()
            .map(|(i, j)| l_hi.get(i, j) - l_lo.get(i, j))
            .sum();
        assert_eq!(total, spread, "{w}");
    }
}

#[test]
fn schubert_is_path_independent_and_positive() {
    let mut rng = StdRng::seed_from_u64(29);
    let s5 = all(5);
    for w in s5.choose_multiple(&mut rng, 20) {
        let first = schubert_divided_difference(w, AscentChoice::First).unwrap();
        let last = schubert_divided_difference(w, AscentChoice::Last).unwrap();
        assert_eq!(first, last, "{w}");
        assert!(first.terms().all(|(_, c)| c > 0));
        assert!(schubert_from_pipedreams(w)
            .unwrap()
            .terms()
            .all(|(_, c)| c > 0));
    }
}

#[test]
fn seed_has_left_justified_crosses() {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            let seed = PipeDream::seed(&w);
            let code = w.inverse().lehmer_code();
            for r in 1..n {
                for c in 1..=n - r {
                    assert_eq!(seed.tile(r, c) == Tile::Cross, c <= code[r - 1]);
                }
            }
        }
    }
}
