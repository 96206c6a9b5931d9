use std::collections::HashSet;

use proptest::prelude::*;
use twinbuild::coxeter::*;

fn affine(n: usize) -> CoxeterMatrix {
    coxeter_matrix(Kind::AffineA, n).unwrap()
}

fn finite(n: usize) -> CoxeterMatrix {
    coxeter_matrix(Kind::FiniteA, n).unwrap()
}

/// `v ⪯ w` iff a reduced word of `v` is a subword of a reduced word of `w`.
fn subword_leq(v: &Word, w: &Word, cm: &CoxeterMatrix) -> bool {
    let w = reduce(w, cm).unwrap();
    let lv = length(v, cm).unwrap();
    let k = w.len();
    (0u32..1 << k).any(|mask| {
        if mask.count_ones() as usize != lv {
            return false;
        }
        let sub = Word((0..k).filter(|i| mask >> i & 1 == 1).map(|i| w.0[i]).collect());
        is_reduced(&sub, cm).unwrap() && equal(&sub, v, cm).unwrap()
    })
}

fn perm_inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

#[test]
fn finite_a_length_is_inversion_count() {
    // s_i swaps positions i, i+1; the product acts on 1..n
    let n = 4;
    let cm = finite(n);
    let all = elements_up_to(&cm, 20).unwrap();
    assert_eq!(all.len(), 24);
    for w in &all {
        let mut p: Vec<usize> = (1..=n).collect();
        for &s in &w.0 {
            p.swap(s - 1, s);
        }
        assert_eq!(perm_inversions(&p), w.len());
    }
}

#[test]
fn braid_relations() {
    for n in 3..6 {
        let cm = affine(n);
        for &i in cm.labels() {
            for &j in cm.labels() {
                let m = match cm.entry(i, j).unwrap() {
                    Bond::Finite(m) => m as usize,
                    Bond::Infinite => unreachable!(),
                };
                let word: Vec<usize> = [i, j].iter().copied().cycle().take(2 * m).collect();
                assert_eq!(reduce(&Word(word), &cm).unwrap(), Word::empty());
                if i != j {
                    let shorter: Vec<usize> = [i, j].iter().copied().cycle().take(2 * m - 2).collect();
                    assert_ne!(reduce(&Word(shorter), &cm).unwrap(), Word::empty());
                }
            }
        }
    }
}

#[test]
fn bruhat_matches_subword_oracle() {
    for cm in [affine(3), finite(4), affine(2)] {
        let elems = elements_up_to(&cm, 4).unwrap();
        for v in &elems {
            for w in &elems {
                assert_eq!(
                    bruhat_leq(v, w, &cm).unwrap(),
                    subword_leq(v, w, &cm),
                    "{v} <= {w}"
                );
            }
        }
    }
}

#[test]
fn sphere_sizes_of_affine_a2() {
    // Ã_2 growth: 1, 3, 6, 9, 12, ...
    let cm = affine(3);
    let all = elements_up_to(&cm, 6).unwrap();
    for l in 0..=6 {
        let c = all.iter().filter(|w| w.len() == l).count();
        assert_eq!(c, if l == 0 { 1 } else { 3 * l });
    }
}

#[test]
fn coset_decomposition_is_unique() {
    let cm = finite(5);
    let j = [1, 3, 4];
    let reps = min_coset_reps(&cm, &j, 100).unwrap();
    // |S_5| / (|S_2| |S_3|)
    assert_eq!(reps.len(), 10);
    let wj = min_coset_reps(&cm.restrict(&j).unwrap(), &[], 100).unwrap();
    assert_eq!(wj.len(), 12);
    let mut seen = HashSet::new();
    for u in &reps {
        for v in &wj {
            let p = multiply(u, v, &cm).unwrap();
            assert_eq!(p.len(), u.len() + v.len());
            assert!(seen.insert(p));
        }
    }
    assert_eq!(seen.len(), 120);
}

#[test]
fn affine_coset_factorization() {
    // every element of length <= 6 factors as u v, u a minimal rep, v in W_J
    let cm = affine(3);
    let reps = min_coset_reps(&cm, &[2, 3], 6).unwrap();
    let all = elements_up_to(&cm, 6).unwrap();
    let fin = min_coset_reps(&cm.restrict(&[2, 3]).unwrap(), &[], 10).unwrap();
    let mut from_reps = HashSet::new();
    for u in &reps {
        for v in &fin {
            if u.len() + v.len() <= 6 {
                from_reps.insert(multiply(u, v, &cm).unwrap());
            }
        }
    }
    let all: HashSet<Word> = all.into_iter().collect();
    assert_eq!(from_reps, all);
}

fn word_strategy(n: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..max).prop_map(Word)
}

proptest! {
    #[test]
    fn affine_route_agrees_with_root_route(
        (n, word) in (2usize..6).prop_flat_map(|n| (Just(n), word_strategy(n, 14)))
    ) {
        let cm = affine(n);
        let e = word_to_affine(&word, n).unwrap();
        let nf = reduce(&word, &cm).unwrap();
        prop_assert_eq!(affine_to_word(&e), nf.clone());
        prop_assert_eq!(e.length(), nf.len());
        prop_assert_eq!(word_to_affine(&nf, n).unwrap(), e);
    }

    #[test]
    fn reduce_is_idempotent_and_reduced(w in word_strategy(4, 16)) {
        let cm = affine(4);
        let r = reduce(&w, &cm).unwrap();
        prop_assert!(is_reduced(&r, &cm).unwrap());
        prop_assert_eq!(reduce(&r, &cm).unwrap(), r.clone());
        prop_assert!(equal(&r, &w, &cm).unwrap());
        prop_assert!(r.len() <= w.len() && (w.len() - r.len()) % 2 == 0);
    }

    #[test]
    fn descents_change_length(w in word_strategy(4, 12)) {
        let cm = affine(4);
        let l = length(&w, &cm).unwrap();
        let rd = right_descents(&w, &cm).unwrap();
        let ld = left_descents(&w, &cm).unwrap();
        for s in 1..=4 {
            let ws = w.concat(&Word(vec![s]));
            let sw = Word(vec![s]).concat(&w);
            let lr = length(&ws, &cm).unwrap();
            let ll = length(&sw, &cm).unwrap();
            prop_assert_eq!(lr + 1 == l, rd.contains(&s));
            prop_assert_eq!(ll + 1 == l, ld.contains(&s));
            prop_assert!(lr.abs_diff(l) == 1 && ll.abs_diff(l) == 1);
        }
    }

    #[test]
    fn inverse_has_same_length(w in word_strategy(5, 14)) {
        let cm = affine(5);
        let inv = inverse(&w, &cm).unwrap();
        prop_assert_eq!(inv.len(), length(&w, &cm).unwrap());
        prop_assert_eq!(multiply(&w, &inv, &cm).unwrap(), Word::empty());
    }

    #[test]
    fn bruhat_is_graded_and_contains_subwords(w in word_strategy(3, 8), mask in any::<u16>()) {
        let cm = affine(3);
        let w = reduce(&w, &cm).unwrap();
        let sub = Word(w.0.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect());
        // products of subwords lie below w
        prop_assert!(bruhat_leq(&sub, &w, &cm).unwrap());
        prop_assert!(bruhat_leq(&w, &w, &cm).unwrap());
        if bruhat_leq(&w, &sub, &cm).unwrap() {
            prop_assert!(equal(&w, &sub, &cm).unwrap());
        }
    }

    #[test]
    fn weighted_length_is_additive(w in word_strategy(4, 10), a in 0i64..5) {
        let cm = affine(4);
        let lw = LengthWeights::uniform(&cm, a);
        let r = reduce(&w, &cm).unwrap();
        let sum: i64 = r.0.iter().map(|_| a).sum();
        prop_assert_eq!(generalized_length(&w, &cm, &lw).unwrap(), sum);
    }

    #[test]
    fn double_coset_rep_is_minimal(w in word_strategy(4, 10)) {
        let cm = affine(4);
        let j = [2, 3];
        let k = [1];
        let d = min_double_coset_rep(&j, &w, &k, &cm).unwrap();
        prop_assert!(length(&d, &cm).unwrap() <= length(&w, &cm).unwrap());
        for s in j {
            prop_assert!(!left_descents(&d, &cm).unwrap().contains(&s));
        }
        for s in k {
            prop_assert!(!right_descents(&d, &cm).unwrap().contains(&s));
        }
    }
}
