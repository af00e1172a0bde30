mod common;

use proptest::prelude::*;
use tangle3::{dehn, tracer, BraidWord, CurveLabel, Letter, WeightVector};

fn word(lo: u8, hi: u8, max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((lo..=hi, prop::sample::select(vec![1i64, -1])), 0..=max)
        .prop_map(|v| BraidWord::from_letters(v.into_iter().map(|(k, e)| Letter::new(k, e).unwrap())))
}

fn seed() -> impl Strategy<Value = CurveLabel> {
    prop::sample::select(CurveLabel::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn every_step_keeps_balance_and_adjacency(c in seed(), w in word(0, 5, 12)) {
        let mut v = WeightVector::boundary(c);
        for &l in w.letters().iter().rev() {
            v = v.apply_generator(l).unwrap();
            prop_assert!(v.check_invariants().is_ok(), "{}", v);
        }
    }

    #[test]
    fn letter_then_inverse_is_identity(c in seed(), w in word(0, 5, 10), k in 0u8..6, e in prop::sample::select(vec![1i64, -1])) {
        let v = WeightVector::boundary(c).apply_word(&w).unwrap();
        let l = Letter::new(k, e).unwrap();
        prop_assert_eq!(v.apply_generator(l).unwrap().apply_generator(l.inverse()).unwrap(), v);
    }

    #[test]
    fn word_then_inverse_is_identity(c in seed(), w in word(0, 5, 10)) {
        let v = WeightVector::boundary(c);
        prop_assert_eq!(v.apply_word(&w.invert().compose(&w)).unwrap(), v);
    }

    #[test]
    fn images_are_single_curves(c in seed(), w in word(0, 5, 12)) {
        let v = WeightVector::boundary(c).apply_word(&w).unwrap();
        prop_assert_eq!(tracer::trace(&v).unwrap().len(), 1);
    }

    #[test]
    fn oracle_ignores_third_turns(c in seed(), w in word(0, 5, 10)) {
        let v = WeightVector::boundary(c).apply_word(&w).unwrap();
        let o = tracer::oracle_bounds_disk(&v).unwrap();
        prop_assert_eq!(tracer::oracle_bounds_disk(&v.rotate(2)).unwrap(), o);
        prop_assert_eq!(tracer::oracle_bounds_disk(&v.rotate(4)).unwrap(), o);
    }

    #[test]
    fn normalizing_keeps_the_tangle(c in seed(), w in word(0, 5, 6)) {
        let n = w.normalize_to_b5();
        prop_assert!(n.letters().iter().all(|l| (1..=4).contains(&l.index)));
        // same tangle: the difference word sends every disk boundary to a disk boundary
        let back = WeightVector::boundary(c).apply_word(&n.invert().compose(&w)).unwrap();
        prop_assert!(tracer::oracle_bounds_disk(&back).unwrap(), "{} -> {}", w, n);
    }
}

#[test]
fn seeds_have_zero_parameters_and_their_labels() {
    for c in CurveLabel::ALL {
        let r = dehn::to_dehn(&WeightVector::boundary(c)).unwrap();
        assert_eq!(r.params.p, [0, 0, 0]);
        assert_eq!(r.params.boundary, Some(c));
    }
}

#[test]
fn untwisting_keeps_the_oracle_verdict() {
    let mut seen = 0;
    for w in common::corpus(7, 20_000, 0, 5, 12) {
        for c in CurveLabel::ALL {
            let v = WeightVector::boundary(c).apply_word(&w).unwrap();
            let pants = dehn::pants_weights(dehn::window_counts(&v)).unwrap();
            if pants.diagonal().is_none() {
                continue;
            }
            seen += 1;
            let r = dehn::to_dehn(&v).unwrap();
            assert_eq!(
                tracer::oracle_bounds_disk(&r.untwisted).unwrap(),
                tracer::oracle_bounds_disk(&v).unwrap(),
                "{w} on {c}"
            );
            assert_eq!(dehn::p_values(&r.untwisted), r.params.p);
        }
    }
    assert!(seen > 100, "only {seen} curves with a diagonal");
}
