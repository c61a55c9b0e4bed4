use fenceq::polyseq::{seq_report, PolyError};
use fenceq::poset::{fence, notched, rank_sequence, rank_sequence_fence_fast, Notch};
use fenceq::{Composition, IntPoly, SmallPoly};
use proptest::prelude::*;

fn poly_strategy(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..50, 0..max_len).prop_map(|v| IntPoly::from_i64s(&v))
}

fn composition_strategy(max_n: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(any::<bool>(), 0..=max_n).prop_map(|s| Composition::from_steps(&s))
}

proptest! {
    #[test]
    fn product_divides_exactly(a in poly_strategy(8), b in poly_strategy(8)) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_reported(a in poly_strategy(6)) {
        let two_plus_q = IntPoly::from_i64s(&[2, 1]);
        let num = &(&a * &two_plus_q) + &IntPoly::one();
        prop_assert_eq!(num.exact_div(&two_plus_q), Err(PolyError::InexactDivision));
    }

    #[test]
    fn multiplication_commutes_and_distributes(
        a in poly_strategy(6), b in poly_strategy(6), c in poly_strategy(6)
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn small_and_big_coefficients_agree(a in poly_strategy(6), b in poly_strategy(6)) {
        let small: SmallPoly = a.convert().unwrap();
        let big = &a * &b;
        prop_assert_eq!((&small * &b.convert::<i64>().unwrap()).convert::<num_bigint::BigInt>().unwrap(), big);
    }

    #[test]
    fn dual_reverses_rank_sequence(alpha in composition_strategy(14)) {
        let p = fence(&alpha);
        let r: IntPoly = rank_sequence(&p).unwrap();
        let d: IntPoly = rank_sequence(&p.dual()).unwrap();
        prop_assert_eq!(d, r.reversed(p.len()));
    }

    #[test]
    fn notched_dual_reverses_rank_sequence(alpha in composition_strategy(14)) {
        if let Ok(p) = notched(&alpha, Notch::Both) {
            let r: IntPoly = rank_sequence(&p).unwrap();
            let d: IntPoly = rank_sequence(&p.dual()).unwrap();
            prop_assert_eq!(d, r.reversed(p.len()));
        }
    }

    #[test]
    fn fast_matches_general(alpha in composition_strategy(30)) {
        let fast: IntPoly = rank_sequence_fence_fast(&alpha);
        let general: IntPoly = rank_sequence(&fence(&alpha)).unwrap();
        prop_assert_eq!(fast, general);
    }

    #[test]
    fn plain_fences_are_almost_interlacing(alpha in composition_strategy(34)) {
        let r: IntPoly = rank_sequence_fence_fast(&alpha);
        let rep = seq_report(&r).unwrap();
        prop_assert!(rep.almost_interlacing);
        prop_assert_eq!(rep.ineq_a && rep.ineq_b, rep.almost_interlacing);
    }

    #[test]
    fn removing_a_cover_only_adds_ideals(alpha in composition_strategy(14), pick in any::<prop::sample::Index>()) {
        let p = fence(&alpha);
        prop_assume!(!p.covers().is_empty());
        let (a, b) = p.covers()[pick.index(p.covers().len())];
        let q = p.remove_cover(a, b).unwrap();
        let before: IntPoly = rank_sequence(&p).unwrap();
        let after: IntPoly = rank_sequence(&q).unwrap();
        for k in 0..=p.len() {
            prop_assert!(after.coeff(k) >= before.coeff(k));
        }
        prop_assert!(after.eval_one() > before.eval_one());
    }

    #[test]
    fn total_ideal_count_is_rank_sum(alpha in composition_strategy(20)) {
        let r: IntPoly = rank_sequence_fence_fast(&alpha);
        prop_assert_eq!(r.coeff(0), 1.into());
        prop_assert_eq!(r.coeff(alpha.size() + 1), 1.into());
        prop_assert_eq!(r.degree(), Some(alpha.size() + 1));
    }
}
