use fenceq::arcposet::{composition_from_far_end, fence_poset_of_arc, verify_expansion};
use fenceq::cluster::{
    c_polynomial, c_polynomial_along, classify_flip_recurrence, f_polynomial_q, FlipPlanner,
};
use fenceq::polyseq::seq_report;
use fenceq::surface::{
    all_arcs, all_single_curves, all_triangulations, elementary_laminations, random_triangulation,
};
use fenceq::IntPoly;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn c_polynomials_do_not_depend_on_flip_path() {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for i in 0..1000u64 {
        let n = rng.gen_range(5..=12);
        let t = random_triangulation(n, &mut rng);
        let open: Vec<_> = all_arcs(n).into_iter().filter(|g| !t.contains(g)).collect();
        let g = open[rng.gen_range(0..open.len())];
        let curves = all_single_curves(n);
        let ml = vec![vec![curves[rng.gen_range(0..curves.len())]]];
        let greedy: IntPoly = c_polynomial(&t, &ml, &g).unwrap();
        let along: IntPoly = c_polynomial_along(&t, &ml, &g, FlipPlanner::AlongArc).unwrap();
        let random: IntPoly = c_polynomial_along(&t, &ml, &g, FlipPlanner::Random(i)).unwrap();
        assert_eq!(greedy, along);
        assert_eq!(greedy, random);
    }
}

#[test]
fn f_polynomials_have_expected_shape() {
    for n in 4..=9 {
        for t in all_triangulations(n) {
            for g in all_arcs(n) {
                let f: IntPoly = f_polynomial_q(&t, &g).unwrap();
                assert_eq!(f.degree(), Some(t.crossing_count(&g)), "{g}");
                assert_eq!(f.coeff(0), BigInt::from(1));
                assert_eq!(f.coeff(t.crossing_count(&g)), BigInt::from(1));
            }
        }
    }
}

#[test]
fn elementary_laminations_give_reversed_f_polynomials() {
    for n in 4..=8 {
        for t in all_triangulations(n) {
            let ml = elementary_laminations(n, t.diagonals())
                .into_iter()
                .map(|c| vec![c])
                .collect();
            for g in all_arcs(n) {
                let f: IntPoly = f_polynomial_q(&t, &g).unwrap();
                let c: IntPoly = c_polynomial(&t, &ml, &g).unwrap();
                assert_eq!(c, f.reversed(t.crossing_count(&g)), "{g}");
            }
        }
    }
}

#[test]
fn single_lamination_polynomials_are_positive_and_unimodal() {
    for n in 4..=8 {
        let curves = all_single_curves(n);
        for t in all_triangulations(n) {
            for g in all_arcs(n) {
                for c in &curves {
                    let p: IntPoly = c_polynomial(&t, &vec![vec![*c]], &g).unwrap();
                    let rep = seq_report(&p).unwrap();
                    assert!(rep.unimodal, "{c:?} {g} {:?}", t.diagonals());
                }
            }
        }
    }
}

#[test]
fn poset_pipeline_matches_mutation_pipeline() {
    for n in 4..=9 {
        for t in all_triangulations(n) {
            for g in all_arcs(n) {
                assert!(verify_expansion(&t, &g).unwrap(), "{g} {:?}", t.diagonals());
            }
        }
    }
}

#[test]
fn walking_from_either_end_gives_the_same_fence() {
    for n in 5..=9 {
        for t in all_triangulations(n) {
            for g in all_arcs(n).iter().filter(|g| !t.contains(g)) {
                let near = fence_poset_of_arc(&t, g).unwrap();
                assert_eq!(near.crossing_count, t.crossing_count(g));
                assert_eq!(composition_from_far_end(&t, g).unwrap(), near.composition);
            }
        }
    }
}

#[test]
fn recurrence_steps_match_a_listed_case() {
    for n in 5..=8 {
        let curves = all_single_curves(n);
        for t in all_triangulations(n) {
            for g in all_arcs(n).iter().filter(|g| t.crossing_count(g) >= 2) {
                for c in &curves {
                    let steps = classify_flip_recurrence::<BigInt>(&t, &vec![vec![*c]], g).unwrap();
                    assert!(steps.iter().all(|s| s.matched() && s.verified), "{c:?} {g}");
                }
            }
        }
    }
}

#[test]
fn twelve_gon_recurrence_steps() {
    let t = fenceq::fixtures::twelve_gon();
    let ml = vec![vec![fenceq::surface::LamCurve::between(11, 5)]];
    let g = fenceq::surface::Arc::new(6, 11);
    let steps = classify_flip_recurrence::<BigInt>(&t, &ml, &g).unwrap();
    assert!(!steps.is_empty());
    assert!(steps.iter().all(|s| s.matched() && s.verified));
}
