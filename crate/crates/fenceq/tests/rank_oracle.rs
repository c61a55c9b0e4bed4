use fenceq::poset::{
    circular_fence, fence, ij_fence, notched, rank_sequence, rank_sequence_fence_fast, Notch,
};
use fenceq::{Composition, FinitePoset, SmallPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Counts order ideals by size by testing every subset against the defining relations.
fn brute_force_ranks(p: &FinitePoset) -> Vec<i64> {
    let n = p.len();
    assert!(n <= 16, "oracle is limited to 16 elements");
    let mut needs = vec![0u32; n];
    for &(lo, hi) in p.relations() {
        needs[hi] |= 1 << lo;
    }
    let mut counts = vec![0i64; n + 1];
    for s in 0u32..(1 << n) {
        if (0..n).all(|b| s & (1 << b) == 0 || needs[b] & !s == 0) {
            counts[s.count_ones() as usize] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

fn ranks(p: &FinitePoset) -> Vec<i64> {
    rank_sequence::<i64>(p).unwrap().into_coeffs()
}

fn check(p: &FinitePoset, what: &str) {
    assert_eq!(ranks(p), brute_force_ranks(p), "{what}");
}

#[test]
fn plain_fences_match_oracle() {
    for n in 0..=11 {
        for alpha in Composition::all_of_size(n) {
            check(&fence(&alpha), &format!("fence {alpha}"));
        }
    }
}

#[test]
fn large_fences_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let steps: Vec<bool> = (0..15).map(|_| rng.gen()).collect();
        let alpha = Composition::from_steps(&steps);
        check(&fence(&alpha), &format!("fence {alpha}"));
    }
}

#[test]
fn notched_fences_match_oracle() {
    for n in 1..=10 {
        for alpha in Composition::all_of_size(n) {
            for which in [Notch::First, Notch::Last, Notch::Both] {
                if let Ok(p) = notched(&alpha, which) {
                    check(&p, &format!("{which:?} {alpha}"));
                }
            }
        }
    }
}

#[test]
fn circular_fences_match_oracle() {
    for n in 2..=12 {
        for alpha in Composition::all_of_size(n) {
            if let Ok(p) = circular_fence(&alpha) {
                check(&p, &format!("circular {alpha}"));
            }
        }
    }
}

#[test]
fn ij_fences_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut built = 0;
    while built < 300 {
        let n = rng.gen_range(2..=12);
        let steps: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let alpha = Composition::from_steps(&steps);
        let i = rng.gen_range(1..=n as i64 + 1);
        let j = rng.gen_range(1..=n as i64 + 1);
        if let Ok(p) = ij_fence(&alpha, i, j) {
            check(&p, &format!("({i},{j}) {alpha}"));
            built += 1;
        }
    }
}

#[test]
fn fast_fence_ranks_match_general() {
    for n in 0..=14 {
        for alpha in Composition::all_of_size(n) {
            let fast: SmallPoly = rank_sequence_fence_fast(&alpha);
            assert_eq!(fast.into_coeffs(), ranks(&fence(&alpha)), "{alpha}");
        }
    }
}

#[test]
fn known_small_values() {
    let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
    assert_eq!(ranks(&fence(&c(&[1, 1]))), vec![1, 2, 1, 1]);
    assert_eq!(
        ranks(&circular_fence(&c(&[1, 2, 1, 2])).unwrap()),
        vec![1, 2, 3, 2, 3, 2, 1]
    );
    let p = notched(&c(&[2, 2, 2, 2]), Notch::Last).unwrap();
    assert_eq!(ranks(&p), brute_force_ranks(&p));
}
