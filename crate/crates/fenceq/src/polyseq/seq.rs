use serde::{Deserialize, Serialize};

use super::{Coeff, Poly, SeqError};

/// Shape predicates of a coefficient sequence `a_0..a_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqReport {
    pub unimodal: bool,
    pub symmetric: bool,
    pub top_interlacing: bool,
    pub bottom_interlacing: bool,
    pub ineq_a: bool,
    pub ineq_b: bool,
    pub almost_interlacing: bool,
    pub log_concave: bool,
    pub two_peak: Option<(usize, usize)>,
}

/// Computes every predicate on the dense coefficient list of `p`.
pub fn seq_report<C: Coeff>(p: &Poly<C>) -> Result<SeqReport, SeqError> {
    let a = p.coeffs();
    if let Some(index) = a.iter().position(|c| c.is_negative()) {
        return Err(SeqError::NegativeCoefficient { index });
    }
    let unimodal = is_unimodal(a);
    let ineq_a = ineq_a(a);
    Ok(SeqReport {
        unimodal,
        symmetric: is_symmetric(a),
        top_interlacing: interlacing(a, true),
        bottom_interlacing: interlacing(a, false),
        ineq_a,
        ineq_b: ineq_b(a),
        almost_interlacing: unimodal && ineq_a,
        log_concave: is_log_concave(a),
        two_peak: two_peak(a),
    })
}

pub(crate) fn is_unimodal<C: Ord>(a: &[C]) -> bool {
    let mut i = 0;
    while i + 1 < a.len() && a[i] <= a[i + 1] {
        i += 1;
    }
    while i + 1 < a.len() && a[i] >= a[i + 1] {
        i += 1;
    }
    i + 1 >= a.len()
}

fn is_symmetric<C: PartialEq>(a: &[C]) -> bool {
    a.iter().eq(a.iter().rev())
}

/// Top: `a_0 <= a_m <= a_1 <= a_{m-1} <= ...`; bottom starts from `a_m`.
fn interlacing<C: Ord>(a: &[C], top: bool) -> bool {
    if a.is_empty() {
        return true;
    }
    let (mut lo, mut hi) = (0usize, a.len() - 1);
    let mut chain = Vec::with_capacity(a.len());
    let mut take_lo = top;
    while lo <= hi {
        if take_lo {
            chain.push(&a[lo]);
            lo += 1;
        } else {
            chain.push(&a[hi]);
            if hi == 0 {
                break;
            }
            hi -= 1;
        }
        take_lo = !take_lo;
    }
    chain.windows(2).all(|w| w[0] <= w[1])
}

fn ineq_a<C: Ord>(a: &[C]) -> bool {
    let Some(m) = a.len().checked_sub(1) else {
        return true;
    };
    let first = (0..m)
        .take_while(|&i| i + 1 + i < m)
        .all(|i| a[i] <= a[m - 1 - i]);
    let second = (0..m)
        .take_while(|&i| i + 1 + i < m)
        .all(|i| a[m - i] <= a[i + 1]);
    first && second
}

fn ineq_b<C: Ord>(a: &[C]) -> bool {
    let Some(m) = a.len().checked_sub(1) else {
        return true;
    };
    if m == 0 {
        return true;
    }
    let rise_end = (m - 1) / 2;
    let fall_start = m / 2 + 1;
    let rising = (0..rise_end).all(|i| a[i] <= a[i + 1]);
    let falling = (fall_start..m).all(|i| a[i] >= a[i + 1]);
    rising && falling
}

fn is_log_concave<C: Coeff>(a: &[C]) -> bool {
    (1..a.len().saturating_sub(1))
        .all(|i| a[i].clone() * a[i].clone() >= a[i - 1].clone() * a[i + 1].clone())
}

/// Pair `(i, j)` whose smaller value dominates every other entry.
///
/// Adjacent pairs are preferred, then lexicographic order.
fn two_peak<C: Ord>(a: &[C]) -> Option<(usize, usize)> {
    match a.len() {
        0 => return None,
        1 => return Some((0, 0)),
        _ => {}
    }
    let valid = |i: usize, j: usize| {
        let lo = if a[i] <= a[j] { &a[i] } else { &a[j] };
        a.iter()
            .enumerate()
            .all(|(k, v)| k == i || k == j || lo >= v)
    };
    (0..a.len() - 1)
        .map(|i| (i, i + 1))
        .find(|&(i, j)| valid(i, j))
        .or_else(|| {
            (0..a.len())
                .flat_map(|i| (i + 1..a.len()).map(move |j| (i, j)))
                .find(|&(i, j)| valid(i, j))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn report(v: &[i64]) -> SeqReport {
        seq_report(&Poly::<BigInt>::from_i64s(v)).unwrap()
    }

    #[test]
    fn counterexample_fails_ineq_a() {
        let r = report(&[7, 6, 1]);
        assert!(r.unimodal);
        assert!(!r.ineq_a);
        assert!(!r.almost_interlacing);
    }

    #[test]
    fn circular_exception_shape() {
        let r = report(&[1, 2, 3, 2, 3, 2, 1]);
        assert!(r.symmetric);
        assert!(!r.unimodal);
        assert_eq!(r.two_peak, Some((2, 4)));
    }

    #[test]
    fn table_polynomial_is_unimodal_not_log_concave() {
        // 6^2 < 10 * 4
        let r = report(&[2, 5, 9, 12, 11, 10, 6, 4, 2]);
        assert!(r.unimodal);
        assert!(!r.log_concave);
    }

    #[test]
    fn constant_polynomial() {
        let r = report(&[1]);
        assert!(r.unimodal && r.symmetric && r.top_interlacing && r.bottom_interlacing);
        assert!(r.ineq_a && r.ineq_b && r.almost_interlacing && r.log_concave);
        assert_eq!(r.two_peak, Some((0, 0)));
    }

    #[test]
    fn zero_polynomial_has_no_peak() {
        assert_eq!(report(&[]).two_peak, None);
    }

    #[test]
    fn negative_rejected() {
        let err = seq_report(&Poly::<BigInt>::from_i64s(&[1, -1, 2])).unwrap_err();
        assert_eq!(err, SeqError::NegativeCoefficient { index: 1 });
    }

    #[test]
    fn interlacing_chains() {
        // 1 <= 1 <= 2 <= 2 <= 3: top interlacing
        let r = report(&[1, 2, 3, 2, 1]);
        assert!(r.top_interlacing && r.bottom_interlacing);
        let r = report(&[1, 2, 1, 1]);
        // top: a0=1 <= a3=1 <= a1=2 <= a2=1 fails; bottom: 1 <= 1 <= 1 <= 2 holds
        assert!(!r.top_interlacing);
        assert!(r.bottom_interlacing);
    }

    #[test]
    fn unimodal_peak_pairs_are_adjacent() {
        assert_eq!(report(&[1, 1, 2, 1]).two_peak, Some((1, 2)));
        assert_eq!(report(&[1, 3, 3, 1]).two_peak, Some((1, 2)));
    }

    #[test]
    fn ineq_b_convention() {
        // m = 4: rises on a0..a1, falls from a3
        assert!(report(&[1, 2, 1, 3, 2]).ineq_b);
        assert!(!report(&[2, 1, 1, 1, 1]).ineq_b);
        assert!(!report(&[1, 1, 1, 1, 2]).ineq_b);
    }
}
