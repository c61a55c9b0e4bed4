use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::polyseq::Coeff;
use crate::surface::{Arc, MultiLamination, PolygonTriangulation};

use super::{seed_from, ClusterError};

/// How consecutive flips along the arc sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Configuration {
    /// `x_{k+1}` is built from `x_k` and `x_{k-1}`.
    Zigzag,
    /// `x_{k+1}` is built from `x_k` and `x_h`, the same `x_h` as `x_k`.
    Fan,
}

/// One classified pair of consecutive recurrences.
///
/// Patterns give the exponent of `q` on the two terms of a recurrence:
/// `current` is `x_k = q^a x_{k-1} + q^b x_h`, `next` is
/// `x_{k+1} = q^a x_k + q^b x_{k-1}` (zigzag) or `q^a x_k + q^b x_h` (fan).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceStep {
    pub k: usize,
    /// Index of the step that created `x_h`; 0 for an initial segment.
    pub h: usize,
    pub configuration: Option<Configuration>,
    pub current: [usize; 2],
    pub next: [usize; 2],
    /// Position (1..=6) in the listed cases for the configuration, if any.
    pub case: Option<usize>,
    /// Both recurrences hold for the computed polynomials.
    pub verified: bool,
}

impl RecurrenceStep {
    pub fn matched(&self) -> bool {
        self.case.is_some() && self.verified
    }

    /// Human-readable form of the matched pair of recurrences.
    pub fn describe(&self) -> String {
        let term = |e: usize, x: &str| {
            if e > 0 {
                format!("q{x}")
            } else {
                x.to_string()
            }
        };
        let second = match self.configuration {
            Some(Configuration::Zigzag) => "c_{x_{k-1}}",
            _ => "c_{x_h}",
        };
        format!(
            "c_{{x_{{k+1}}}} = {} + {}; c_{{x_k}} = {} + {}",
            term(self.next[0], "c_{x_k}"),
            term(self.next[1], second),
            term(self.current[0], "c_{x_{k-1}}"),
            term(self.current[1], "c_{x_h}"),
        )
    }
}

const ZIGZAG_CASES: [([usize; 2], [usize; 2]); 6] = [
    ([1, 0], [0, 0]),
    ([0, 1], [1, 0]),
    ([0, 1], [0, 0]),
    ([0, 0], [1, 0]),
    ([0, 0], [0, 1]),
    ([0, 0], [0, 0]),
];

const FAN_CASES: [([usize; 2], [usize; 2]); 6] = [
    ([1, 0], [0, 0]),
    ([0, 1], [0, 1]),
    ([0, 1], [0, 0]),
    ([0, 0], [1, 0]),
    ([0, 0], [0, 1]),
    ([0, 0], [0, 0]),
];

/// What happened at one flip along the arc.
struct FlipRecord {
    /// Other side at the start vertex (the one that is not `x_{k-1}`).
    other_side: Arc,
    h: usize,
    pattern: [usize; 2],
    verified: bool,
}

/// Flips the diagonals crossed by `g` in order and classifies each pair of
/// consecutive exchange relations against the listed recurrence cases.
///
/// Only single laminations with one curve are accepted. Steps whose pattern
/// is not listed are reported with `case = None`.
pub fn classify_flip_recurrence<C: Coeff>(
    t: &PolygonTriangulation,
    ml: &MultiLamination,
    g: &Arc,
) -> Result<Vec<RecurrenceStep>, ClusterError> {
    if ml.len() != 1 || ml[0].len() != 1 {
        return Err(ClusterError::NotSingleLamination);
    }
    let crossings = t.crossed_diagonals(g)?;
    let d = crossings.len();
    if d < 2 {
        return Err(ClusterError::TooFewCrossings(d));
    }
    let a = g.a();
    let mut seed = seed_from::<C>(t, ml)?;
    let width = seed.width();
    let mut created: HashMap<Arc, usize> = HashMap::new();
    let mut prev: Option<Arc> = None;
    let mut records: Vec<FlipRecord> = Vec::with_capacity(d);

    for tau in &crossings {
        let idx = seed
            .index_of_label(tau)
            .expect("crossed diagonals are still present");
        let far = |v: usize| Arc::new(a, v);
        let (s1, s2) = (far(tau.a()), far(tau.b()));
        let (first, other) = match prev {
            Some(p) if p == s1 => (s1, s2),
            Some(p) if p == s2 => (s2, s1),
            Some(_) => unreachable!("the previous arc borders the next crossed diagonal"),
            None => (s1, s2),
        };
        // which exchange term carries the first side
        let first_positive = seed
            .index_of_label(&first)
            .map(|i| seed.matrix()[i][idx] > 0);
        let row = &seed.matrix()[width..];
        let e_pos = row.iter().map(|r| r[idx].max(0) as usize).sum::<usize>();
        let e_neg = row.iter().map(|r| (-r[idx]).max(0) as usize).sum::<usize>();
        let pattern = match first_positive {
            Some(true) => [e_pos, e_neg],
            Some(false) => [e_neg, e_pos],
            None => {
                // both sides are initial; the first term is the one without the other side
                let other_positive = seed
                    .index_of_label(&other)
                    .map(|i| seed.matrix()[i][idx] > 0);
                if other_positive == Some(true) {
                    [e_neg, e_pos]
                } else {
                    [e_pos, e_neg]
                }
            }
        };
        let c_first = seed.value_of(&first);
        let c_other = seed.value_of(&other);
        seed.mutate_in_place(idx)?;
        let new_arc = seed.labels()[idx];
        let expected = c_first
            .shift(pattern[0])
            .poly_add(&c_other.shift(pattern[1]));
        let verified = seed.values()[idx] == expected;
        records.push(FlipRecord {
            other_side: other,
            h: created.get(&other).copied().unwrap_or(0),
            pattern,
            verified,
        });
        created.insert(new_arc, records.len());
        prev = Some(new_arc);
    }

    let mut out = Vec::new();
    for k in 2..d {
        let cur = &records[k - 1];
        let nxt = &records[k];
        let configuration = if nxt.h == k - 1 && k > 1 {
            Some(Configuration::Zigzag)
        } else if nxt.other_side == cur.other_side {
            Some(Configuration::Fan)
        } else {
            None
        };
        let table = match configuration {
            Some(Configuration::Zigzag) => Some(&ZIGZAG_CASES),
            Some(Configuration::Fan) => Some(&FAN_CASES),
            None => None,
        };
        let case = table.and_then(|tab| {
            tab.iter()
                .position(|&(n, c)| n == nxt.pattern && c == cur.pattern)
                .map(|i| i + 1)
        });
        out.push(RecurrenceStep {
            k,
            h: cur.h,
            configuration,
            current: cur.pattern,
            next: nxt.pattern,
            case,
            verified: cur.verified && nxt.verified,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::LamCurve;
    use num_bigint::BigInt;

    fn tri(n: usize, d: &[(usize, usize)]) -> PolygonTriangulation {
        let d: Vec<Arc> = d.iter().map(|&(a, b)| Arc::new(a, b)).collect();
        PolygonTriangulation::new(n, &d).unwrap()
    }

    #[test]
    fn rejects_bad_inputs() {
        let t = tri(6, &[(1, 3), (1, 4), (1, 5)]);
        let two = vec![vec![LamCurve::between(1, 3), LamCurve::between(4, 6)]];
        assert!(matches!(
            classify_flip_recurrence::<BigInt>(&t, &two, &Arc::new(2, 6)),
            Err(ClusterError::NotSingleLamination)
        ));
        let one = vec![vec![LamCurve::between(1, 3)]];
        assert!(matches!(
            classify_flip_recurrence::<BigInt>(&t, &one, &Arc::new(2, 4)),
            Err(ClusterError::TooFewCrossings(1))
        ));
    }
}
