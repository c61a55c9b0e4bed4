use serde::{Deserialize, Serialize};

use super::{Composition, FinitePoset, PosetError};

/// Which end(s) of a fence receive the notch relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Notch {
    First,
    Last,
    Both,
}

fn fence_labels(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("x{i}")).collect()
}

/// Relation for step `i` (0-based) between elements `i` and `next`.
fn step_relation(ascending: bool, i: usize, next: usize) -> (usize, usize) {
    if ascending {
        (i, next)
    } else {
        (next, i)
    }
}

/// The fence `P(alpha)` on `x1..x_{n+1}`.
pub fn fence(alpha: &Composition) -> FinitePoset {
    let steps = alpha.steps();
    let rels: Vec<_> = steps
        .iter()
        .enumerate()
        .map(|(i, &up)| step_relation(up, i, i + 1))
        .collect();
    FinitePoset::from_relations(fence_labels(steps.len() + 1), &rels).expect("a fence is acyclic")
}

/// `P(alpha)` with the extra relation `x_i < x_j` (1-based indices).
pub fn ij_fence(alpha: &Composition, i: i64, j: i64) -> Result<FinitePoset, PosetError> {
    let max = alpha.size() + 1;
    for idx in [i, j] {
        if idx < 1 || idx as usize > max {
            return Err(PosetError::IndexOutOfRange { index: idx, max });
        }
    }
    fence(alpha).add_relation(i as usize - 1, j as usize - 1)
}

/// Index pair `(i, j)` of the notch relation at the first end.
fn first_notch(alpha: &Composition) -> (i64, i64) {
    let a = alpha.parts();
    if a[0] != 0 {
        (1, a[0] as i64 + 2)
    } else {
        (a.get(1).map_or(0, |&p| p as i64) + 2, 1)
    }
}

/// Index pair `(i, j)` of the notch relation at the last end.
fn last_notch(alpha: &Composition) -> (i64, i64) {
    let n = alpha.size() as i64;
    let s = alpha.len();
    let last = alpha.parts()[s - 1] as i64;
    if s.is_multiple_of(2) {
        (n + 1, n - last)
    } else {
        (n - last, n + 1)
    }
}

fn checked_pair(alpha: &Composition, (i, j): (i64, i64)) -> Result<(usize, usize), PosetError> {
    let max = alpha.size() + 1;
    for idx in [i, j] {
        if idx < 1 || idx as usize > max {
            return Err(PosetError::IndexOutOfRange { index: idx, max });
        }
    }
    if i == j {
        return Err(PosetError::IndexOutOfRange { index: i, max });
    }
    Ok((i as usize - 1, j as usize - 1))
}

/// Singly or doubly notched fence.
///
/// First end: `(1, a_1+2)` if `a_1 != 0`, else `(a_2+2, 1)`.
/// Last end: `(n+1, n-a_s)` if `s` is even, else `(n-a_s, n+1)`.
pub fn notched(alpha: &Composition, which: Notch) -> Result<FinitePoset, PosetError> {
    let mut pairs = Vec::new();
    if matches!(which, Notch::First | Notch::Both) {
        pairs.push(checked_pair(alpha, first_notch(alpha))?);
    }
    if matches!(which, Notch::Last | Notch::Both) {
        pairs.push(checked_pair(alpha, last_notch(alpha))?);
    }
    let mut p = fence(alpha);
    for (i, j) in pairs {
        p = p.add_relation(i, j)?;
    }
    Ok(p)
}

/// Index `m = n - a_s` of the element the last notch attaches to (1-based).
pub(crate) fn last_notch_anchor(alpha: &Composition) -> usize {
    alpha.size() - alpha.parts()[alpha.len() - 1]
}

/// Circular fence on `x1..x_n`, closing the zigzag by identifying `x_{n+1}` with `x1`.
///
/// Requires an even number of parts, `a_1 >= 1` and `n >= 2`.
pub fn circular_fence(alpha: &Composition) -> Result<FinitePoset, PosetError> {
    let n = alpha.size();
    if !alpha.len().is_multiple_of(2) {
        return Err(PosetError::InvalidComposition(format!(
            "{alpha}: a circular fence needs an even number of parts"
        )));
    }
    if alpha.parts()[0] == 0 {
        return Err(PosetError::InvalidComposition(format!(
            "{alpha}: a circular fence needs a nonzero first part"
        )));
    }
    if n < 2 {
        return Err(PosetError::InvalidComposition(format!(
            "{alpha}: n must be at least 2"
        )));
    }
    let rels: Vec<_> = alpha
        .steps()
        .iter()
        .enumerate()
        .map(|(i, &up)| step_relation(up, i, (i + 1) % n))
        .collect();
    FinitePoset::from_relations(fence_labels(n), &rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn fence_shape() {
        let p = fence(&comp(&[1, 1]));
        assert_eq!(p.covers(), &[(0, 1), (2, 1)]);
        let p = fence(&comp(&[0, 2]));
        assert_eq!(p.covers(), &[(1, 0), (2, 1)]);
        let p = fence(&comp(&[2, 2, 2, 2]));
        assert_eq!(p.len(), 9);
        assert!(p.less(0, 2) && p.less(4, 2) && p.less(4, 6) && p.less(8, 6));
    }

    #[test]
    fn ij_fence_cases() {
        let a = comp(&[1, 1]);
        let p = ij_fence(&a, 3, 1).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (2, 0)]);
        assert!(matches!(
            ij_fence(&a, 2, 1),
            Err(PosetError::CycleCreated { .. })
        ));
        assert!(matches!(
            ij_fence(&a, 0, 1),
            Err(PosetError::IndexOutOfRange { .. })
        ));
        let b = comp(&[2]);
        assert_eq!(ij_fence(&b, 1, 2).unwrap(), fence(&b));
    }

    #[test]
    fn notch_case_table() {
        let a = comp(&[1, 1]);
        assert!(notched(&a, Notch::Last).unwrap().less(2, 0));
        assert!(notched(&a, Notch::First).unwrap().less(0, 2));
        let a = comp(&[2, 2, 2, 2]);
        let p = notched(&a, Notch::Last).unwrap();
        assert!(p.less(8, 5));
        assert_eq!(p.covers().len(), fence(&a).covers().len() + 1);
        let a = comp(&[0, 2, 1]);
        // first: (a_2 + 2, 1) = (4, 1); last: (n - a_s, n + 1) = (2, 4)
        assert!(notched(&a, Notch::First).unwrap().less(3, 0));
        assert!(notched(&a, Notch::Last).unwrap().less(1, 3));
    }

    #[test]
    fn notch_rejects_short_compositions() {
        assert!(matches!(
            notched(&comp(&[1]), Notch::Last),
            Err(PosetError::IndexOutOfRange { .. })
        ));
        assert!(notched(&comp(&[1]), Notch::First).is_err());
        assert!(notched(&comp(&[0, 3]), Notch::Last).is_err());
    }

    #[test]
    fn circular_requirements() {
        assert!(circular_fence(&comp(&[1, 2, 1])).is_err());
        assert!(circular_fence(&comp(&[0, 2, 1, 1])).is_err());
        let p = circular_fence(&comp(&[1, 2, 1, 2])).unwrap();
        assert_eq!(p.len(), 6);
        assert!(p.is_hasse_cycle());
    }
}
