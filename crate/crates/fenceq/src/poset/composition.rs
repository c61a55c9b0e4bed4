use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PosetError;

/// A composition `(a_1, ..., a_s)` with `a_1 >= 0` and `a_i >= 1` for `i >= 2`.
///
/// Part `i` (1-based) is a run of `a_i` ascending steps when `i` is odd and
/// descending steps when `i` is even, so `a_1 = 0` starts the fence descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PosetError> {
        if parts.is_empty() {
            return Err(PosetError::InvalidComposition("no parts".into()));
        }
        if let Some(i) = parts.iter().skip(1).position(|&p| p == 0) {
            return Err(PosetError::InvalidComposition(format!(
                "part {} is zero; only the first part may be zero",
                i + 2
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `s`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n`, the sum of the parts. The fence has `n + 1` elements.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Step directions of the fence: entry `i` is true when `x_{i+1} < x_{i+2}`.
    pub fn steps(&self) -> Vec<bool> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i % 2 == 0, p))
            .collect()
    }

    /// Reads a composition back from a step sequence.
    pub fn from_steps(steps: &[bool]) -> Self {
        let mut parts = Vec::new();
        let mut ascending = true;
        let mut run = 0;
        for &up in steps {
            if up == ascending {
                run += 1;
            } else {
                parts.push(run);
                ascending = up;
                run = 1;
            }
        }
        parts.push(run);
        Composition { parts }
    }

    /// All compositions of `n` (first part possibly zero), in lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let steps: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 0).collect();
            out.push(Composition::from_steps(&steps));
        }
        out.sort();
        out
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = PosetError;
    fn try_from(parts: Vec<usize>) -> Result<Self, PosetError> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.parts
    }
}

impl FromStr for Composition {
    type Err = PosetError;

    /// Accepts `1,2,1,2` or a JSON array `[1,2,1,2]`.
    fn from_str(s: &str) -> Result<Self, PosetError> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PosetError::InvalidComposition(format!("{s:?}: {e}")))?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
