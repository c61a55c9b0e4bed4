use std::collections::HashMap;

use crate::polyseq::{Coeff, Poly};

use super::{Composition, FinitePoset, PosetError};

/// Element bound used by [`rank_sequence`].
pub const DEFAULT_RANK_BOUND: usize = 40;

/// Rank polynomial: coefficient `k` counts order ideals of size `k`.
pub fn rank_sequence<C: Coeff>(p: &FinitePoset) -> Result<Poly<C>, PosetError> {
    rank_sequence_bounded(p, DEFAULT_RANK_BOUND)
}

/// [`rank_sequence`] with an explicit element bound.
pub fn rank_sequence_bounded<C: Coeff>(
    p: &FinitePoset,
    bound: usize,
) -> Result<Poly<C>, PosetError> {
    if p.len() > bound {
        return Err(PosetError::TooLarge {
            size: p.len(),
            bound,
        });
    }
    let up: Vec<u128> = (0..p.len()).map(|i| p.strict_above(i) | 1 << i).collect();
    let down: Vec<u128> = (0..p.len()).map(|i| p.strict_below(i) | 1 << i).collect();
    let mut counter = IdealCounter {
        up: &up,
        down: &down,
        memo: HashMap::new(),
    };
    Ok(counter.count(p.full_mask()))
}

struct IdealCounter<'a, C> {
    up: &'a [u128],
    down: &'a [u128],
    memo: HashMap<u128, Poly<C>>,
}

impl<C: Coeff> IdealCounter<'_, C> {
    fn count(&mut self, mask: u128) -> Poly<C> {
        if mask == 0 {
            return Poly::one();
        }
        if mask.count_ones() == 1 {
            return Poly::from_coeffs(vec![C::one(), C::one()]);
        }
        if let Some(hit) = self.memo.get(&mask) {
            return hit.clone();
        }
        let comp = self.component(mask);
        let result = if comp != mask {
            let a = self.count(comp);
            let b = self.count(mask & !comp);
            a.poly_mul(&b)
        } else {
            let z = self.pivot(mask);
            let avoid = self.count(mask & !self.up[z]);
            let below = mask & self.down[z];
            let contain = self.count(mask & !below);
            avoid.poly_add(&contain.shift(below.count_ones() as usize))
        };
        self.memo.insert(mask, result.clone());
        result
    }

    /// Connected component (comparability graph) of the lowest element of `mask`.
    fn component(&self, mask: u128) -> u128 {
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u128 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = (self.up[i] | self.down[i]) & mask & !seen;
            seen |= next;
            frontier |= next;
        }
        seen
    }

    /// Element whose removal splits the poset most evenly.
    fn pivot(&self, mask: u128) -> usize {
        let mut best = (0u32, mask.trailing_zeros() as usize);
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let a = (self.up[i] & mask).count_ones();
            let b = (self.down[i] & mask).count_ones();
            let score = a.min(b);
            if score > best.0 {
                best = (score, i);
            }
        }
        best.1
    }
}

/// Rank polynomial of the fence `P(alpha)` by a left-to-right pass.
///
/// Tracks two polynomials: ideals of `x1..x_i` with `x_i` out and with `x_i` in.
pub fn rank_sequence_fence_fast<C: Coeff>(alpha: &Composition) -> Poly<C> {
    let q = Poly::<C>::q_pow(1);
    let mut out = Poly::<C>::one();
    let mut inn = q.clone();
    for up in alpha.steps() {
        let (new_out, new_in) = if up {
            // x_i < x_{i+1}: x_{i+1} in forces x_i in
            (out.poly_add(&inn), inn.poly_mul(&q))
        } else {
            // x_i > x_{i+1}: x_i in forces x_{i+1} in
            (out.clone(), out.poly_add(&inn).poly_mul(&q))
        };
        out = new_out;
        inn = new_in;
    }
    out.poly_add(&inn)
}
