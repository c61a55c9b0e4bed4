use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::polyseq::Poly;
use crate::IntPoly;

use super::build::last_notch_anchor;
use super::{notched, rank_sequence, Composition, FinitePoset, Notch, PosetError};

/// Outcome of the two decomposition identities for the last-notched fence.
///
/// `eq1` and `eq2` are the main identities; the other flags are the
/// intermediate splits they are assembled from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub alpha: Composition,
    /// `R_T = R + q^(d1+1) R(beta)`
    pub t_split: bool,
    /// `Rbar_T = R_T + q^(a_s+1) R(gamma)`
    pub t_bar_split: bool,
    /// `Rbar(delta) = q^(d1-a_s) R(beta) + R(gamma)`
    pub delta_split: bool,
    /// `R = Rbar_T - q^(a_s+1) Rbar(delta)`
    pub eq1: bool,
    /// `R_B = q R + R(beta')`
    pub b_split: bool,
    /// `Rbar_B = R_B + q^w R(gamma')`
    pub b_bar_split: bool,
    /// `Rbar(delta') = R(beta') + q^w R(gamma')`
    pub delta_prime_split: bool,
    /// `q R = Rbar_B - Rbar(delta')`
    pub eq2: bool,
}

impl DecompositionReport {
    pub fn all_hold(&self) -> bool {
        self.t_split
            && self.t_bar_split
            && self.delta_split
            && self.eq1
            && self.b_split
            && self.b_bar_split
            && self.delta_prime_split
            && self.eq2
    }
}

fn rank(p: &FinitePoset) -> Result<IntPoly, PosetError> {
    rank_sequence::<BigInt>(p)
}

fn q_pow(k: usize) -> IntPoly {
    Poly::q_pow(k)
}

/// Rebuilds the auxiliary posets around the last notch of `alpha` and checks
/// both decomposition identities exactly.
///
/// With `m = n - a_s`, the notch closes a loop on `x_m..x_{n+1}`. The top of
/// the loop is `x_{m+1}` (even `s`) or `x_{n+1}` (odd `s`), the bottom is the
/// other one. Compositions with `m < 2` have no room for the construction
/// and yield [`PosetError::DegenerateDecomposition`].
pub fn check_notched_decompositions(
    alpha: &Composition,
) -> Result<DecompositionReport, PosetError> {
    let base = notched(alpha, Notch::Last)?;
    let n = alpha.size();
    let s = alpha.len();
    let a_s = alpha.parts()[s - 1];
    let m = last_notch_anchor(alpha);
    if m < 2 {
        return Err(PosetError::DegenerateDecomposition(alpha.to_string()));
    }
    // 0-based indices of x_m, the loop top and the loop bottom
    let xm = m - 1;
    let (top, bottom) = if s.is_multiple_of(2) { (m, n) } else { (n, m) };
    let x1 = 0;
    let loop_vertices: Vec<usize> = (m..=n).collect();
    let r = rank(&base)?;

    // T side
    let (p_t, xt) = base.add_above(&[x1, top], "xT")?;
    let r_t = rank(&p_t)?;
    let d1 = p_t.down_set_size(xt) - 1;
    let beta = p_t.delete_down_set(xt)?;
    let r_beta = rank(&beta)?;
    let pbar_t = p_t.remove_cover(xm, top)?;
    let rbar_t = rank(&pbar_t)?;
    let gamma = {
        let g = pbar_t.delete_up_set(xm)?;
        let t = g.index_of(base.label(top))?;
        g.delete_down_set(t)?
    };
    let r_gamma = rank(&gamma)?;
    let delta = {
        let d = pbar_t.delete_elements(&loop_vertices)?;
        let t = d.index_of("xT")?;
        let (d, fresh) = d.add_above(&[t], "xT'")?;
        let anchor = d.index_of(base.label(xm))?;
        d.merge(anchor, fresh)?
    };
    let rbar_delta = rank(&delta)?;
    if d1 < a_s {
        return Err(PosetError::DegenerateDecomposition(alpha.to_string()));
    }

    let t_split = r_t == r.poly_add(&q_pow(d1 + 1).poly_mul(&r_beta));
    let t_bar_split = rbar_t == r_t.poly_add(&q_pow(a_s + 1).poly_mul(&r_gamma));
    let delta_split = rbar_delta == q_pow(d1 - a_s).poly_mul(&r_beta).poly_add(&r_gamma);
    let eq1 = r == rbar_t.poly_sub(&q_pow(a_s + 1).poly_mul(&rbar_delta));

    // B side
    let (p_b, xb) = base.add_below(&[x1, bottom], "xB")?;
    let r_b = rank(&p_b)?;
    let beta_p = p_b.delete_up_set(xb)?;
    let r_beta_p = rank(&beta_p)?;
    let pbar_b = p_b.remove_cover(bottom, xm)?;
    let rbar_b = rank(&pbar_b)?;
    let w = pbar_b.down_set_size(xm);
    let gamma_p = {
        let g = pbar_b.delete_down_set(xm)?;
        let b = g.index_of(base.label(bottom))?;
        g.delete_up_set(b)?
    };
    let r_gamma_p = rank(&gamma_p)?;
    let delta_p = {
        let d = pbar_b.delete_elements(&loop_vertices)?;
        let b = d.index_of("xB")?;
        let (d, fresh) = d.add_below(&[b], "xB'")?;
        let anchor = d.index_of(base.label(xm))?;
        d.merge(anchor, fresh)?
    };
    let rbar_delta_p = rank(&delta_p)?;

    let q = q_pow(1);
    let b_split = r_b == q.poly_mul(&r).poly_add(&r_beta_p);
    let b_bar_split = rbar_b == r_b.poly_add(&q_pow(w).poly_mul(&r_gamma_p));
    let delta_prime_split = rbar_delta_p == r_beta_p.poly_add(&q_pow(w).poly_mul(&r_gamma_p));
    let eq2 = q.poly_mul(&r) == rbar_b.poly_sub(&rbar_delta_p);

    Ok(DecompositionReport {
        alpha: alpha.clone(),
        t_split,
        t_bar_split,
        delta_split,
        eq1,
        b_split,
        b_bar_split,
        delta_prime_split,
        eq2,
    })
}
