use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::polyseq::{Coeff, Poly};
use crate::surface::{arcs_cross, Arc, MultiLamination, PolygonTriangulation, SurfaceError};

use super::{principal_seed, seed_from, ClusterError, ExtendedSeed};

/// How to choose the next flip on the way to an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipPlanner {
    /// Smallest canonical diagonal among those whose flip lowers the crossing count.
    Greedy,
    /// Always the first diagonal crossed by the arc, walking from its smaller endpoint.
    AlongArc,
    /// Uniform choice among crossing-count-lowering flips, from a seeded RNG.
    Random(u64),
}

/// Diagonals crossing `g` whose flip removes a crossing.
fn improving_flips(t: &PolygonTriangulation, g: &Arc) -> Vec<Arc> {
    t.diagonals()
        .iter()
        .filter(|d| arcs_cross(d, g))
        .filter(|d| {
            let e = t.flipped_diagonal(d).expect("listed diagonal");
            !arcs_cross(&e, g)
        })
        .copied()
        .collect()
}

/// Flip sequence bringing `g` into the triangulation, chosen by `planner`.
pub fn plan_flips(
    t: &PolygonTriangulation,
    g: &Arc,
    planner: FlipPlanner,
) -> Result<Vec<Arc>, SurfaceError> {
    if !g.is_arc_of(t.n()) {
        return Err(SurfaceError::InvalidArc {
            a: g.a(),
            b: g.b(),
            n: t.n(),
        });
    }
    let mut rng = match planner {
        FlipPlanner::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut cur = t.clone();
    let mut out = Vec::new();
    while !cur.contains(g) {
        let d = match planner {
            FlipPlanner::Greedy => improving_flips(&cur, g)[0],
            FlipPlanner::AlongArc => cur.crossed_diagonals(g)?[0],
            FlipPlanner::Random(_) => {
                let options = improving_flips(&cur, g);
                *options
                    .choose(rng.as_mut().expect("seeded"))
                    .expect("some flip improves")
            }
        };
        out.push(d);
        cur = cur.flip(&d)?;
    }
    Ok(out)
}

/// Greedy flip sequence after which `g` is a diagonal.
///
/// Each flip lowers the number of diagonals crossing `g` by one; ties go
/// to the smallest canonical diagonal.
pub fn flip_sequence_to_arc(t: &PolygonTriangulation, g: &Arc) -> Result<Vec<Arc>, SurfaceError> {
    plan_flips(t, g, FlipPlanner::Greedy)
}

fn run_flips<C: Coeff>(
    mut seed: ExtendedSeed<C>,
    flips: &[Arc],
    g: &Arc,
) -> Result<Poly<C>, ClusterError> {
    for d in flips {
        let k = seed
            .index_of_label(d)
            .ok_or(SurfaceError::NotADiagonal(*d))?;
        seed.mutate_in_place(k)?;
    }
    Ok(seed.value_of(g))
}

/// c-polynomial of `g`: the cluster variable with every initial cluster
/// variable set to 1 and every lamination coefficient set to `q`.
pub fn c_polynomial<C: Coeff>(
    t: &PolygonTriangulation,
    ml: &MultiLamination,
    g: &Arc,
) -> Result<Poly<C>, ClusterError> {
    c_polynomial_along(t, ml, g, FlipPlanner::Greedy)
}

/// [`c_polynomial`] along a flip sequence chosen by `planner`.
pub fn c_polynomial_along<C: Coeff>(
    t: &PolygonTriangulation,
    ml: &MultiLamination,
    g: &Arc,
    planner: FlipPlanner,
) -> Result<Poly<C>, ClusterError> {
    let seed = seed_from(t, ml)?;
    let flips = plan_flips(t, g, planner)?;
    run_flips(seed, &flips, g)
}

/// F-polynomial of `g` with every coefficient variable set to `q`.
pub fn f_polynomial_q<C: Coeff>(
    t: &PolygonTriangulation,
    g: &Arc,
) -> Result<Poly<C>, ClusterError> {
    let flips = flip_sequence_to_arc(t, g)?;
    run_flips(principal_seed(t), &flips, g)
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

    fn coeffs(p: Poly<BigInt>) -> Vec<i64> {
        p.convert::<i64>().unwrap().into_coeffs()
    }

    #[test]
    fn flip_sequences() {
        let sq = tri(4, &[(1, 3)]);
        assert!(flip_sequence_to_arc(&sq, &Arc::new(1, 3))
            .unwrap()
            .is_empty());
        assert_eq!(
            flip_sequence_to_arc(&sq, &Arc::new(2, 4)).unwrap(),
            vec![Arc::new(1, 3)]
        );
        let pent = tri(5, &[(1, 3), (1, 4)]);
        assert_eq!(
            flip_sequence_to_arc(&pent, &Arc::new(2, 5)).unwrap().len(),
            2
        );
    }

    #[test]
    fn square_f_polynomial() {
        let sq = tri(4, &[(1, 3)]);
        assert_eq!(
            coeffs(f_polynomial_q(&sq, &Arc::new(2, 4)).unwrap()),
            vec![1, 1]
        );
        assert_eq!(
            coeffs(f_polynomial_q(&sq, &Arc::new(1, 3)).unwrap()),
            vec![1]
        );
    }

    #[test]
    fn nine_gon_counterexample() {
        let t = tri(9, &[(2, 9), (3, 9), (3, 8), (4, 8), (5, 8), (6, 8)]);
        let ml = vec![vec![LamCurve::between(1, 4)]];
        let c = c_polynomial::<BigInt>(&t, &ml, &Arc::new(1, 7)).unwrap();
        assert_eq!(coeffs(c), vec![7, 6, 1]);
    }
}
