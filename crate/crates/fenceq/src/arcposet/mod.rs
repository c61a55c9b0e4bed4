//! The fence poset of an arc and its agreement with the cluster expansion.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::cluster::{f_polynomial_q, ClusterError};
use crate::poset::{fence, rank_sequence, Composition, FinitePoset, PosetError, PosetJson};
use crate::surface::{Arc, PolygonTriangulation, SurfaceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcPosetError {
    #[error("arc {0} crosses no diagonal")]
    NoCrossings(Arc),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Fence poset on the crossings of an arc, element `i` being the `i`-th crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcPosetResult {
    pub composition: Composition,
    pub poset: FinitePoset,
    pub crossing_count: usize,
}

#[derive(Serialize)]
struct ArcPosetJson<'a> {
    composition: &'a Composition,
    poset: PosetJson,
    crossing_count: usize,
    crossed: Vec<Arc>,
}

impl ArcPosetResult {
    /// JSON with the composition, the cover list and the crossed diagonals.
    pub fn to_json(&self, crossed: &[Arc]) -> serde_json::Value {
        serde_json::to_value(ArcPosetJson {
            composition: &self.composition,
            poset: self.poset.to_json(),
            crossing_count: self.crossing_count,
            crossed: crossed.to_vec(),
        })
        .expect("plain data serializes")
    }
}

/// Step directions along `g` walked from `start`: entry `i` is true when
/// crossing `i` lies below crossing `i + 1`.
///
/// Crossing `i` lies above crossing `i + 1` exactly when the vertex shared by
/// the two diagonals is on the right of the walk. With vertices labelled
/// counterclockwise, the right of `start -> end` is the open counterclockwise
/// interval from `start` to `end`.
fn walk_steps(
    t: &PolygonTriangulation,
    g: &Arc,
    start: usize,
) -> Result<(Vec<Arc>, Vec<bool>), SurfaceError> {
    let mut crossed = t.crossed_diagonals(g)?;
    if start != g.a() {
        crossed.reverse();
    }
    let end = g.other(start);
    let span = t.offset(start, end);
    let steps = crossed
        .windows(2)
        .map(|w| {
            let shared = if w[1].has_endpoint(w[0].a()) {
                w[0].a()
            } else {
                w[0].b()
            };
            let off = t.offset(start, shared);
            let right = 0 < off && off < span;
            !right
        })
        .collect();
    Ok((crossed, steps))
}

/// Builds the fence poset of `g` over `t`, walking from the smaller endpoint.
pub fn fence_poset_of_arc(
    t: &PolygonTriangulation,
    g: &Arc,
) -> Result<ArcPosetResult, ArcPosetError> {
    Ok(fence_poset_with_crossings(t, g)?.0)
}

/// [`fence_poset_of_arc`] together with the crossed diagonals in walk order.
pub fn fence_poset_with_crossings(
    t: &PolygonTriangulation,
    g: &Arc,
) -> Result<(ArcPosetResult, Vec<Arc>), ArcPosetError> {
    let (crossed, steps) = walk_steps(t, g, g.a())?;
    if crossed.is_empty() {
        return Err(ArcPosetError::NoCrossings(*g));
    }
    let composition = Composition::from_steps(&steps);
    let poset = fence(&composition);
    Ok((
        ArcPosetResult {
            composition,
            poset,
            crossing_count: crossed.len(),
        },
        crossed,
    ))
}

/// Composition obtained by walking from the larger endpoint instead,
/// read back in the smaller-endpoint order.
pub fn composition_from_far_end(
    t: &PolygonTriangulation,
    g: &Arc,
) -> Result<Composition, ArcPosetError> {
    let (_, steps) = walk_steps(t, g, g.b())?;
    // reversing the walk reverses the order of crossings; each relation keeps
    // its direction between the same two crossings
    let back: Vec<bool> = steps.iter().rev().map(|&up| !up).collect();
    Ok(Composition::from_steps(&back))
}

/// True iff the rank polynomial of the arc's fence poset equals its F-polynomial at `y = q`.
pub fn verify_expansion(t: &PolygonTriangulation, g: &Arc) -> Result<bool, ArcPosetError> {
    if t.contains(g) {
        return Ok(true);
    }
    let res = fence_poset_of_arc(t, g)?;
    let rank = rank_sequence::<BigInt>(&res.poset)?;
    let f = f_polynomial_q::<BigInt>(t, g)?;
    Ok(rank == f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(n: usize, d: &[(usize, usize)]) -> PolygonTriangulation {
        let d: Vec<Arc> = d.iter().map(|&(a, b)| Arc::new(a, b)).collect();
        PolygonTriangulation::new(n, &d).unwrap()
    }

    #[test]
    fn square_single_crossing() {
        let sq = tri(4, &[(1, 3)]);
        let r = fence_poset_of_arc(&sq, &Arc::new(2, 4)).unwrap();
        assert_eq!(r.crossing_count, 1);
        assert_eq!(r.composition.parts(), &[0]);
        assert_eq!(r.poset.len(), 1);
        assert!(verify_expansion(&sq, &Arc::new(2, 4)).unwrap());
        assert!(verify_expansion(&sq, &Arc::new(1, 3)).unwrap());
        assert!(matches!(
            fence_poset_of_arc(&sq, &Arc::new(1, 3)),
            Err(ArcPosetError::NoCrossings(_))
        ));
    }

    #[test]
    fn octagon_fan() {
        let t = tri(8, &[(1, 7), (1, 6), (1, 5), (2, 5), (2, 4)]);
        let g = Arc::new(3, 8);
        let r = fence_poset_of_arc(&t, &g).unwrap();
        assert_eq!(r.poset.len(), 5);
        assert_eq!(r.composition.size(), 4);
        assert!(verify_expansion(&t, &g).unwrap());
        assert_eq!(composition_from_far_end(&t, &g).unwrap(), r.composition);
    }
}
