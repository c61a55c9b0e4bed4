use serde::{Deserialize, Serialize};

use super::{Arc, PolygonTriangulation, SurfaceError};

/// A point on boundary edge `edge = (edge, edge + 1 mod n)`.
///
/// `slot` orders several points on the same edge counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgePoint {
    pub edge: usize,
    pub slot: u32,
}

/// A lamination curve joining two boundary points.
///
/// Serializes as `[e1, e2]` when both slots are 0 and as
/// `{"from": {...}, "to": {...}}` otherwise; both forms are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
#[serde(from = "LamCurveRepr")]
pub struct LamCurve {
    pub from: EdgePoint,
    pub to: EdgePoint,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum LamCurveRepr {
    Edges([usize; 2]),
    Points { from: EdgePoint, to: EdgePoint },
}

impl From<LamCurveRepr> for LamCurve {
    fn from(r: LamCurveRepr) -> Self {
        match r {
            LamCurveRepr::Edges([e1, e2]) => LamCurve::between(e1, e2),
            LamCurveRepr::Points { from, to } => LamCurve { from, to },
        }
    }
}

impl Serialize for LamCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.from.slot == 0 && self.to.slot == 0 {
            LamCurveRepr::Edges([self.from.edge, self.to.edge]).serialize(s)
        } else {
            LamCurveRepr::Points {
                from: self.from,
                to: self.to,
            }
            .serialize(s)
        }
    }
}

/// A list of laminations, each a list of pairwise non-crossing curves.
pub type MultiLamination = Vec<Vec<LamCurve>>;

impl LamCurve {
    /// Curve between edges `e1` and `e2`, both at slot 0.
    pub fn between(e1: usize, e2: usize) -> Self {
        LamCurve {
            from: EdgePoint { edge: e1, slot: 0 },
            to: EdgePoint { edge: e2, slot: 0 },
        }
    }

    pub fn reversed(&self) -> Self {
        LamCurve {
            from: self.to,
            to: self.from,
        }
    }

    /// Checks edge indices and that the curve does not cut off at most one vertex.
    pub fn validate(&self, n: usize) -> Result<(), SurfaceError> {
        for p in [self.from, self.to] {
            if p.edge < 1 || p.edge > n {
                return Err(SurfaceError::InvalidCurve(format!(
                    "edge {} out of range 1..={n}",
                    p.edge
                )));
            }
        }
        let d = (self.to.edge + n - self.from.edge) % n;
        if d < 2 || n - d < 2 {
            return Err(SurfaceError::InvalidCurve(format!(
                "edges {} and {} are too close; the curve would cut off at most one vertex",
                self.from.edge, self.to.edge
            )));
        }
        Ok(())
    }

    /// True when vertex `v` lies on the side `from.edge + 1 ..= to.edge`.
    fn on_first_side(&self, n: usize, v: usize) -> bool {
        let e1 = self.from.edge;
        let span = (self.to.edge + n - e1) % n;
        (v + n - e1 - 1) % n < span
    }

    /// True when the curve separates the endpoints of `d`.
    pub fn crosses(&self, n: usize, d: &Arc) -> bool {
        self.on_first_side(n, d.a()) != self.on_first_side(n, d.b())
    }

    /// True when the two curves must intersect (endpoints interleave).
    pub fn crosses_curve(&self, other: &LamCurve) -> Result<bool, SurfaceError> {
        let pts = [self.from, self.to, other.from, other.to];
        for i in 0..4 {
            for j in i + 1..4 {
                if pts[i] == pts[j] {
                    return Err(SurfaceError::InvalidCurve(format!(
                        "two curve endpoints share edge {} slot {}",
                        pts[i].edge, pts[i].slot
                    )));
                }
            }
        }
        let (lo, hi) = if self.from < self.to {
            (self.from, self.to)
        } else {
            (self.to, self.from)
        };
        let inside = |p: EdgePoint| lo < p && p < hi;
        Ok(inside(other.from) != inside(other.to))
    }

    /// Shear coordinate of this curve at diagonal `d`: `+1` for an S-shaped
    /// crossing of its quadrilateral, `-1` for Z-shaped, `0` otherwise.
    ///
    /// With the quadrilateral `(p, x, q, y)` counterclockwise, the curve
    /// entering through `(x, q)` and leaving through `(y, p)` is `+1`;
    /// through `(p, x)` and `(q, y)` is `-1`.
    fn shear_at(&self, t: &PolygonTriangulation, d: &Arc) -> i64 {
        let n = t.n();
        let (p, q) = (d.a(), d.b());
        let side = |v: usize| self.on_first_side(n, v);
        if side(p) == side(q) {
            return 0;
        }
        let (x, y) = t.apexes(d);
        let through_xq = side(x) == side(p);
        let through_yp = side(y) == side(q);
        match (through_xq, through_yp) {
            (true, true) => 1,
            (false, false) => -1,
            _ => 0,
        }
    }
}

fn check_lamination(n: usize, lam: &[LamCurve]) -> Result<(), SurfaceError> {
    for c in lam {
        c.validate(n)?;
    }
    for (i, c) in lam.iter().enumerate() {
        for d in &lam[..i] {
            if c.crosses_curve(d)? {
                return Err(SurfaceError::InvalidCurve(format!(
                    "curves {:?} and {:?} cross",
                    d, c
                )));
            }
        }
    }
    Ok(())
}

/// Shear coordinates of a lamination over the canonical diagonal order of `t`.
pub fn shear_vector(t: &PolygonTriangulation, lam: &[LamCurve]) -> Result<Vec<i64>, SurfaceError> {
    check_lamination(t.n(), lam)?;
    Ok(t.diagonals()
        .iter()
        .map(|d| lam.iter().map(|c| c.shear_at(t, d)).sum())
        .collect())
}

/// The curve shadowing `g` with both endpoints pushed counterclockwise:
/// from edge `(a, a+1)` to edge `(b, b+1)`.
pub fn elementary_lamination(g: &Arc) -> LamCurve {
    LamCurve::between(g.a(), g.b())
}

/// Elementary laminations of several pairwise compatible arcs, with slots
/// chosen so the curves are pairwise non-crossing.
pub fn elementary_laminations(n: usize, arcs: &[Arc]) -> Vec<LamCurve> {
    let mut curves: Vec<LamCurve> = arcs.iter().map(elementary_lamination).collect();
    for edge in 1..=n {
        // (curve, is_from, ccw distance to the other end, tie-break)
        let mut ends: Vec<(usize, bool, usize, i64)> = Vec::new();
        for (i, c) in curves.iter().enumerate() {
            for (is_from, p, other) in [(true, c.from, c.to), (false, c.to, c.from)] {
                if p.edge == edge {
                    let dist = (other.edge + n - edge) % n;
                    let tie = if edge < other.edge {
                        i as i64
                    } else {
                        -(i as i64)
                    };
                    ends.push((i, is_from, dist, tie));
                }
            }
        }
        ends.sort_by(|x, y| y.2.cmp(&x.2).then(x.3.cmp(&y.3)));
        for (slot, &(i, is_from, _, _)) in ends.iter().enumerate() {
            let p = if is_from {
                &mut curves[i].from
            } else {
                &mut curves[i].to
            };
            p.slot = slot as u32;
        }
    }
    curves
}

/// Every single-curve lamination of the `n`-gon (edges at cyclic distance >= 2).
pub fn all_single_curves(n: usize) -> Vec<LamCurve> {
    let mut out = Vec::new();
    for e1 in 1..=n {
        for e2 in e1 + 2..=n {
            if !(e1 == 1 && e2 == n) {
                out.push(LamCurve::between(e1, e2));
            }
        }
    }
    out
}
