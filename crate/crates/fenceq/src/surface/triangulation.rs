use std::fmt;

use serde::{Deserialize, Serialize};

use super::SurfaceError;

/// Largest supported polygon; vertex sets are `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// Unordered pair of polygon vertices, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Arc {
    a: usize,
    b: usize,
}

impl Arc {
    pub fn new(u: usize, v: usize) -> Self {
        Arc {
            a: u.min(v),
            b: u.max(v),
        }
    }

    /// Smaller endpoint.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Larger endpoint.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    /// True for a chord of the `n`-gon that is not a boundary edge.
    pub fn is_arc_of(&self, n: usize) -> bool {
        self.a >= 1 && self.b <= n && self.b - self.a >= 2 && !(self.a == 1 && self.b == n)
    }
}

impl From<[usize; 2]> for Arc {
    fn from(v: [usize; 2]) -> Self {
        Arc::new(v[0], v[1])
    }
}

impl From<Arc> for [usize; 2] {
    fn from(a: Arc) -> Self {
        [a.a, a.b]
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// True iff the endpoints strictly interleave around the boundary.
pub fn arcs_cross(x: &Arc, y: &Arc) -> bool {
    if x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b {
        return false;
    }
    let inside = |v: usize| x.a < v && v < x.b;
    inside(y.a) != inside(y.b)
}

/// Triangulation of the convex `n`-gon with vertices `1..=n` counterclockwise.
///
/// Diagonals are kept in canonical order, sorted by `(min, max)`; matrix and
/// vector indices refer to this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonTriangulation {
    n: usize,
    diagonals: Vec<Arc>,
    /// `adj[v - 1]` has bit `u - 1` set when `(u, v)` is a side or diagonal.
    adj: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub n: usize,
    pub diagonals: Vec<[usize; 2]>,
}

impl PolygonTriangulation {
    pub fn new(n: usize, diagonals: &[Arc]) -> Result<Self, SurfaceError> {
        if !(3..=MAX_VERTICES).contains(&n) {
            return Err(SurfaceError::InvalidPolygon { n });
        }
        if diagonals.len() != n - 3 {
            return Err(SurfaceError::WrongDiagonalCount {
                n,
                expected: n - 3,
                got: diagonals.len(),
            });
        }
        let mut diags = diagonals.to_vec();
        diags.sort();
        for (i, d) in diags.iter().enumerate() {
            if !d.is_arc_of(n) {
                return Err(SurfaceError::InvalidArc { a: d.a, b: d.b, n });
            }
            if i > 0 && diags[i - 1] == *d {
                return Err(SurfaceError::DuplicateDiagonal(*d));
            }
            for e in &diags[..i] {
                if arcs_cross(d, e) {
                    return Err(SurfaceError::CrossingDiagonals(*e, *d));
                }
            }
        }
        Ok(Self::build(n, diags))
    }

    fn build(n: usize, diagonals: Vec<Arc>) -> Self {
        let mut adj = vec![0u64; n];
        let mut link = |u: usize, v: usize| {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        };
        for v in 1..=n {
            link(v, v % n + 1);
        }
        for d in &diagonals {
            link(d.a, d.b);
        }
        PolygonTriangulation { n, diagonals, adj }
    }

    pub fn from_json(json: &TriangulationJson) -> Result<Self, SurfaceError> {
        let diags: Vec<Arc> = json.diagonals.iter().map(|&d| Arc::from(d)).collect();
        Self::new(json.n, &diags)
    }

    pub fn to_json(&self) -> TriangulationJson {
        TriangulationJson {
            n: self.n,
            diagonals: self.diagonals.iter().map(|&d| d.into()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Arc] {
        &self.diagonals
    }

    pub fn index_of(&self, d: &Arc) -> Option<usize> {
        self.diagonals.binary_search(d).ok()
    }

    pub fn contains(&self, d: &Arc) -> bool {
        self.index_of(d).is_some()
    }

    /// True when `(u, v)` is a side of the polygon or a diagonal.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Counterclockwise offset of `v` from `from`, in `0..n`.
    pub fn offset(&self, from: usize, v: usize) -> usize {
        (v + self.n - from) % self.n
    }

    /// The two triangle apexes over diagonal `d`: `x` with `a < x < b`, and `y` outside.
    pub fn apexes(&self, d: &Arc) -> (usize, usize) {
        let common = self.adj[d.a - 1] & self.adj[d.b - 1];
        let mut x = 0;
        let mut y = 0;
        let mut rest = common;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            if d.a < v && v < d.b {
                x = v;
            } else {
                y = v;
            }
        }
        debug_assert!(x != 0 && y != 0, "diagonal {d} must border two triangles");
        (x, y)
    }

    /// All triangles as increasing vertex triples, sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        if self.n == 3 {
            return vec![[1, 2, 3]];
        }
        let mut tris = Vec::with_capacity(self.n - 2);
        for d in &self.diagonals {
            let (x, y) = self.apexes(d);
            for apex in [x, y] {
                let mut t = [d.a, d.b, apex];
                t.sort();
                tris.push(t);
            }
        }
        tris.sort();
        tris.dedup();
        tris
    }

    /// The diagonal that replaces `d` when it is flipped.
    pub fn flipped_diagonal(&self, d: &Arc) -> Result<Arc, SurfaceError> {
        if !self.contains(d) {
            return Err(SurfaceError::NotADiagonal(*d));
        }
        let (x, y) = self.apexes(d);
        Ok(Arc::new(x, y))
    }

    /// Replaces `d` by the other diagonal of its quadrilateral.
    pub fn flip(&self, d: &Arc) -> Result<Self, SurfaceError> {
        let e = self.flipped_diagonal(d)?;
        let mut diags: Vec<Arc> = self.diagonals.iter().copied().filter(|x| x != d).collect();
        diags.push(e);
        diags.sort();
        Ok(Self::build(self.n, diags))
    }

    /// Signed adjacency matrix over the canonical diagonal order.
    ///
    /// In each triangle `a < b < c` the pairs `(ab, ac)`, `(ac, bc)` and
    /// `(bc, ab)` contribute `+1` (and `-1` transposed) when both sides are
    /// diagonals.
    pub fn signed_adjacency(&self) -> Vec<Vec<i64>> {
        let k = self.diagonals.len();
        let mut m = vec![vec![0i64; k]; k];
        for [a, b, c] in self.triangles() {
            let ab = self.index_of(&Arc::new(a, b));
            let ac = self.index_of(&Arc::new(a, c));
            let bc = self.index_of(&Arc::new(b, c));
            for (s, t) in [(ab, ac), (ac, bc), (bc, ab)] {
                if let (Some(i), Some(j)) = (s, t) {
                    m[i][j] += 1;
                    m[j][i] -= 1;
                }
            }
        }
        m
    }

    /// Diagonals crossed by `g`, ordered from `g.a()` to `g.b()`.
    ///
    /// Walks the strip of triangles met by `g`. Returns an empty list when
    /// `g` is already a side or diagonal.
    pub fn crossed_diagonals(&self, g: &Arc) -> Result<Vec<Arc>, SurfaceError> {
        if !g.is_arc_of(self.n) {
            return Err(SurfaceError::InvalidArc {
                a: g.a,
                b: g.b,
                n: self.n,
            });
        }
        let (a, b) = (g.a, g.b);
        if self.has_edge(a, b) {
            return Ok(Vec::new());
        }
        let pos = |v: usize| self.offset(a, v);
        let target = pos(b);
        // consecutive neighbours of a around b
        let mut nbrs: Vec<usize> = (1..=self.n)
            .filter(|&v| v != a && self.has_edge(a, v))
            .collect();
        nbrs.sort_by_key(|&v| pos(v));
        let i = nbrs
            .iter()
            .position(|&v| pos(v) > target)
            .expect("b lies inside the fan of a");
        let (mut u, mut v) = (nbrs[i - 1], nbrs[i]);
        let mut prev_apex = a;
        let mut out = Vec::new();
        loop {
            let d = Arc::new(u, v);
            out.push(d);
            let (x, y) = self.apexes(&d);
            let w = if x == prev_apex { y } else { x };
            if w == b {
                return Ok(out);
            }
            prev_apex = if pos(w) < target { u } else { v };
            if pos(w) < target {
                u = w;
            } else {
                v = w;
            }
        }
    }

    /// Number of diagonals crossed by `g`.
    pub fn crossing_count(&self, g: &Arc) -> usize {
        self.diagonals.iter().filter(|d| arcs_cross(d, g)).count()
    }
}
