//! Golden examples with known exact values.
//!
//! The list is closed: every fixture names the worked example it
//! reproduces in `source`.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cluster::{c_polynomial, seed_from, ArcInstance};
use crate::poset::{circular_fence, rank_sequence, Composition};
use crate::surface::{Arc, EdgePoint, LamCurve, PolygonTriangulation};
use crate::IntPoly;

/// Octagon triangulation of the signed adjacency example.
pub fn octagon() -> PolygonTriangulation {
    triangulation(8, &[(1, 7), (1, 6), (1, 5), (2, 5), (2, 4)])
}

/// Canonical diagonal index of each octagon label 1..5.
///
/// Labels 1..5 are `(1,7) (1,6) (1,5) (2,5) (2,4)`.
pub const OCTAGON_LABEL_ORDER: [usize; 5] = [2, 1, 0, 4, 3];

/// Signed adjacency matrix of the octagon in label order.
pub const OCTAGON_MATRIX: [[i64; 5]; 5] = [
    [0, -1, 0, 0, 0],
    [1, 0, -1, 0, 0],
    [0, 1, 0, 1, 0],
    [0, 0, -1, 0, -1],
    [0, 0, 0, 1, 0],
];

/// The octagon lamination curve, from edge (7,8) to edge (3,4).
pub fn octagon_curve() -> LamCurve {
    LamCurve::between(7, 3)
}

/// Coefficient row of the octagon lamination in label order.
pub const OCTAGON_LAMINATION_ROW: [i64; 5] = [-1, 0, 1, -1, 1];

/// Nine-gon single lamination whose c-polynomial `q^2 + 6q + 7` is not almost interlacing.
pub fn nine_gon_instance() -> ArcInstance {
    let t = triangulation(9, &[(2, 9), (3, 9), (3, 8), (4, 8), (5, 8), (6, 8)]);
    ArcInstance::new(&t, vec![vec![LamCurve::between(1, 4)]], Arc::new(1, 7))
}

/// The 12-gon of the single lamination example, with target arc (6,11).
pub fn twelve_gon() -> PolygonTriangulation {
    triangulation(
        12,
        &[
            (1, 10),
            (10, 12),
            (2, 10),
            (2, 9),
            (2, 8),
            (3, 8),
            (3, 7),
            (4, 7),
            (5, 7),
        ],
    )
}

fn twelve_gon_curves() -> [LamCurve; 3] {
    [
        LamCurve::between(10, 6),
        LamCurve::between(11, 5),
        LamCurve::between(12, 4),
    ]
}

/// One lamination made of the three nested curves of the 12-gon example.
pub fn twelve_gon_single_lamination() -> ArcInstance {
    ArcInstance::new(
        &twelve_gon(),
        vec![twelve_gon_curves().to_vec()],
        Arc::new(6, 11),
    )
}

/// Four laminations, the first curve repeated (left column of the non-examples table).
pub fn twelve_gon_table_left() -> ArcInstance {
    let repeat = LamCurve {
        from: EdgePoint { edge: 10, slot: 1 },
        to: EdgePoint { edge: 6, slot: 0 },
    };
    let [a, b, c] = twelve_gon_curves();
    ArcInstance::new(
        &twelve_gon(),
        vec![vec![repeat], vec![a], vec![b], vec![c]],
        Arc::new(6, 11),
    )
}

/// Three laminations, one curve each (right column of the non-examples table).
pub fn twelve_gon_table_right() -> ArcInstance {
    let ml = twelve_gon_curves().iter().map(|c| vec![*c]).collect();
    ArcInstance::new(&twelve_gon(), ml, Arc::new(6, 11))
}

fn triangulation(n: usize, d: &[(usize, usize)]) -> PolygonTriangulation {
    let d: Vec<Arc> = d.iter().map(|&(a, b)| Arc::new(a, b)).collect();
    PolygonTriangulation::new(n, &d).expect("fixture triangulation is valid")
}

/// Rows of `m` restricted to columns and rows in label order.
fn relabel(m: &[Vec<i64>], rows: &[usize]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|&i| OCTAGON_LABEL_ORDER.iter().map(|&j| m[i][j]).collect())
        .collect()
}

/// Checks a lamination row given in canonical diagonal order against the golden row.
pub fn lamination_row_matches(row: &[i64]) -> bool {
    row.len() == 5
        && OCTAGON_LABEL_ORDER
            .iter()
            .zip(OCTAGON_LAMINATION_ROW)
            .all(|(&i, v)| row[i] == v)
}

fn cpoly_coeffs(inst: &ArcInstance) -> Value {
    let result = inst
        .triangulation()
        .map_err(|e| e.to_string())
        .and_then(|t| {
            c_polynomial::<BigInt>(&t, &inst.laminations, &inst.arc).map_err(|e| e.to_string())
        });
    match result {
        Ok(p) => json!(p),
        Err(e) => json!({ "error": e }),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureOutcome {
    pub id: &'static str,
    pub source: &'static str,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

struct Fixture {
    id: &'static str,
    source: &'static str,
    run: fn() -> (Value, Value),
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        id: "octagon_signed_adjacency",
        source: "octagon triangulation example: signed adjacency matrix B(T)",
        run: || {
            let m = octagon().signed_adjacency();
            (json!(OCTAGON_MATRIX), json!(relabel(&m, &OCTAGON_LABEL_ORDER)))
        },
    },
    Fixture {
        id: "octagon_lamination_row",
        source: "octagon lamination example: bottom row of the extended matrix",
        run: || {
            let seed = seed_from::<BigInt>(&octagon(), &vec![vec![octagon_curve()]])
                .expect("fixture lamination is valid");
            let row: Vec<i64> = OCTAGON_LABEL_ORDER.iter().map(|&j| seed.matrix()[5][j]).collect();
            (json!(OCTAGON_LAMINATION_ROW), json!(row))
        },
    },
    Fixture {
        id: "circular_exceptional_1212",
        source: "circular fence exceptional family: rank sequence of (1,2,1,2)",
        run: || {
            let alpha = Composition::new(vec![1, 2, 1, 2]).expect("valid composition");
            let p: IntPoly = circular_fence(&alpha)
                .and_then(|p| rank_sequence(&p))
                .expect("circular fence of (1,2,1,2)");
            (json!([1, 2, 3, 2, 3, 2, 1]), json!(p))
        },
    },
    Fixture {
        id: "nine_gon_counterexample",
        source: "single lamination counterexample to almost interlacing: q^2 + 6q + 7",
        run: || (json!([7, 6, 1]), cpoly_coeffs(&nine_gon_instance())),
    },
    Fixture {
        id: "twelve_gon_single_lamination",
        source: "single lamination example on the 12-gon: 2q^8 + 4q^7 + 6q^6 + 10q^5 + 11q^4 + 12q^3 + 9q^2 + 5q + 2",
        run: || (json!([2, 5, 9, 12, 11, 10, 6, 4, 2]), cpoly_coeffs(&twelve_gon_single_lamination())),
    },
    Fixture {
        id: "twelve_gon_table_left",
        source: "non-examples of unimodality and log-concavity table, left column",
        run: || (json!([2, 2, 6, 6, 12, 9, 8, 4, 6, 4, 2]), cpoly_coeffs(&twelve_gon_table_left())),
    },
    Fixture {
        id: "twelve_gon_table_right",
        source: "non-examples of unimodality and log-concavity table, right column",
        run: || (json!([2, 5, 9, 12, 11, 10, 6, 4, 2]), cpoly_coeffs(&twelve_gon_table_right())),
    },
];

/// Runs every golden fixture, in a fixed order.
pub fn run_fixtures() -> Vec<FixtureOutcome> {
    FIXTURES
        .iter()
        .map(|f| {
            let (expected, actual) = (f.run)();
            FixtureOutcome {
                id: f.id,
                source: f.source,
                pass: expected == actual,
                expected,
                actual,
            }
        })
        .collect()
}
