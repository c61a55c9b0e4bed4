//! Exhaustive and sampled scans over compositions and triangulated polygons.
//!
//! Work items are generated sequentially (sampling uses a seeded ChaCha RNG),
//! evaluated on a bounded rayon pool, and reduced in generation order, so a
//! report depends only on the configuration.

use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cluster::{c_polynomial, ArcInstance};
use crate::polyseq::{seq_report, SeqReport};
use crate::poset::{
    check_notched_decompositions, circular_fence, notched, rank_sequence, rank_sequence_fence_fast,
    Composition, Notch, PosetError,
};
use crate::surface::{
    all_arcs, all_single_curves, all_triangulations, catalan, random_triangulation, Arc, LamCurve,
    PolygonTriangulation,
};
use crate::IntPoly;

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "FENCEQ_WORKERS";

/// Default seed for sampled scans.
pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// Plain fences are almost interlacing.
    Plain,
    /// Singly (first, last) and doubly notched fences are almost interlacing.
    Notched,
    /// Circular fences are symmetric, and unimodal outside the exceptional family.
    Circular,
    /// Single-curve c-polynomials are unimodal.
    SingleLam,
    /// Single-curve c-polynomials are log-concave (a conjecture: reported, never failed).
    LogConcavity,
    /// The two decomposition identities of last-notched fences.
    Identities,
}

impl ScanMode {
    pub fn is_surface(&self) -> bool {
        matches!(self, ScanMode::SingleLam | ScanMode::LogConcavity)
    }

    /// Violations of a conjecture are findings rather than failures.
    pub fn is_conjecture(&self) -> bool {
        matches!(self, ScanMode::LogConcavity)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ScanMode::Plain => "plain",
            ScanMode::Notched => "notched",
            ScanMode::Circular => "circular",
            ScanMode::SingleLam => "single_lam",
            ScanMode::LogConcavity => "log_concavity",
            ScanMode::Identities => "identities",
        }
    }
}

impl FromStr for ScanMode {
    type Err = ScanError;
    fn from_str(s: &str) -> Result<Self, ScanError> {
        Ok(match s.replace('-', "_").as_str() {
            "plain" => ScanMode::Plain,
            "notched" => ScanMode::Notched,
            "circular" => ScanMode::Circular,
            "single_lam" => ScanMode::SingleLam,
            "log_concavity" => ScanMode::LogConcavity,
            "identities" => ScanMode::Identities,
            other => return Err(ScanError::InvalidConfig(format!("unknown mode {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),
    #[error("enumeration count mismatch for n = {n}: {what} is {got}, expected {expected}")]
    EnumerationMismatch {
        n: usize,
        what: &'static str,
        got: u64,
        expected: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub mode: ScanMode,
    pub n_min: usize,
    pub n_max: usize,
    /// Per-size number of random instances; `None` means exhaustive.
    pub sample_limit: Option<usize>,
    pub seed: u64,
    /// Worker threads; `None` uses rayon's default.
    pub workers: Option<usize>,
}

/// Largest `n` scanned exhaustively in poset modes.
const MAX_EXHAUSTIVE_POSET_N: usize = 24;

impl ScanConfig {
    pub fn new(mode: ScanMode, n_min: usize, n_max: usize) -> Self {
        ScanConfig {
            mode,
            n_min,
            n_max,
            sample_limit: None,
            seed: DEFAULT_SEED,
            workers: None,
        }
    }

    pub fn validate(&self) -> Result<(), ScanError> {
        let bad = |msg: String| Err(ScanError::InvalidConfig(msg));
        if self.n_min > self.n_max {
            return bad(format!("n_min {} exceeds n_max {}", self.n_min, self.n_max));
        }
        if self.sample_limit == Some(0) {
            return bad("sample limit must be at least 1".into());
        }
        if self.workers == Some(0) {
            return bad("worker count must be at least 1".into());
        }
        if self.mode.is_surface() {
            if self.n_min < 4 {
                return bad(format!("polygon scans need n >= 4, got {}", self.n_min));
            }
            if self.n_max > 40 {
                return bad(format!("polygon scans support n <= 40, got {}", self.n_max));
            }
            if self.sample_limit.is_none() && self.n_max > 14 {
                return bad("exhaustive polygon scans beyond n = 14 need a sample limit".into());
            }
        } else {
            if self.n_min < 1 {
                return bad("composition scans need n >= 1".into());
            }
            if self.n_max > 38 {
                return bad(format!(
                    "composition scans support n <= 38, got {}",
                    self.n_max
                ));
            }
            if self.sample_limit.is_none() && self.n_max > MAX_EXHAUSTIVE_POSET_N {
                return bad(format!(
                    "exhaustive composition scans beyond n = {MAX_EXHAUSTIVE_POSET_N} need a sample limit"
                ));
            }
        }
        Ok(())
    }
}

/// Worker count from [`WORKERS_ENV`], if set to a positive integer.
pub fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&w| w > 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub id: String,
    pub instance: serde_json::Value,
    pub poly: IntPoly,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeSummary {
    pub n: usize,
    pub instances: u64,
    pub violations: u64,
    pub skipped: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub mode: ScanMode,
    pub n_min: usize,
    pub n_max: usize,
    pub sampled: bool,
    pub instances_checked: u64,
    pub skipped: u64,
    /// Conjecture scans report findings; theorem scans report failures.
    pub conjecture: bool,
    pub violations: Vec<Violation>,
    pub per_size: Vec<SizeSummary>,
    pub elapsed_secs: f64,
}

impl ScanReport {
    /// True when a theorem scan found a counterexample.
    pub fn failed(&self) -> bool {
        !self.conjecture && !self.violations.is_empty()
    }

    /// The report without timing, for comparisons across runs.
    pub fn without_timing(&self) -> ScanReport {
        ScanReport {
            elapsed_secs: 0.0,
            ..self.clone()
        }
    }
}

/// Result of checking one instance.
enum Outcome {
    Ok,
    Skipped,
    Bad(Violation),
}

/// Runs the scan described by `cfg`.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanReport, ScanError> {
    cfg.validate()?;
    let start = Instant::now();
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(w) = cfg.workers {
            b = b.num_threads(w);
        }
        b.build()
            .map_err(|e| ScanError::InvalidConfig(e.to_string()))?
    };
    let mut per_size = Vec::new();
    let mut violations = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let outcomes = pool.install(|| scan_size(cfg, n))?;
        let mut summary = SizeSummary {
            n,
            instances: 0,
            violations: 0,
            skipped: 0,
        };
        for o in outcomes {
            match o {
                Outcome::Ok => summary.instances += 1,
                Outcome::Skipped => summary.skipped += 1,
                Outcome::Bad(v) => {
                    summary.instances += 1;
                    summary.violations += 1;
                    violations.push(v);
                }
            }
        }
        per_size.push(summary);
    }
    Ok(ScanReport {
        mode: cfg.mode,
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        sampled: cfg.sample_limit.is_some(),
        instances_checked: per_size.iter().map(|s| s.instances).sum(),
        skipped: per_size.iter().map(|s| s.skipped).sum(),
        conjecture: cfg.mode.is_conjecture(),
        violations,
        per_size,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

fn size_rng(cfg: &ScanConfig, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn scan_size(cfg: &ScanConfig, n: usize) -> Result<Vec<Outcome>, ScanError> {
    if cfg.mode.is_surface() {
        scan_polygon(cfg, n)
    } else {
        Ok(scan_compositions(cfg, n))
    }
}

fn compositions(cfg: &ScanConfig, n: usize) -> Vec<Composition> {
    match cfg.sample_limit {
        None => Composition::all_of_size(n),
        Some(limit) => {
            let mut rng = size_rng(cfg, n);
            (0..limit)
                .map(|_| {
                    let steps: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
                    Composition::from_steps(&steps)
                })
                .collect()
        }
    }
}

fn scan_compositions(cfg: &ScanConfig, n: usize) -> Vec<Outcome> {
    let items = compositions(cfg, n);
    let mode = cfg.mode;
    items
        .par_iter()
        .flat_map_iter(|alpha| check_composition(mode, alpha))
        .collect()
}

fn composition_violation(
    alpha: &Composition,
    variant: &str,
    poly: IntPoly,
    reason: String,
) -> Outcome {
    Outcome::Bad(Violation {
        id: format!("{variant}{alpha}"),
        instance: serde_json::json!({ "alpha": alpha, "variant": variant }),
        poly,
        reason,
    })
}

/// Compositions `(a, b)` or `(a, 1, b)`, ignoring a leading zero part.
///
pub fn is_short_composition(alpha: &Composition) -> bool {
    let p = alpha.parts();
    let p = if p.first() == Some(&0) { &p[1..] } else { p };
    p.len() == 2 || (p.len() == 3 && p[1] == 1)
}

/// The family of notched fences observed to fail almost interlacing:
/// short compositions, and doubly notched fences with `n <= 5`.
///
/// Scans tag violations in this family so they can be told apart from
/// anything else.
pub fn in_notched_exception_family(alpha: &Composition, which: Notch) -> bool {
    is_short_composition(alpha) || (which == Notch::Both && alpha.size() <= 5)
}

/// Almost interlacing plus the equivalence with `ineqA and ineqB`.
fn interlacing_problem(r: &SeqReport) -> Option<String> {
    if !r.almost_interlacing {
        return Some(format!(
            "not almost interlacing (unimodal={}, ineq_a={})",
            r.unimodal, r.ineq_a
        ));
    }
    if (r.ineq_a && r.ineq_b) != r.almost_interlacing {
        return Some("ineq_a and ineq_b disagree with almost interlacing".into());
    }
    None
}

fn check_composition(mode: ScanMode, alpha: &Composition) -> Vec<Outcome> {
    match mode {
        ScanMode::Plain => {
            let p: IntPoly = rank_sequence_fence_fast(alpha);
            let r = seq_report(&p).expect("rank polynomials are nonnegative");
            vec![match interlacing_problem(&r) {
                Some(reason) => composition_violation(alpha, "plain", p, reason),
                None => Outcome::Ok,
            }]
        }
        ScanMode::Notched => [
            ("first", Notch::First),
            ("last", Notch::Last),
            ("both", Notch::Both),
        ]
        .iter()
        .map(|&(name, which)| match notched(alpha, which) {
            Err(PosetError::IndexOutOfRange { .. }) | Err(PosetError::CycleCreated { .. }) => {
                Outcome::Skipped
            }
            Err(e) => composition_violation(alpha, name, IntPoly::zero(), e.to_string()),
            Ok(p) => {
                let poly: IntPoly = rank_sequence(&p).expect("within bound");
                let r = seq_report(&poly).expect("rank polynomials are nonnegative");
                match interlacing_problem(&r) {
                    Some(reason) if in_notched_exception_family(alpha, which) => {
                        composition_violation(alpha, name, poly, format!("{reason} [known family]"))
                    }
                    Some(reason) => composition_violation(alpha, name, poly, reason),
                    None => Outcome::Ok,
                }
            }
        })
        .collect(),
        ScanMode::Circular => vec![check_circular(alpha)],
        ScanMode::Identities => vec![match check_notched_decompositions(alpha) {
            Ok(rep) if rep.all_hold() => Outcome::Ok,
            Ok(rep) => composition_violation(
                alpha,
                "identities",
                IntPoly::zero(),
                serde_json::to_string(&rep).expect("plain data"),
            ),
            Err(PosetError::IndexOutOfRange { .. })
            | Err(PosetError::DegenerateDecomposition(_)) => Outcome::Skipped,
            // the merged auxiliary poset is cyclic, hence undefined, on short compositions
            Err(PosetError::CycleCreated { .. }) if is_short_composition(alpha) => Outcome::Skipped,
            Err(e) => composition_violation(alpha, "identities", IntPoly::zero(), e.to_string()),
        }],
        ScanMode::SingleLam | ScanMode::LogConcavity => unreachable!("polygon mode"),
    }
}

/// `(1, a, 1, a)` or `(a, 1, a, 1)`: the circular fences that are not unimodal.
pub fn is_exceptional_circular(alpha: &Composition) -> Option<usize> {
    match *alpha.parts() {
        [1, a, 1, b] if a == b => Some(a),
        [a, 1, b, 1] if a == b => Some(a),
        _ => None,
    }
}

/// Rank sequence `(1, 2, ..., k+1, k, k+1, k, ..., 2, 1)` of the exceptional family.
pub fn exceptional_circular_sequence(k: usize) -> Vec<i64> {
    let k = k as i64;
    let mut v: Vec<i64> = (1..=k + 1).collect();
    v.push(k);
    v.push(k + 1);
    v.extend((1..=k).rev());
    v
}

fn check_circular(alpha: &Composition) -> Outcome {
    let p = match circular_fence(alpha) {
        Ok(p) => p,
        Err(_) => return Outcome::Skipped,
    };
    let poly: IntPoly = rank_sequence(&p).expect("within bound");
    let r = seq_report(&poly).expect("rank polynomials are nonnegative");
    let bad = |reason: String| composition_violation(alpha, "circular", poly.clone(), reason);
    if !r.symmetric {
        return bad("not symmetric".into());
    }
    match is_exceptional_circular(alpha) {
        Some(k) => {
            let expected = IntPoly::from_i64s(&exceptional_circular_sequence(k));
            if poly != expected {
                return bad("exceptional family has an unexpected rank sequence".into());
            }
            if r.unimodal {
                return bad("exceptional family is unimodal".into());
            }
        }
        None if !r.unimodal => return bad("not unimodal".into()),
        None => {}
    }
    // r_i <= r_j whenever i <= j and i + j <= n - 2
    let a = poly.coeffs();
    let n = alpha.size();
    for i in 0..a.len() {
        for j in i..a.len() {
            if i + j + 2 <= n && a[i] > a[j] {
                return bad(format!("r_{i} > r_{j} with i + j <= n - 2"));
            }
        }
    }
    Outcome::Ok
}

/// One polygon work item.
struct PolygonInstance {
    t: PolygonTriangulation,
    t_index: usize,
    g: Arc,
    curve: LamCurve,
}

fn polygon_instances(cfg: &ScanConfig, n: usize) -> Result<Vec<PolygonInstance>, ScanError> {
    let arcs = all_arcs(n);
    let curves = all_single_curves(n);
    let expected = (n * (n - 3) / 2) as u64;
    for (what, got) in [
        ("arc count", arcs.len()),
        ("single lamination count", curves.len()),
    ] {
        if got as u64 != expected {
            return Err(ScanError::EnumerationMismatch {
                n,
                what,
                got: got as u64,
                expected,
            });
        }
    }
    let mut out = Vec::new();
    match cfg.sample_limit {
        None => {
            let tris = all_triangulations(n);
            if tris.len() as u64 != catalan(n - 2) {
                return Err(ScanError::EnumerationMismatch {
                    n,
                    what: "triangulation count",
                    got: tris.len() as u64,
                    expected: catalan(n - 2),
                });
            }
            for (t_index, t) in tris.iter().enumerate() {
                for g in arcs.iter().filter(|g| !t.contains(g)) {
                    for curve in &curves {
                        out.push(PolygonInstance {
                            t: t.clone(),
                            t_index,
                            g: *g,
                            curve: *curve,
                        });
                    }
                }
            }
        }
        Some(limit) => {
            let mut rng = size_rng(cfg, n);
            for i in 0..limit {
                let t = random_triangulation(n, &mut rng);
                let open: Vec<&Arc> = arcs.iter().filter(|g| !t.contains(g)).collect();
                let g = *open[rng.gen_range(0..open.len())];
                let curve = curves[rng.gen_range(0..curves.len())];
                out.push(PolygonInstance {
                    t,
                    t_index: i,
                    g,
                    curve,
                });
            }
        }
    }
    Ok(out)
}

fn scan_polygon(cfg: &ScanConfig, n: usize) -> Result<Vec<Outcome>, ScanError> {
    let items = polygon_instances(cfg, n)?;
    let mode = cfg.mode;
    Ok(items
        .par_iter()
        .map(|inst| check_polygon(mode, n, inst))
        .collect())
}

fn check_polygon(mode: ScanMode, n: usize, inst: &PolygonInstance) -> Outcome {
    let ml = vec![vec![inst.curve]];
    let bad = |poly: IntPoly, reason: String| {
        Outcome::Bad(Violation {
            id: format!(
                "n={n}/t={}/arc={}/curve={}-{}",
                inst.t_index, inst.g, inst.curve.from.edge, inst.curve.to.edge
            ),
            instance: serde_json::to_value(ArcInstance::new(&inst.t, ml.clone(), inst.g))
                .expect("plain data"),
            poly,
            reason,
        })
    };
    let poly: IntPoly = match c_polynomial::<BigInt>(&inst.t, &ml, &inst.g) {
        Ok(p) => p,
        Err(e) => return bad(IntPoly::zero(), e.to_string()),
    };
    let r = match seq_report(&poly) {
        Ok(r) => r,
        Err(e) => return bad(poly, e.to_string()),
    };
    match mode {
        ScanMode::SingleLam if !r.unimodal => bad(poly, "not unimodal".into()),
        ScanMode::LogConcavity if !r.log_concave => bad(poly, "not log-concave".into()),
        _ => Outcome::Ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_sequences() {
        assert_eq!(exceptional_circular_sequence(1), vec![1, 2, 1, 2, 1]);
        assert_eq!(exceptional_circular_sequence(2), vec![1, 2, 3, 2, 3, 2, 1]);
    }

    #[test]
    fn short_compositions() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert!(is_short_composition(&c(&[9, 1])));
        assert!(is_short_composition(&c(&[0, 6, 1, 6])));
        assert!(!is_short_composition(&c(&[2, 2, 2])));
        assert!(!is_short_composition(&c(&[1, 1, 1, 1])));
    }

    #[test]
    fn config_validation() {
        assert!(ScanConfig::new(ScanMode::SingleLam, 3, 5)
            .validate()
            .is_err());
        assert!(ScanConfig::new(ScanMode::Plain, 1, 5).validate().is_ok());
        assert!(ScanConfig::new(ScanMode::Plain, 6, 5).validate().is_err());
        let mut c = ScanConfig::new(ScanMode::Circular, 4, 8);
        c.sample_limit = Some(0);
        assert!(c.validate().is_err());
        assert_eq!(
            "single-lam".parse::<ScanMode>().unwrap(),
            ScanMode::SingleLam
        );
    }

    #[test]
    fn small_scans_are_clean() {
        let rep = run_scan(&ScanConfig::new(ScanMode::Notched, 1, 8)).unwrap();
        assert!(!rep.violations.is_empty());
        assert!(rep
            .violations
            .iter()
            .all(|v| v.reason.ends_with("[known family]")));
        for mode in [ScanMode::Plain, ScanMode::Circular, ScanMode::Identities] {
            let rep = run_scan(&ScanConfig::new(mode, 1, 8)).unwrap();
            assert!(
                rep.violations.is_empty(),
                "{mode:?}: {:?}",
                rep.violations.first()
            );
        }
        let rep = run_scan(&ScanConfig::new(ScanMode::SingleLam, 4, 6)).unwrap();
        assert!(rep.violations.is_empty());
        // 5-gon: 5 triangulations x 3 open arcs x 5 curves
        assert_eq!(rep.per_size[1].instances, 75);
    }
}
