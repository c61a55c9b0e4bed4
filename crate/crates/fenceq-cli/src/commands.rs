use std::io::Read;

use fenceq::arcposet::{fence_poset_with_crossings, verify_expansion};
use fenceq::cluster::{c_polynomial_along, f_polynomial_q, ArcInstance, FlipPlanner};
use fenceq::fixtures::run_fixtures;
use fenceq::polyseq::seq_report;
use fenceq::poset::{
    check_notched_decompositions, circular_fence, fence, ij_fence, notched, rank_sequence, Notch,
    PosetError,
};
use fenceq::scan::{run_scan, workers_from_env, ScanConfig, ScanMode};
use fenceq::{Composition, IntPoly, SeqReport};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{pretty, Command, InstanceInput, Planner, Variant};

/// Runs a command, printing its output; returns the exit code.
pub fn run(cmd: &Command, pretty: bool) -> Result<u8, CliError> {
    match cmd {
        Command::Rank {
            alpha,
            variant,
            i,
            j,
        } => rank(alpha, *variant, *i, *j, pretty),
        Command::Cpoly {
            source,
            planner,
            planner_seed,
        } => {
            let planner = match planner {
                Planner::Greedy => FlipPlanner::Greedy,
                Planner::AlongArc => FlipPlanner::AlongArc,
                Planner::Random => FlipPlanner::Random(*planner_seed),
            };
            let inst = read_instance(source)?;
            let t = inst.triangulation()?;
            let poly: IntPoly = c_polynomial_along(&t, &inst.laminations, &inst.arc, planner)?;
            emit_poly(json!({ "arc": inst.arc }), &poly, pretty)
        }
        Command::Fpoly { source } => {
            let inst = read_instance(source)?;
            let t = inst.triangulation()?;
            let poly: IntPoly = f_polynomial_q(&t, &inst.arc)?;
            emit_poly(
                json!({ "arc": inst.arc, "crossings": t.crossing_count(&inst.arc) }),
                &poly,
                pretty,
            )
        }
        Command::ArcPoset { source } => arc_poset(&read_instance(source)?, pretty),
        Command::VerifyIdentities { alpha, n } => {
            verify_identities(alpha.as_deref(), n.clone(), pretty)
        }
        Command::Scan {
            mode,
            n,
            sample_limit,
            seed,
            no_timing,
            max_violations,
        } => {
            let mut cfg = ScanConfig::new(mode.parse::<ScanMode>()?, *n.start(), *n.end());
            cfg.sample_limit = *sample_limit;
            cfg.seed = *seed;
            cfg.workers = workers_from_env();
            scan(&cfg, *no_timing, *max_violations, pretty)
        }
        Command::ReproducePaper => reproduce(pretty),
    }
}

fn print_line<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("output serializes"));
}

fn parse_alpha(s: &str) -> Result<Composition, CliError> {
    s.parse::<Composition>()
        .map_err(|e| CliError::Input(e.to_string()))
}

fn report(poly: &IntPoly) -> Result<SeqReport, CliError> {
    seq_report(poly).map_err(|e| CliError::Invariant(e.to_string()))
}

fn emit_poly(mut head: Value, poly: &IntPoly, pretty: bool) -> Result<u8, CliError> {
    let rep = report(poly)?;
    if pretty {
        pretty::poly(&head, poly, &rep);
    } else {
        head["poly"] = json!(poly);
        head["report"] = json!(rep);
        print_line(&head);
    }
    Ok(0)
}

fn rank(
    alpha: &str,
    variant: Variant,
    i: Option<i64>,
    j: Option<i64>,
    pretty: bool,
) -> Result<u8, CliError> {
    let alpha = parse_alpha(alpha)?;
    let poset = match variant {
        Variant::Plain => fence(&alpha),
        Variant::Circular => circular_fence(&alpha)?,
        Variant::NotchedFirst => notched(&alpha, Notch::First)?,
        Variant::NotchedLast => notched(&alpha, Notch::Last)?,
        Variant::NotchedBoth => notched(&alpha, Notch::Both)?,
        Variant::Ij => match (i, j) {
            (Some(i), Some(j)) => ij_fence(&alpha, i, j)?,
            _ => return Err(CliError::Input("variant ij needs --i and --j".into())),
        },
    };
    let poly: IntPoly = rank_sequence(&poset)?;
    let name = clap::ValueEnum::to_possible_value(&variant).expect("no skipped variants");
    emit_poly(
        json!({ "alpha": alpha, "variant": name.get_name() }),
        &poly,
        pretty,
    )
}

fn read_instance(src: &InstanceInput) -> Result<ArcInstance, CliError> {
    let text = match (&src.json, &src.input) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("instance JSON: {e}")))
}

fn arc_poset(inst: &ArcInstance, pretty: bool) -> Result<u8, CliError> {
    let t = inst.triangulation()?;
    let (res, crossed) = fence_poset_with_crossings(&t, &inst.arc)?;
    let poly: IntPoly = rank_sequence(&res.poset)?;
    let matches = verify_expansion(&t, &inst.arc)?;
    let mut out = res.to_json(&crossed);
    out["rank"] = json!(poly);
    out["matches_f_polynomial"] = json!(matches);
    if pretty {
        pretty::arc_poset(&out);
    } else {
        print_line(&out);
    }
    if matches {
        Ok(0)
    } else {
        Err(CliError::Invariant(
            "rank polynomial differs from the F-polynomial".into(),
        ))
    }
}

fn verify_identities(
    alpha: Option<&str>,
    n: Option<std::ops::RangeInclusive<usize>>,
    pretty: bool,
) -> Result<u8, CliError> {
    let list: Vec<Composition> = match (alpha, n) {
        (Some(a), _) => vec![parse_alpha(a)?],
        (None, Some(r)) => {
            if *r.end() > 20 {
                return Err(CliError::Input("identity checks support n <= 20".into()));
            }
            r.flat_map(Composition::all_of_size).collect()
        }
        (None, None) => return Err(CliError::Input("give --alpha or --n".into())),
    };
    let single = list.len() == 1;
    let (mut checked, mut skipped, mut failed) = (0u64, 0u64, 0u64);
    for a in &list {
        match check_notched_decompositions(a) {
            Ok(rep) => {
                checked += 1;
                if !rep.all_hold() {
                    failed += 1;
                }
                if pretty {
                    pretty::identities(&rep);
                } else {
                    let mut line = json!(rep);
                    line["all_hold"] = json!(rep.all_hold());
                    print_line(&line);
                }
            }
            Err(e) if single => return Err(e.into()),
            Err(
                PosetError::DegenerateDecomposition(_)
                | PosetError::IndexOutOfRange { .. }
                | PosetError::CycleCreated { .. },
            ) => skipped += 1,
            Err(e) => return Err(e.into()),
        }
    }
    if !single {
        let summary =
            json!({ "type": "summary", "checked": checked, "skipped": skipped, "failed": failed });
        if pretty {
            println!("checked {checked}, skipped {skipped}, failed {failed}");
        } else {
            print_line(&summary);
        }
    }
    if failed > 0 {
        return Err(CliError::Invariant(format!(
            "{failed} decomposition identities failed"
        )));
    }
    Ok(0)
}

fn scan(
    cfg: &ScanConfig,
    no_timing: bool,
    max_violations: Option<usize>,
    pretty: bool,
) -> Result<u8, CliError> {
    let rep = run_scan(cfg)?;
    let shown = max_violations.unwrap_or(usize::MAX);
    if pretty {
        pretty::scan(&rep, shown, !no_timing);
    } else {
        for s in &rep.per_size {
            print_line(&json!({ "type": "size", "n": s.n, "instances": s.instances,
                "violations": s.violations, "skipped": s.skipped }));
        }
        let kind = if rep.conjecture {
            "finding"
        } else {
            "violation"
        };
        for v in rep.violations.iter().take(shown) {
            print_line(
                &json!({ "type": kind, "id": v.id, "reason": v.reason, "poly": v.poly,
                "instance": v.instance }),
            );
        }
        let mut summary = json!({
            "type": "summary",
            "mode": rep.mode.name(),
            "n_min": rep.n_min,
            "n_max": rep.n_max,
            "sampled": rep.sampled,
            "seed": cfg.seed,
            "instances_checked": rep.instances_checked,
            "skipped": rep.skipped,
            "violations": rep.violations.len(),
            "conjecture": rep.conjecture,
            "failed": rep.failed(),
        });
        if !no_timing {
            summary["elapsed_secs"] = json!(rep.elapsed_secs);
        }
        print_line(&summary);
    }
    if rep.failed() {
        eprintln!("fenceq: {} theorem violations", rep.violations.len());
        Ok(4)
    } else {
        Ok(0)
    }
}

fn reproduce(pretty: bool) -> Result<u8, CliError> {
    let outcomes = run_fixtures();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    if pretty {
        pretty::fixtures(&outcomes);
    } else {
        for o in &outcomes {
            let mut line = json!(o);
            line["type"] = json!("fixture");
            print_line(&line);
        }
        print_line(&json!({ "type": "summary", "passed": passed, "total": outcomes.len() }));
    }
    Ok(if passed == outcomes.len() { 0 } else { 4 })
}
