use fenceq::fixtures::FixtureOutcome;
use fenceq::poset::DecompositionReport;
use fenceq::scan::ScanReport;
use fenceq::{IntPoly, SeqReport};
use serde_json::Value;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn poly(head: &Value, p: &IntPoly, r: &SeqReport) {
    if let Value::Object(m) = head {
        for (k, v) in m {
            println!("{k:<20} {v}");
        }
    }
    println!("{:<20} {}", "polynomial", p);
    println!(
        "{:<20} {:?}",
        "coefficients",
        p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );
    for (name, v) in [
        ("unimodal", r.unimodal),
        ("symmetric", r.symmetric),
        ("top interlacing", r.top_interlacing),
        ("bottom interlacing", r.bottom_interlacing),
        ("ineqA", r.ineq_a),
        ("ineqB", r.ineq_b),
        ("almost interlacing", r.almost_interlacing),
        ("log-concave", r.log_concave),
    ] {
        println!("{name:<20} {}", yes(v));
    }
    if let Some((i, j)) = r.two_peak {
        println!("{:<20} ({i}, {j})", "2-peak");
    }
}

pub fn arc_poset(v: &Value) {
    println!("{:<22} {}", "composition", v["composition"]);
    println!("{:<22} {}", "crossed diagonals", v["crossed"]);
    println!("{:<22} {}", "covers", v["poset"]["covers"]);
    println!("{:<22} {}", "rank polynomial", v["rank"]);
    println!(
        "{:<22} {}",
        "matches F-polynomial", v["matches_f_polynomial"]
    );
}

pub fn identities(r: &DecompositionReport) {
    println!(
        "{:<16} T {} Tbar {} delta {} eq1 {} | B {} Bbar {} delta' {} eq2 {}",
        r.alpha.to_string(),
        yes(r.t_split),
        yes(r.t_bar_split),
        yes(r.delta_split),
        yes(r.eq1),
        yes(r.b_split),
        yes(r.b_bar_split),
        yes(r.delta_prime_split),
        yes(r.eq2)
    );
}

pub fn scan(rep: &ScanReport, shown: usize, timing: bool) {
    println!(
        "{:>4} {:>12} {:>10} {:>8}",
        "n", "instances", "violations", "skipped"
    );
    for s in &rep.per_size {
        println!(
            "{:>4} {:>12} {:>10} {:>8}",
            s.n, s.instances, s.violations, s.skipped
        );
    }
    let kind = if rep.conjecture {
        "finding"
    } else {
        "violation"
    };
    for v in rep.violations.iter().take(shown) {
        println!("{kind}: {} {} [{}]", v.id, v.reason, v.poly);
    }
    print!(
        "mode {}: {} instances, {} {kind}s",
        rep.mode.name(),
        rep.instances_checked,
        rep.violations.len()
    );
    if timing {
        print!(", {:.2}s", rep.elapsed_secs);
    }
    println!();
}

pub fn fixtures(outcomes: &[FixtureOutcome]) {
    for o in outcomes {
        println!(
            "{} {:<30} {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.source
        );
        if !o.pass {
            println!("     expected {}\n     actual   {}", o.expected, o.actual);
        }
    }
}
