//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::collections::{BTreeSet, HashSet};
use std::process::Command;
use std::time::Instant;

use zmgroup::verifier::{build_corpus, run_corpus, verify_theorem, Caps, Family, GroupAnalysis, GroupSpec};
use zmgroup::zm::{self, enumerate_valid_r, validate_zm_params, ZmParams};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn sweep_params() -> Vec<ZmParams> {
    let mut out = Vec::new();
    for m in 1..=50u64 {
        for n in 1..=20u64 {
            if m * n > 200 {
                continue;
            }
            for r in enumerate_valid_r(m, n) {
                out.push(validate_zm_params(m, n, r as i64).expect("enumerated as valid"));
            }
        }
    }
    out
}

#[derive(Default)]
struct Sweep {
    triples: usize,
    entries: usize,
    s_failures: Vec<String>,
    bijection_failures: Vec<String>,
    order_failures: Vec<String>,
    cyclic_failures: Vec<String>,
}

fn run_sweep() -> Sweep {
    let caps = Caps::default();
    let mut sw = Sweep::default();
    for p in sweep_params() {
        sw.triples += 1;
        let oracle = zm::to_permutation_group(p, caps.order).expect("order within cap");
        let g = oracle.group();
        let subgroups = g.all_subgroups(caps.subgroups).expect("subgroup count within cap");
        let brute: u64 = subgroups.iter().map(|h| h.phi(g)).sum();
        let formula = zm::s_function_formula(&p);
        if !(formula == brute && brute == p.order()) {
            sw.s_failures
                .push(format!("{p}: formula {formula}, brute {brute}, mn {}", p.order()));
        }

        let triples = zm::lattice_triples(&p);
        let mut images = HashSet::new();
        for &t in &triples {
            sw.entries += 1;
            let members = zm::subgroup_of_triple(&p, t).expect("lattice triple");
            let h = g
                .subgroup_from_members(members.iter().map(|&e| oracle.index_of(e)))
                .expect("member set is a subgroup");
            let expected = p.order() / (t.m1 * t.n1);
            if h.order() as u64 != expected || h.exponent(g) != expected {
                sw.order_failures.push(format!(
                    "{p} {t}: |H| = {}, exp(H) = {}, expected {expected}",
                    h.order(),
                    h.exponent(g)
                ));
            }
            if h.is_cyclic(g) != zm::is_cyclic_triple(&p, t) {
                sw.cyclic_failures.push(format!("{p} {t}"));
            }
            images.insert(h.member_set().clone());
        }
        let oracle_sets: HashSet<_> = subgroups.iter().map(|h| h.member_set().clone()).collect();
        if triples.len() != subgroups.len() || images.len() != triples.len() || images != oracle_sets {
            sw.bijection_failures.push(format!(
                "{p}: {} triples, {} distinct images, {} subgroups",
                triples.len(),
                images.len(),
                subgroups.len()
            ));
        }
    }
    sw
}

fn summarize(failures: &[String], ok_detail: String) -> Outcome {
    match failures.first() {
        None => outcome(true, ok_detail),
        Some(first) => outcome(false, format!("{} failures, first: {first}", failures.len())),
    }
}

fn s_of(desc: &str) -> u64 {
    let spec: GroupSpec = desc.parse().expect("valid descriptor");
    verify_theorem(&spec, Caps::default()).expect("builds").s_value
}

fn criterion_5(run: &zmgroup::verifier::CorpusRun, n_specs: usize) -> Outcome {
    let mut bad = Vec::new();
    if n_specs < 50 {
        bad.push(format!("only {n_specs} specs"));
    }
    for (label, e) in &run.errors {
        bad.push(format!("{label}: {e}"));
    }
    for o in &run.outcomes {
        let r = &o.report;
        if r.s_value < r.order || (r.s_value == r.order) != r.sylow_cyclic {
            bad.push(format!("{}: S = {}, |G| = {}, sylow cyclic {}", r.spec.label(), r.s_value, r.order, r.sylow_cyclic));
        }
    }
    let witnesses = [
        ("symmetric:3", 6),
        ("product:(cyclic:2)x(cyclic:2)", 7),
        ("dicyclic:2", 14),
        ("product:(cyclic:2)x(cyclic:2)x(cyclic:2)", 36),
    ];
    for (d, want) in witnesses {
        let got = s_of(d);
        if got != want {
            bad.push(format!("S({d}) = {got}, expected {want}"));
        }
    }
    for n in 1..=100u64 {
        let spec: GroupSpec = format!("cyclic:{n}").parse().expect("valid");
        let a = GroupAnalysis::new(&spec, Caps::default()).expect("builds");
        if a.s_value() != n || !a.gauss_identity() {
            bad.push(format!("S(Z_{n}) = {}", a.s_value()));
        }
    }
    summarize(
        &bad,
        format!(
            "{} groups ({} equality, {} strict); witnesses S3=6 V4=7 Q8=14 Z2^3=36, S(Z_n)=n for n<=100",
            run.outcomes.len(),
            run.summary().equality,
            run.summary().strict
        ),
    )
}

fn criterion_6(run: &zmgroup::verifier::CorpusRun) -> Outcome {
    let bad: Vec<String> = run
        .outcomes
        .iter()
        .filter(|o| !o.gauss)
        .map(|o| o.report.spec.label().to_string())
        .collect();
    summarize(&bad, format!("{} groups", run.outcomes.len()))
}

fn criterion_7(run: &zmgroup::verifier::CorpusRun) -> Outcome {
    let mut bad = Vec::new();
    let mut applicable = 0;
    for o in &run.outcomes {
        match o.corollary {
            Some(true) => applicable += 1,
            Some(false) => bad.push(o.report.spec.label().to_string()),
            None => {}
        }
    }
    let s3 = run.outcomes.iter().find(|o| o.report.spec.label() == "symmetric:3");
    match s3 {
        Some(o) if o.corollary.is_none() && o.report.equality => {}
        _ => bad.push("symmetric:3 should be a non-nilpotent equality case".into()),
    }
    if applicable == 0 {
        bad.push("no nilpotent groups in corpus".into());
    }
    summarize(&bad, format!("{applicable} nilpotent groups agree; S3 not applicable"))
}

fn criterion_8(run: &zmgroup::verifier::CorpusRun) -> Outcome {
    let mut bad = Vec::new();
    let mut pgroups = 0;
    for o in &run.outcomes {
        match o.pgroup {
            Some(true) => pgroups += 1,
            Some(false) => bad.push(format!("{}: φ = 0", o.report.spec.label())),
            None => {}
        }
    }
    let named = [
        "dicyclic:2",
        "dihedral:4",
        "product:(cyclic:2)x(cyclic:2)x(cyclic:2)",
        "product:(cyclic:3)x(cyclic:3)",
        "product:(cyclic:2)x(cyclic:4)",
    ];
    for label in named {
        let hit = run
            .outcomes
            .iter()
            .find(|o| o.report.spec.label() == label)
            .and_then(|o| o.pgroup);
        if hit != Some(true) {
            bad.push(format!("{label} missing or failing"));
        }
    }
    summarize(&bad, format!("{pgroups} prime-power-order groups, φ >= 1 in each"))
}

fn verify_jsonl(parallel: bool) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zmgroup"));
    cmd.args(["verify", "--max-order", "64", "--format", "jsonl"]);
    if parallel {
        cmd.arg("--parallel");
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("exit status {}", out.status));
    }
    Ok(out.stdout)
}

fn criterion_9() -> Outcome {
    let runs: Result<Vec<Vec<u8>>, String> =
        [false, false, true, true].into_iter().map(verify_jsonl).collect();
    match runs {
        Err(e) => outcome(false, e),
        Ok(runs) => {
            let same = runs.windows(2).all(|w| w[0] == w[1]);
            let lines = runs[0].iter().filter(|&&b| b == b'\n').count();
            outcome(same && lines > 0, format!("{lines} lines, 2 sequential and 2 parallel runs identical: {same}"))
        }
    }
}

fn main() {
    let started = Instant::now();
    let sweep = run_sweep();
    let all: BTreeSet<Family> = Family::ALL.into_iter().collect();
    let specs = build_corpus(64, &all);
    let run = run_corpus(&specs, Caps::default(), true);

    let results = [
        (
            "ZM sweep: formula S = brute-force S = mn",
            summarize(&sweep.s_failures, format!("{} triples", sweep.triples)),
        ),
        (
            "lattice triples biject onto brute-force subgroups",
            summarize(&sweep.bijection_failures, format!("{} triples", sweep.triples)),
        ),
        (
            "|H| = exp(H) = mn/(m1 n1) for every lattice entry",
            summarize(&sweep.order_failures, format!("{} entries", sweep.entries)),
        ),
        (
            "cyclicity criterion matches the oracle",
            summarize(&sweep.cyclic_failures, format!("{} entries", sweep.entries)),
        ),
        ("S(G) >= |G|, equality iff Sylow-cyclic", criterion_5(&run, specs.len())),
        ("Gauss identity chain", criterion_6(&run)),
        ("nilpotent groups: equality iff cyclic", criterion_7(&run)),
        ("p-groups have φ >= 1", criterion_8(&run)),
        ("verify jsonl output is deterministic", criterion_9()),
    ];

    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {} {name} ({})", i + 1, o.detail);
        if !o.ok {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        results.len() - failed,
        results.len(),
        started.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
