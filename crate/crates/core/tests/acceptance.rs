//! Acceptance gate. Each criterion prints one line with its verdict and
//! wall time against a fixed limit; the run exits non-zero if any criterion
//! fails. Built without the libtest harness so the lines are always shown.

use std::time::{Duration, Instant};

use pnu::coset::{regular_group, DEFAULT_MAX_COSETS};
use pnu::harness::{run_corpus, to_json, Corpus, RunOptions, Status, Summary};
use pnu::nu::{
    abelian_invariants, build_nu, element_mode_order, schur_multiplier_oracle, NuGroup,
};
use pnu::perm::group_exponent;
use pnu::presentation::{catalog_group, GroupSpec};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn record(&mut self, n: u32, title: &str, limit: Duration, run: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; took longer than the limit")),
            Err(e) => (false, e),
        };
        println!(
            "criterion {n} {}: {title} ({:.2?}, limit {:?}) {detail}",
            if ok { "PASS" } else { "FAIL" },
            took,
            limit
        );
        if !ok {
            self.failures.push(format!("criterion {n}: {detail}"));
        }
    }
}

fn nu_of(spec: &str) -> NuGroup {
    let spec: GroupSpec = spec.parse().expect("valid spec");
    build_nu(&catalog_group(&spec).expect("catalog group")).expect("nu builds")
}

fn exp(h: &pnu::perm::PermGroup) -> u64 {
    group_exponent(h).expect("enumerable")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Corpus entries whose group has order at most `limit`, with that order.
fn small_entries(corpus: &Corpus, limit: u64) -> Vec<(GroupSpec, u64)> {
    corpus
        .entries
        .iter()
        .filter_map(|e| {
            let pres = catalog_group(&e.spec).ok()?;
            let order = regular_group(&pres, DEFAULT_MAX_COSETS).ok()?.order();
            (order <= limit).then(|| (e.spec.clone(), order))
        })
        .collect()
}

fn nu_of_cyclic_groups() -> Result<String, String> {
    let c2 = nu_of("cyclic:2");
    let c3 = nu_of("cyclic:3");
    let (o2, e2, e3) = (c2.nu().order(), exp(c2.nu()), exp(c3.nu()));
    ensure(o2 == 8, || format!("|nu(C2)| = {o2}, expected 8"))?;
    ensure(e2 == 4, || format!("exp(nu(C2)) = {e2}, expected 4"))?;
    ensure(e3 == 3, || format!("exp(nu(C3)) = {e3}, expected 3"))?;
    Ok(format!("|nu(C2)| = {o2}, exp(nu(C2)) = {e2}, exp(nu(C3)) = {e3}"))
}

fn presentation_oracle(corpus: &Corpus) -> Result<String, String> {
    let groups = small_entries(corpus, 16);
    ensure(!groups.is_empty(), || "no corpus group of order at most 16".into())?;
    for (spec, order) in &groups {
        let pres = catalog_group(spec).map_err(|e| e.to_string())?;
        let nu = build_nu(&pres).map_err(|e| format!("{spec}: {e}"))?;
        let by_elements = element_mode_order(&pres, DEFAULT_MAX_COSETS).map_err(|e| format!("{spec}: {e}"))?;
        let by_generators = nu.nu().order();
        ensure(by_elements == by_generators, || {
            format!("{spec}: element-indexed order {by_elements}, generator-indexed {by_generators}")
        })?;
        let t = nu.tensor().order();
        ensure(by_generators == order * order * t, || {
            format!("{spec}: |nu| = {by_generators} but |G|^2 |T| = {}", order * order * t)
        })?;
    }
    Ok(format!("{} groups agree", groups.len()))
}

fn schur_oracle(corpus: &Corpus) -> Result<String, String> {
    for (spec, expected) in [("elemab:2,2", vec![2]), ("dihedral:8", vec![2])] {
        let nu = nu_of(spec);
        let got = abelian_invariants(nu.schur()).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("M({spec}) = {got:?}, expected {expected:?}"))?;
    }
    let groups = small_entries(corpus, 16);
    for (spec, _) in &groups {
        let pres = catalog_group(spec).map_err(|e| e.to_string())?;
        let nu = build_nu(&pres).map_err(|e| format!("{spec}: {e}"))?;
        let from_nu = abelian_invariants(nu.schur()).map_err(|e| format!("{spec}: {e}"))?;
        let from_bar = schur_multiplier_oracle(nu.base()).map_err(|e| format!("{spec}: {e}"))?;
        ensure(from_nu == from_bar, || {
            format!("{spec}: mu/Delta invariants {from_nu:?}, bar resolution {from_bar:?}")
        })?;
    }
    Ok(format!("{} groups agree", groups.len()))
}

fn corpus_run(corpus: &Corpus, jobs: usize) -> Result<(String, String), String> {
    let opts = RunOptions {
        jobs,
        ..RunOptions::default()
    };
    let verdicts = run_corpus(corpus, &opts);
    let summary = Summary::of(&verdicts);
    if let Some(v) = verdicts.iter().find(|v| v.status == Status::Fail) {
        return Err(format!(
            "{summary}; first fail {} on {} [{}]: {}",
            v.claim,
            v.group,
            v.params,
            v.witness.as_deref().unwrap_or("no witness")
        ));
    }
    Ok((summary.to_string(), to_json(&verdicts)))
}

fn maximal_class_two_groups() -> Result<String, String> {
    let mut checked = 0;
    for family in ["dihedral", "semidihedral", "quaternion"] {
        for order in [8u64, 16, 32] {
            if family == "semidihedral" && order == 8 {
                continue;
            }
            let spec = format!("{family}:{order}");
            let nu = nu_of(&spec);
            let (et, eg) = (exp(nu.tensor()), exp(nu.base()));
            ensure(eg % et == 0, || format!("{spec}: exp(T) = {et} does not divide exp(G) = {eg}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} groups"))
}

fn main() -> std::process::ExitCode {
    let corpus = Corpus::default_corpus();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut gate = Gate { failures: Vec::new() };

    gate.record(1, "nu(C2) and nu(C3)", Duration::from_secs(1), nu_of_cyclic_groups);
    gate.record(2, "presentation oracle, |G| <= 16", Duration::from_secs(60), || {
        presentation_oracle(&corpus)
    });
    gate.record(3, "Schur multiplier oracle, |G| <= 16", Duration::from_secs(300), || {
        schur_oracle(&corpus)
    });

    let mut first = None;
    gate.record(4, "zero fails on the shipped corpus", Duration::from_secs(1800), || {
        let (summary, json) = corpus_run(&corpus, jobs)?;
        first = Some(json);
        Ok(summary)
    });

    gate.record(5, "exp([G,G^phi]) | exp(G) for 2-groups of maximal class", Duration::from_secs(120), maximal_class_two_groups);

    gate.record(6, "reports are byte-identical across runs", Duration::from_secs(1800), || {
        let first = first.as_ref().ok_or("criterion 4 produced no report")?;
        // single-threaded second run: the canonical ordering must make
        // the thread count irrelevant as well
        let (_, second) = corpus_run(&corpus, 1)?;
        ensure(*first == second, || "reports differ".into())?;
        Ok(format!("{} bytes", first.len()))
    });

    if gate.failures.is_empty() {
        println!("acceptance: all criteria passed");
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", gate.failures.len());
        for f in &gate.failures {
            println!("  {f}");
        }
        std::process::ExitCode::FAILURE
    }
}
