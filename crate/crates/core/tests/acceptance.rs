//! End-to-end acceptance run over the whole catalog. Prints one PASS/FAIL
//! line per criterion and exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tautilt::catalog::{self, Golden};
use tautilt::enumeration::{build_hasse, classify_at, Classification, DEFAULT_LENGTH_CAP};
use tautilt::homoracle::{cross_check, CrossCheck, Discrepancy};
use tautilt::presentation::Algebra;
use tautilt::report::{self, Report};
use tautilt::RigidityOptions;

const EXPECTED_PAIRS: [(&str, usize); 10] = [
    ("R(2AB)", 8),
    ("W(2B)", 6),
    ("R(3ABD)", 32),
    ("R(3C)", 24),
    ("R(3H)", 28),
    ("R(3K)", 32),
    ("W(3ABCD)", 20),
    ("W(Q(3A)_1)", 24),
    ("W(3F)", 24),
    ("W(3QLR)", 20),
];
const ORACLE_LEN: usize = 12;

struct Run {
    name: &'static str,
    alg: Algebra,
    golden: Golden,
    classification: Classification,
    report: Report,
    diff: Vec<String>,
}

fn structured(alg: &Algebra, c: &Classification, golden: &Golden) -> Report {
    let names = report::name_objects(alg, c, Some(golden));
    report::structured(alg, c, &names)
}

fn multiset(gs: impl IntoIterator<Item = Vec<i64>>) -> BTreeMap<Vec<i64>, usize> {
    let mut out = BTreeMap::new();
    for g in gs {
        *out.entry(g).or_insert(0) += 1;
    }
    out
}

/// Whether the undirected graph of the quiver is a single cycle through all
/// `len` nodes.
fn is_cycle(c: &Classification, len: usize) -> bool {
    let h = &c.hasse;
    h.nodes.len() == len
        && h.edges.len() == len
        && (0..len).all(|v| h.degree(v) == 2)
        && h.is_connected()
}

struct Suite {
    failed: usize,
}

impl Suite {
    fn check(&mut self, id: usize, title: &str, problems: Vec<String>, detail: String) {
        if problems.is_empty() {
            println!("PASS {id} {title}: {detail}");
        } else {
            self.failed += 1;
            println!("FAIL {id} {title}: {}", problems.join("; "));
        }
    }
}

fn main() -> ExitCode {
    let mut suite = Suite { failed: 0 };
    let opts = RigidityOptions::default();

    let start = Instant::now();
    let mut runs = Vec::new();
    let mut setup = Vec::new();
    for (name, _) in EXPECTED_PAIRS {
        let alg = catalog::algebra(name).expect("catalog algebra");
        let golden = catalog::golden(name).expect("catalog golden data");
        match build_hasse(&alg, None, DEFAULT_LENGTH_CAP, opts) {
            Ok(classification) => {
                let report = structured(&alg, &classification, &golden);
                let diff = report::diff(&alg, &report, &golden);
                runs.push(Run {
                    name,
                    alg,
                    golden,
                    classification,
                    report,
                    diff,
                });
            }
            Err(e) => setup.push(format!("{name}: {e}")),
        }
    }
    let elapsed = start.elapsed();

    // 1. Pair counts and runtime.
    let mut problems = setup.clone();
    for (run, (_, expected)) in runs.iter().zip(EXPECTED_PAIRS) {
        if run.classification.pairs.len() != expected || run.golden.pair_count != expected {
            problems.push(format!(
                "{} has {} pairs",
                run.name,
                run.classification.pairs.len()
            ));
        }
    }
    if elapsed > Duration::from_secs(60) {
        problems.push(format!("took {elapsed:?}"));
    }
    suite.check(
        1,
        "support τ-tilting pair counts",
        problems,
        format!("all ten match in {elapsed:.2?}"),
    );

    // 2. g-vector multisets of the rigid strings.
    let mut problems = setup.clone();
    for run in &runs {
        let mine = multiset(run.report.rigid.iter().map(|r| r.g.clone()));
        let theirs = multiset(run.golden.rigid.iter().map(|r| r.g.clone()));
        if mine != theirs {
            problems.push(format!("{}: {:?} vs {:?}", run.name, mine, theirs));
        }
    }
    let total: usize = runs.iter().map(|r| r.report.rigid.len()).sum();
    suite.check(
        2,
        "rigid-string g-vectors",
        problems,
        format!("{total} rigid strings"),
    );

    // 3. Rigidity matrices with mutual flags.
    let mut problems = setup.clone();
    for run in &runs {
        problems.extend(
            run.diff
                .iter()
                .filter(|d| d.starts_with("rigid "))
                .map(|d| format!("{}: {d}", run.name)),
        );
    }
    let cells: usize = runs
        .iter()
        .map(|r| {
            r.report
                .rigid
                .iter()
                .map(|x| x.compatible.len())
                .sum::<usize>()
        })
        .sum();
    suite.check(
        3,
        "rigidity lists and mutual flags",
        problems,
        format!("{cells} listed entries agree"),
    );

    // 4. R(3C) count formula.
    let mut problems = setup.clone();
    let n = 3u32;
    let formula = 2 * (2usize.pow(n) - 1) - n as usize;
    match runs.iter().find(|r| r.name == "R(3C)") {
        Some(run) => {
            let strings = run.classification.universe.string_count();
            if strings != formula || run.classification.pairs.len() != 24 {
                problems.push(format!(
                    "{strings} strings, {} pairs",
                    run.classification.pairs.len()
                ));
            }
        }
        None => problems.push("R(3C) not classified".into()),
    }
    suite.check(
        4,
        "R(3C) string classes",
        problems,
        format!("{formula} = 2·(2³−1)−3 strings, 24 pairs"),
    );

    // 5. Hasse quivers.
    let mut problems = setup.clone();
    for run in &runs {
        let c = &run.classification;
        let u = &c.universe;
        let v = run.alg.vertex_count();
        if !c.is_complete(v) {
            problems.push(format!("{}: not {v}-regular and connected", run.name));
        }
        let (sources, sinks) = (c.hasse.sources(), c.hasse.sinks());
        let projective = |o: usize| {
            let g = &u.objects[o].g.0;
            !u.objects[o].is_shifted() && g.iter().sum::<i64>() == 1 && g.iter().all(|&x| x >= 0)
        };
        match sources.as_slice() {
            [s] if c.pairs[*s].iter().all(|&o| projective(o)) => {}
            _ => problems.push(format!("{}: sources {sources:?}", run.name)),
        }
        match sinks.as_slice() {
            [s] if c.pairs[*s].iter().all(|&o| u.objects[o].is_shifted()) => {}
            _ => problems.push(format!("{}: sinks {sinks:?}", run.name)),
        }
        problems.extend(
            run.diff
                .iter()
                .filter(|d| d.starts_with("edge ") || d.starts_with("pair "))
                .map(|d| format!("{}: {d}", run.name)),
        );
        let cycle = match run.name {
            "R(2AB)" => Some(8),
            "W(2B)" => Some(6),
            _ => None,
        };
        if let Some(len) = cycle {
            if !is_cycle(c, len) {
                problems.push(format!("{} is not the {len}-cycle", run.name));
            }
        }
    }
    let edges: usize = runs
        .iter()
        .map(|r| r.classification.hasse.edges.len())
        .sum();
    suite.check(
        5,
        "Hasse quivers",
        problems,
        format!("{edges} edges equal the published quivers, R(2AB) an 8-cycle, W(2B) a 6-cycle"),
    );

    // 6 and 7. Oracle equivalence and field independence.
    let start = Instant::now();
    let checks: Vec<(&str, CrossCheck)> = runs
        .iter()
        .map(|r| (r.name, cross_check(&r.alg, ORACLE_LEN, opts, true)))
        .collect();
    let oracle_time = start.elapsed();
    let mut problems = setup.clone();
    let mut field_problems = setup.clone();
    for (name, check) in &checks {
        for d in &check.discrepancies {
            match d {
                Discrepancy::FieldDependence { .. } => {
                    field_problems.push(format!("{name}: {d:?}"))
                }
                _ => problems.push(format!("{name}: {d:?}")),
            }
        }
        if check.field_checks == 0 {
            field_problems.push(format!("{name}: no matrices checked"));
        }
    }
    if oracle_time > Duration::from_secs(600) {
        problems.push(format!("took {oracle_time:?}"));
    }
    let sum = |f: fn(&CrossCheck) -> usize| checks.iter().map(|(_, c)| f(c)).sum::<usize>();
    suite.check(
        6,
        "oracle equivalence up to length 12",
        problems,
        format!(
            "{} rigidity and {} support verdicts agree in {oracle_time:.2?}",
            sum(|c| c.rigidity_checks),
            sum(|c| c.support_checks)
        ),
    );
    suite.check(
        7,
        "field independence",
        field_problems,
        format!("{} ranks equal modulo 2 and 3", sum(|c| c.field_checks)),
    );

    // 8. g-vector injectivity.
    let mut problems = setup.clone();
    for run in &runs {
        let objects = &run.classification.universe.objects;
        let distinct: BTreeSet<&Vec<i64>> = objects.iter().map(|o| &o.g.0).collect();
        if distinct.len() != objects.len() {
            problems.push(format!("{}: repeated g-vector", run.name));
        }
    }
    suite.check(8, "g-vector injectivity", problems, "no repeats".into());

    // 9. Stability beyond the accepted length.
    let mut problems = setup;
    for run in &runs {
        let len = run.classification.universe.max_len + 4;
        match classify_at(&run.alg, len, opts) {
            Ok(longer) => {
                let again = structured(&run.alg, &longer, &run.golden);
                if report::to_json(&again) != report::to_json(&run.report) {
                    problems.push(format!("{} changes at length {len}", run.name));
                }
            }
            Err(e) => problems.push(format!("{}: {e}", run.name)),
        }
    }
    suite.check(
        9,
        "stability at accepted length + 4",
        problems,
        "structured output byte-identical".into(),
    );

    if suite.failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criteria failed", suite.failed);
        ExitCode::FAILURE
    }
}
