//! Naming, structured output, Graphviz output, human-readable tables and
//! comparison against published results.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::catalog::{Golden, GoldenHasse, GoldenRigid};
use crate::enumeration::{Classification, RigidKind};
use crate::presentation::Algebra;
use crate::strings::{Hooked, StringWord};

/// The structured report has the same shape as the published data files.
pub type Report = Golden;

/// Name of the shifted projective at `vertex`.
pub fn shifted_name(alg: &Algebra, vertex: usize) -> String {
    format!("P_{}^∨", alg.vertex_name(vertex))
}

/// Names every rigid object. String modules take the published name with
/// the same g-vector when one is given; otherwise indecomposable projectives
/// are called `P_e` and the rest are labelled by their g-vector.
pub fn name_objects(alg: &Algebra, c: &Classification, golden: Option<&Golden>) -> Vec<String> {
    let published: HashMap<&[i64], &str> = golden
        .map(|g| {
            g.rigid
                .iter()
                .map(|r| (r.g.as_slice(), r.name.as_str()))
                .collect()
        })
        .unwrap_or_default();
    c.universe
        .objects
        .iter()
        .map(|o| match &o.kind {
            RigidKind::Shifted(e) => shifted_name(alg, *e),
            RigidKind::String { hooked, .. } => {
                if let Some(name) = published.get(o.g.0.as_slice()) {
                    name.to_string()
                } else if let StringWord::Trivial(e) = hooked.closure {
                    format!("P_{}", alg.vertex_name(e))
                } else {
                    let coords: Vec<String> = o.g.0.iter().map(|x| x.to_string()).collect();
                    format!("g({})", coords.join(","))
                }
            }
        })
        .collect()
}

fn sorted_names(members: &[usize], names: &[String]) -> Vec<String> {
    let mut out: Vec<String> = members.iter().map(|&m| names[m].clone()).collect();
    out.sort();
    out
}

/// Builds the structured report for a classification.
pub fn structured(alg: &Algebra, c: &Classification, names: &[String]) -> Report {
    let u = &c.universe;
    let mut rigid = Vec::new();
    for (a, obj) in u.objects.iter().enumerate() {
        let RigidKind::String {
            representative,
            hooked,
        } = &obj.kind
        else {
            continue;
        };
        let mut compatible = Vec::new();
        let mut mutual = Vec::new();
        for (b, other) in u.objects.iter().enumerate() {
            if a == b {
                continue;
            }
            let listed = if other.is_shifted() {
                u.vanishes(b, a)
            } else {
                u.vanishes(a, b)
            };
            if listed {
                compatible.push(names[b].clone());
                if u.compatible(a, b) {
                    mutual.push(names[b].clone());
                }
            }
        }
        rigid.push(GoldenRigid {
            name: names[a].clone(),
            display: representative.display(alg),
            hook: hooked.key().display(alg),
            g: obj.g.0.clone(),
            compatible,
            mutual,
        });
    }
    let pairs: Vec<Vec<String>> = c.pairs.iter().map(|p| sorted_names(p, names)).collect();
    Report {
        algebra: alg.name().to_string(),
        pair_count: c.pairs.len(),
        rigid,
        hasse: GoldenHasse {
            nodes: pairs.clone(),
            edges: c.hasse.edges.clone(),
        },
        pairs,
    }
}

pub fn to_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

fn node_label(members: &[String]) -> String {
    members.join(" ⊕ ")
}

/// Graphviz rendering of the Hasse quiver.
pub fn to_dot(report: &Report) -> String {
    let mut out = String::new();
    let name = report.algebra.replace('"', "\\\"");
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    for (i, node) in report.hasse.nodes.iter().enumerate() {
        writeln!(
            out,
            "  n{i} [label=\"{}\"];",
            node_label(node).replace('"', "\\\"")
        )
        .unwrap();
    }
    for (a, b) in &report.hasse.edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn pad(text: &str, width: usize) -> String {
    let len = text.chars().count();
    format!("{text}{}", " ".repeat(width.saturating_sub(len)))
}

/// Plain-text tables: one row per rigid string with its closure, g-vector
/// and compatible objects (mutually compatible ones marked with `*`),
/// followed by the pairs.
pub fn human(report: &Report) -> String {
    let mut rows = vec![[
        report.algebra.clone(),
        "string".to_string(),
        "hook closure".to_string(),
        "g-vector".to_string(),
        "compatible".to_string(),
    ]];
    for r in &report.rigid {
        let g: Vec<String> = r.g.iter().map(|x| x.to_string()).collect();
        let compat: Vec<String> = r
            .compatible
            .iter()
            .map(|c| {
                if r.mutual.contains(c) {
                    format!("*{c}")
                } else {
                    c.clone()
                }
            })
            .collect();
        rows.push([
            r.name.clone(),
            r.display.clone(),
            r.hook.clone(),
            format!("[{}]", g.join(", ")),
            compat.join(", "),
        ]);
    }
    let widths: Vec<usize> = (0..4)
        .map(|k| rows.iter().map(|r| r[k].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let mut line = String::new();
        for k in 0..4 {
            line.push_str(&pad(&row[k], widths[k] + 2));
        }
        line.push_str(&row[4]);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    writeln!(out, "\n{} support τ-tilting pairs", report.pair_count).unwrap();
    for p in &report.pairs {
        writeln!(out, "  {}", node_label(p)).unwrap();
    }
    writeln!(out, "\nHasse quiver: {} edges", report.hasse.edges.len()).unwrap();
    for (a, b) in &report.hasse.edges {
        writeln!(
            out,
            "  {}  ->  {}",
            node_label(&report.hasse.nodes[*a]),
            node_label(&report.hasse.nodes[*b])
        )
        .unwrap();
    }
    out
}

fn closure_key(alg: &Algebra, text: &str) -> Option<StringWord> {
    StringWord::parse(alg, text)
        .ok()
        .map(|s| Hooked::new(alg, &s).key())
}

fn set<'a>(items: impl IntoIterator<Item = &'a String>) -> BTreeSet<&'a str> {
    items.into_iter().map(String::as_str).collect()
}

fn edge_labels(h: &GoldenHasse) -> BTreeSet<(Vec<String>, Vec<String>)> {
    h.edges
        .iter()
        .map(|&(a, b)| (h.nodes[a].clone(), h.nodes[b].clone()))
        .collect()
}

/// Differences between a computed report and published data, compared up to
/// ordering and with strings compared by their hook closures. Empty when
/// they agree.
pub fn diff(alg: &Algebra, computed: &Report, golden: &Report) -> Vec<String> {
    let mut out = Vec::new();
    if computed.pair_count != golden.pair_count {
        out.push(format!(
            "pairCount: computed {} published {}",
            computed.pair_count, golden.pair_count
        ));
    }
    let mine: BTreeMap<&str, &GoldenRigid> = computed
        .rigid
        .iter()
        .map(|r| (r.name.as_str(), r))
        .collect();
    let theirs: BTreeMap<&str, &GoldenRigid> =
        golden.rigid.iter().map(|r| (r.name.as_str(), r)).collect();
    for name in mine.keys().filter(|n| !theirs.contains_key(*n)) {
        out.push(format!("rigid {name}: computed only"));
    }
    for name in theirs.keys().filter(|n| !mine.contains_key(*n)) {
        out.push(format!("rigid {name}: published only"));
    }
    for (name, g) in &theirs {
        let Some(c) = mine.get(name) else { continue };
        if c.g != g.g {
            out.push(format!("rigid {name}: g {:?} vs {:?}", c.g, g.g));
        }
        let key = StringWord::parse(alg, &c.hook).ok().map(|s| s.canonical());
        if StringWord::parse(alg, &g.hook).ok().map(|s| s.canonical()) != key {
            out.push(format!("rigid {name}: hook {} vs {}", c.hook, g.hook));
        }
        if closure_key(alg, &g.display) != key {
            out.push(format!(
                "rigid {name}: display {} has another closure",
                g.display
            ));
        }
        if set(&c.compatible) != set(&g.compatible) {
            out.push(format!(
                "rigid {name}: compatible {:?} vs {:?}",
                set(&c.compatible),
                set(&g.compatible)
            ));
        }
        if set(&c.mutual) != set(&g.mutual) {
            out.push(format!(
                "rigid {name}: mutual {:?} vs {:?}",
                set(&c.mutual),
                set(&g.mutual)
            ));
        }
    }
    let pairs = |r: &Report| r.pairs.iter().cloned().collect::<BTreeSet<_>>();
    let (pc, pg) = (pairs(computed), pairs(golden));
    for p in pc.difference(&pg) {
        out.push(format!("pair {}: computed only", node_label(p)));
    }
    for p in pg.difference(&pc) {
        out.push(format!("pair {}: published only", node_label(p)));
    }
    let (ec, eg) = (edge_labels(&computed.hasse), edge_labels(&golden.hasse));
    for (a, b) in ec.difference(&eg) {
        out.push(format!(
            "edge {} -> {}: computed only",
            node_label(a),
            node_label(b)
        ));
    }
    for (a, b) in eg.difference(&ec) {
        out.push(format!(
            "edge {} -> {}: published only",
            node_label(a),
            node_label(b)
        ));
    }
    out
}
