//! Quiver-with-relations presentations of string algebras.
//!
//! An [`Algebra`] is a finite quiver together with a set of monomial
//! relations. Paths compose left to right: the path `a b` first follows `a`
//! and then `b`, so it requires `target(a) == source(b)`. A path is nonzero in
//! the algebra exactly when no relation occurs in it as a contiguous subword.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Vertices and arrows, with arrows kept sorted by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    out_arrows: Vec<Vec<usize>>,
    in_arrows: Vec<Vec<usize>>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(name, source, target)` triples.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, AlgebraError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(AlgebraError::EmptyVertexId);
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateVertex(v.clone()));
            }
        }
        let mut resolved = Vec::with_capacity(arrows.len());
        let mut names = HashSet::new();
        for (name, s, t) in arrows {
            if name.is_empty() {
                return Err(AlgebraError::EmptyArrowName);
            }
            if !names.insert(name.clone()) {
                return Err(AlgebraError::DuplicateArrow(name));
            }
            let source = *index.get(&s).ok_or(AlgebraError::UnknownVertex(s))?;
            let target = *index.get(&t).ok_or(AlgebraError::UnknownVertex(t))?;
            resolved.push(Arrow {
                name,
                source,
                target,
            });
        }
        resolved.sort_by(|a, b| a.name.cmp(&b.name));
        let mut out_arrows = vec![Vec::new(); vertices.len()];
        let mut in_arrows = vec![Vec::new(); vertices.len()];
        for (i, a) in resolved.iter().enumerate() {
            out_arrows[a.source].push(i);
            in_arrows[a.target].push(i);
        }
        Ok(Quiver {
            vertices,
            arrows: resolved,
            out_arrows,
            in_arrows,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows starting at `v`, in name order.
    pub fn arrows_from(&self, v: usize) -> &[usize] {
        &self.out_arrows[v]
    }

    /// Arrows ending at `v`, in name order.
    pub fn arrows_into(&self, v: usize) -> &[usize] {
        &self.in_arrows[v]
    }

    fn composable(&self, arrows: &[usize]) -> bool {
        arrows
            .windows(2)
            .all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
    }

    fn arrow_names(&self, arrows: &[usize]) -> Vec<String> {
        arrows
            .iter()
            .map(|&a| self.arrows[a].name.clone())
            .collect()
    }
}

/// A path in the quiver. Trivial paths carry only their vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    /// Path along `arrows`, which must be nonempty and composable in `quiver`.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Self {
        let source = quiver.arrow(arrows[0]).source;
        let target = quiver.arrow(*arrows.last().unwrap()).target;
        Path {
            source,
            target,
            arrows,
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn starts_with(&self, prefix: &[usize]) -> bool {
        self.arrows.starts_with(prefix)
    }

    pub fn ends_with(&self, suffix: &[usize]) -> bool {
        self.arrows.ends_with(suffix)
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which end of a path a continuation is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooManyArrowsOut { vertex: String, count: usize },
    TooManyArrowsIn { vertex: String, count: usize },
    ContinuationNotUnique { path: Vec<String>, side: Side },
    InfiniteDimensional { witness: Vec<String> },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::TooManyArrowsOut { .. } => "TooManyArrowsOut",
            Violation::TooManyArrowsIn { .. } => "TooManyArrowsIn",
            Violation::ContinuationNotUnique { .. } => "ContinuationNotUnique",
            Violation::InfiniteDimensional { .. } => "InfiniteDimensional",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyArrowsOut { vertex, count } => {
                write!(f, "TooManyArrowsOut vertex={vertex} count={count}")
            }
            Violation::TooManyArrowsIn { vertex, count } => {
                write!(f, "TooManyArrowsIn vertex={vertex} count={count}")
            }
            Violation::ContinuationNotUnique { path, side } => {
                let side = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                };
                write!(
                    f,
                    "ContinuationNotUnique path={} side={side}",
                    path.join("")
                )
            }
            Violation::InfiniteDimensional { witness } => {
                write!(f, "InfiniteDimensional witness={}", witness.join(""))
            }
        }
    }
}

/// Every string-algebra axiom violated by a presentation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("SyntaxError {0}")]
    Syntax(String),
    #[error("EmptyVertexId")]
    EmptyVertexId,
    #[error("EmptyArrowName")]
    EmptyArrowName,
    #[error("DuplicateVertex vertex={0}")]
    DuplicateVertex(String),
    #[error("DuplicateArrow arrow={0}")]
    DuplicateArrow(String),
    #[error("UnknownVertex vertex={0}")]
    UnknownVertex(String),
    #[error("UnknownArrow arrow={0}")]
    UnknownArrow(String),
    #[error("RelationTooShort relation={}", .0.join(""))]
    RelationTooShort(Vec<String>),
    #[error("RelationNotComposable relation={}", .0.join(""))]
    RelationNotComposable(Vec<String>),
    #[error("{0}")]
    Invalid(ValidationReport),
}

impl AlgebraError {
    /// Short machine-readable reason, e.g. `TooManyArrowsOut`.
    pub fn code(&self) -> &'static str {
        match self {
            AlgebraError::Syntax(_) => "SyntaxError",
            AlgebraError::EmptyVertexId => "EmptyVertexId",
            AlgebraError::EmptyArrowName => "EmptyArrowName",
            AlgebraError::DuplicateVertex(_) => "DuplicateVertex",
            AlgebraError::DuplicateArrow(_) => "DuplicateArrow",
            AlgebraError::UnknownVertex(_) => "UnknownVertex",
            AlgebraError::UnknownArrow(_) => "UnknownArrow",
            AlgebraError::RelationTooShort(_) => "RelationTooShort",
            AlgebraError::RelationNotComposable(_) => "RelationNotComposable",
            AlgebraError::Invalid(report) => report
                .violations
                .first()
                .map(Violation::code)
                .unwrap_or("Invalid"),
        }
    }
}

/// Monomial relations, kept as a set of arrow sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Relations {
    paths: Vec<Vec<usize>>,
    set: HashSet<Vec<usize>>,
    max_len: usize,
}

impl Relations {
    fn new(paths: Vec<Vec<usize>>) -> Self {
        let set = paths.iter().cloned().collect();
        let max_len = paths.iter().map(Vec::len).max().unwrap_or(0);
        Relations {
            paths,
            set,
            max_len,
        }
    }

    /// Whether some relation ends exactly at the last arrow of `arrows`.
    fn has_relation_suffix(&self, arrows: &[usize]) -> bool {
        let n = arrows.len();
        (2..=self.max_len.min(n)).any(|k| self.set.contains(&arrows[n - k..]))
    }

    /// Whether some relation starts exactly at the first arrow of `arrows`.
    fn has_relation_prefix(&self, arrows: &[usize]) -> bool {
        (2..=self.max_len.min(arrows.len())).any(|k| self.set.contains(&arrows[..k]))
    }

    fn contains_relation(&self, arrows: &[usize]) -> bool {
        (0..arrows.len()).any(|start| self.has_relation_prefix(&arrows[start..]))
    }
}

/// Nonzero paths grouped by `(source, target)`, each group sorted by length
/// and then lexicographically by arrow names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathBasis {
    by_pair: Vec<Vec<Vec<Path>>>,
    position: HashMap<Path, usize>,
}

impl PathBasis {
    fn new(vertex_count: usize, paths: Vec<Path>) -> Self {
        let mut by_pair = vec![vec![Vec::new(); vertex_count]; vertex_count];
        for p in paths {
            by_pair[p.source][p.target].push(p);
        }
        let mut position = HashMap::new();
        for row in &mut by_pair {
            for group in row.iter_mut() {
                group.sort();
                for (i, p) in group.iter().enumerate() {
                    position.insert(p.clone(), i);
                }
            }
        }
        PathBasis { by_pair, position }
    }

    pub fn paths(&self, source: usize, target: usize) -> &[Path] {
        &self.by_pair[source][target]
    }

    /// Position of a nonzero path inside its `(source, target)` group.
    pub fn position(&self, path: &Path) -> Option<usize> {
        self.position.get(path).copied()
    }

    pub fn len(&self) -> usize {
        self.position.len()
    }

    pub fn is_empty(&self) -> bool {
        self.position.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Path> {
        self.by_pair.iter().flatten().flatten()
    }

    /// Length of the longest nonzero path.
    pub fn max_len(&self) -> usize {
        self.iter().map(Path::len).max().unwrap_or(0)
    }
}

/// Breadth-first growth of nonzero paths, checking unique continuation along
/// the way. Growth stops early once continuation fails, since the path count
/// is then no longer bounded by the arrow count.
fn grow_paths(quiver: &Quiver, relations: &Relations, report: &mut ValidationReport) -> Vec<Path> {
    let bound = quiver.arrows.len() * (1 + relations.max_len);
    let mut all: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
    let mut level: Vec<Vec<usize>> = (0..quiver.arrows.len()).map(|a| vec![a]).collect();
    let mut length = 1;
    while !level.is_empty() {
        if length > bound {
            report.violations.push(Violation::InfiniteDimensional {
                witness: quiver.arrow_names(&level[0]),
            });
            break;
        }
        let mut next = Vec::new();
        let mut broken = false;
        for path in &level {
            let mut right = 0;
            for &a in quiver.arrows_from(quiver.arrows[*path.last().unwrap()].target) {
                let mut longer = path.clone();
                longer.push(a);
                if !relations.has_relation_suffix(&longer) {
                    right += 1;
                    next.push(longer);
                }
            }
            let left = quiver
                .arrows_into(quiver.arrows[path[0]].source)
                .iter()
                .filter(|&&a| {
                    let mut longer = Vec::with_capacity(path.len() + 1);
                    longer.push(a);
                    longer.extend_from_slice(path);
                    !relations.has_relation_prefix(&longer)
                })
                .count();
            if right > 1 {
                broken = true;
                report.violations.push(Violation::ContinuationNotUnique {
                    path: quiver.arrow_names(path),
                    side: Side::Right,
                });
            }
            if left > 1 {
                broken = true;
                report.violations.push(Violation::ContinuationNotUnique {
                    path: quiver.arrow_names(path),
                    side: Side::Left,
                });
            }
        }
        all.extend(
            level
                .drain(..)
                .map(|arrows| Path::from_arrows(quiver, arrows)),
        );
        if broken {
            break;
        }
        level = next;
        length += 1;
    }
    all
}

fn check_valences(quiver: &Quiver, report: &mut ValidationReport) {
    for (v, id) in quiver.vertices.iter().enumerate() {
        let out = quiver.arrows_from(v).len();
        if out > 2 {
            report.violations.push(Violation::TooManyArrowsOut {
                vertex: id.clone(),
                count: out,
            });
        }
        let inc = quiver.arrows_into(v).len();
        if inc > 2 {
            report.violations.push(Violation::TooManyArrowsIn {
                vertex: id.clone(),
                count: inc,
            });
        }
    }
}

/// Checks the string-algebra axioms: at most two arrows out of and into each
/// vertex, monomial relations, unique continuation of nonzero paths on both
/// sides, and finite dimension.
pub fn validate_string_algebra(quiver: &Quiver, relations: &[Vec<usize>]) -> ValidationReport {
    let mut report = ValidationReport::default();
    check_valences(quiver, &mut report);
    // Monomiality is structural here: relations are arrow sequences.
    grow_paths(quiver, &Relations::new(relations.to_vec()), &mut report);
    report
}

/// A validated string algebra `kQ/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    quiver: Quiver,
    relations: Relations,
    basis: PathBasis,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowEntry {
    name: String,
    source: String,
    target: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<ArrowEntry>,
    relations: Vec<Vec<String>>,
}

impl Algebra {
    /// Parses the JSON algebra format and validates the result.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| AlgebraError::Syntax(e.to_string()))?;
        let arrows = file
            .arrows
            .into_iter()
            .map(|a| (a.name, a.source, a.target))
            .collect();
        Algebra::from_parts(&file.name, file.vertices, arrows, file.relations)
    }

    pub fn from_parts(
        name: &str,
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
        relations: Vec<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        let quiver = Quiver::new(vertices, arrows)?;
        let mut resolved = Vec::with_capacity(relations.len());
        for rel in relations {
            let ids = rel
                .iter()
                .map(|n| {
                    quiver
                        .arrow_index(n)
                        .ok_or_else(|| AlgebraError::UnknownArrow(n.clone()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if ids.len() < 2 {
                return Err(AlgebraError::RelationTooShort(rel));
            }
            if !quiver.composable(&ids) {
                return Err(AlgebraError::RelationNotComposable(rel));
            }
            resolved.push(ids);
        }
        Algebra::new(name, quiver, resolved)
    }

    pub fn new(
        name: &str,
        quiver: Quiver,
        relations: Vec<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        let relations = Relations::new(relations);
        let mut report = ValidationReport::default();
        check_valences(&quiver, &mut report);
        let paths = grow_paths(&quiver, &relations, &mut report);
        if !report.is_valid() {
            return Err(AlgebraError::Invalid(report));
        }
        let basis = PathBasis::new(quiver.vertex_count(), paths);
        Ok(Algebra {
            name: name.to_string(),
            quiver,
            relations,
            basis,
        })
    }

    pub fn to_json(&self) -> String {
        let file = AlgebraFile {
            name: self.name.clone(),
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| ArrowEntry {
                    name: a.name.clone(),
                    source: self.quiver.vertices[a.source].clone(),
                    target: self.quiver.vertices[a.target].clone(),
                })
                .collect(),
            relations: self
                .relations
                .paths
                .iter()
                .map(|r| self.quiver.arrow_names(r))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("algebra serializes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        self.quiver.arrow(id)
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations.paths
    }

    /// Lexicographically first arrow leaving `v`; used to hook trivial strings.
    pub fn designated_arrow(&self, v: usize) -> Option<usize> {
        self.quiver.arrows_from(v).first().copied()
    }

    /// Whether `arrows` is composable and avoids every relation.
    pub fn is_nonzero(&self, arrows: &[usize]) -> bool {
        self.quiver.composable(arrows) && !self.relations.contains_relation(arrows)
    }

    /// Product of two paths in the algebra, `None` when it vanishes.
    pub fn multiply(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target != q.source {
            return None;
        }
        if p.is_empty() {
            return Some(q.clone());
        }
        if q.is_empty() {
            return Some(p.clone());
        }
        let mut arrows = Vec::with_capacity(p.len() + q.len());
        arrows.extend_from_slice(&p.arrows);
        arrows.extend_from_slice(&q.arrows);
        // Only windows straddling the junction can be new relations.
        let lo = p
            .len()
            .saturating_sub(self.relations.max_len.saturating_sub(1));
        let hi = (p.len() + self.relations.max_len).min(arrows.len());
        for start in lo..p.len() {
            for end in (p.len() + 1)..=hi {
                if end - start >= 2 && self.relations.set.contains(&arrows[start..end]) {
                    return None;
                }
            }
        }
        Some(Path {
            source: p.source,
            target: q.target,
            arrows,
        })
    }

    pub fn path_basis(&self) -> &PathBasis {
        &self.basis
    }

    /// Nonzero paths from `source` to `target`.
    pub fn paths(&self, source: usize, target: usize) -> &[Path] {
        self.basis.paths(source, target)
    }

    /// `dim A`, the number of nonzero paths.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis of the maps `P_j -> P_i`: nonzero paths from `i` to `j`, each
    /// acting by left multiplication.
    pub fn hom_basis(&self, i: &str, j: &str) -> Result<&[Path], AlgebraError> {
        let iv = self
            .quiver
            .vertex_index(i)
            .ok_or_else(|| AlgebraError::UnknownVertex(i.to_string()))?;
        let jv = self
            .quiver
            .vertex_index(j)
            .ok_or_else(|| AlgebraError::UnknownVertex(j.to_string()))?;
        Ok(self.paths(iv, jv))
    }

    /// Concatenated arrow names of a path, or `e_v` for a trivial path.
    pub fn path_label(&self, p: &Path) -> String {
        if p.is_empty() {
            format!("e_{}", self.vertex_name(p.source))
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrow(a).name.as_str())
                .collect()
        }
    }

    pub fn arrow_labels(&self, arrows: &[usize]) -> Vec<String> {
        self.quiver.arrow_names(arrows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        rels: &[&[&str]],
    ) -> Result<Algebra, AlgebraError> {
        Algebra::from_parts(
            "test",
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string()))
                .collect(),
            rels.iter()
                .map(|r| r.iter().map(|s| s.to_string()).collect())
                .collect(),
        )
    }

    fn r2ab() -> Algebra {
        algebra(
            &["0", "1"],
            &[("α", "0", "0"), ("β", "0", "1"), ("γ", "1", "0")],
            &[&["β", "γ"], &["γ", "β"], &["α", "α"], &["γ", "α", "β"]],
        )
        .unwrap()
    }

    fn labels(alg: &Algebra, s: usize, t: usize) -> Vec<String> {
        alg.paths(s, t).iter().map(|p| alg.path_label(p)).collect()
    }

    #[test]
    fn parses_w2b() {
        let text = r#"{"name": "W(2B)", "vertices": ["0", "1"],
            "arrows": [{"name": "β", "source": "0", "target": "1"},
                       {"name": "γ", "source": "1", "target": "0"}],
            "relations": [["β", "γ"], ["γ", "β"]]}"#;
        let alg = Algebra::parse(text).unwrap();
        assert_eq!(alg.vertex_count(), 2);
        assert_eq!(alg.dimension(), 4);
    }

    #[test]
    fn single_vertex_has_dimension_one() {
        let alg = algebra(&["0"], &[], &[]).unwrap();
        assert_eq!(alg.dimension(), 1);
        assert_eq!(labels(&alg, 0, 0), vec!["e_0"]);
    }

    #[test]
    fn short_relation_rejected() {
        let err = algebra(&["0"], &[("α", "0", "0")], &[&["α"]]).unwrap_err();
        assert!(matches!(err, AlgebraError::RelationTooShort(_)));
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"name": "k", "vertices": ["0"], "arrows": [], "relations": [], "extra": 1}"#;
        assert!(matches!(Algebra::parse(text), Err(AlgebraError::Syntax(_))));
    }

    #[test]
    fn syntax_error_reported() {
        assert!(matches!(Algebra::parse("{"), Err(AlgebraError::Syntax(_))));
    }

    #[test]
    fn loop_without_relation_is_infinite() {
        let err = algebra(&["0"], &[("α", "0", "0")], &[]).unwrap_err();
        match err {
            AlgebraError::Invalid(report) => {
                assert!(matches!(
                    report.violations[0],
                    Violation::InfiniteDimensional { .. }
                ));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn nilpotent_loop_has_dimension_two() {
        let alg = algebra(&["0"], &[("α", "0", "0")], &[&["α", "α"]]).unwrap();
        assert_eq!(alg.dimension(), 2);
    }

    #[test]
    fn three_arrows_out_rejected() {
        let err = algebra(
            &["0", "1", "2", "3"],
            &[("a", "0", "1"), ("b", "0", "2"), ("c", "0", "3")],
            &[],
        )
        .unwrap_err();
        assert_eq!(err.code(), "TooManyArrowsOut");
    }

    #[test]
    fn three_arrows_in_rejected() {
        let err = algebra(
            &["0", "1", "2", "3"],
            &[("a", "1", "0"), ("b", "2", "0"), ("c", "3", "0")],
            &[],
        )
        .unwrap_err();
        assert_eq!(err.code(), "TooManyArrowsIn");
    }

    #[test]
    fn non_unique_continuation_rejected() {
        // a then either b or c with no relation.
        let err = algebra(
            &["0", "1", "2", "3"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "1", "3")],
            &[],
        )
        .unwrap_err();
        assert_eq!(err.code(), "ContinuationNotUnique");
    }

    #[test]
    fn r2ab_path_groups() {
        let alg = r2ab();
        assert_eq!(labels(&alg, 0, 0), vec!["e_0", "α"]);
        assert_eq!(labels(&alg, 0, 1), vec!["β", "αβ"]);
        assert_eq!(labels(&alg, 1, 0), vec!["γ", "γα"]);
        assert_eq!(labels(&alg, 1, 1), vec!["e_1"]);
        assert_eq!(alg.dimension(), 7);
    }

    #[test]
    fn hom_basis_lookups() {
        let alg = r2ab();
        let maps: Vec<String> = alg
            .hom_basis("0", "0")
            .unwrap()
            .iter()
            .map(|p| alg.path_label(p))
            .collect();
        assert_eq!(maps, vec!["e_0", "α"]);
        assert!(matches!(
            alg.hom_basis("0", "9"),
            Err(AlgebraError::UnknownVertex(_))
        ));
    }

    #[test]
    fn multiply_respects_relations() {
        let alg = r2ab();
        let alpha = alg.paths(0, 0)[1].clone();
        let beta = alg.paths(0, 1)[0].clone();
        let gamma = alg.paths(1, 0)[0].clone();
        assert_eq!(alg.path_label(&alg.multiply(&alpha, &beta).unwrap()), "αβ");
        assert!(alg.multiply(&alpha, &alpha).is_none());
        assert!(alg.multiply(&beta, &gamma).is_none());
        let ga = alg.multiply(&gamma, &alpha).unwrap();
        assert!(alg.multiply(&ga, &beta).is_none());
        // Non-composable products vanish.
        assert!(alg.multiply(&beta, &beta).is_none());
    }

    #[test]
    fn json_round_trip() {
        let alg = r2ab();
        let again = Algebra::parse(&alg.to_json()).unwrap();
        assert_eq!(alg, again);
    }
}
