//! Strings over a string algebra: validity, canonical forms, directed
//! factorizations, hook closures, intermediate points, g-vectors and
//! supports.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::presentation::Algebra;

/// An arrow or the formal inverse of an arrow. Letters order by arrow index,
/// with the direct letter before the inverse one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn inverse_of(arrow: usize) -> Self {
        Letter {
            arrow,
            inverse: true,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, alg: &Algebra) -> usize {
        let a = alg.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(self, alg: &Algebra) -> usize {
        let a = alg.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }
}

/// A string. The two length-zero strings at a vertex are identified, so a
/// trivial string carries only its vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StringWord {
    Trivial(usize),
    Letters(Vec<Letter>),
}

impl Ord for StringWord {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (StringWord::Trivial(a), StringWord::Trivial(b)) => a.cmp(b),
            (StringWord::Trivial(_), StringWord::Letters(_)) => Ordering::Less,
            (StringWord::Letters(_), StringWord::Trivial(_)) => Ordering::Greater,
            (StringWord::Letters(a), StringWord::Letters(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.cmp(b))
            }
        }
    }
}

impl PartialOrd for StringWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    #[error("IllegalWord position={position} reason=NotComposable")]
    NotComposable { position: usize },
    #[error("IllegalWord position={position} reason=Backtrack")]
    Backtrack { position: usize },
    #[error("IllegalWord position={start} reason=ZeroRun length={len}")]
    ZeroRun { start: usize, len: usize },
    #[error("IllegalWord reason=Empty")]
    Empty,
    #[error("UnknownArrow arrow={0}")]
    UnknownArrow(String),
    #[error("UnknownVertex vertex={0}")]
    UnknownVertex(String),
    #[error("SyntaxError {0}")]
    Syntax(String),
}

/// Direct path underlying a run of letters that all share one orientation.
fn run_path(run: &[Letter]) -> Vec<usize> {
    if run.first().is_some_and(|l| l.inverse) {
        run.iter().rev().map(|l| l.arrow).collect()
    } else {
        run.iter().map(|l| l.arrow).collect()
    }
}

fn check_letters(alg: &Algebra, letters: &[Letter]) -> Result<(), StringError> {
    if letters.is_empty() {
        return Err(StringError::Empty);
    }
    for (i, w) in letters.windows(2).enumerate() {
        if w[0].target(alg) != w[1].source(alg) {
            return Err(StringError::NotComposable { position: i + 1 });
        }
        if w[1] == w[0].inv() {
            return Err(StringError::Backtrack { position: i + 1 });
        }
    }
    let mut start = 0;
    for end in 1..=letters.len() {
        if end == letters.len() || letters[end].inverse != letters[start].inverse {
            if !alg.is_nonzero(&run_path(&letters[start..end])) {
                return Err(StringError::ZeroRun {
                    start,
                    len: end - start,
                });
            }
            start = end;
        }
    }
    Ok(())
}

/// Whether appending `next` to the valid nonempty word `letters` keeps it a
/// string.
fn extends(alg: &Algebra, letters: &[Letter], next: Letter) -> bool {
    let last = *letters.last().unwrap();
    if last.target(alg) != next.source(alg) || next == last.inv() {
        return false;
    }
    if last.inverse != next.inverse {
        return true;
    }
    let start = letters
        .iter()
        .rposition(|l| l.inverse != next.inverse)
        .map_or(0, |p| p + 1);
    let mut run = letters[start..].to_vec();
    run.push(next);
    alg.is_nonzero(&run_path(&run))
}

/// Validates a word and returns it as a string.
pub fn make_string(alg: &Algebra, letters: Vec<Letter>) -> Result<StringWord, StringError> {
    check_letters(alg, &letters)?;
    Ok(StringWord::Letters(letters))
}

/// A maximal directed piece of a string of positive length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub inverse: bool,
    /// The underlying direct path, in path order.
    pub path: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Factor {
    pub fn letters(&self) -> Vec<Letter> {
        if self.inverse {
            self.path
                .iter()
                .rev()
                .map(|&a| Letter::inverse_of(a))
                .collect()
        } else {
            self.path.iter().map(|&a| Letter::direct(a)).collect()
        }
    }

    pub fn first_letter(&self) -> Letter {
        if self.inverse {
            Letter::inverse_of(*self.path.last().unwrap())
        } else {
            Letter::direct(self.path[0])
        }
    }

    pub fn last_letter(&self) -> Letter {
        if self.inverse {
            Letter::inverse_of(self.path[0])
        } else {
            Letter::direct(*self.path.last().unwrap())
        }
    }

    pub fn inverted(&self) -> Factor {
        Factor {
            inverse: !self.inverse,
            path: self.path.clone(),
            source: self.target,
            target: self.source,
        }
    }
}

fn factor_runs(alg: &Algebra, letters: &[Letter]) -> Vec<Factor> {
    let mut factors = Vec::new();
    let mut start = 0;
    for end in 1..=letters.len() {
        if end == letters.len() || letters[end].inverse != letters[start].inverse {
            let run = &letters[start..end];
            factors.push(Factor {
                inverse: run[0].inverse,
                path: run_path(run),
                source: run[0].source(alg),
                target: run[run.len() - 1].target(alg),
            });
            start = end;
        }
    }
    factors
}

/// Whether the point is a peak (upper) or a valley (lower) of the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointKind {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntermediatePoint {
    pub vertex: usize,
    pub kind: PointKind,
}

fn points_of(factors: &[Factor], trivial_vertex: Option<usize>) -> Vec<IntermediatePoint> {
    if let Some(v) = trivial_vertex {
        return vec![IntermediatePoint {
            vertex: v,
            kind: PointKind::Upper,
        }];
    }
    let m = factors.len();
    let mut points = Vec::with_capacity(m + 1);
    for i in 0..=m {
        let vertex = if i == 0 {
            factors[0].source
        } else {
            factors[i - 1].target
        };
        // Orientation alternates, so one neighbouring factor decides.
        let upper = if i < m {
            !factors[i].inverse
        } else {
            factors[m - 1].inverse
        };
        let kind = if upper {
            PointKind::Upper
        } else {
            PointKind::Lower
        };
        points.push(IntermediatePoint { vertex, kind });
    }
    points
}

impl StringWord {
    pub fn trivial(vertex: usize) -> Self {
        StringWord::Trivial(vertex)
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, StringWord::Trivial(_))
    }

    pub fn len(&self) -> usize {
        match self {
            StringWord::Trivial(_) => 0,
            StringWord::Letters(ls) => ls.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            StringWord::Trivial(_) => &[],
            StringWord::Letters(ls) => ls,
        }
    }

    pub fn source(&self, alg: &Algebra) -> usize {
        match self {
            StringWord::Trivial(v) => *v,
            StringWord::Letters(ls) => ls[0].source(alg),
        }
    }

    pub fn target(&self, alg: &Algebra) -> usize {
        match self {
            StringWord::Trivial(v) => *v,
            StringWord::Letters(ls) => ls[ls.len() - 1].target(alg),
        }
    }

    pub fn inverse(&self) -> StringWord {
        match self {
            StringWord::Trivial(v) => StringWord::Trivial(*v),
            StringWord::Letters(ls) => {
                StringWord::Letters(ls.iter().rev().map(|l| l.inv()).collect())
            }
        }
    }

    /// The smaller of the string and its inverse.
    pub fn canonical(&self) -> StringWord {
        match self {
            StringWord::Trivial(_) => self.clone(),
            StringWord::Letters(ls) => {
                let inv = self.inverse();
                if inv.letters() < ls.as_slice() {
                    inv
                } else {
                    self.clone()
                }
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            StringWord::Trivial(_) => true,
            StringWord::Letters(ls) => {
                let inv: Vec<Letter> = ls.iter().rev().map(|l| l.inv()).collect();
                ls.as_slice() <= inv.as_slice()
            }
        }
    }

    /// Directed factorization; empty for a trivial string.
    pub fn factors(&self, alg: &Algebra) -> Vec<Factor> {
        factor_runs(alg, self.letters())
    }

    /// Intermediate points of the string itself (not of its closure).
    pub fn intermediate_points(&self, alg: &Algebra) -> Vec<IntermediatePoint> {
        match self {
            StringWord::Trivial(v) => points_of(&[], Some(*v)),
            StringWord::Letters(ls) => points_of(&factor_runs(alg, ls), None),
        }
    }

    /// Parses either the arrow-display format (`1 ←β— 0 —αβ→ 1`) or a
    /// whitespace-separated letter list (`β^-1 α β`). A lone vertex id or
    /// `e_<vertex>` is the trivial string at that vertex.
    pub fn parse(alg: &Algebra, text: &str) -> Result<StringWord, StringError> {
        if text.contains('→') || text.contains('←') {
            return parse_display(alg, text);
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() == 1 {
            let id = tokens[0];
            let vertex = alg.quiver().vertex_index(id).or_else(|| {
                id.strip_prefix("e_")
                    .and_then(|v| alg.quiver().vertex_index(v))
                    .filter(|_| alg.quiver().arrow_index(id).is_none())
            });
            if let Some(v) = vertex {
                return Ok(StringWord::Trivial(v));
            }
        }
        let mut letters = Vec::new();
        for tok in tokens {
            let (name, inverse) = match tok
                .strip_suffix("^-1")
                .or_else(|| tok.strip_suffix("⁻¹"))
                .or_else(|| tok.strip_suffix('-'))
            {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let arrow = alg
                .quiver()
                .arrow_index(name)
                .ok_or_else(|| StringError::UnknownArrow(name.to_string()))?;
            letters.push(Letter { arrow, inverse });
        }
        make_string(alg, letters)
    }

    /// Renders the walk with vertices and labelled arrows, e.g.
    /// `1 ←β— 0 —αβ→ 1`.
    pub fn display(&self, alg: &Algebra) -> String {
        match self {
            StringWord::Trivial(v) => alg.vertex_name(*v).to_string(),
            StringWord::Letters(ls) => {
                let factors = factor_runs(alg, ls);
                let mut out = alg.vertex_name(factors[0].source).to_string();
                for f in &factors {
                    let label: String =
                        f.path.iter().map(|&a| alg.arrow(a).name.as_str()).collect();
                    if f.inverse {
                        out.push_str(&format!(" ←{label}— "));
                    } else {
                        out.push_str(&format!(" —{label}→ "));
                    }
                    out.push_str(alg.vertex_name(f.target));
                }
                out
            }
        }
    }

    /// Space-separated letters, inverses marked with `^-1`.
    pub fn word(&self, alg: &Algebra) -> String {
        match self {
            StringWord::Trivial(v) => format!("e_{}", alg.vertex_name(*v)),
            StringWord::Letters(ls) => ls
                .iter()
                .map(|l| {
                    let name = &alg.arrow(l.arrow).name;
                    if l.inverse {
                        format!("{name}^-1")
                    } else {
                        name.clone()
                    }
                })
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

/// Splits a concatenated arrow label into a path from `from` to `to`.
fn split_label(alg: &Algebra, label: &str, from: usize, to: usize) -> Option<Vec<usize>> {
    if label.is_empty() {
        return (from == to).then(Vec::new);
    }
    for &a in alg.quiver().arrows_from(from) {
        let arrow = alg.arrow(a);
        if let Some(rest) = label.strip_prefix(arrow.name.as_str()) {
            if let Some(mut tail) = split_label(alg, rest, arrow.target, to) {
                tail.insert(0, a);
                return Some(tail);
            }
        }
    }
    None
}

fn parse_display(alg: &Algebra, text: &str) -> Result<StringWord, StringError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() < 3 || tokens.len().is_multiple_of(2) {
        return Err(StringError::Syntax(text.to_string()));
    }
    let vertex = |id: &str| {
        alg.quiver()
            .vertex_index(id)
            .ok_or_else(|| StringError::UnknownVertex(id.to_string()))
    };
    let mut letters = Vec::new();
    let mut here = vertex(tokens[0])?;
    for pair in tokens[1..].chunks(2) {
        let there = vertex(pair[1])?;
        let tok = pair[0];
        let bad = || StringError::Syntax(tok.to_string());
        if let Some(label) = tok.strip_prefix('—').and_then(|t| t.strip_suffix('→')) {
            let path = split_label(alg, label, here, there).ok_or_else(bad)?;
            letters.extend(path.into_iter().map(Letter::direct));
        } else if let Some(label) = tok.strip_prefix('←').and_then(|t| t.strip_suffix('—')) {
            let path = split_label(alg, label, there, here).ok_or_else(bad)?;
            letters.extend(path.into_iter().rev().map(Letter::inverse_of));
        } else {
            return Err(bad());
        }
        here = there;
    }
    make_string(alg, letters)
}

/// The directed factorization of a string. A trivial string has the single
/// factor given by itself.
pub fn factor_directed(alg: &Algebra, c: &StringWord) -> Vec<StringWord> {
    match c {
        StringWord::Trivial(_) => vec![c.clone()],
        StringWord::Letters(ls) => factor_runs(alg, ls)
            .iter()
            .map(|f| StringWord::Letters(f.letters()))
            .collect(),
    }
}

fn every_extension_vanishes(alg: &Algebra, path: &[usize]) -> bool {
    let mut longer = path.to_vec();
    longer.push(0);
    (0..alg.arrow_count()).all(|a| {
        *longer.last_mut().unwrap() = a;
        !alg.is_nonzero(&longer)
    })
}

/// `_PC` for a string of positive length.
fn left_hook(alg: &Algebra, letters: &[Letter]) -> StringWord {
    let factors = factor_runs(alg, letters);
    let first = &factors[0];
    if first.inverse && every_extension_vanishes(alg, &first.path) {
        return if factors.len() == 1 {
            StringWord::Trivial(first.target)
        } else {
            StringWord::Letters(letters[first.path.len()..].to_vec())
        };
    }
    for a in 0..alg.arrow_count() {
        let head = Letter::inverse_of(a);
        if head.target(alg) != letters[0].source(alg) {
            continue;
        }
        let mut word = Vec::with_capacity(letters.len() + 1);
        word.push(head);
        word.extend_from_slice(letters);
        if check_letters(alg, &word).is_ok() {
            return StringWord::Letters(word);
        }
    }
    StringWord::Letters(letters.to_vec())
}

/// `C_P` for a string of positive length.
fn right_hook(alg: &Algebra, letters: &[Letter]) -> StringWord {
    let factors = factor_runs(alg, letters);
    let last = &factors[factors.len() - 1];
    if !last.inverse && every_extension_vanishes(alg, &last.path) {
        return if factors.len() == 1 {
            StringWord::Trivial(last.source)
        } else {
            StringWord::Letters(letters[..letters.len() - last.path.len()].to_vec())
        };
    }
    for a in 0..alg.arrow_count() {
        let next = Letter::direct(a);
        if extends(alg, letters, next) {
            let mut word = letters.to_vec();
            word.push(next);
            return StringWord::Letters(word);
        }
    }
    StringWord::Letters(letters.to_vec())
}

fn apply<F: Fn(&Algebra, &[Letter]) -> StringWord>(
    alg: &Algebra,
    c: &StringWord,
    f: F,
) -> StringWord {
    match c {
        StringWord::Trivial(_) => c.clone(),
        StringWord::Letters(ls) => f(alg, ls),
    }
}

/// The hook closure `_PC_P`. Its intermediate points describe a minimal
/// projective presentation of the string module.
pub fn hook_closure(alg: &Algebra, c: &StringWord) -> StringWord {
    match c {
        StringWord::Trivial(v) => match alg.designated_arrow(*v) {
            None => c.clone(),
            Some(a) => right_hook(alg, &[Letter::inverse_of(a)]),
        },
        StringWord::Letters(ls) => {
            let factors = factor_runs(alg, ls);
            let lone_inverse_loose = factors.len() == 1
                && factors[0].inverse
                && every_extension_vanishes(alg, &factors[0].path);
            if lone_inverse_loose {
                apply(alg, &right_hook(alg, ls), left_hook)
            } else {
                apply(alg, &left_hook(alg, ls), right_hook)
            }
        }
    }
}

/// A string together with its hook closure, factors and intermediate points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hooked {
    pub string: StringWord,
    pub closure: StringWord,
    pub factors: Vec<Factor>,
    pub points: Vec<IntermediatePoint>,
}

impl Hooked {
    pub fn new(alg: &Algebra, c: &StringWord) -> Self {
        let closure = hook_closure(alg, c);
        let factors = closure.factors(alg);
        let points = closure.intermediate_points(alg);
        Hooked {
            string: c.clone(),
            closure,
            factors,
            points,
        }
    }

    /// Number of factors of the closure (zero when it is trivial).
    pub fn m(&self) -> usize {
        self.factors.len()
    }

    /// Factor `C'_k` for `1 <= k <= m`.
    pub fn factor(&self, k: usize) -> &Factor {
        &self.factors[k - 1]
    }

    /// Adjacent directed pieces of the intermediate point `i`.
    pub fn adjacent(&self, i: usize) -> impl Iterator<Item = &Factor> {
        let before = (i >= 1).then(|| &self.factors[i - 1]);
        let after = self.factors.get(i);
        before.into_iter().chain(after)
    }

    /// Canonical form of the closure; identifies the module.
    pub fn key(&self) -> StringWord {
        self.closure.canonical()
    }

    pub fn g_vector(&self, vertex_count: usize) -> GVector {
        let mut g = vec![0i64; vertex_count];
        for p in &self.points {
            match p.kind {
                PointKind::Upper => g[p.vertex] += 1,
                PointKind::Lower => g[p.vertex] -= 1,
            }
        }
        GVector(g)
    }

    /// Vertices in the support of the string module.
    pub fn support(&self, alg: &Algebra) -> BTreeSet<usize> {
        let m = self.m();
        let mut support = BTreeSet::new();
        for (i, p) in self.points.iter().enumerate() {
            match p.kind {
                PointKind::Lower => {
                    if i != 0 && i != m {
                        support.insert(p.vertex);
                    }
                }
                PointKind::Upper => {
                    for e in 0..alg.vertex_count() {
                        let hit = alg
                            .paths(p.vertex, e)
                            .iter()
                            .any(|w| self.adjacent(i).all(|f| !w.starts_with(&f.path)));
                        if hit {
                            support.insert(e);
                        }
                    }
                }
            }
        }
        support
    }
}

/// Multiplicities of indecomposable projectives in degree 0 minus those in
/// degree -1 of a minimal presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GVector(pub Vec<i64>);

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn g_vector(alg: &Algebra, c: &StringWord) -> GVector {
    Hooked::new(alg, c).g_vector(alg.vertex_count())
}

pub fn support(alg: &Algebra, c: &StringWord) -> BTreeSet<usize> {
    Hooked::new(alg, c).support(alg)
}

/// All strings of length at most `max_len`, one per inverse pair, in
/// canonical form and sorted by length then lexicographically.
pub fn enumerate_strings(alg: &Algebra, max_len: usize) -> Vec<StringWord> {
    let mut out: Vec<StringWord> = (0..alg.vertex_count()).map(StringWord::Trivial).collect();
    let mut frontier: Vec<Vec<Letter>> = Vec::new();
    if max_len >= 1 {
        for a in 0..alg.arrow_count() {
            frontier.push(vec![Letter::direct(a)]);
            frontier.push(vec![Letter::inverse_of(a)]);
        }
    }
    let mut len = 1;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for word in frontier {
            if len < max_len {
                for a in 0..alg.arrow_count() {
                    for letter in [Letter::direct(a), Letter::inverse_of(a)] {
                        if extends(alg, &word, letter) {
                            let mut longer = word.clone();
                            longer.push(letter);
                            next.push(longer);
                        }
                    }
                }
            }
            let s = StringWord::Letters(word);
            if s.is_canonical() {
                out.push(s);
            }
        }
        frontier = next;
        len += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn r2ab() -> Algebra {
        catalog::algebra("R(2AB)").unwrap()
    }

    fn s(alg: &Algebra, text: &str) -> StringWord {
        StringWord::parse(alg, text).unwrap()
    }

    #[test]
    fn rejects_backtrack_and_zero_runs() {
        let alg = r2ab();
        assert!(matches!(
            StringWord::parse(&alg, "β β^-1"),
            Err(StringError::Backtrack { position: 1 })
        ));
        assert!(matches!(
            StringWord::parse(&alg, "α α"),
            Err(StringError::ZeroRun { .. })
        ));
        assert!(matches!(
            StringWord::parse(&alg, "β α"),
            Err(StringError::NotComposable { position: 1 })
        ));
        // γαβ is a relation, so its inverse run is illegal too.
        assert!(StringWord::parse(&alg, "β^-1 α^-1 γ^-1").is_err());
    }

    #[test]
    fn canonical_prefers_smaller_orientation() {
        let alg = r2ab();
        let c = s(&alg, "β^-1 α β");
        let inv = c.inverse();
        assert_eq!(inv.word(&alg), "β^-1 α^-1 β");
        assert_eq!(c.canonical(), inv.canonical());
        assert_eq!(s(&alg, "γ^-1").canonical(), s(&alg, "γ"));
    }

    #[test]
    fn factorization_of_beta_inverse_alpha_beta() {
        let alg = r2ab();
        let pieces: Vec<String> = factor_directed(&alg, &s(&alg, "β^-1 α β"))
            .iter()
            .map(|f| f.word(&alg))
            .collect();
        assert_eq!(pieces, vec!["β^-1", "α β"]);
    }

    #[test]
    fn hook_of_trivial_string() {
        let alg = r2ab();
        let h = hook_closure(&alg, &StringWord::Trivial(0));
        assert_eq!(h.word(&alg), "α^-1 β");
        assert_eq!(g_vector(&alg, &StringWord::Trivial(0)).0, vec![0, -1]);
    }

    #[test]
    fn hook_drops_loose_ends() {
        let alg = r2ab();
        assert_eq!(
            hook_closure(&alg, &s(&alg, "β^-1 α β")),
            StringWord::Trivial(0)
        );
        assert_eq!(
            hook_closure(&alg, &s(&alg, "α β")).canonical(),
            s(&alg, "β")
        );
        assert_eq!(
            hook_closure(&alg, &s(&alg, "α")).canonical(),
            s(&alg, "β^-1 α β").canonical()
        );
    }

    #[test]
    fn hook_inverse_commutes() {
        let alg = r2ab();
        for c in enumerate_strings(&alg, 6) {
            let a = hook_closure(&alg, &c.inverse());
            let b = hook_closure(&alg, &c).inverse();
            if !c.is_trivial() {
                assert_eq!(a.canonical(), b.canonical(), "{}", c.word(&alg));
            }
        }
    }

    #[test]
    fn g_vectors_of_projectives_and_x() {
        let alg = r2ab();
        assert_eq!(g_vector(&alg, &s(&alg, "β^-1 α β")).0, vec![1, 0]);
        assert_eq!(g_vector(&alg, &s(&alg, "γ α")).0, vec![0, 1]);
        assert_eq!(g_vector(&alg, &s(&alg, "α")).0, vec![1, -2]);
    }

    #[test]
    fn display_round_trip() {
        let alg = r2ab();
        let c = s(&alg, "β^-1 α β");
        assert_eq!(c.display(&alg), "1 ←β— 0 —αβ→ 1");
        assert_eq!(s(&alg, "1 ←β— 0 —αβ→ 1"), c);
        assert_eq!(s(&alg, "1"), StringWord::Trivial(1));
    }

    #[test]
    fn supports() {
        let alg = r2ab();
        // P_0 has composition factors at both vertices.
        let p0 = s(&alg, "β^-1 α β");
        assert_eq!(support(&alg, &p0), BTreeSet::from([0, 1]));
        // The trivial string at 1 gives the simple module at 1.
        assert_eq!(support(&alg, &StringWord::Trivial(1)), BTreeSet::from([1]));
    }

    #[test]
    fn enumeration_is_canonical_and_sorted() {
        let alg = r2ab();
        let all = enumerate_strings(&alg, 4);
        assert!(all.iter().all(StringWord::is_canonical));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all.iter().filter(|c| c.is_trivial()).count(), 2);
        assert_eq!(enumerate_strings(&alg, 0).len(), 2);
    }
}
