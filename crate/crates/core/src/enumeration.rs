//! Rigid objects, support τ-tilting pairs, their partial order and the Hasse
//! quiver.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use thiserror::Error;

use crate::presentation::Algebra;
use crate::rigidity::{is_c_rigid_hooked, RigidityOptions};
use crate::strings::{enumerate_strings, GVector, Hooked, StringWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("LengthCapExceeded cap={cap}")]
    LengthCapExceeded { cap: usize },
    #[error("CompletionCountMismatch count={count}")]
    CompletionCountMismatch { count: usize },
    #[error("OrderInconsistent from={from} to={to}")]
    OrderInconsistent { from: usize, to: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RigidKind {
    /// A rigid string module, identified by the canonical hook closure.
    String {
        representative: StringWord,
        hooked: Hooked,
    },
    /// `P_e[1]`.
    Shifted(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidObject {
    pub kind: RigidKind,
    pub g: GVector,
    /// Support of the string module; empty for shifted projectives.
    pub support: BTreeSet<usize>,
}

impl RigidObject {
    pub fn is_shifted(&self) -> bool {
        matches!(self.kind, RigidKind::Shifted(_))
    }

    pub fn key(&self) -> Option<StringWord> {
        match &self.kind {
            RigidKind::String { hooked, .. } => Some(hooked.key()),
            RigidKind::Shifted(_) => None,
        }
    }
}

/// The rigid objects found up to some string length, with the vanishing of
/// `Hom(T_a, T_b[1])` tabulated for every ordered pair.
#[derive(Debug, Clone)]
pub struct RigidUniverse {
    pub max_len: usize,
    pub objects: Vec<RigidObject>,
    vanishes: Vec<Vec<bool>>,
}

impl RigidUniverse {
    /// Whether `Hom(T_a, T_b[1]) = 0`. For strings this is "`b` is
    /// `a`-rigid"; for a shifted `a = P_e[1]` it says `e` misses the support
    /// of `b`.
    pub fn vanishes(&self, a: usize, b: usize) -> bool {
        self.vanishes[a][b]
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.vanishes[a][b] && self.vanishes[b][a]
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn string_count(&self) -> usize {
        self.objects.iter().filter(|o| !o.is_shifted()).count()
    }

    /// `N <= M` in the order on pairs: `Hom(T_M, T_N[1]) = 0`.
    pub fn order_leq(&self, n: &[usize], m: &[usize]) -> bool {
        m.iter().all(|&a| n.iter().all(|&b| self.vanishes[a][b]))
    }

    /// The completions of an almost complete compatible set among `pairs`.
    pub fn mutation_completions(
        &self,
        almost: &[usize],
        pairs: &[Vec<usize>],
    ) -> Result<(Vec<usize>, Vec<usize>), EnumerationError> {
        let found: Vec<&Vec<usize>> = pairs
            .iter()
            .filter(|p| almost.iter().all(|a| p.contains(a)))
            .collect();
        match found.as_slice() {
            [a, b] => Ok(((*a).clone(), (*b).clone())),
            _ => Err(EnumerationError::CompletionCountMismatch { count: found.len() }),
        }
    }
}

fn shifted(alg: &Algebra, e: usize) -> RigidObject {
    let mut g = vec![0; alg.vertex_count()];
    g[e] = -1;
    RigidObject {
        kind: RigidKind::Shifted(e),
        g: GVector(g),
        support: BTreeSet::new(),
    }
}

/// Self-rigid string classes of length at most `max_len`, deduplicated by
/// hook closure, plus one shifted projective per vertex; sorted by
/// decreasing g-vector.
pub fn rigid_objects(alg: &Algebra, max_len: usize, opts: RigidityOptions) -> RigidUniverse {
    let strings = enumerate_strings(alg, max_len);
    let rigid: Vec<(StringWord, Hooked)> = strings
        .par_iter()
        .filter_map(|c| {
            let h = Hooked::new(alg, c);
            is_c_rigid_hooked(alg, &h, &h, opts).then(|| (c.clone(), h))
        })
        .collect();
    let mut seen = HashSet::new();
    let mut objects = Vec::new();
    for (c, h) in rigid {
        if seen.insert(h.key()) {
            objects.push(RigidObject {
                g: h.g_vector(alg.vertex_count()),
                support: h.support(alg),
                kind: RigidKind::String {
                    representative: c,
                    hooked: h,
                },
            });
        }
    }
    objects.extend((0..alg.vertex_count()).map(|e| shifted(alg, e)));
    objects.sort_by(|a, b| b.g.cmp(&a.g));
    let vanishes = objects
        .par_iter()
        .map(|a| {
            objects
                .iter()
                .map(|b| match (&a.kind, &b.kind) {
                    (
                        RigidKind::String { hooked: ha, .. },
                        RigidKind::String { hooked: hb, .. },
                    ) => is_c_rigid_hooked(alg, ha, hb, opts),
                    (RigidKind::Shifted(e), RigidKind::String { .. }) => !b.support.contains(e),
                    (_, RigidKind::Shifted(_)) => true,
                })
                .collect()
        })
        .collect();
    RigidUniverse {
        max_len,
        objects,
        vanishes,
    }
}

/// All sets of `|A|` pairwise compatible rigid objects, each sorted, in
/// lexicographic order.
pub fn support_tau_tilting_pairs(alg: &Algebra, universe: &RigidUniverse) -> Vec<Vec<usize>> {
    let n = alg.vertex_count();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    extend_clique(universe, n, 0, &mut chosen, &mut out);
    out
}

fn extend_clique(
    u: &RigidUniverse,
    size: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == size {
        out.push(chosen.clone());
        return;
    }
    for k in from..u.len() {
        if chosen.iter().all(|&c| u.compatible(c, k)) {
            chosen.push(k);
            extend_clique(u, size, k + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// Support τ-tilting pairs joined by their mutations, each edge pointing
/// from the larger pair to the smaller one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HassePoset {
    pub nodes: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl HassePoset {
    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == node || *b == node)
            .count()
    }

    pub fn sources(&self) -> Vec<usize> {
        let targets: HashSet<usize> = self.edges.iter().map(|e| e.1).collect();
        (0..self.nodes.len())
            .filter(|v| !targets.contains(v))
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        let origins: HashSet<usize> = self.edges.iter().map(|e| e.0).collect();
        (0..self.nodes.len())
            .filter(|v| !origins.contains(v))
            .collect()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        let mut count = vec![0; self.nodes.len()];
        for &(a, b) in &self.edges {
            count[a] += 1;
            count[b] += 1;
        }
        count.iter().all(|&c| c == degree)
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Joins pairs that share all but one member and orients each edge by the
/// partial order.
pub fn hasse_poset(
    universe: &RigidUniverse,
    pairs: &[Vec<usize>],
) -> Result<HassePoset, EnumerationError> {
    let mut by_almost: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (idx, p) in pairs.iter().enumerate() {
        for skip in 0..p.len() {
            let mut almost = p.clone();
            almost.remove(skip);
            by_almost.entry(almost).or_default().push(idx);
        }
    }
    let mut edges = Vec::new();
    for group in by_almost.values() {
        if let [a, b] = group.as_slice() {
            let (a, b) = (*a, *b);
            let a_ge_b = universe.order_leq(&pairs[b], &pairs[a]);
            let b_ge_a = universe.order_leq(&pairs[a], &pairs[b]);
            match (a_ge_b, b_ge_a) {
                (true, false) => edges.push((a, b)),
                (false, true) => edges.push((b, a)),
                _ => return Err(EnumerationError::OrderInconsistent { from: a, to: b }),
            }
        }
    }
    edges.sort_unstable();
    Ok(HassePoset {
        nodes: pairs.to_vec(),
        edges,
    })
}

/// Everything computed for one algebra at an accepted string length.
#[derive(Debug, Clone)]
pub struct Classification {
    pub universe: RigidUniverse,
    pub pairs: Vec<Vec<usize>>,
    pub hasse: HassePoset,
}

impl Classification {
    /// Whether the poset is `|A|`-regular and connected, which certifies that
    /// nothing is missing.
    pub fn is_complete(&self, vertex_count: usize) -> bool {
        self.hasse.is_regular(vertex_count) && self.hasse.is_connected()
    }
}

/// Classification at one fixed string length, complete or not.
pub fn classify_at(
    alg: &Algebra,
    max_len: usize,
    opts: RigidityOptions,
) -> Result<Classification, EnumerationError> {
    let universe = rigid_objects(alg, max_len, opts);
    let pairs = support_tau_tilting_pairs(alg, &universe);
    let hasse = hasse_poset(&universe, &pairs)?;
    Ok(Classification {
        universe,
        pairs,
        hasse,
    })
}

/// Default cap on the string length used by [`build_hasse`].
pub const DEFAULT_LENGTH_CAP: usize = 64;

/// Classifies with iterative deepening: starting from `initial_len` (by
/// default the dimension of the algebra), doubles the string length until
/// the Hasse quiver is `|A|`-regular and connected, failing past `cap`.
pub fn build_hasse(
    alg: &Algebra,
    initial_len: Option<usize>,
    cap: usize,
    opts: RigidityOptions,
) -> Result<Classification, EnumerationError> {
    let mut len = initial_len
        .unwrap_or_else(|| alg.dimension())
        .max(1)
        .min(cap);
    loop {
        let found = classify_at(alg, len, opts)?;
        if found.is_complete(alg.vertex_count()) {
            return Ok(found);
        }
        if len >= cap {
            return Err(EnumerationError::LengthCapExceeded { cap });
        }
        len = (len * 2).min(cap);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn classify(name: &str) -> Classification {
        let alg = catalog::algebra(name).unwrap();
        build_hasse(&alg, None, DEFAULT_LENGTH_CAP, RigidityOptions::default()).unwrap()
    }

    #[test]
    fn w2b_is_a_hexagon() {
        let c = classify("W(2B)");
        assert_eq!(c.universe.string_count(), 4);
        assert_eq!(c.pairs.len(), 6);
        assert_eq!(c.hasse.edges.len(), 6);
        assert_eq!(c.hasse.sources().len(), 1);
        assert_eq!(c.hasse.sinks().len(), 1);
    }

    #[test]
    fn r2ab_is_an_octagon() {
        let c = classify("R(2AB)");
        assert_eq!(c.universe.string_count(), 6);
        assert_eq!(c.pairs.len(), 8);
        assert!(c.is_complete(2));
    }

    #[test]
    fn one_vertex_algebra() {
        let alg =
            Algebra::parse(r#"{"name": "k", "vertices": ["0"], "arrows": [], "relations": []}"#)
                .unwrap();
        let c = build_hasse(&alg, None, 8, RigidityOptions::default()).unwrap();
        assert_eq!(c.universe.len(), 2);
        assert_eq!(c.pairs.len(), 2);
        assert_eq!(c.hasse.edges, vec![(0, 1)]);
        let (a, b) = c.universe.mutation_completions(&[], &c.pairs).unwrap();
        assert_eq!((a, b), (vec![0], vec![1]));
    }

    #[test]
    fn cap_is_reported() {
        let alg = catalog::algebra("R(3ABD)").unwrap();
        let err = build_hasse(&alg, Some(1), 1, RigidityOptions::default()).unwrap_err();
        assert_eq!(err, EnumerationError::LengthCapExceeded { cap: 1 });
    }
}
