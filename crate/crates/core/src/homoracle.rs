//! Independent check of rigidity by linear algebra in the homotopy category.
//!
//! A two-term complex of projectives `P^{-1} -> P^0` is stored as the list of
//! vertices of its indecomposable summands in each degree plus the nonzero
//! entries of the differential, each a single path. For complexes `T` and
//! `U`, `Hom(T, U[1])` is the cokernel of
//! `(X, Y) |-> Y d_T - d_U X` from `Hom(T^{-1}, U^{-1}) + Hom(T^0, U^0)` to
//! `Hom(T^{-1}, U^0)`, so it vanishes exactly when that map is onto.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::linalg::{rank, Field};
use crate::presentation::{Algebra, Path};
use crate::rigidity::{is_c_rigid_hooked, RigidityOptions};
use crate::strings::{enumerate_strings, Hooked, PointKind, StringWord};

/// A map `P_f -> P_e` between indecomposable projectives is left
/// multiplication by a path from `e` to `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    /// Index into `degree_zero`.
    pub row: usize,
    /// Index into `degree_minus_one`.
    pub col: usize,
    pub path: Path,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwoTerm {
    pub degree_minus_one: Vec<usize>,
    pub degree_zero: Vec<usize>,
    pub differential: Vec<Entry>,
}

impl TwoTerm {
    /// Minimal projective presentation of a string module, built from the
    /// intermediate points of the hook closure.
    pub fn of_string(alg: &Algebra, c: &StringWord) -> Self {
        Self::of_hooked(alg, &Hooked::new(alg, c))
    }

    pub fn of_hooked(alg: &Algebra, h: &Hooked) -> Self {
        let mut out = TwoTerm::default();
        let mut slot = Vec::with_capacity(h.points.len());
        for p in &h.points {
            match p.kind {
                PointKind::Upper => {
                    slot.push(out.degree_zero.len());
                    out.degree_zero.push(p.vertex);
                }
                PointKind::Lower => {
                    slot.push(out.degree_minus_one.len());
                    out.degree_minus_one.push(p.vertex);
                }
            }
        }
        for (k, f) in h.factors.iter().enumerate() {
            // Factor k + 1 joins points k and k + 1; the upper one is its
            // source when the factor is direct.
            let (upper, lower) = if f.inverse { (k + 1, k) } else { (k, k + 1) };
            out.differential.push(Entry {
                row: slot[upper],
                col: slot[lower],
                path: Path::from_arrows(alg.quiver(), f.path.clone()),
            });
        }
        out
    }

    /// `P_e` concentrated in degree 0.
    pub fn projective(e: usize) -> Self {
        TwoTerm {
            degree_minus_one: Vec::new(),
            degree_zero: vec![e],
            differential: Vec::new(),
        }
    }

    /// `P_e[1]`, i.e. `P_e` concentrated in degree -1.
    pub fn shifted_projective(e: usize) -> Self {
        TwoTerm {
            degree_minus_one: vec![e],
            degree_zero: Vec::new(),
            differential: Vec::new(),
        }
    }

    /// Direct sum of complexes.
    pub fn sum<'a>(parts: impl IntoIterator<Item = &'a TwoTerm>) -> Self {
        let mut out = TwoTerm::default();
        for t in parts {
            let (r0, c0) = (out.degree_zero.len(), out.degree_minus_one.len());
            out.degree_zero.extend_from_slice(&t.degree_zero);
            out.degree_minus_one.extend_from_slice(&t.degree_minus_one);
            out.differential
                .extend(t.differential.iter().map(|e| Entry {
                    row: e.row + r0,
                    col: e.col + c0,
                    path: e.path.clone(),
                }));
        }
        out
    }

    /// Summands in degree 0 minus summands in degree -1, per vertex.
    pub fn g_vector(&self, vertex_count: usize) -> Vec<i64> {
        let mut g = vec![0; vertex_count];
        self.degree_zero.iter().for_each(|&v| g[v] += 1);
        self.degree_minus_one.iter().for_each(|&v| g[v] -= 1);
        g
    }
}

/// Dimension vector of the cokernel `H^0` of a two-term complex: at each
/// vertex `v`, `dim Hom(P_v, T^0)` minus the rank of `Hom(P_v, d)`.
pub fn cokernel_dimensions(alg: &Algebra, t: &TwoTerm) -> Vec<usize> {
    (0..alg.vertex_count())
        .map(|v| {
            let target = HomSpace::new(alg, &[v], &t.degree_zero);
            let mut rows = Vec::new();
            for (l, &lv) in t.degree_minus_one.iter().enumerate() {
                for w in alg.paths(lv, v) {
                    let mut row = vec![0i64; target.dim];
                    for e in t.differential.iter().filter(|e| e.col == l) {
                        if let Some(prod) = alg.multiply(&e.path, w) {
                            row[target.coord(alg, e.row, 0, &prod)] += 1;
                        }
                    }
                    rows.push(row);
                }
            }
            target.dim - rank(&rows, Field::Rational)
        })
        .collect()
}

/// Coordinates of `Hom(⊕ P_a, ⊕ P_b)`: one block of paths `b -> a` per pair.
struct HomSpace {
    offsets: Vec<Vec<usize>>,
    dim: usize,
}

impl HomSpace {
    fn new(alg: &Algebra, from: &[usize], to: &[usize]) -> Self {
        let mut dim = 0;
        let offsets = to
            .iter()
            .map(|&b| {
                from.iter()
                    .map(|&a| {
                        let start = dim;
                        dim += alg.paths(b, a).len();
                        start
                    })
                    .collect()
            })
            .collect();
        HomSpace { offsets, dim }
    }

    fn coord(&self, alg: &Algebra, row: usize, col: usize, p: &Path) -> usize {
        self.offsets[row][col] + alg.path_basis().position(p).expect("nonzero path")
    }
}

/// Matrix of the map whose cokernel is `Hom(t, u[1])`, one row per basis
/// element of the domain, together with the dimension of the codomain.
fn homotopy_rows(alg: &Algebra, t: &TwoTerm, u: &TwoTerm) -> (Vec<Vec<i64>>, usize) {
    let target = HomSpace::new(alg, &t.degree_minus_one, &u.degree_zero);
    let dim = target.dim;
    let mut rows = Vec::new();
    if dim == 0 {
        return (rows, 0);
    }
    // X: T^{-1} -> U^{-1}, composed with d_U on the left.
    for (p, &bv) in u.degree_minus_one.iter().enumerate() {
        for (i, &av) in t.degree_minus_one.iter().enumerate() {
            for w in alg.paths(bv, av) {
                let mut row = vec![0i64; dim];
                for e in u.differential.iter().filter(|e| e.col == p) {
                    if let Some(prod) = alg.multiply(&e.path, w) {
                        row[target.coord(alg, e.row, i, &prod)] -= 1;
                    }
                }
                rows.push(row);
            }
        }
    }
    // Y: T^0 -> U^0, composed with d_T on the right.
    for (j, &bv) in u.degree_zero.iter().enumerate() {
        for (q, &av) in t.degree_zero.iter().enumerate() {
            for w in alg.paths(bv, av) {
                let mut row = vec![0i64; dim];
                for e in t.differential.iter().filter(|e| e.row == q) {
                    if let Some(prod) = alg.multiply(w, &e.path) {
                        row[target.coord(alg, j, e.col, &prod)] += 1;
                    }
                }
                rows.push(row);
            }
        }
    }
    rows.retain(|r| r.iter().any(|&x| x != 0));
    (rows, dim)
}

/// The matrix of `(X, Y) |-> Y d_t - d_u X` in path-basis coordinates, one
/// row per domain basis element (zero rows dropped), and the dimension of
/// the codomain `Hom(t^{-1}, u^0)`.
pub fn shift_hom_matrix(alg: &Algebra, t: &TwoTerm, u: &TwoTerm) -> (Vec<Vec<i64>>, usize) {
    homotopy_rows(alg, t, u)
}

/// Dimension of `Hom(t, u[1])` over the given field.
pub fn hom_to_shift_dim(alg: &Algebra, t: &TwoTerm, u: &TwoTerm, field: Field) -> usize {
    let (rows, dim) = homotopy_rows(alg, t, u);
    dim - rank(&rows, field)
}

/// Whether `Hom(t, u[1])` vanishes.
pub fn hom_to_shift_vanishes(alg: &Algebra, t: &TwoTerm, u: &TwoTerm, field: Field) -> bool {
    let (rows, dim) = homotopy_rows(alg, t, u);
    dim == 0 || (rows.len() >= dim && rank(&rows, field) == dim)
}

/// Whether `d` is `c`-rigid, decided by linear algebra.
pub fn oracle_c_rigid(alg: &Algebra, c: &StringWord, d: &StringWord, field: Field) -> bool {
    hom_to_shift_vanishes(
        alg,
        &TwoTerm::of_string(alg, c),
        &TwoTerm::of_string(alg, d),
        field,
    )
}

/// Whether `e` lies in the support of the string module of `c`, decided by
/// `Hom(P_e, M(c)) = Hom(P_e[1], T(c)[1])`.
pub fn oracle_in_support(alg: &Algebra, e: usize, c: &StringWord) -> bool {
    !hom_to_shift_vanishes(
        alg,
        &TwoTerm::shifted_projective(e),
        &TwoTerm::of_string(alg, c),
        Field::Rational,
    )
}

/// A disagreement between a combinatorial verdict and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Discrepancy {
    Rigidity {
        c: StringWord,
        d: StringWord,
        combinatorial: bool,
        oracle: bool,
    },
    Support {
        vertex: usize,
        c: StringWord,
        combinatorial: bool,
        oracle: bool,
    },
    /// A matrix whose rank differs between the rationals and a prime field.
    FieldDependence {
        c: StringWord,
        d: StringWord,
        prime: u64,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossCheck {
    /// Distinct hook closures of the strings of length at most the bound.
    pub strings: usize,
    pub rigidity_checks: usize,
    pub support_checks: usize,
    /// Matrices whose rank was also computed over the fields with 2 and 3
    /// elements.
    pub field_checks: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl CrossCheck {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Hook-closed strings of length at most `max_len`, one per module.
pub fn hooked_strings(alg: &Algebra, max_len: usize) -> Vec<Hooked> {
    let mut seen = HashSet::new();
    enumerate_strings(alg, max_len)
        .into_iter()
        .map(|c| Hooked::new(alg, &c))
        .filter(|h| seen.insert(h.key()))
        .collect()
}

/// Compares the combinatorial rigidity and support predicates with the
/// oracle for every ordered pair of hook-closed strings up to `max_len` and
/// every vertex. With `fields`, each rank is also recomputed modulo 2 and 3.
pub fn cross_check(
    alg: &Algebra,
    max_len: usize,
    opts: RigidityOptions,
    fields: bool,
) -> CrossCheck {
    let hooked = hooked_strings(alg, max_len);
    let complexes: Vec<TwoTerm> = hooked.iter().map(|h| TwoTerm::of_hooked(alg, h)).collect();
    let n = hooked.len();
    let rows: Vec<(Vec<Discrepancy>, usize)> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut found = Vec::new();
            let mut field_checks = 0;
            for b in 0..n {
                let (matrix, dim) = homotopy_rows(alg, &complexes[a], &complexes[b]);
                let r = rank(&matrix, Field::Rational);
                let oracle = r == dim;
                let combinatorial = is_c_rigid_hooked(alg, &hooked[a], &hooked[b], opts);
                if oracle != combinatorial {
                    found.push(Discrepancy::Rigidity {
                        c: hooked[a].closure.clone(),
                        d: hooked[b].closure.clone(),
                        combinatorial,
                        oracle,
                    });
                }
                if fields && !matrix.is_empty() {
                    field_checks += 1;
                    for prime in [2, 3] {
                        if rank(&matrix, Field::Prime(prime)) != r {
                            found.push(Discrepancy::FieldDependence {
                                c: hooked[a].closure.clone(),
                                d: hooked[b].closure.clone(),
                                prime,
                            });
                        }
                    }
                }
            }
            let support = hooked[a].support(alg);
            for e in 0..alg.vertex_count() {
                let oracle = !hom_to_shift_vanishes(
                    alg,
                    &TwoTerm::shifted_projective(e),
                    &complexes[a],
                    Field::Rational,
                );
                let combinatorial = support.contains(&e);
                if oracle != combinatorial {
                    found.push(Discrepancy::Support {
                        vertex: e,
                        c: hooked[a].closure.clone(),
                        combinatorial,
                        oracle,
                    });
                }
            }
            (found, field_checks)
        })
        .collect();
    let mut report = CrossCheck {
        strings: n,
        rigidity_checks: n * n,
        support_checks: n * alg.vertex_count(),
        ..CrossCheck::default()
    };
    for (found, checks) in rows {
        report.discrepancies.extend(found);
        report.field_checks += checks;
    }
    report
}
