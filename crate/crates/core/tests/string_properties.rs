use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use tautilt::catalog;
use tautilt::homoracle::{cokernel_dimensions, TwoTerm};
use tautilt::presentation::Algebra;
use tautilt::strings::{enumerate_strings, hook_closure, Hooked, PointKind, StringWord};

const MAX_LEN: usize = 9;

/// Every catalog algebra with all of its strings up to `MAX_LEN`.
fn fixtures() -> &'static [(Algebra, Vec<StringWord>)] {
    static CELL: OnceLock<Vec<(Algebra, Vec<StringWord>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog::names()
            .iter()
            .map(|n| {
                let alg = catalog::algebra(n).unwrap();
                let strings = enumerate_strings(&alg, MAX_LEN);
                (alg, strings)
            })
            .collect()
    })
}

/// A random string of a random catalog algebra, in a random orientation.
fn any_string() -> impl Strategy<Value = (usize, StringWord)> {
    (
        0..fixtures().len(),
        any::<prop::sample::Index>(),
        any::<bool>(),
    )
        .prop_map(|(a, i, flip)| {
            let c = i.get(&fixtures()[a].1).clone();
            (a, if flip { c.inverse() } else { c })
        })
}

/// Vertices visited by the walk, with multiplicity.
fn dimension_vector(alg: &Algebra, c: &StringWord) -> Vec<usize> {
    let mut dims = vec![0; alg.vertex_count()];
    dims[c.source(alg)] += 1;
    for l in c.letters() {
        dims[l.target(alg)] += 1;
    }
    dims
}

fn reachable(alg: &Algebra, from: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    let starts: BTreeSet<usize> = from.into_iter().collect();
    alg.path_basis()
        .iter()
        .filter(|p| starts.contains(&p.source()))
        .map(|p| p.target())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn hook_closure_commutes_with_inversion((a, c) in any_string()) {
        let alg = &fixtures()[a].0;
        prop_assert_eq!(
            hook_closure(alg, &c.inverse()).canonical(),
            hook_closure(alg, &c).inverse().canonical()
        );
    }

    #[test]
    fn g_vector_ignores_orientation((a, c) in any_string()) {
        let alg = &fixtures()[a].0;
        let n = alg.vertex_count();
        prop_assert_eq!(
            Hooked::new(alg, &c).g_vector(n),
            Hooked::new(alg, &c.inverse()).g_vector(n)
        );
    }

    #[test]
    fn intermediate_points_alternate((a, c) in any_string()) {
        let alg = &fixtures()[a].0;
        let closure = hook_closure(alg, &c);
        let points = closure.intermediate_points(alg);
        let expected = if closure.is_trivial() { 1 } else { closure.factors(alg).len() + 1 };
        prop_assert_eq!(points.len(), expected);
        for w in points.windows(2) {
            prop_assert_ne!(w[0].kind, w[1].kind);
        }
        let uppers = points.iter().filter(|p| p.kind == PointKind::Upper).count() as i64;
        let lowers = points.len() as i64 - uppers;
        prop_assert!((uppers - lowers).abs() <= 1);
    }

    #[test]
    fn canonical_is_idempotent((a, c) in any_string()) {
        let _ = a;
        let k = c.canonical();
        prop_assert_eq!(k.canonical(), k.clone());
        prop_assert_eq!(c.inverse().canonical(), k.clone());
        prop_assert!(k.is_canonical());
    }

    #[test]
    fn display_round_trips((a, c) in any_string()) {
        let alg = &fixtures()[a].0;
        prop_assert_eq!(StringWord::parse(alg, &c.display(alg)).unwrap(), c.clone());
        prop_assert_eq!(StringWord::parse(alg, &c.word(alg)).unwrap(), c);
    }

    #[test]
    fn support_stays_within_reach((a, c) in any_string()) {
        let alg = &fixtures()[a].0;
        let h = Hooked::new(alg, &c);
        let visited = h.points.iter().map(|p| p.vertex);
        let support = h.support(alg);
        prop_assert!(support.is_subset(&reachable(alg, visited)));
    }

    #[test]
    fn presentation_is_minimal_with_the_right_cokernel((a, c) in any_string()) {
        let alg = &fixtures()[a].0;
        let t = TwoTerm::of_string(alg, &c);
        prop_assert!(t.differential.iter().all(|e| !e.path.is_empty()));
        prop_assert_eq!(cokernel_dimensions(alg, &t), dimension_vector(alg, &c));
        prop_assert_eq!(t.g_vector(alg.vertex_count()), Hooked::new(alg, &c).g_vector(alg.vertex_count()).0);
    }

    #[test]
    fn support_is_where_the_module_lives((a, c) in any_string()) {
        let alg = &fixtures()[a].0;
        let support = Hooked::new(alg, &c).support(alg);
        let dims = dimension_vector(alg, &c);
        let nonzero: BTreeSet<usize> = (0..dims.len()).filter(|&v| dims[v] > 0).collect();
        prop_assert_eq!(support, nonzero);
    }
}

#[test]
fn path_basis_has_no_relation_subwords() {
    for (alg, _) in fixtures() {
        for p in alg.path_basis().iter() {
            for r in alg.relations() {
                assert!(!p.arrows().windows(r.len()).any(|w| w == r.as_slice()));
            }
        }
    }
}

#[test]
fn nonzero_paths_extend_uniquely() {
    for (alg, _) in fixtures() {
        for p in alg.path_basis().iter().filter(|p| !p.is_empty()) {
            let right = alg
                .quiver()
                .arrows_from(p.target())
                .iter()
                .filter(|&&a| alg.is_nonzero(&[p.arrows(), &[a]].concat()))
                .count();
            let left = alg
                .quiver()
                .arrows_into(p.source())
                .iter()
                .filter(|&&a| alg.is_nonzero(&[&[a], p.arrows()].concat()))
                .count();
            assert!(
                right <= 1 && left <= 1,
                "{} in {}",
                alg.path_label(p),
                alg.name()
            );
        }
    }
}
