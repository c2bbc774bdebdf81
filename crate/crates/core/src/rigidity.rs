//! Combinatorial test for the vanishing of `Hom(T(C), T(D)[1])` between the
//! minimal projective presentations of two string modules.

use crate::presentation::Algebra;
use crate::strings::{Factor, Hooked, PointKind, StringWord};

/// Which pairs of intermediate points are compared in the coincidence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoincidenceRange {
    /// Every pair `(i, j)` with `0 <= i <= m`, `0 <= j <= n`.
    #[default]
    Full,
    /// Only `1 <= i <= m`, `1 <= j <= n`, skipping the starting points.
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RigidityOptions {
    pub coincidences: CoincidenceRange,
}

/// Whether `d` is `c`-rigid.
pub fn is_c_rigid(alg: &Algebra, c: &StringWord, d: &StringWord) -> bool {
    is_c_rigid_hooked(
        alg,
        &Hooked::new(alg, c),
        &Hooked::new(alg, d),
        RigidityOptions::default(),
    )
}

/// Whether `c` is `c`-rigid.
pub fn is_self_rigid(alg: &Algebra, c: &StringWord) -> bool {
    let h = Hooked::new(alg, c);
    is_c_rigid_hooked(alg, &h, &h, RigidityOptions::default())
}

/// Whether the direct sum of the two string modules is rigid.
pub fn compatible(alg: &Algebra, c: &StringWord, d: &StringWord) -> bool {
    let hc = Hooked::new(alg, c);
    let hd = Hooked::new(alg, d);
    let opts = RigidityOptions::default();
    is_c_rigid_hooked(alg, &hc, &hd, opts) && is_c_rigid_hooked(alg, &hd, &hc, opts)
}

pub fn is_c_rigid_hooked(alg: &Algebra, c: &Hooked, d: &Hooked, opts: RigidityOptions) -> bool {
    paths_factor(alg, c, d) && coincidences_resolve(c, d, opts)
}

/// Every nonzero path from an upper point of `d` to a lower point of `c`
/// starts with an adjacent piece of the former or ends with one of the
/// latter.
fn paths_factor(alg: &Algebra, c: &Hooked, d: &Hooked) -> bool {
    for (i, lower) in c.points.iter().enumerate() {
        if lower.kind != PointKind::Lower {
            continue;
        }
        for (j, upper) in d.points.iter().enumerate() {
            if upper.kind != PointKind::Upper {
                continue;
            }
            for w in alg.paths(upper.vertex, lower.vertex) {
                let through_d = d.adjacent(j).any(|x| w.starts_with(&x.path));
                let through_c = c.adjacent(i).any(|y| w.ends_with(&y.path));
                if !through_d && !through_c {
                    return false;
                }
            }
        }
    }
    true
}

fn coincidences_resolve(c: &Hooked, d: &Hooked, opts: RigidityOptions) -> bool {
    let lo = match opts.coincidences {
        CoincidenceRange::Full => 0,
        CoincidenceRange::Interior => 1,
    };
    let flipped: Vec<Factor> = d.factors.iter().rev().map(Factor::inverted).collect();
    for i in lo..c.points.len() {
        for j in lo..d.points.len() {
            let (p, q) = (c.points[i], d.points[j]);
            if p.vertex != q.vertex || p.kind != q.kind {
                continue;
            }
            if !coincidence_ok(c, i, &d.factors, &flipped, j) {
                return false;
            }
        }
    }
    true
}

fn aligned(cf: &[Factor], i: usize, df: &[Factor], j: usize) -> bool {
    let (m, n) = (cf.len(), df.len());
    let starts = !(i < m && j < n) || cf[i].first_letter() == df[j].first_letter();
    let ends = !(i > 0 && j > 0) || cf[i - 1].last_letter() == df[j - 1].last_letter();
    starts && ends
}

/// Resolves one coincidence, trying each orientation of `d` that lines up
/// with `c` at the shared point, or both if neither does.
fn coincidence_ok(c: &Hooked, i: usize, df: &[Factor], flipped: &[Factor], j: usize) -> bool {
    let n = df.len();
    let orientations = [(df, j), (flipped, n - j)];
    let matching: Vec<_> = orientations
        .iter()
        .filter(|(f, jj)| aligned(&c.factors, i, f, *jj))
        .collect();
    let candidates: Vec<_> = if matching.is_empty() {
        orientations.iter().collect()
    } else {
        matching
    };
    candidates
        .into_iter()
        .any(|(f, jj)| [1, -1].iter().any(|&sigma| walk_ok(c, i, f, *jj, sigma)))
}

/// Follows the common run of factors from the coincidence in direction
/// `sigma` and checks how the two walks part.
fn walk_ok(c: &Hooked, i: usize, df: &[Factor], j: usize, sigma: i64) -> bool {
    let cf = &c.factors;
    let (m, n) = (cf.len() as i64, df.len() as i64);
    let (i, j) = (i as i64, j as i64);
    let t = if sigma == 1 { 1 } else { 0 };
    // Factors are 1-based in the walk; index k lives at position k - 1.
    let c_at = |k: i64| &cf[(k - 1) as usize];
    let d_at = |k: i64| &df[(k - 1) as usize];
    let mut e = 0i64;
    loop {
        let (ni, nj) = (i + sigma * (e + 1), j + sigma * (e + 1));
        if !(0..=m).contains(&ni) || !(0..=n).contains(&nj) {
            break;
        }
        let (ci, dj) = (i + sigma * e + t, j + sigma * e + t);
        if c_at(ci) != d_at(dj) {
            break;
        }
        e += 1;
    }
    let k = i + sigma * e;
    let c_rim = matches!(i + sigma * (e + 1), x if x == -1 || x == m + 1);
    let d_rim = matches!(j + sigma * (e + 1), x if x == -1 || x == n + 1);
    match c.points[k as usize].kind {
        PointKind::Upper => {
            if c_rim {
                return true;
            }
            if d_rim {
                return false;
            }
            let cp = &c_at(k + t).path;
            let dp = &d_at(j + sigma * e + t).path;
            cp.len() > dp.len() && cp.starts_with(dp)
        }
        PointKind::Lower => {
            if d_rim {
                return true;
            }
            if c_rim {
                return false;
            }
            let cp = &c_at(k + t).path;
            let dp = &d_at(j + sigma * e + t).path;
            dp.len() > cp.len() && dp.ends_with(cp)
        }
    }
}
