//! Exact rank of small integer matrices, over the rationals or a prime field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    /// The prime field with this many elements.
    Prime(u64),
}

/// Rank of the matrix whose rows are `rows`, all of equal length.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Rational => rank_i64(rows).unwrap_or_else(|| rank_big(rows)),
        Field::Prime(p) => rank_mod(rows, p),
    }
}

fn gcd_normalize(row: &mut [i64]) {
    let g = row.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Fraction-free elimination; `None` if an intermediate value overflows.
fn rank_i64(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len())
            .filter(|&i| m[i][c] != 0)
            .min_by_key(|&i| m[i][c].unsigned_abs())
        else {
            continue;
        };
        m.swap(r, pivot);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let p = pivot_row[c];
        for row in rest {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = x.checked_mul(p)?.checked_sub(y.checked_mul(f)?)?;
            }
            gcd_normalize(row);
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    Some(r)
}

fn rank_big(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].abs())
        else {
            continue;
        };
        m.swap(r, pivot);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let p = &pivot_row[c];
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = &*x * p - y * &f;
            }
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g > BigInt::from(1) {
                row.iter_mut().for_each(|x| *x /= &g);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

fn rank_mod(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i64;
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: i64| {
        // Fermat inverse; p is prime.
        let (mut base, mut exp, mut acc) = (a, p - 2, 1i64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        let scale = inv(m[r][c]);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &mut top[r];
        pivot_row[c..].iter_mut().for_each(|x| *x = *x * scale % p);
        for row in rest {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = (*x - f * y).rem_euclid(p);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&m, Field::Rational), 2);
        assert_eq!(rank(&[vec![2, 0], vec![0, 2]], Field::Prime(2)), 0);
        assert_eq!(rank(&[vec![2, 0], vec![0, 2]], Field::Prime(3)), 2);
        assert_eq!(rank(&[], Field::Rational), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigints() {
        let big = i64::MAX / 2;
        let m = vec![
            vec![big, big - 1, 1],
            vec![big - 1, big, 1],
            vec![1, 1, big],
        ];
        assert_eq!(rank_i64(&m), None);
        assert_eq!(rank(&m, Field::Rational), 3);
    }

    proptest! {
        #[test]
        fn agrees_with_bigint(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..6)) {
            prop_assert_eq!(rank_i64(&rows).unwrap(), rank_big(&rows));
        }

        #[test]
        fn mod_rank_never_exceeds_rational(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..6)) {
            let q = rank(&rows, Field::Rational);
            prop_assert!(rank(&rows, Field::Prime(2)) <= q);
            prop_assert!(rank(&rows, Field::Prime(3)) <= q);
        }
    }
}
