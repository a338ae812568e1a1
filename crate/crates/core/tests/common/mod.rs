//! Independent oracles shared by the integration tests. Nothing here calls the
//! elimination code under test.
#![allow(dead_code)]

use hurewicz_core::{Int, IntMatrix};
use num_traits::ToPrimitive;

pub fn to_rows(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_i128().expect("small entry")).collect())
        .collect()
}

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k × k` minors; 0 when they all vanish.
pub fn minor_gcd(m: &[Vec<i128>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for r in subsets(rows, k) {
        for c in subsets(cols, k) {
            let sub: Vec<Vec<i128>> = r.iter().map(|&i| c.iter().map(|&j| m[i][j]).collect()).collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

/// Rank as the largest `k` with a nonzero `k × k` minor.
pub fn minor_rank(m: &[Vec<i128>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..=rows.min(cols)).rev().find(|&k| minor_gcd(m, k) != 0).unwrap_or(0)
}

pub fn matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_fn(rows.len(), cols, |i, j| Int::from(rows[i][j]))
}

/// `Z/n_0 ⊕ .. ⊕ Z/n_k` elements as digit vectors.
pub fn elements(orders: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &n in orders {
        out = out
            .into_iter()
            .flat_map(|e| {
                (0..n).map(move |d| {
                    let mut e = e.clone();
                    e.push(d);
                    e
                })
            })
            .collect();
    }
    out
}

pub fn add(orders: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).zip(orders).map(|((x, y), n)| (x + y) % n).collect()
}

pub fn scale(orders: &[u64], k: i64, a: &[u64]) -> Vec<u64> {
    a.iter()
        .zip(orders)
        .map(|(&x, &n)| ((k.rem_euclid(n as i64) as u64) * x) % n)
        .collect()
}

/// Every abelian group of order at most `n` as cyclic orders in divisibility order.
pub fn abelian_groups_up_to(n: u64) -> Vec<Vec<u64>> {
    fn go(remaining: u64, last: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>, bound: u64) {
        out.push(cur.clone());
        for d in 2..=remaining {
            if remaining / d == 0 || d * cur.iter().product::<u64>() > bound {
                continue;
            }
            // invariant factors: each divides the next
            if last != 1 && d % last != 0 {
                continue;
            }
            cur.push(d);
            go(remaining / d, d, cur, out, bound);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out, n);
    out
}
