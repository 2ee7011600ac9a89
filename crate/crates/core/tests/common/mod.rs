#![allow(dead_code)]

use puregaps::{KummerCurve, TupleZ};

/// All curves `y^m = prod (x - a_j)` with `gcd(m, r) = 1` and genus at most
/// `max_genus`.
pub fn small_curves(max_genus: i64) -> Vec<KummerCurve> {
    let mut out = Vec::new();
    for m in 2..=2 * max_genus as u32 + 1 {
        for r in 2..=2 * max_genus as u32 + 1 {
            if let Ok(c) = KummerCurve::new(m, r, 1) {
                if c.genus() <= max_genus {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Every integer tuple in `prod [lo_j, hi_j]`, lexicographically.
pub fn lattice_box(lo: &[i64], hi: &[i64]) -> Vec<TupleZ> {
    let mut out = Vec::new();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return out;
    }
    let mut cur = lo.to_vec();
    loop {
        out.push(TupleZ::new(cur.clone()));
        let mut j = cur.len();
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j];
        }
    }
}

/// Representatives of `C(P)` that can be maximal: coordinates `2..n` in
/// `[0, m)`, first coordinate between `-(n-1)(m-1)` (nonzero spaces have
/// nonnegative degree) and `2g - 2 + n` (above that, lowering every
/// coordinate drops the dimension by exactly `n`).
pub fn maximal_search_box(c: &KummerCurve, n: usize) -> Vec<TupleZ> {
    let (m, g) = (c.m(), c.genus());
    let mut lo = vec![0; n];
    let mut hi = vec![m - 1; n];
    lo[0] = -(n as i64 - 1) * (m - 1);
    hi[0] = 2 * g - 2 + n as i64;
    lattice_box(&lo, &hi)
}
