//! Small exact combinatorics shared by the enumeration modules.

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)` by the multiplicative formula; every partial product is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All `(k_1, ..., k_parts)` of nonnegative integers summing to `total`, in
/// colexicographic order (last coordinate most significant).
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u64; parts];
    fill(total, parts - 1, &mut cur, &mut out);
    out
}

// Assigns coordinate `idx` in increasing order, from the last coordinate down,
// which produces colex order.
fn fill(remaining: u64, idx: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if idx == 0 {
        cur[0] = remaining;
        out.push(cur.clone());
        return;
    }
    for v in 0..=remaining {
        cur[idx] = v;
        fill(remaining - v, idx - 1, cur, out);
    }
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}
