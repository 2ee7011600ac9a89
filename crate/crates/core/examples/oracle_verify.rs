//! Brute-force Riemann-Roch scan against the closed-form pure-gap set.

use std::collections::BTreeSet;

use puregaps::pure_gaps::pure_gaps;
use puregaps::{KummerCurve, Oracle, TupleZ};

fn main() -> puregaps::Result<()> {
    for (m, r, n) in [(3, 4, 2), (4, 7, 3), (3, 8, 3), (2, 11, 3)] {
        let curve = KummerCurve::new(m, r, 1)?;
        let oracle = Oracle::first_places(&curve, n)?;
        let b = 2 * curve.genus();
        let mut scanned = BTreeSet::new();
        let mut cur = vec![0i64; n];
        'scan: loop {
            let t = TupleZ::new(cur.clone());
            if oracle.is_pure_gap(&t)? {
                scanned.insert(t);
            }
            for j in (0..n).rev() {
                if cur[j] < b {
                    cur[j] += 1;
                    continue 'scan;
                }
                cur[j] = 0;
            }
            break;
        }
        let closed: BTreeSet<TupleZ> = pure_gaps(&curve, n)?.iter().collect();
        println!(
            "{curve}, n = {n}: oracle {} / closed form {} -> {}",
            scanned.len(),
            closed.len(),
            if scanned == closed {
                "agree"
            } else {
                "DISAGREE"
            }
        );
    }
    Ok(())
}
