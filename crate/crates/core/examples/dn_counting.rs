//! `D_n` counts the points of a union of permuted boxes.

use num_bigint::BigInt;
use puregaps::pure_gaps::{
    d_n, pure_gap_count, pure_gap_count_multiple_plus_one, union_card_bruteforce,
};
use puregaps::KummerCurve;

fn main() -> puregaps::Result<()> {
    for a in [vec![2, 1], vec![4, 3, 3], vec![5, 4, 3], vec![6, 6, 2, 1]] {
        println!(
            "D_{}({a:?}) = {}  brute force {}",
            a.len(),
            d_n(&a),
            union_card_bruteforce(&a)?
        );
    }
    // Large inputs stay exact.
    let big: Vec<i64> = (1..=12).rev().map(|x| 1000 * x).collect();
    let d: BigInt = d_n(&big);
    println!("D_12(12000, ..., 1000) = {d}");

    // m = u r + 1 has its own closed form.
    let curve = KummerCurve::new(5, 4, 1)?;
    println!(
        "(5,4), n=2: {} by levels, {} by the m = r + 1 formula",
        pure_gap_count(&curve, 2)?,
        pure_gap_count_multiple_plus_one(&curve, 2, 1)?
    );
    Ok(())
}
