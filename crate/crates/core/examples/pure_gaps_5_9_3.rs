//! The 382 pure gaps at three ramified places of the genus-16 curve
//! `y^5 = prod_{j=1}^{9} (x - a_j)`, level by level.

use puregaps::combinat::compositions;
use puregaps::pure_gaps::{d_n, g_k_zero, pure_gaps};
use puregaps::KummerCurve;

fn main() -> puregaps::Result<()> {
    let curve = KummerCurve::new(5, 9, 1)?;
    let set = pure_gaps(&curve, 3)?;
    for bx in set.boxes() {
        println!(
            "k = {}: B_k bounds {:?}, |G_(k,0,0)| = {}, {} boxes",
            bx.k,
            bx.bounds,
            d_n(&bx.bounds),
            compositions(bx.k, 3).len()
        );
    }
    let g4: Vec<String> = g_k_zero(&curve, 3, 4)?
        .iter()
        .map(|t| t.to_string())
        .collect();
    println!("G_(4,0,0) = {{{}}}", g4.join(", "));
    println!("total: {}", set.count());
    let first: Vec<String> = set.iter().take(8).map(|t| t.to_string()).collect();
    println!("first in lexicographic order: {}", first.join(" "));
    Ok(())
}
