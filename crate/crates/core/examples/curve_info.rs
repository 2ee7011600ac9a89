//! Genus, canonical divisor, periods and a few Riemann-Roch dimensions.
//!
//! cargo run --example curve_info -- 5 9

use puregaps::oracle::{ell, verify_period};
use puregaps::{Divisor, KummerCurve, PlaceId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (m, r) = match args[..] {
        [m, r, ..] => (m, r),
        _ => (5, 9),
    };
    let curve = KummerCurve::new(m, r, 1)?;
    println!("{curve}");
    println!("as JSON: {}", serde_json::to_string(&curve)?);

    let w = curve.canonical_divisor();
    println!("W = {w}, l(W) = {}", ell(&curve, &w)?.dim);
    println!(
        "period(P1, P2) = {}",
        verify_period(&curve, PlaceId::Ramified(1), PlaceId::Ramified(2))?
    );

    let p1 = PlaceId::Ramified(1);
    for a in 0..=2 * curve.genus() {
        let d = Divisor::single(p1, a);
        let e = ell(&curve, &d)?;
        println!("l({a}P1) = {:>2}   per residue {:?}", e.dim, e.per_residue);
    }
    Ok(())
}
