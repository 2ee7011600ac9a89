//! Gap sequences at an affine ramified place and at infinity.

use puregaps::maximals::h_one_place;
use puregaps::KummerCurve;

fn main() -> puregaps::Result<()> {
    for (m, r) in [(3, 4), (5, 9), (4, 7), (7, 3)] {
        let curve = KummerCurve::new(m, r, 1)?;
        let at_p1 = h_one_place(&curve, false);
        let at_inf = h_one_place(&curve, true);
        println!("{curve}");
        println!("  P1:   {:?}", at_p1.gaps);
        println!("  Pinf: {:?}", at_inf.gaps);
    }
    Ok(())
}
