//! Absolute and relative maximal elements at three places of `y^5 = f(x)`
//! with nine branch points, and the box decomposition of the relative ones.

use puregaps::maximals::{gamma_hat_box, gamma_star, lambda_hat_box, lambda_star, relative_family};
use puregaps::semigroup::{family_cardinality, translate_box};
use puregaps::{KummerCurve, Oracle};

fn main() -> puregaps::Result<()> {
    let curve = KummerCurve::new(5, 9, 1)?;
    let n = 3;
    let oracle = Oracle::first_places(&curve, n)?;

    println!("absolute maximal elements in the box:");
    for t in gamma_hat_box(&curve, n)? {
        println!("  {t}  oracle: {}", oracle.is_absolute_maximal(&t)?);
    }
    println!("relative maximal elements in the box:");
    for t in lambda_hat_box(&curve, n)? {
        println!("  {t}  oracle: {}", oracle.is_relative_maximal(&t)?);
    }

    let fam = relative_family(&curve, n)?;
    println!(
        "positive relative maximals: {} (family count {})",
        lambda_star(&curve, n)?.len(),
        family_cardinality(&fam, curve.genus())
    );
    println!(
        "positive absolute maximals: {}",
        gamma_star(&curve, n)?.len()
    );
    for t in translate_box(&fam, &[2, 2, 0])? {
        println!("in box (2,2,0): {t}");
    }
    Ok(())
}
