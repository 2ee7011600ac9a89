//! Writes the cube list for a three-place picture of the pure gaps as JSON.
//!
//! cargo run --example plot_data > cubes.json

use puregaps::pure_gaps::plot_data;
use puregaps::KummerCurve;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = KummerCurve::new(5, 9, 1)?;
    let data = plot_data(&curve, 3)?;
    eprintln!(
        "{} cubes, {} pure gaps, {} relative maximals",
        data.cubes.len(),
        data.total_count(),
        data.lambda_star.len()
    );
    println!("{}", serde_json::to_string(&data)?);
    Ok(())
}
