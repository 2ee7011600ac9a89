//! AG code parameters on the two curve families, plus shortening.

use puregaps::codes::{
    design_code, generate_tables, hermitian_subcover_examples, norm_trace_like_examples,
    render_grouped, shorten, CodeSpec, CurveFamily,
};

fn main() -> puregaps::Result<()> {
    let mut specs = hermitian_subcover_examples();
    specs.extend(norm_trace_like_examples());
    for line in render_grouped(&generate_tables(&specs)?) {
        println!("{line}");
    }

    let family = CurveFamily::HermitianSubcover { q: 9, m: 5 };
    let curve = family.curve()?;
    let length = family.rational_points()? - 3;
    let code = design_code(&CodeSpec::new(curve, 4, vec![1, 1, 1], length))?;
    println!(
        "\n{family}: {code}, deg G = {}, R + delta = {}",
        code.deg_g, code.rate_sum
    );
    for s in [1, 4, 7] {
        println!("  shortened by {s}: {}", shorten(&code, s)?);
    }
    Ok(())
}
