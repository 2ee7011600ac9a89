//! The `puregaps` command line.
//!
//! Exit codes: 0 on success, 2 for usage and input validation errors, 3 for
//! domain errors such as an out-of-range `n` or a degree-window violation.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::codes::{
    generate_tables, hermitian_subcover_examples, norm_trace_like_examples, render_grouped,
    sweep_family, CurveFamily, TableRow,
};
use crate::curve::{KummerCurve, PlaceId};
use crate::error::{Error, Result};
use crate::maximals::{gamma_hat_box, gamma_star, h_one_place, lambda_hat_box, lambda_star};
use crate::oracle::Oracle;
use crate::pure_gaps::{plot_data, pure_gaps};
use crate::semigroup::pure_gaps_from_relative_maximals;
use crate::tuple::TupleZ;

#[derive(Debug, Parser)]
#[command(
    name = "puregaps",
    version,
    about = "Pure gaps and maximal elements at ramified places of Kummer curves"
)]
struct Cli {
    /// Worker threads for sweeps and counts.
    #[arg(long, global = true, env = "PUREGAPS_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    r: u32,
    #[arg(long, default_value_t = 1)]
    lambda: u32,
}

impl CurveArgs {
    fn curve(&self) -> Result<KummerCurve> {
        KummerCurve::new(self.m, self.r, self.lambda)
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Absolute,
    Relative,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    HermitianSubcover,
    NormTraceLike,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Genus, period and range limits of a curve.
    Info {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Gaps of the Weierstrass semigroup at one place.
    Gaps {
        #[command(flatten)]
        curve: CurveArgs,
        /// `P<j>` for an affine ramified place or `Pinf`.
        #[arg(long, default_value = "P1")]
        place: PlaceId,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Pure gaps at n ramified places.
    PureGaps {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        n: usize,
        /// Comma-separated place indices; defaults to 1..n.
        #[arg(long, value_delimiter = ',')]
        places: Option<Vec<u32>>,
        /// Print only the cardinality.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Absolute or relative maximal elements.
    Maximals {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "relative")]
        kind: Kind,
        /// Representatives in the box with coordinates 2..n in [0, m).
        #[arg(long = "box")]
        in_box: bool,
        /// With --box, keep representatives with a negative coordinate.
        #[arg(long)]
        include_negative: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cross-check the pure-gap enumeration against the glb construction and
    /// a Riemann-Roch scan.
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        places: Option<Vec<u32>>,
        /// Scan [0, B]^n; defaults to 2g.
        #[arg(long)]
        max_box: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// AG code parameters: the worked examples, or every valid design on one
    /// curve of a family.
    Codes {
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        t: Option<i64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cube and point lists for a three-place picture.
    PlotData {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return e.exit_code();
        }
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command)),
            Err(e) => Err(Error::Precondition(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli.command),
    };
    match result.and_then(|text| out.write_all(text.as_bytes()).map_err(io_error)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::Inconsistent(format!("write failed: {e}"))
}

fn dispatch(cmd: &Command) -> Result<String> {
    match cmd {
        Command::Info { curve, format } => info(&curve.curve()?, *format),
        Command::Gaps {
            curve,
            place,
            format,
        } => gaps(&curve.curve()?, *place, *format),
        Command::PureGaps {
            curve,
            n,
            places,
            count,
            format,
        } => pure_gaps_cmd(&curve.curve()?, *n, places.as_deref(), *count, *format),
        Command::Maximals {
            curve,
            n,
            kind,
            in_box,
            include_negative,
            format,
        } => maximals(
            &curve.curve()?,
            *n,
            *kind,
            *in_box,
            *include_negative,
            *format,
        ),
        Command::Verify {
            curve,
            n,
            places,
            max_box,
            format,
        } => verify(&curve.curve()?, *n, places.as_deref(), *max_box, *format),
        Command::Codes {
            family,
            q,
            m,
            t,
            format,
        } => codes(*family, *q, *m, *t, *format),
        Command::PlotData { curve, n } => {
            let data = plot_data(&curve.curve()?, *n)?;
            Ok(to_json(&data))
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv_text(header: &[String], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| Error::Inconsistent(format!("csv: {e}"));
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Inconsistent(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn tuple_csv(n: usize, tuples: &BTreeSet<TupleZ>) -> Result<String> {
    let header: Vec<String> = (1..=n).map(|j| format!("a{j}")).collect();
    csv_text(
        &header,
        tuples
            .iter()
            .map(|t| t.coords().iter().map(i64::to_string).collect()),
    )
}

fn tuple_lines(tuples: &BTreeSet<TupleZ>) -> String {
    tuples.iter().map(|t| format!("{t}\n")).collect()
}

fn resolve_places(curve: &KummerCurve, n: usize, places: Option<&[u32]>) -> Result<Vec<PlaceId>> {
    let list = match places {
        None => curve.first_places(n)?,
        Some(idx) => idx.iter().map(|&j| PlaceId::Ramified(j)).collect(),
    };
    if list.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: list.len(),
        });
    }
    curve.check_ramified_places(&list)?;
    Ok(list)
}

fn info(curve: &KummerCurve, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(curve),
        Format::Csv => csv_text(
            &["m", "r", "lambda", "genus", "period"].map(String::from),
            [[
                curve.m(),
                curve.r(),
                curve.lambda(),
                curve.genus(),
                curve.period(),
            ]
            .iter()
            .map(i64::to_string)
            .collect()],
        )?,
        Format::Text => format!(
            "curve: {curve}\ngenus: {}\nperiod: {}\ncanonical divisor: {}\n\
             maximal elements described for 2 <= n <= {}\n\
             pure gaps nonempty for 2 <= n <= {}\n",
            curve.genus(),
            curve.period(),
            curve.canonical_divisor(),
            curve.max_n_maximals(),
            curve.max_n_pure_gaps()
        ),
    })
}

fn gaps(curve: &KummerCurve, place: PlaceId, format: Format) -> Result<String> {
    curve.check_place(place)?;
    let g = h_one_place(curve, place == PlaceId::Infinity);
    Ok(match format {
        Format::Json => to_json(&json!({ "place": place, "gaps": g.gaps })),
        Format::Csv => csv_text(&["gap".into()], g.gaps.iter().map(|a| vec![a.to_string()]))?,
        Format::Text => {
            let list: Vec<String> = g.gaps.iter().map(i64::to_string).collect();
            format!("gaps at {place} ({}): {}\n", g.len(), list.join(" "))
        }
    })
}

fn pure_gaps_cmd(
    curve: &KummerCurve,
    n: usize,
    places: Option<&[u32]>,
    count: bool,
    format: Format,
) -> Result<String> {
    // Pure gaps are symmetric in the choice of ramified places.
    resolve_places(curve, n, places)?;
    let set = pure_gaps(curve, n)?;
    if count {
        let c = set.count();
        return Ok(match format {
            Format::Json => to_json(&json!({ "curve": curve, "n": n, "count": c })),
            Format::Csv => csv_text(&["count".into()], [vec![c.to_string()]])?,
            Format::Text => format!("{c}\n"),
        });
    }
    let tuples: BTreeSet<TupleZ> = set.iter().collect();
    Ok(match format {
        Format::Json => to_json(&json!({ "curve": curve, "n": n, "pure_gaps": tuples })),
        Format::Csv => tuple_csv(n, &tuples)?,
        Format::Text => tuple_lines(&tuples),
    })
}

fn maximals(
    curve: &KummerCurve,
    n: usize,
    kind: Kind,
    in_box: bool,
    include_negative: bool,
    format: Format,
) -> Result<String> {
    let mut set = match (kind, in_box) {
        (Kind::Absolute, false) => gamma_star(curve, n)?,
        (Kind::Relative, false) => lambda_star(curve, n)?,
        (Kind::Absolute, true) => gamma_hat_box(curve, n)?,
        (Kind::Relative, true) => lambda_hat_box(curve, n)?,
    };
    if in_box && !include_negative {
        set.retain(TupleZ::is_nonnegative);
    }
    let kind_name = match kind {
        Kind::Absolute => "absolute",
        Kind::Relative => "relative",
    };
    Ok(match format {
        Format::Json => to_json(&json!({
            "curve": curve,
            "n": n,
            "kind": kind_name,
            "box": in_box,
            "elements": set,
        })),
        Format::Csv => tuple_csv(n, &set)?,
        Format::Text => tuple_lines(&set),
    })
}

fn verify(
    curve: &KummerCurve,
    n: usize,
    places: Option<&[u32]>,
    max_box: Option<i64>,
    format: Format,
) -> Result<String> {
    let places = resolve_places(curve, n, places)?;
    let bound = max_box.unwrap_or(2 * curve.genus());
    if bound < 0 {
        return Err(Error::Precondition(format!(
            "--max-box {bound} must be nonnegative"
        )));
    }
    let closed: BTreeSet<TupleZ> = pure_gaps(curve, n)?.iter().collect();
    let glb = if n as i64 <= curve.max_n_maximals() {
        Some(pure_gaps_from_relative_maximals(
            &lambda_star(curve, n)?,
            n,
        )?)
    } else {
        None
    };
    let oracle = Oracle::new(curve, &places)?;
    let scanned = scan_pure_gaps(&oracle, bound);

    let in_box: BTreeSet<TupleZ> = closed
        .iter()
        .filter(|t| t.coords().iter().all(|&a| a <= bound))
        .cloned()
        .collect();
    if let Some(g) = &glb {
        if *g != closed {
            return Err(Error::Inconsistent(format!(
                "closed form gives {} pure gaps, glb construction gives {}",
                closed.len(),
                g.len()
            )));
        }
    }
    if in_box != scanned {
        let missing = in_box.difference(&scanned).next();
        let extra = scanned.difference(&in_box).next();
        return Err(Error::Inconsistent(format!(
            "enumeration and oracle disagree in [0, {bound}]^{n}: first missing {missing:?}, first extra {extra:?}"
        )));
    }
    Ok(match format {
        Format::Json => to_json(&json!({
            "curve": curve,
            "n": n,
            "places": places,
            "max_box": bound,
            "closed_form": closed.len(),
            "glb_construction": glb.as_ref().map(BTreeSet::len),
            "oracle_scan": scanned.len(),
            "ok": true,
        })),
        _ => format!(
            "OK: enumeration matches oracle ({} pure gaps)\n",
            scanned.len()
        ),
    })
}

/// Oracle pure gaps in `[0, bound]^n`, split over the first coordinate.
fn scan_pure_gaps(oracle: &Oracle, bound: i64) -> BTreeSet<TupleZ> {
    let n = oracle.n();
    (0..=bound)
        .into_par_iter()
        .map(|first| {
            let mut found = Vec::new();
            let mut cur = vec![0i64; n];
            cur[0] = first;
            loop {
                let t = TupleZ::new(cur.clone());
                if oracle.is_pure_gap(&t).expect("dimension matches") {
                    found.push(t);
                }
                let mut j = n;
                loop {
                    j -= 1;
                    if j == 0 {
                        return found;
                    }
                    if cur[j] < bound {
                        cur[j] += 1;
                        break;
                    }
                    cur[j] = 0;
                }
            }
        })
        .flatten()
        .collect()
}

fn family_from_args(
    family: Family,
    q: Option<i64>,
    m: Option<i64>,
    t: Option<i64>,
) -> Result<CurveFamily> {
    let need = |v: Option<i64>, name: &str| {
        v.ok_or_else(|| Error::InvalidCurve(format!("--{name} is required with --family")))
    };
    let (q, m) = (need(q, "q")?, need(m, "m")?);
    Ok(match family {
        Family::HermitianSubcover => CurveFamily::HermitianSubcover { q, m },
        Family::NormTraceLike => CurveFamily::NormTraceLike {
            q,
            t: need(t, "t")?,
            m,
        },
    })
}

fn codes(
    family: Option<Family>,
    q: Option<i64>,
    m: Option<i64>,
    t: Option<i64>,
    format: Format,
) -> Result<String> {
    let rows: Vec<TableRow> = match family {
        Some(f) => {
            let fam = family_from_args(f, q, m, t)?;
            fam.curve().map_err(|e| match e {
                Error::Precondition(msg) => Error::InvalidCurve(msg),
                other => other,
            })?;
            sweep_family(fam)?
        }
        None => {
            let mut specs = hermitian_subcover_examples();
            specs.extend(norm_trace_like_examples());
            generate_tables(&specs)?
        }
    };
    Ok(match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let header = [
                "family", "q", "t", "m", "n", "k", "a", "N", "kdim", "dlb", "degG", "ratesum",
            ]
            .map(String::from);
            csv_text(
                &header,
                rows.iter().map(|r| {
                    vec![
                        r.family.name().to_string(),
                        r.family.q().to_string(),
                        r.family.t().map(|t| t.to_string()).unwrap_or_default(),
                        r.family.m().to_string(),
                        r.n.to_string(),
                        r.k.to_string(),
                        r.a.to_string(),
                        r.params.length.to_string(),
                        r.params.k_dim.to_string(),
                        r.params.d_lb.to_string(),
                        r.params.deg_g.to_string(),
                        format!("{:.6}", r.params.rate_sum_f64()),
                    ]
                }),
            )?
        }
        Format::Text => render_grouped(&rows)
            .into_iter()
            .map(|l| l + "\n")
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("puregaps").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_five_nine() {
        let (code, out, _) = call(&["pure-gaps", "--m", "5", "--r", "9", "--n", "3", "--count"]);
        assert_eq!(code, 0);
        assert_eq!(out, "382\n");
    }

    #[test]
    fn verify_three_four() {
        let (code, out, _) = call(&[
            "verify",
            "--m",
            "3",
            "--r",
            "4",
            "--n",
            "2",
            "--max-box",
            "12",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "OK: enumeration matches oracle (3 pure gaps)\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["info", "--m", "3"]).0, 2);
        assert_eq!(call(&["info", "--m", "4", "--r", "6"]).0, 2);
        assert_eq!(call(&["maximals", "--m", "5", "--r", "9", "--n", "9"]).0, 3);
        let (code, _, err) = call(&["pure-gaps", "--m", "5", "--r", "9", "--n", "12"]);
        assert_eq!(code, 3);
        assert!(err.starts_with("error:"));
        assert_eq!(call(&["--help"]).0, 0);
    }
}
