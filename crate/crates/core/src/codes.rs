//! Parameters of differential AG codes `C_Omega(D, G_k)` supported on the
//! rational points away from `P_1, ..., P_n`, with `G_k` built from a box of
//! pure gaps.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::curve::KummerCurve;
use crate::error::{Error, Result, WindowSide};
use crate::pure_gaps::{b_k, max_level};
use crate::tuple::TupleZ;

/// Input of [`design_code`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub curve: KummerCurve,
    pub n: usize,
    pub k: u64,
    /// `(k_1, ..., k_n)` with sum `k`.
    pub partition: Vec<u64>,
    /// A point of `B_k`.
    pub a: Vec<i64>,
    /// `N`, the number of evaluation points.
    pub length: i64,
}

impl CodeSpec {
    /// Spec with partition `(k, 0, ..., 0)`.
    pub fn new(curve: KummerCurve, k: u64, a: Vec<i64>, length: i64) -> Self {
        let n = a.len();
        let mut partition = vec![0; n];
        if n > 0 {
            partition[0] = k;
        }
        CodeSpec {
            curve,
            n,
            k,
            partition,
            a,
            length,
        }
    }

    pub fn with_partition(mut self, partition: Vec<u64>) -> Self {
        self.partition = partition;
        self
    }

    /// `ceil(m (k + j) / r)` for `j = 1..n`.
    fn ceilings(&self) -> Vec<i64> {
        let (m, r) = (self.curve.m(), self.curve.r());
        (1..=self.n as i64)
            .map(|j| Integer::div_ceil(&(m * (self.k as i64 + j)), &r))
            .collect()
    }

    /// Coefficients of `G_k` at `P_1, ..., P_n`.
    pub fn g_coefficients(&self) -> Vec<i64> {
        let m = self.curve.m();
        self.ceilings()
            .iter()
            .enumerate()
            .map(|(j, c)| 2 * self.partition[j] as i64 * m + self.a[j] + m - 1 - c)
            .collect()
    }

    /// Lower corner `(k_j m + a_j)_j` of the pure-gap box behind the bound.
    pub fn alpha(&self) -> TupleZ {
        let m = self.curve.m();
        TupleZ::new(
            (0..self.n)
                .map(|j| self.partition[j] as i64 * m + self.a[j])
                .collect(),
        )
    }

    /// Upper corner `(k_j m + m - ceil(m (k + j) / r))_j`.
    pub fn beta(&self) -> TupleZ {
        let m = self.curve.m();
        TupleZ::new(
            self.ceilings()
                .iter()
                .enumerate()
                .map(|(j, c)| self.partition[j] as i64 * m + m - c)
                .collect(),
        )
    }

    fn validate(&self) -> Result<()> {
        let c = &self.curve;
        let max = c.max_n_pure_gaps();
        if self.n < 2 || self.n as i64 > max {
            return Err(Error::NOutOfRange {
                n: self.n as i64,
                min: 2,
                max,
            });
        }
        if self.partition.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: self.partition.len(),
            });
        }
        if self.partition.iter().sum::<u64>() != self.k {
            return Err(Error::Precondition(format!(
                "partition {:?} does not sum to k = {}",
                self.partition, self.k
            )));
        }
        let kmax = max_level(c, self.n).expect("n is in range");
        if self.k > kmax {
            return Err(Error::Precondition(format!(
                "k = {} exceeds the largest level {kmax}",
                self.k
            )));
        }
        let bx = b_k(c, self.n, self.k)?;
        let inside = self
            .a
            .iter()
            .zip(&bx.bounds)
            .all(|(&a, &b)| 1 <= a && a <= b);
        if !inside {
            return Err(Error::Precondition(format!(
                "a = {:?} is not in B_{} with bounds {:?}",
                self.a, self.k, bx.bounds
            )));
        }
        if self.length < 1 {
            return Err(Error::Precondition(format!(
                "length {} must be positive",
                self.length
            )));
        }
        Ok(())
    }
}

/// `[N, k, >= d]` together with `deg G` and `R + delta = (k + d) / N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    #[serde(rename = "N")]
    pub length: i64,
    pub k_dim: i64,
    pub d_lb: i64,
    pub deg_g: i64,
    #[serde(serialize_with = "ratio_as_string")]
    pub rate_sum: Ratio<i64>,
}

fn ratio_as_string<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl CodeParams {
    pub fn new(length: i64, k_dim: i64, d_lb: i64, deg_g: i64) -> Self {
        CodeParams {
            length,
            k_dim,
            d_lb,
            deg_g,
            rate_sum: Ratio::new(k_dim + d_lb, length),
        }
    }

    pub fn rate_sum_f64(&self) -> f64 {
        *self.rate_sum.numer() as f64 / *self.rate_sum.denom() as f64
    }

    pub fn satisfies_singleton(&self) -> bool {
        self.k_dim + self.d_lb <= self.length + 1
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, \u{2265}{}]",
            self.length, self.k_dim, self.d_lb
        )
    }
}

fn check_window(deg_g: i64, genus: i64, length: i64) -> Result<()> {
    let lower = 2 * genus - 2;
    if deg_g <= lower {
        return Err(Error::DegreeWindow {
            deg_g,
            lower,
            upper: length,
            side: WindowSide::Lower,
        });
    }
    if deg_g >= length {
        return Err(Error::DegreeWindow {
            deg_g,
            lower,
            upper: length,
            side: WindowSide::Upper,
        });
    }
    Ok(())
}

/// `[N, N + n - 2km - nm - 1 + g - sum a_j + sum c_j, >= 2km + 2nm - mr + m + r + 1 - 2 sum c_j]`
/// with `c_j = ceil(m (k + j) / r)`.
pub fn design_code(spec: &CodeSpec) -> Result<CodeParams> {
    spec.validate()?;
    let c = &spec.curve;
    let (m, r, g) = (c.m(), c.r(), c.genus());
    let (n, k) = (spec.n as i64, spec.k as i64);
    let deg_g: i64 = spec.g_coefficients().iter().sum();
    check_window(deg_g, g, spec.length)?;
    let ceil_sum: i64 = spec.ceilings().iter().sum();
    let a_sum: i64 = spec.a.iter().sum();
    let k_dim = spec.length + n - 2 * k * m - n * m - 1 + g - a_sum + ceil_sum;
    let d_lb = 2 * k * m + 2 * n * m - m * r + m + r + 1 - 2 * ceil_sum;
    Ok(CodeParams::new(spec.length, k_dim, d_lb.max(1), deg_g))
}

/// `k = N - deg G - 1 + g` and `d >= deg G - (2g - 2)`.
pub fn goppa_params(length: i64, deg_g: i64, genus: i64) -> Result<(i64, i64)> {
    check_window(deg_g, genus, length)?;
    Ok((length - deg_g - 1 + genus, deg_g - (2 * genus - 2)))
}

/// `deg G - (2g - 2) + n + sum (beta_i - alpha_i)`, valid when every `gamma`
/// with `alpha <= gamma <= beta` is a pure gap. The caller certifies that.
pub fn carvalho_torres_bound(
    genus: i64,
    deg_g: i64,
    n: usize,
    alpha: &TupleZ,
    beta: &TupleZ,
) -> Result<i64> {
    for t in [alpha, beta] {
        if t.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: t.dim(),
            });
        }
    }
    if !alpha.le_componentwise(beta) {
        return Err(Error::Precondition(format!("{alpha} is not below {beta}")));
    }
    Ok(deg_g - (2 * genus - 2) + n as i64 + (beta.sum() - alpha.sum()))
}

/// Rational points of `y^m = x^q + x` over `F_{q^2}`: `q + 1 + m (q^2 - q)`.
pub fn rational_points_family1(q: i64, m: i64) -> Result<i64> {
    if q < 2 || m < 2 {
        return Err(Error::Precondition(format!(
            "need q, m >= 2, got q = {q}, m = {m}"
        )));
    }
    if (q + 1) % m != 0 {
        return Err(Error::Precondition(format!(
            "m = {m} does not divide q + 1 = {}",
            q + 1
        )));
    }
    Ok(q + 1 + m * (q * q - q))
}

fn checked_pow(q: i64, e: i64) -> Result<i64> {
    u32::try_from(e)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .ok_or_else(|| Error::Precondition(format!("{q}^{e} overflows")))
}

/// Rational points of `y^m = (x^{q^{t/2}} - x)^{q^{t/2} - 1}` over `F_{q^t}`:
/// `(q^t - q^{t/2}) m + q^{t/2} + 1`.
pub fn rational_points_family2(q: i64, t: i64, m: i64) -> Result<i64> {
    if q < 2 || m < 2 || t < 2 {
        return Err(Error::Precondition(format!(
            "need q, t, m >= 2, got q = {q}, t = {t}, m = {m}"
        )));
    }
    if t % 2 != 0 {
        return Err(Error::Precondition(format!("t = {t} must be even")));
    }
    let qt = checked_pow(q, t)?;
    let qh = checked_pow(q, t / 2)?;
    if (qt - 1) % m != 0 {
        return Err(Error::Precondition(format!(
            "m = {m} does not divide q^t - 1 = {}",
            qt - 1
        )));
    }
    if m.gcd(&(qh - 1)) != 1 {
        return Err(Error::Precondition(format!(
            "gcd(m, q^(t/2) - 1) = gcd({m}, {}) is not 1",
            qh - 1
        )));
    }
    (qt - qh)
        .checked_mul(m)
        .map(|x| x + qh + 1)
        .ok_or_else(|| Error::Precondition("point count overflows".into()))
}

/// `[N - s, k - s, >= d]`, for `s < k`.
pub fn shorten(params: &CodeParams, s: i64) -> Result<CodeParams> {
    if s < 0 || s >= params.k_dim {
        return Err(Error::Precondition(format!(
            "shortening by s = {s} needs 0 <= s < k = {}",
            params.k_dim
        )));
    }
    Ok(CodeParams::new(
        params.length - s,
        params.k_dim - s,
        params.d_lb,
        params.deg_g,
    ))
}

/// The two example families of curves with many rational points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CurveFamily {
    /// `y^m = x^q + x` over `F_{q^2}`, `m | q + 1`.
    HermitianSubcover { q: i64, m: i64 },
    /// `y^m = (x^{q^{t/2}} - x)^{q^{t/2} - 1}` over `F_{q^t}`.
    NormTraceLike { q: i64, t: i64, m: i64 },
}

impl CurveFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CurveFamily::HermitianSubcover { .. } => "hermitian-subcover",
            CurveFamily::NormTraceLike { .. } => "norm-trace-like",
        }
    }

    pub fn q(&self) -> i64 {
        match *self {
            CurveFamily::HermitianSubcover { q, .. } | CurveFamily::NormTraceLike { q, .. } => q,
        }
    }

    pub fn t(&self) -> Option<i64> {
        match *self {
            CurveFamily::HermitianSubcover { .. } => None,
            CurveFamily::NormTraceLike { t, .. } => Some(t),
        }
    }

    pub fn m(&self) -> i64 {
        match *self {
            CurveFamily::HermitianSubcover { m, .. } | CurveFamily::NormTraceLike { m, .. } => m,
        }
    }

    pub fn rational_points(&self) -> Result<i64> {
        match *self {
            CurveFamily::HermitianSubcover { q, m } => rational_points_family1(q, m),
            CurveFamily::NormTraceLike { q, t, m } => rational_points_family2(q, t, m),
        }
    }

    /// The curve as a Kummer extension: `r = q, lambda = 1` for the first
    /// family, `r = q^{t/2}, lambda = q^{t/2} - 1` for the second.
    pub fn curve(&self) -> Result<KummerCurve> {
        self.rational_points()?;
        let to_u32 =
            |x: i64| u32::try_from(x).map_err(|_| Error::Precondition(format!("{x} is too large")));
        match *self {
            CurveFamily::HermitianSubcover { q, m } => KummerCurve::new(to_u32(m)?, to_u32(q)?, 1),
            CurveFamily::NormTraceLike { q, t, m } => {
                let qh = checked_pow(q, t / 2)?;
                KummerCurve::new(to_u32(m)?, to_u32(qh)?, to_u32(qh - 1)?)
            }
        }
    }
}

impl fmt::Display for CurveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CurveFamily::HermitianSubcover { q, m } => write!(f, "{} q={q} m={m}", self.name()),
            CurveFamily::NormTraceLike { q, t, m } => {
                write!(f, "{} q={q} t={t} m={m}", self.name())
            }
        }
    }
}

/// Codes to design on one curve: `n` places, level `k`, and the values of
/// `a = a_1 + ... + a_n` to realize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub family: CurveFamily,
    pub n: usize,
    pub k: u64,
    pub a_sums: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(flatten)]
    pub family: CurveFamily,
    pub n: usize,
    pub k: u64,
    pub a: i64,
    pub params: CodeParams,
}

/// Lexicographically largest point of `prod [1, bounds_j]` with the given
/// coordinate sum.
pub fn a_vector_with_sum(bounds: &[i64], sum: i64) -> Option<Vec<i64>> {
    let mut a = vec![1i64; bounds.len()];
    let mut left = sum - bounds.len() as i64;
    if left < 0 || bounds.iter().any(|&b| b < 1) {
        return None;
    }
    for (x, &b) in a.iter_mut().zip(bounds) {
        let add = left.min(b - 1);
        *x += add;
        left -= add;
    }
    (left == 0).then_some(a)
}

fn design_row(family: CurveFamily, n: usize, k: u64, a_sum: i64) -> Result<TableRow> {
    let curve = family.curve()?;
    let length = family.rational_points()? - n as i64;
    let bx = b_k(&curve, n, k)?;
    let a = a_vector_with_sum(&bx.bounds, a_sum).ok_or_else(|| {
        Error::Precondition(format!(
            "no point of B_{k} with bounds {:?} sums to {a_sum}",
            bx.bounds
        ))
    })?;
    let params = design_code(&CodeSpec::new(curve, k, a, length))?;
    Ok(TableRow {
        family,
        n,
        k,
        a: a_sum,
        params,
    })
}

/// One row per `(spec, a)`, in input order.
pub fn generate_tables(specs: &[TableSpec]) -> Result<Vec<TableRow>> {
    let jobs: Vec<(CurveFamily, usize, u64, i64)> = specs
        .iter()
        .flat_map(|s| s.a_sums.iter().map(move |&a| (s.family, s.n, s.k, a)))
        .collect();
    jobs.par_iter()
        .map(|&(f, n, k, a)| design_row(f, n, k, a))
        .collect()
}

/// Every `(n, k, a)` on the curve whose `G_k` falls inside the degree window.
pub fn sweep_family(family: CurveFamily) -> Result<Vec<TableRow>> {
    let curve = family.curve()?;
    let mut jobs = Vec::new();
    for n in 2..=curve.max_n_pure_gaps().max(1) as usize {
        let Some(kmax) = max_level(&curve, n) else {
            continue;
        };
        for k in 0..=kmax {
            let top: i64 = b_k(&curve, n, k)?.bounds.iter().sum();
            jobs.extend((n as i64..=top).map(|a| (n, k, a)));
        }
    }
    let rows: Vec<Result<TableRow>> = jobs
        .par_iter()
        .map(|&(n, k, a)| design_row(family, n, k, a))
        .collect();
    let mut out = Vec::new();
    for row in rows {
        match row {
            Ok(r) => out.push(r),
            Err(Error::DegreeWindow { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Rows of Table-style output: the designed codes on `y^m = x^q + x`.
pub fn hermitian_subcover_examples() -> Vec<TableSpec> {
    let f = |q, m| CurveFamily::HermitianSubcover { q, m };
    vec![
        TableSpec {
            family: f(7, 4),
            n: 2,
            k: 3,
            a_sums: vec![2],
        },
        TableSpec {
            family: f(8, 3),
            n: 2,
            k: 3,
            a_sums: vec![2],
        },
        TableSpec {
            family: f(9, 5),
            n: 2,
            k: 5,
            a_sums: vec![2],
        },
        TableSpec {
            family: f(9, 5),
            n: 3,
            k: 4,
            a_sums: vec![3, 4],
        },
    ]
}

/// The designed codes on `y^m = (x^{q^{t/2}} - x)^{q^{t/2} - 1}`.
pub fn norm_trace_like_examples() -> Vec<TableSpec> {
    let f = |q, t, m| CurveFamily::NormTraceLike { q, t, m };
    vec![
        TableSpec {
            family: f(2, 6, 3),
            n: 2,
            k: 3,
            a_sums: vec![2],
        },
        TableSpec {
            family: f(2, 6, 9),
            n: 2,
            k: 5,
            a_sums: vec![2, 3],
        },
        TableSpec {
            family: f(2, 6, 9),
            n: 3,
            k: 4,
            a_sums: vec![3, 4, 5],
        },
        TableSpec {
            family: f(3, 4, 5),
            n: 3,
            k: 4,
            a_sums: vec![3, 4],
        },
    ]
}

/// Collapses consecutive rows that differ only in `a` into one line
/// `[N, c-a, >=d]`; single rows print their concrete dimension.
pub fn render_grouped(rows: &[TableRow]) -> Vec<String> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < rows.len() {
        let head = &rows[i];
        let mut j = i + 1;
        while j < rows.len()
            && rows[j].family == head.family
            && rows[j].n == head.n
            && rows[j].k == head.k
            && rows[j].params.k_dim + rows[j].a == head.params.k_dim + head.a
            && rows[j].params.d_lb == head.params.d_lb
        {
            j += 1;
        }
        let group = &rows[i..j];
        let a_list = group
            .iter()
            .map(|r| r.a.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let dim = if group.len() == 1 {
            head.params.k_dim.to_string()
        } else {
            format!("{}-a", head.params.k_dim + head.a)
        };
        let t = head
            .family
            .t()
            .map(|t| format!(" t={t}"))
            .unwrap_or_default();
        out.push(format!(
            "q={}{t} m={} n={} k={} a={a_list}: [{}, {dim}, \u{2265}{}]",
            head.family.q(),
            head.family.m(),
            head.n,
            head.k,
            head.params.length,
            head.params.d_lb
        ));
        i = j;
    }
    out
}
