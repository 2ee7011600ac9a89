//! Pure gaps at `n` affine ramified places of a Kummer curve.
//!
//! Writing each coordinate as `alpha_j = k_j m + i_j` with `1 <= i_j <= m`,
//! a positive tuple is a pure gap iff `k = k_1 + ... + k_n` is at most
//! `r - n - 1 - floor(r/m)` and the residues `(i_j)`, sorted in decreasing
//! order, fit under the bounds of `B_k`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{binomial, compositions, permutations};
use crate::curve::KummerCurve;
use crate::error::{Error, Result};
use crate::maximals::lambda_star;
use crate::tuple::TupleZ;

/// The box `B_k = { i in N^n : 1 <= i_j <= a_j }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BkBox {
    pub k: u64,
    /// `a_j = m - ceil(m (k + j) / r)`, non-increasing in `j`.
    pub bounds: Vec<i64>,
}

impl BkBox {
    fn for_level(curve: &KummerCurve, n: usize, k: u64) -> Self {
        let (m, r) = (curve.m(), curve.r());
        let bounds = (1..=n as i64)
            .map(|j| m - Integer::div_ceil(&(m * (k as i64 + j)), &r))
            .collect();
        BkBox { k, bounds }
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.iter().any(|&a| a < 1)
    }

    /// Number of points of the box itself (not of its permutation union).
    pub fn volume(&self) -> BigUint {
        if self.is_empty() {
            return BigUint::zero();
        }
        self.bounds
            .iter()
            .map(|&a| BigUint::from(a as u64))
            .product()
    }

    /// `i` lies in `sigma(B_k)` for some permutation `sigma`.
    pub fn union_contains(&self, i: &[i64]) -> bool {
        if i.len() != self.bounds.len() || self.is_empty() {
            return false;
        }
        let mut sorted = i.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted
            .iter()
            .zip(&self.bounds)
            .all(|(&x, &a)| 1 <= x && x <= a)
    }
}

/// `r - n - 1 - floor(r/m)`, or `None` when no level carries pure gaps.
pub fn max_level(curve: &KummerCurve, n: usize) -> Option<u64> {
    let k = curve.max_n_pure_gaps() - n as i64;
    (k >= 0).then_some(k as u64)
}

fn check_box_n(curve: &KummerCurve, n: usize) -> Result<()> {
    let max = curve.max_n_pure_gaps();
    if n < 2 || n as i64 > max {
        return Err(Error::NOutOfRange {
            n: n as i64,
            min: 2,
            max,
        });
    }
    Ok(())
}

/// Enumeration accepts every `2 <= n <= r`; above `r - 1 - floor(r/m)` the
/// pure-gap set is empty.
fn check_enum_n(curve: &KummerCurve, n: usize) -> Result<()> {
    if n < 2 || n as i64 > curve.r() {
        return Err(Error::NOutOfRange {
            n: n as i64,
            min: 2,
            max: curve.r(),
        });
    }
    Ok(())
}

pub fn b_k(curve: &KummerCurve, n: usize, k: u64) -> Result<BkBox> {
    check_box_n(curve, n)?;
    Ok(BkBox::for_level(curve, n, k))
}

fn permutation_union(bx: &BkBox) -> BTreeSet<TupleZ> {
    if bx.is_empty() {
        return BTreeSet::new();
    }
    let n = bx.bounds.len();
    let top = bx.bounds[0];
    let mut out = BTreeSet::new();
    let mut cur = vec![1i64; n];
    loop {
        if bx.union_contains(&cur) {
            out.insert(TupleZ::new(cur.clone()));
        }
        let mut j = n;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if cur[j] < top {
                cur[j] += 1;
                break;
            }
            cur[j] = 1;
        }
    }
}

/// `G_{k,0,...,0} = (k m, 0, ..., 0) + union of sigma(B_k)`.
pub fn g_k_zero(curve: &KummerCurve, n: usize, k: u64) -> Result<BTreeSet<TupleZ>> {
    let bx = b_k(curve, n, k)?;
    let shift = k as i64 * curve.m();
    Ok(permutation_union(&bx)
        .into_iter()
        .map(|t| {
            let mut v = t.into_inner();
            v[0] += shift;
            TupleZ::new(v)
        })
        .collect())
}

/// The pure-gap set `G_0(P_1, ..., P_n)`, held implicitly by its box bounds.
#[derive(Debug, Clone)]
pub struct PureGapSet {
    m: i64,
    n: usize,
    boxes: Vec<BkBox>,
}

impl PureGapSet {
    pub fn new(curve: &KummerCurve, n: usize) -> Result<Self> {
        check_enum_n(curve, n)?;
        let boxes = match max_level(curve, n) {
            Some(kmax) => (0..=kmax).map(|k| BkBox::for_level(curve, n, k)).collect(),
            None => Vec::new(),
        };
        Ok(PureGapSet {
            m: curve.m(),
            n,
            boxes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boxes(&self) -> &[BkBox] {
        &self.boxes
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Largest value any coordinate can take.
    pub fn coordinate_bound(&self) -> i64 {
        self.boxes.len() as i64 * self.m
    }

    fn split(&self, a: i64) -> (i64, i64) {
        let k = Integer::div_floor(&(a - 1), &self.m);
        (k, a - k * self.m)
    }

    /// Whether some completion of `prefix` is a pure gap. Completing with
    /// `k_j = 0, i_j = 1` is the weakest requirement, so it is enough to test
    /// that one.
    fn prefix_feasible(&self, prefix: &[i64]) -> bool {
        if prefix.iter().any(|&a| a < 1) {
            return false;
        }
        let mut level = 0i64;
        let mut residues = Vec::with_capacity(self.n);
        for &a in prefix {
            let (k, i) = self.split(a);
            level += k;
            residues.push(i);
        }
        residues.resize(self.n, 1);
        match self.boxes.get(level as usize) {
            Some(bx) => bx.union_contains(&residues),
            None => false,
        }
    }

    pub fn contains(&self, alpha: &TupleZ) -> bool {
        alpha.dim() == self.n && self.prefix_feasible(alpha.coords())
    }

    /// Lexicographically increasing stream of every pure gap.
    pub fn iter(&self) -> PureGapIter<'_> {
        PureGapIter {
            set: self,
            cur: Vec::with_capacity(self.n),
            started: false,
            done: false,
        }
    }

    /// `sum_k C(k+n-1, n-1) D_n(B_k)`.
    pub fn count(&self) -> BigUint {
        let n = self.n as u64;
        self.boxes
            .par_iter()
            .map(|bx| {
                let d = d_n(&bx.bounds)
                    .to_biguint()
                    .expect("box bounds are positive");
                binomial(bx.k + n - 1, n - 1) * d
            })
            .sum()
    }
}

impl<'a> IntoIterator for &'a PureGapSet {
    type Item = TupleZ;
    type IntoIter = PureGapIter<'a>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

pub struct PureGapIter<'a> {
    set: &'a PureGapSet,
    cur: Vec<i64>,
    started: bool,
    done: bool,
}

impl PureGapIter<'_> {
    fn push_first_feasible(&mut self, start: i64) -> bool {
        for v in start..=self.set.coordinate_bound() {
            self.cur.push(v);
            if self.set.prefix_feasible(&self.cur) {
                return true;
            }
            self.cur.pop();
        }
        false
    }

    /// A feasible prefix always extends by `1`.
    fn fill(&mut self) {
        while self.cur.len() < self.set.n {
            let ok = self.push_first_feasible(1);
            debug_assert!(ok);
        }
    }
}

impl Iterator for PureGapIter<'_> {
    type Item = TupleZ;

    fn next(&mut self) -> Option<TupleZ> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.set.is_empty() {
                self.done = true;
                return None;
            }
            self.fill();
            return Some(TupleZ::new(self.cur.clone()));
        }
        while let Some(last) = self.cur.pop() {
            if self.push_first_feasible(last + 1) {
                self.fill();
                return Some(TupleZ::new(self.cur.clone()));
            }
        }
        self.done = true;
        None
    }
}

/// Streamed pure gaps in lexicographic order.
pub fn pure_gaps(curve: &KummerCurve, n: usize) -> Result<PureGapSet> {
    PureGapSet::new(curve, n)
}

/// `G_0` materialized as the union over levels `k`, compositions
/// `(k_1, ..., k_n)` of `k` and permuted boxes of
/// `(k_1 m, ..., k_n m) + sigma(B_k)`.
pub fn pure_gaps_by_boxes(curve: &KummerCurve, n: usize) -> Result<BTreeSet<TupleZ>> {
    check_enum_n(curve, n)?;
    let mut out = BTreeSet::new();
    let Some(kmax) = max_level(curve, n) else {
        return Ok(out);
    };
    let m = curve.m();
    for k in 0..=kmax {
        let union = permutation_union(&BkBox::for_level(curve, n, k));
        for ks in compositions(k, n) {
            for i in &union {
                let v = i
                    .coords()
                    .iter()
                    .zip(&ks)
                    .map(|(&x, &kj)| kj as i64 * m + x)
                    .collect();
                let fresh = out.insert(TupleZ::new(v));
                debug_assert!(fresh, "boxes overlap");
            }
        }
    }
    Ok(out)
}

/// `D_1(a) = a`,
/// `D_n(a) = a_n^n + sum_{i<n} C(n,i) a_n^{n-i} D_i(a_1 - a_n, ..., a_i - a_n)`.
///
/// Evaluated literally for any integers; the empty input gives `1`.
pub fn d_n(a: &[i64]) -> BigInt {
    let n = a.len();
    match n {
        0 => BigInt::one(),
        1 => BigInt::from(a[0]),
        _ => {
            let an = BigInt::from(a[n - 1]);
            let mut total = Pow::pow(&an, n as u32);
            for i in 1..n {
                let shifted: Vec<i64> = a[..i].iter().map(|x| x - a[n - 1]).collect();
                let c = BigInt::from(binomial(n as u64, i as u64));
                total += c * Pow::pow(&an, (n - i) as u32) * d_n(&shifted);
            }
            total
        }
    }
}

/// `|union of sigma(prod [1, a_j])|` by listing every permuted point.
/// Limited to `n <= 5`, `a_1 <= 8`.
pub fn union_card_bruteforce(a: &[i64]) -> Result<u64> {
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    if a.windows(2).any(|w| w[0] < w[1]) || a[a.len() - 1] < 1 {
        return Err(Error::Precondition(format!(
            "bounds {a:?} must be non-increasing and positive"
        )));
    }
    if a.len() > 5 || a[0] > 8 {
        return Err(Error::BudgetExceeded(format!(
            "explicit enumeration is limited to n <= 5 and a_1 <= 8, got {a:?}"
        )));
    }
    let n = a.len();
    let mut seen = HashSet::new();
    let mut cur = vec![1i64; n];
    'outer: loop {
        for sigma in permutations(n) {
            let mut img = vec![0i64; n];
            for (j, &s) in sigma.iter().enumerate() {
                img[s] = cur[j];
            }
            seen.insert(img);
        }
        let mut j = n;
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            if cur[j] < a[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = 1;
        }
    }
    Ok(seen.len() as u64)
}

/// `|G_0(P)| = sum_{k=0}^{r-n-1-floor(r/m)} C(k+n-1, n-1) D_n(B_k)`.
pub fn pure_gap_count(curve: &KummerCurve, n: usize) -> Result<BigUint> {
    Ok(PureGapSet::new(curve, n)?.count())
}

fn nonnegative(x: BigInt, what: &str) -> Result<BigUint> {
    if x.is_negative() {
        return Err(Error::Inconsistent(format!("{what} evaluated to {x}")));
    }
    Ok(x.to_biguint().expect("nonnegative"))
}

/// The two-place count
/// `sum_{k=1}^{r-2-floor(r/m)} k [(m - c_k)^2 - (c_{k+1} - c_k)^2]`
/// with `c_k = ceil(m k / r)`.
pub fn pure_gap_count_n2(curve: &KummerCurve) -> Result<BigUint> {
    let (m, r) = (curve.m(), curve.r());
    let c = |k: i64| Integer::div_ceil(&(m * k), &r);
    let top = r - 2 - r / m;
    let total: BigInt = (1..=top)
        .map(|k| {
            let a = m - c(k);
            let b = c(k + 1) - c(k);
            BigInt::from(k) * BigInt::from(a * a - b * b)
        })
        .sum();
    nonnegative(total, "two-place count")
}

/// For `m = u r + 1`:
/// `u^n sum_{k=0}^{r-n-1} C(k+n-1, n-1) (r-k-n) (r-k)^{n-1}`.
pub fn pure_gap_count_multiple_plus_one(curve: &KummerCurve, n: usize, u: u64) -> Result<BigUint> {
    check_enum_n(curve, n)?;
    let (m, r) = (curve.m(), curve.r());
    if u == 0 || m != u as i64 * r + 1 {
        return Err(Error::Precondition(format!(
            "m = {m} is not u r + 1 with u = {u}, r = {r}"
        )));
    }
    let n64 = n as i64;
    let sum: BigInt = (0..(r - n64).max(0))
        .map(|k| {
            BigInt::from(binomial((k + n64 - 1) as u64, (n - 1) as u64))
                * BigInt::from(r - k - n64)
                * Pow::pow(&BigInt::from(r - k), (n - 1) as u32)
        })
        .sum();
    nonnegative(Pow::pow(&BigInt::from(u), n as u32) * sum, "closed form")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cube {
    pub origin: [i64; 3],
    pub side: i64,
    pub count: u64,
    pub class: u64,
}

/// Pure-gap cubes and relative maximal points at three places, for plotting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeList {
    pub cubes: Vec<Cube>,
    pub lambda_star: Vec<[i64; 3]>,
}

impl CubeList {
    pub fn total_count(&self) -> u64 {
        self.cubes.iter().map(|c| c.count).sum()
    }
}

pub fn plot_data(curve: &KummerCurve, n: usize) -> Result<CubeList> {
    if n != 3 {
        return Err(Error::NOutOfRange {
            n: n as i64,
            min: 3,
            max: 3,
        });
    }
    let set = PureGapSet::new(curve, 3)?;
    let m = curve.m();
    let mut cubes = Vec::new();
    for bx in set.boxes() {
        let count = d_n(&bx.bounds).to_u64().expect("cube count fits in u64");
        for ks in compositions(bx.k, 3) {
            cubes.push(Cube {
                origin: [ks[0] as i64 * m, ks[1] as i64 * m, ks[2] as i64 * m],
                side: m,
                count,
                class: bx.k,
            });
        }
    }
    let lambda = if 3 <= curve.max_n_maximals() {
        lambda_star(curve, 3)?
            .into_iter()
            .map(|t| [t[0], t[1], t[2]])
            .collect()
    } else {
        Vec::new()
    };
    Ok(CubeList {
        cubes,
        lambda_star: lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(m: u32, r: u32) -> KummerCurve {
        KummerCurve::new(m, r, 1).unwrap()
    }

    fn set(v: &[&[i64]]) -> BTreeSet<TupleZ> {
        v.iter().map(|x| TupleZ::new(x.to_vec())).collect()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn bk_examples() {
        let c = curve(5, 9);
        assert_eq!(b_k(&c, 3, 0).unwrap().bounds, vec![4, 3, 3]);
        assert_eq!(b_k(&c, 3, 4).unwrap().bounds, vec![2, 1, 1]);
        assert!(b_k(&c, 3, 5).unwrap().is_empty());
        assert!(!b_k(&c, 3, 4).unwrap().is_empty());
        assert!(matches!(b_k(&c, 8, 0), Err(Error::NOutOfRange { .. })));
        assert!(b_k(&curve(3, 2), 2, 0).is_err());
    }

    #[test]
    fn bk_nonempty_exactly_up_to_max_level() {
        for (m, r) in [(5, 9), (3, 4), (4, 9), (7, 5), (2, 11), (11, 4)] {
            let c = curve(m, r);
            for n in 2..=c.max_n_pure_gaps() as usize {
                let kmax = max_level(&c, n).unwrap();
                for k in 0..kmax + 3 {
                    let bx = b_k(&c, n, k).unwrap();
                    assert_eq!(bx.is_empty(), k > kmax, "({m},{r}) n={n} k={k}");
                    assert!(bx.bounds.windows(2).all(|w| w[0] >= w[1]));
                }
            }
        }
    }

    #[test]
    fn g_k_zero_examples() {
        let c = curve(5, 9);
        assert_eq!(
            g_k_zero(&c, 3, 4).unwrap(),
            set(&[&[21, 1, 1], &[22, 1, 1], &[21, 2, 1], &[21, 1, 2]])
        );
        assert_eq!(g_k_zero(&c, 3, 0).unwrap().len(), 54);
        assert!(g_k_zero(&c, 3, 5).unwrap().is_empty());
        assert_eq!(
            g_k_zero(&curve(3, 4), 2, 0).unwrap(),
            set(&[&[1, 1], &[2, 1], &[1, 2]])
        );
    }

    #[test]
    fn stream_examples() {
        let c = curve(3, 4);
        let all: Vec<TupleZ> = pure_gaps(&c, 2).unwrap().iter().collect();
        assert_eq!(
            all,
            vec![
                TupleZ::from([1, 1]),
                TupleZ::from([1, 2]),
                TupleZ::from([2, 1])
            ]
        );
        assert_eq!(pure_gaps(&curve(3, 2), 2).unwrap().iter().count(), 0);
        assert!(pure_gaps(&curve(3, 2), 3).is_err());
        assert!(pure_gaps(&curve(3, 4), 1).is_err());
    }

    #[test]
    fn stream_matches_box_union_for_five_nine() {
        let c = curve(5, 9);
        let set = pure_gaps(&c, 3).unwrap();
        let streamed: Vec<TupleZ> = set.iter().collect();
        assert_eq!(streamed.len(), 382);
        assert!(streamed.windows(2).all(|w| w[0] < w[1]));
        let boxes = pure_gaps_by_boxes(&c, 3).unwrap();
        assert_eq!(streamed.into_iter().collect::<BTreeSet<_>>(), boxes);
        assert_eq!(set.count(), big(382));
        assert!(set.contains(&TupleZ::from([21, 2, 1])));
        assert!(!set.contains(&TupleZ::from([26, 1, 1])));
    }

    #[test]
    fn d_n_examples() {
        assert_eq!(d_n(&[2, 1]), BigInt::from(3));
        assert_eq!(d_n(&[4, 3, 3]), BigInt::from(54));
        assert_eq!(d_n(&[5, 4, 3]), BigInt::from(108));
        assert_eq!(d_n(&[7]), BigInt::from(7));
        assert_eq!(d_n(&[1, 1, 1, 1]), BigInt::one());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(union_card_bruteforce(&[2, 1]).unwrap(), 3);
        assert_eq!(union_card_bruteforce(&[1, 1, 1, 1, 1]).unwrap(), 1);
        assert_eq!(union_card_bruteforce(&[4, 3, 3]).unwrap(), 54);
        assert!(matches!(
            union_card_bruteforce(&[9, 1]),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(union_card_bruteforce(&[1, 1, 1, 1, 1, 1]).is_err());
        assert!(union_card_bruteforce(&[1, 2]).is_err());
        assert!(union_card_bruteforce(&[]).is_err());
    }

    fn non_increasing(n: usize, top: i64) -> Vec<Vec<i64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=top {
            for mut rest in non_increasing(n - 1, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn d_n_matches_bruteforce() {
        for n in 1..=4 {
            for a in non_increasing(n, 6) {
                assert_eq!(
                    d_n(&a),
                    BigInt::from(union_card_bruteforce(&a).unwrap()),
                    "{a:?}"
                );
            }
        }
    }

    #[test]
    fn d_n_homogeneous_and_consecutive() {
        for n in 1..=5 {
            for a in non_increasing(n, 5) {
                for u in 1..=3i64 {
                    let ua: Vec<i64> = a.iter().map(|x| u * x).collect();
                    assert_eq!(d_n(&ua), Pow::pow(&BigInt::from(u), n as u32) * d_n(&a));
                }
            }
            for an in 0..8i64 {
                let a: Vec<i64> = (0..n as i64).rev().map(|j| an + j).collect();
                let expected =
                    BigInt::from(an) * Pow::pow(&BigInt::from(an + n as i64), (n - 1) as u32);
                assert_eq!(d_n(&a), expected, "{a:?}");
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(pure_gap_count(&curve(5, 9), 3).unwrap(), big(382));
        assert_eq!(pure_gap_count(&curve(3, 4), 2).unwrap(), big(3));
        assert_eq!(pure_gap_count(&curve(3, 2), 2).unwrap(), big(0));
        assert_eq!(pure_gap_count_n2(&curve(3, 4)).unwrap(), big(3));
        assert_eq!(pure_gap_count_n2(&curve(3, 2)).unwrap(), big(0));
    }

    #[test]
    fn level_decomposition_for_five_nine() {
        let set = pure_gaps(&curve(5, 9), 3).unwrap();
        let per_box: Vec<BigInt> = set.boxes().iter().map(|b| d_n(&b.bounds)).collect();
        let expected: Vec<BigInt> = [54, 26, 20, 7, 4].into_iter().map(BigInt::from).collect();
        assert_eq!(per_box, expected);
    }

    #[test]
    fn two_place_formula_agrees() {
        for m in 2..=12u32 {
            for r in 2..=12u32 {
                let Ok(c) = KummerCurve::new(m, r, 1) else {
                    continue;
                };
                assert_eq!(
                    pure_gap_count_n2(&c).unwrap(),
                    pure_gap_count(&c, 2).unwrap(),
                    "({m},{r})"
                );
            }
        }
    }

    #[test]
    fn multiple_plus_one_formula() {
        assert_eq!(
            pure_gap_count_multiple_plus_one(&curve(5, 4), 2, 1).unwrap(),
            big(14)
        );
        assert_eq!(pure_gap_count(&curve(5, 4), 2).unwrap(), big(14));
        assert!(pure_gap_count_multiple_plus_one(&curve(5, 9), 3, 1).is_err());
        for u in 1..=3u64 {
            for r in 2..=7u32 {
                let m = u as u32 * r + 1;
                let c = curve(m, r);
                for n in 2..=r as usize {
                    assert_eq!(
                        pure_gap_count_multiple_plus_one(&c, n, u).unwrap(),
                        pure_gap_count(&c, n).unwrap(),
                        "u={u} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn plot_data_five_nine() {
        let c = curve(5, 9);
        let p = plot_data(&c, 3).unwrap();
        assert_eq!(p.cubes.len(), 35);
        assert_eq!(p.total_count(), 382);
        assert_eq!(p.lambda_star.len(), 50);
        let by_class: Vec<u64> = (0..5)
            .map(|k| p.cubes.iter().find(|cb| cb.class == k).unwrap().count)
            .collect();
        assert_eq!(by_class, vec![54, 26, 20, 7, 4]);
        assert!(plot_data(&c, 2).is_err());
        assert!(plot_data(&curve(3, 4), 3).unwrap().cubes.is_empty());
    }

    #[test]
    fn plot_data_json_shape() {
        let p = plot_data(&curve(3, 5), 3).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        let cube = &v["cubes"][0];
        assert_eq!(cube["origin"], serde_json::json!([0, 0, 0]));
        assert_eq!(cube["side"], 3);
        assert_eq!(cube["class"], 0);
        assert!(v["lambda_star"].is_array());
    }
}
