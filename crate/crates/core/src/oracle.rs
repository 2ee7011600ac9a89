//! Exact Riemann-Roch dimensions for divisors supported on the ramified places
//! and the place at infinity, plus the dimension-count predicates built on them.
//!
//! Every function in `L(D)` splits as `sum_{s=0}^{m-1} h_s(x) z^s`. The summands
//! have pairwise distinct valuations at each supported place (`v_{P_j}(z) = 1`,
//! `v_{P_inf}(z) = -r`, `gcd(m, r) = 1`, and `x - a_j` has valuation `m` at
//! `P_j`), so the pole conditions separate by residue class `s` and each class
//! contributes the dimension of a space of polynomials:
//!
//! ```text
//! c_s = floor((a_inf - s r) / m) - sum_j ceil((-a_j - s) / m) + 1
//! l(D) = sum_s max(0, c_s)
//! ```
//!
//! The tests check the Riemann-Roch identity on random divisors; every
//! predicate below inherits its trust from that check.

use num_integer::Integer;
use serde::Serialize;

use crate::curve::{divisor_from_tuple, Divisor, KummerCurve, PlaceId};
use crate::error::{Error, Result};
use crate::tuple::TupleZ;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllResult {
    pub dim: i64,
    /// Signed contribution of each residue class `s = 0, ..., m-1`.
    pub per_residue: Vec<i64>,
}

/// `l(D)` for a divisor supported on `{P_1, ..., P_r, P_inf}`.
pub fn ell(curve: &KummerCurve, d: &Divisor) -> Result<EllResult> {
    curve.check_divisor(d)?;
    let a_inf = d.coeff(PlaceId::Infinity);
    let affine: Vec<i64> = d
        .terms()
        .filter(|(p, _)| *p != PlaceId::Infinity)
        .map(|(_, a)| a)
        .collect();
    let per_residue: Vec<i64> = (0..curve.m())
        .map(|s| residue_term(curve, a_inf, &affine, s))
        .collect();
    let dim = per_residue.iter().map(|&c| c.max(0)).sum();
    Ok(EllResult { dim, per_residue })
}

/// Places absent from `affine` have coefficient 0 and contribute
/// `ceil(-s/m) = 0`, so only the support matters.
fn residue_term(curve: &KummerCurve, a_inf: i64, affine: &[i64], s: i64) -> i64 {
    let m = curve.m();
    let mut c = Integer::div_floor(&(a_inf - s * curve.r()), &m) + 1;
    for &a in affine {
        c -= Integer::div_ceil(&(-a - s), &m);
    }
    c
}

fn ell_affine(curve: &KummerCurve, a_inf: i64, affine: &[i64]) -> i64 {
    (0..curve.m())
        .map(|s| residue_term(curve, a_inf, affine, s).max(0))
        .sum()
}

/// Dimension counts for divisors `D_alpha(Q)` on a fixed tuple of distinct
/// affine ramified places.
#[derive(Debug, Clone)]
pub struct Oracle {
    curve: KummerCurve,
    places: Vec<PlaceId>,
}

impl Oracle {
    pub fn new(curve: &KummerCurve, places: &[PlaceId]) -> Result<Self> {
        curve.check_ramified_places(places)?;
        if places.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Oracle {
            curve: *curve,
            places: places.to_vec(),
        })
    }

    /// Oracle on `(P_1, ..., P_n)`.
    pub fn first_places(curve: &KummerCurve, n: usize) -> Result<Self> {
        Oracle::new(curve, &curve.first_places(n)?)
    }

    pub fn curve(&self) -> &KummerCurve {
        &self.curve
    }

    pub fn places(&self) -> &[PlaceId] {
        &self.places
    }

    pub fn n(&self) -> usize {
        self.places.len()
    }

    fn check(&self, alpha: &TupleZ) -> Result<()> {
        if alpha.dim() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                got: alpha.dim(),
            });
        }
        Ok(())
    }

    /// `l(D_alpha(Q))`. Tuple coordinates are the coefficients at the places.
    pub fn ell_of(&self, alpha: &[i64]) -> i64 {
        ell_affine(&self.curve, 0, alpha)
    }

    fn ell_minus(&self, alpha: &[i64], i: usize) -> i64 {
        let mut b = alpha.to_vec();
        b[i] -= 1;
        self.ell_of(&b)
    }

    fn member(&self, a: &[i64]) -> bool {
        let l = self.ell_of(a);
        (0..a.len()).all(|i| l == self.ell_minus(a, i) + 1)
    }

    /// `nabla_i^n(alpha)` is empty iff `l(D_alpha) = l(D_alpha - Q_i)`.
    fn nabla_n_empty(&self, a: &[i64], i: usize) -> bool {
        self.ell_of(a) == self.ell_minus(a, i)
    }

    /// `nabla_i(alpha) = nabla_i^n(alpha - sum_{j != i} e_j)`.
    fn nabla_i_empty(&self, a: &[i64], i: usize) -> bool {
        let shifted: Vec<i64> = a
            .iter()
            .enumerate()
            .map(|(j, &x)| if j == i { x } else { x - 1 })
            .collect();
        self.nabla_n_empty(&shifted, i)
    }

    fn nabla_empty(&self, a: &[i64]) -> bool {
        (0..a.len()).all(|i| self.nabla_i_empty(a, i))
    }

    /// Membership in the generalized Weierstrass semigroup.
    pub fn in_generalized_semigroup(&self, alpha: &TupleZ) -> Result<bool> {
        self.check(alpha)?;
        Ok(self.member(alpha.coords()))
    }

    /// Pure gap: a nonnegative tuple outside the semigroup with
    /// `l(D_alpha) = l(D_alpha - Q_j)` for every `j`.
    pub fn is_pure_gap(&self, alpha: &TupleZ) -> Result<bool> {
        self.check(alpha)?;
        let a = alpha.coords();
        if !alpha.is_nonnegative() || self.member(a) {
            return Ok(false);
        }
        let l = self.ell_of(a);
        Ok((0..a.len()).all(|j| l == self.ell_minus(a, j)))
    }

    /// `alpha` in the semigroup with `l(D_alpha) = l(D_alpha - sum Q_i) + 1`.
    pub fn is_absolute_maximal(&self, alpha: &TupleZ) -> Result<bool> {
        self.check(alpha)?;
        let a = alpha.coords();
        if !self.member(a) {
            return Ok(false);
        }
        let lowered: Vec<i64> = a.iter().map(|x| x - 1).collect();
        Ok(self.ell_of(a) == self.ell_of(&lowered) + 1)
    }

    /// `alpha` in the semigroup, `nabla(alpha)` empty, and
    /// `l(D_alpha) = l(D_{alpha - 1}) + n - 1`.
    pub fn is_relative_maximal(&self, alpha: &TupleZ) -> Result<bool> {
        self.check(alpha)?;
        let a = alpha.coords();
        if !self.member(a) || !self.nabla_empty(a) {
            return Ok(false);
        }
        let lowered: Vec<i64> = a.iter().map(|x| x - 1).collect();
        Ok(self.ell_of(a) == self.ell_of(&lowered) + self.n() as i64 - 1)
    }

    /// `true` iff `nabla(alpha)` is empty.
    pub fn is_maximal_candidate(&self, alpha: &TupleZ) -> Result<bool> {
        self.check(alpha)?;
        Ok(self.member(alpha.coords()) && self.nabla_empty(alpha.coords()))
    }
}

pub fn in_generalized_semigroup(
    curve: &KummerCurve,
    alpha: &TupleZ,
    places: &[PlaceId],
) -> Result<bool> {
    Oracle::new(curve, places)?.in_generalized_semigroup(alpha)
}

pub fn is_pure_gap(curve: &KummerCurve, alpha: &TupleZ, places: &[PlaceId]) -> Result<bool> {
    Oracle::new(curve, places)?.is_pure_gap(alpha)
}

pub fn is_absolute_maximal(
    curve: &KummerCurve,
    alpha: &TupleZ,
    places: &[PlaceId],
) -> Result<bool> {
    Oracle::new(curve, places)?.is_absolute_maximal(alpha)
}

pub fn is_relative_maximal(
    curve: &KummerCurve,
    alpha: &TupleZ,
    places: &[PlaceId],
) -> Result<bool> {
    Oracle::new(curve, places)?.is_relative_maximal(alpha)
}

/// `L(A) != L(A - P2)` and `L(A - P1) = L(A - P1 - P2)`.
///
/// Since `L(A - P) <= L(A)` always, equal dimensions mean equal spaces.
pub fn is_discrepancy(curve: &KummerCurve, a: &Divisor, p1: PlaceId, p2: PlaceId) -> Result<bool> {
    if p1 == p2 {
        return Err(Error::DuplicatePlace(p1.to_string()));
    }
    curve.check_place(p1)?;
    curve.check_place(p2)?;
    let l = |d: &Divisor| ell(curve, d).map(|e| e.dim);
    let a1 = a.minus_place(p1);
    Ok(l(a)? != l(&a.minus_place(p2))? && l(&a1)? == l(&a1.minus_place(p2))?)
}

/// Smallest `k > 0` with `k P_i - k P_j` principal, detected as a degree-zero
/// divisor with a nonzero Riemann-Roch space.
pub fn verify_period(curve: &KummerCurve, i: PlaceId, j: PlaceId) -> Result<i64> {
    if i == j {
        return Err(Error::DuplicatePlace(i.to_string()));
    }
    curve.check_ramified_places(&[i, j])?;
    let bound = 2 * curve.genus() + curve.m();
    for k in 1..=bound {
        let d = Divisor::from_terms([(i, k), (j, -k)]);
        if ell(curve, &d)?.dim == 1 {
            return Ok(k);
        }
    }
    Err(Error::Inconsistent(format!(
        "no principal multiple of {i} - {j} up to k = {bound}"
    )))
}

/// Convenience wrapper: `l(D_alpha(Q))` through the divisor route.
pub fn ell_of_tuple(curve: &KummerCurve, alpha: &TupleZ, places: &[PlaceId]) -> Result<i64> {
    Ok(ell(curve, &divisor_from_tuple(alpha, places)?)?.dim)
}
