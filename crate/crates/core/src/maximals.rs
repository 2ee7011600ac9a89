//! Closed forms for Weierstrass semigroups and maximal elements at totally
//! ramified places of a Kummer curve.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::combinat::compositions;
use crate::curve::KummerCurve;
use crate::error::{Error, Result};
use crate::semigroup::{Domain, MaximalFamily, MaximalKind};
use crate::tuple::TupleZ;

/// Gap sequence of the Weierstrass semigroup at a single place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OnePlaceGaps {
    pub gaps: BTreeSet<i64>,
    pub at_infinity: bool,
}

impl OnePlaceGaps {
    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn contains(&self, a: i64) -> bool {
        self.gaps.contains(&a)
    }
}

/// Gaps of `H(P)` at an affine ramified place, or at `P_inf` where the
/// semigroup is `<m, r>`.
pub fn h_one_place(curve: &KummerCurve, at_infinity: bool) -> OnePlaceGaps {
    let (m, r, g) = (curve.m(), curve.r(), curve.genus());
    let gaps = if at_infinity {
        (1..2 * g)
            .filter(|&a| !(0..=a / m).any(|x| (a - x * m) % r == 0))
            .collect()
    } else {
        let mut out = BTreeSet::new();
        for i in 0..=(m - 2 - m / r) {
            for j in 0..=(r - 2 - (r * (i + 1)) / m) {
                out.insert(1 + i + m * j);
            }
        }
        out
    };
    OnePlaceGaps { gaps, at_infinity }
}

fn check_n(curve: &KummerCurve, n: usize) -> Result<()> {
    let max = curve.max_n_maximals();
    if n < 2 || n as i64 > max {
        return Err(Error::NOutOfRange {
            n: n as i64,
            min: 2,
            max,
        });
    }
    Ok(())
}

/// `k = r - n - floor(r i / m)`.
fn level(curve: &KummerCurve, n: usize, i: i64) -> i64 {
    curve.r() - n as i64 - Integer::div_floor(&(curve.r() * i), &curve.m())
}

/// Largest residue with positive maximal elements: `m - 1 - floor(m/r)`.
fn max_residue(curve: &KummerCurve) -> i64 {
    curve.m() - 1 - curve.m() / curve.r()
}

fn diagonal(first: i64, i: i64, n: usize) -> TupleZ {
    let mut v = vec![i; n];
    v[0] = first;
    TupleZ::new(v)
}

/// Absolute maximal elements inside `C(P)`: the zero tuple together with
/// `(k m + i, i, ..., i)` for `1 <= i <= m - 1`. The first coordinate may be
/// negative.
pub fn gamma_hat_box(curve: &KummerCurve, n: usize) -> Result<BTreeSet<TupleZ>> {
    check_n(curve, n)?;
    let m = curve.m();
    let mut out: BTreeSet<TupleZ> = (1..m)
        .map(|i| diagonal(level(curve, n, i) * m + i, i, n))
        .collect();
    out.insert(TupleZ::zeros(n));
    Ok(out)
}

/// Relative maximal elements inside `C(P)`: `((n-2) m, 0, ..., 0)` and
/// `((k + n - 2) m + i, i, ..., i)` for `1 <= i <= m - 1`.
pub fn lambda_hat_box(curve: &KummerCurve, n: usize) -> Result<BTreeSet<TupleZ>> {
    check_n(curve, n)?;
    let m = curve.m();
    let mut out: BTreeSet<TupleZ> = (1..m)
        .map(|i| diagonal((level(curve, n, i) + n as i64 - 2) * m + i, i, n))
        .collect();
    out.insert(diagonal((n as i64 - 2) * m, 0, n));
    Ok(out)
}

/// All `(k_1 m + i, ..., k_n m + i)` with `1 <= i <= m - 1 - floor(m/r)` and
/// `k_1 + ... + k_n = total(i)`, compositions in colex order.
fn diagonal_translates(
    curve: &KummerCurve,
    n: usize,
    total: impl Fn(i64) -> i64,
) -> BTreeSet<TupleZ> {
    let m = curve.m();
    let mut out = BTreeSet::new();
    for i in 1..=max_residue(curve) {
        let k = total(i);
        if k < 0 {
            continue;
        }
        for ks in compositions(k as u64, n) {
            out.insert(TupleZ::new(
                ks.iter().map(|&kj| kj as i64 * m + i).collect(),
            ));
        }
    }
    out
}

/// Absolute maximal elements with all coordinates positive.
///
/// Empty when `r - floor(r/m) < n <= r`.
pub fn gamma_star(curve: &KummerCurve, n: usize) -> Result<BTreeSet<TupleZ>> {
    if n < 2 || n as i64 > curve.r() {
        return Err(Error::NOutOfRange {
            n: n as i64,
            min: 2,
            max: curve.r(),
        });
    }
    if n as i64 > curve.max_n_maximals() {
        return Ok(BTreeSet::new());
    }
    Ok(diagonal_translates(curve, n, |i| level(curve, n, i)))
}

/// Relative maximal elements with all coordinates positive, the input of
/// the pure-gap construction.
pub fn lambda_star(curve: &KummerCurve, n: usize) -> Result<BTreeSet<TupleZ>> {
    check_n(curve, n)?;
    let r = curve.r();
    Ok(diagonal_translates(curve, n, |i| {
        r - 2 - Integer::div_floor(&(r * i), &curve.m())
    }))
}

/// The positive relative maximal elements as a translation family.
pub fn relative_family(curve: &KummerCurve, n: usize) -> Result<MaximalFamily> {
    MaximalFamily::from_seeds(
        lambda_hat_box(curve, n)?,
        curve.period(),
        n,
        MaximalKind::Relative,
        Domain::Positive,
    )
}

/// The positive absolute maximal elements as a translation family.
pub fn absolute_family(curve: &KummerCurve, n: usize) -> Result<MaximalFamily> {
    MaximalFamily::from_seeds(
        gamma_hat_box(curve, n)?,
        curve.period(),
        n,
        MaximalKind::Absolute,
        Domain::Positive,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;
    use crate::semigroup::{expand_family, family_cardinality, lattice_translates, translate_box};
    use num_bigint::BigUint;

    fn curve(m: u32, r: u32) -> KummerCurve {
        KummerCurve::new(m, r, 1).unwrap()
    }

    fn set(v: &[&[i64]]) -> BTreeSet<TupleZ> {
        v.iter().map(|x| TupleZ::new(x.to_vec())).collect()
    }

    #[test]
    fn one_place_gaps_examples() {
        let h = h_one_place(&curve(5, 9), false);
        assert_eq!(
            h.gaps.iter().copied().collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 6, 7, 8, 11, 12, 13, 16, 17, 21, 22, 26, 31]
        );
        assert_eq!(h.len(), 16);
        assert_eq!(h_one_place(&curve(3, 2), false).gaps, BTreeSet::from([1]));
        let inf = h_one_place(&curve(5, 9), true);
        assert_eq!(inf.len(), 16);
        assert!(inf.contains(1) && !inf.contains(5) && !inf.contains(9) && !inf.contains(14));
        assert!(inf.at_infinity);
    }

    #[test]
    fn one_place_gaps_count_genus() {
        for m in 2..13u32 {
            for r in 2..13u32 {
                let Ok(c) = KummerCurve::new(m, r, 1) else {
                    continue;
                };
                assert_eq!(h_one_place(&c, false).len() as i64, c.genus(), "({m},{r})");
                assert_eq!(
                    h_one_place(&c, true).len() as i64,
                    c.genus(),
                    "({m},{r}) inf"
                );
            }
        }
    }

    #[test]
    fn gamma_hat_examples() {
        assert_eq!(
            gamma_hat_box(&curve(5, 9), 3).unwrap(),
            set(&[
                &[0, 0, 0],
                &[26, 1, 1],
                &[17, 2, 2],
                &[8, 3, 3],
                &[-1, 4, 4]
            ])
        );
        assert_eq!(
            gamma_hat_box(&curve(3, 4), 2).unwrap(),
            set(&[&[0, 0], &[4, 1], &[2, 2]])
        );
        assert!(matches!(
            gamma_hat_box(&curve(5, 9), 9),
            Err(Error::NOutOfRange { .. })
        ));
        assert!(gamma_hat_box(&curve(5, 9), 1).is_err());
    }

    #[test]
    fn boxes_coincide_for_two_places() {
        for (m, r) in [(3, 4), (5, 9), (4, 7), (7, 3), (2, 5)] {
            let c = curve(m, r);
            assert_eq!(
                gamma_hat_box(&c, 2).unwrap(),
                lambda_hat_box(&c, 2).unwrap()
            );
        }
    }

    #[test]
    fn lambda_hat_examples() {
        assert_eq!(
            lambda_hat_box(&curve(5, 9), 3).unwrap(),
            set(&[
                &[5, 0, 0],
                &[31, 1, 1],
                &[22, 2, 2],
                &[13, 3, 3],
                &[4, 4, 4]
            ])
        );
        assert!(lambda_hat_box(&curve(5, 9), 2)
            .unwrap()
            .contains(&TupleZ::zeros(2)));
    }

    #[test]
    fn closed_forms_pass_the_oracle() {
        let c = curve(5, 9);
        let o = Oracle::first_places(&c, 3).unwrap();
        for t in gamma_hat_box(&c, 3).unwrap() {
            assert!(o.is_absolute_maximal(&t).unwrap(), "{t}");
        }
        for t in lambda_hat_box(&c, 3).unwrap() {
            assert!(o.is_relative_maximal(&t).unwrap(), "{t}");
        }
    }

    #[test]
    fn star_examples() {
        let c = curve(3, 4);
        let expected = set(&[&[4, 1], &[1, 4], &[2, 2]]);
        assert_eq!(gamma_star(&c, 2).unwrap(), expected);
        assert_eq!(lambda_star(&c, 2).unwrap(), expected);

        let c = curve(5, 9);
        assert!(gamma_star(&c, 9).unwrap().is_empty());
        assert!(gamma_star(&c, 10).is_err());
        // k_i = 6 - floor(9i/5) for i = 1..4 gives 5, 3, 1, -1.
        assert_eq!(gamma_star(&c, 3).unwrap().len(), 21 + 10 + 3);
        // C(8,2) + C(6,2) + C(4,2) + C(2,2)
        assert_eq!(lambda_star(&c, 3).unwrap().len(), 50);
        assert!(lambda_star(&c, 9).is_err());
    }

    #[test]
    fn lambda_star_residues_agree() {
        let c = curve(5, 9);
        for t in lambda_star(&c, 3).unwrap() {
            let i = t[0] % 5;
            assert!(t.coords().iter().all(|a| a % 5 == i));
        }
    }

    #[test]
    fn families_expand_to_star_sets() {
        for (m, r) in [(3, 4), (5, 9), (4, 7), (7, 3), (2, 7)] {
            let c = curve(m, r);
            for n in 2..=c.max_n_maximals() as usize {
                let fam = relative_family(&c, n).unwrap();
                let ls = lambda_star(&c, n).unwrap();
                assert_eq!(expand_family(&fam, c.genus()), ls);
                assert_eq!(family_cardinality(&fam, c.genus()), BigUint::from(ls.len()));
                fam.check_degree_bound(c.genus()).unwrap();

                let fam = absolute_family(&c, n).unwrap();
                let gs = gamma_star(&c, n).unwrap();
                assert_eq!(expand_family(&fam, c.genus()), gs);
                let direct =
                    lattice_translates(gamma_hat_box(&c, n).unwrap(), c.period(), Domain::Positive);
                assert_eq!(direct, gs, "({m},{r}) n={n}");
            }
        }
    }

    #[test]
    fn translate_box_on_the_relative_family() {
        let c = curve(5, 9);
        let fam = relative_family(&c, 3).unwrap();
        assert_eq!(fam.box0_len(4), 1);
        assert_eq!(
            translate_box(&fam, &[4, 0, 0]).unwrap(),
            set(&[&[22, 2, 2]])
        );
        assert_eq!(
            translate_box(&fam, &[2, 2, 0]).unwrap(),
            set(&[&[12, 12, 2]])
        );
        assert_eq!(translate_box(&fam, &[0, 0, 0]).unwrap(), set(&[&[4, 4, 4]]));
        assert!(translate_box(&fam, &[0, 1, 0]).unwrap().is_empty());
        assert_eq!(
            translate_box(&fam, &[0, 6, 0]).unwrap(),
            set(&[&[1, 31, 1]])
        );
    }
}
