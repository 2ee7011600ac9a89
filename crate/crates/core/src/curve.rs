//! The Kummer curve `y^m = prod_{j=1}^r (x - a_j)^lambda`, kept purely symbolic.
//!
//! Nothing here touches field arithmetic. A curve is the triple `(m, r, lambda)`
//! together with its genus; places are indices. Every valuation-theoretic fact
//! used downstream only depends on `(m, r)`: the function `z` with
//! `(z) = P_1 + ... + P_r - r P_inf` satisfies `z^m = prod (x - a_j)`, so the
//! `lambda = 1` model describes the same function field.
//!
//! The base field must have characteristic prime to `m`. There is no
//! characteristic in this model, so that condition is the caller's to uphold.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tuple::TupleZ;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCurve")]
pub struct KummerCurve {
    m: u32,
    r: u32,
    lambda: u32,
    genus: u32,
}

#[derive(Deserialize)]
struct RawCurve {
    m: u32,
    r: u32,
    lambda: u32,
    genus: Option<u32>,
}

impl TryFrom<RawCurve> for KummerCurve {
    type Error = Error;

    fn try_from(raw: RawCurve) -> Result<Self> {
        let curve = KummerCurve::new(raw.m, raw.r, raw.lambda)?;
        match raw.genus {
            Some(g) if g != curve.genus => Err(Error::InvalidCurve(format!(
                "stated genus {g} disagrees with (m-1)(r-1)/2 = {}",
                curve.genus
            ))),
            _ => Ok(curve),
        }
    }
}

impl KummerCurve {
    /// Validates `m >= 2`, `r >= 2`, `lambda >= 1` and `gcd(m, lambda r) = 1`.
    pub fn new(m: u32, r: u32, lambda: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidCurve(format!("m = {m} must be at least 2")));
        }
        if r < 2 {
            return Err(Error::InvalidCurve(format!("r = {r} must be at least 2")));
        }
        if lambda < 1 {
            return Err(Error::InvalidCurve("lambda must be positive".into()));
        }
        let lr = u64::from(lambda) * u64::from(r);
        if u64::from(m).gcd(&lr) != 1 {
            return Err(Error::InvalidCurve(format!(
                "gcd(m, lambda r) = gcd({m}, {lr}) must be 1"
            )));
        }
        // gcd(m, r) = 1 forces one of m, r to be odd, so (m-1)(r-1) is even.
        let genus = (m - 1) * (r - 1) / 2;
        Ok(KummerCurve {
            m,
            r,
            lambda,
            genus,
        })
    }

    pub fn m(&self) -> i64 {
        i64::from(self.m)
    }

    pub fn r(&self) -> i64 {
        i64::from(self.r)
    }

    pub fn lambda(&self) -> i64 {
        i64::from(self.lambda)
    }

    pub fn genus(&self) -> i64 {
        i64::from(self.genus)
    }

    /// The period of any pair of distinct affine ramified places.
    pub fn period(&self) -> i64 {
        self.m()
    }

    /// `W = (2g - 2) P_inf = (rm - r - m - 1) P_inf`.
    pub fn canonical_divisor(&self) -> Divisor {
        Divisor::single(PlaceId::Infinity, 2 * self.genus() - 2)
    }

    /// Largest `n` for which the maximal-element descriptions apply: `r - floor(r/m)`.
    pub fn max_n_maximals(&self) -> i64 {
        self.r() - Integer::div_floor(&self.r(), &self.m())
    }

    /// Largest `n` with a nonempty pure-gap set: `r - 1 - floor(r/m)`.
    pub fn max_n_pure_gaps(&self) -> i64 {
        self.max_n_maximals() - 1
    }

    /// `(P_1, ..., P_n)`.
    pub fn first_places(&self, n: usize) -> Result<Vec<PlaceId>> {
        if n as i64 > self.r() {
            return Err(Error::NOutOfRange {
                n: n as i64,
                min: 1,
                max: self.r(),
            });
        }
        Ok((1..=n as u32).map(PlaceId::Ramified).collect())
    }

    pub fn check_place(&self, p: PlaceId) -> Result<()> {
        match p {
            PlaceId::Ramified(j) if j >= 1 && j <= self.r => Ok(()),
            PlaceId::Infinity => Ok(()),
            other => Err(Error::UnsupportedPlace(format!(
                "{other} (curve has r = {})",
                self.r
            ))),
        }
    }

    /// Validates a list of places as affine ramified and pairwise distinct.
    pub fn check_ramified_places(&self, places: &[PlaceId]) -> Result<()> {
        for (i, p) in places.iter().enumerate() {
            if *p == PlaceId::Infinity {
                return Err(Error::UnsupportedPlace(
                    "the place at infinity cannot be part of the tuple".into(),
                ));
            }
            self.check_place(*p)?;
            if places[..i].contains(p) {
                return Err(Error::DuplicatePlace(p.to_string()));
            }
        }
        Ok(())
    }

    pub fn check_divisor(&self, d: &Divisor) -> Result<()> {
        d.support().try_for_each(|p| self.check_place(p))
    }
}

impl fmt::Display for KummerCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^{} = prod_{{j=1}}^{{{}}} (x - a_j)^{}  (genus {})",
            self.m, self.r, self.lambda, self.genus
        )
    }
}

/// A place of the curve: one of the `r` affine totally ramified places or the
/// unique place at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaceId {
    Ramified(u32),
    Infinity,
}

impl fmt::Display for PlaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceId::Ramified(j) => write!(f, "P{j}"),
            PlaceId::Infinity => write!(f, "Pinf"),
        }
    }
}

impl std::str::FromStr for PlaceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['P', 'p']);
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
            return Ok(PlaceId::Infinity);
        }
        match t.parse::<u32>() {
            Ok(j) if j >= 1 => Ok(PlaceId::Ramified(j)),
            _ => Err(Error::UnsupportedPlace(s.to_string())),
        }
    }
}

impl Serialize for PlaceId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integer combination of places with finite support. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Divisor {
    coeffs: BTreeMap<PlaceId, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn single(p: PlaceId, a: i64) -> Self {
        let mut d = Divisor::zero();
        d.add_at(p, a);
        d
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PlaceId, i64)>) -> Self {
        let mut d = Divisor::zero();
        for (p, a) in terms {
            d.add_at(p, a);
        }
        d
    }

    pub fn add_at(&mut self, p: PlaceId, a: i64) {
        let c = self.coeffs.entry(p).or_insert(0);
        *c += a;
        if *c == 0 {
            self.coeffs.remove(&p);
        }
    }

    pub fn coeff(&self, p: PlaceId) -> i64 {
        self.coeffs.get(&p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = PlaceId> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (PlaceId, i64)> + '_ {
        self.coeffs.iter().map(|(p, a)| (*p, *a))
    }

    /// `self - P`.
    pub fn minus_place(&self, p: PlaceId) -> Divisor {
        let mut d = self.clone();
        d.add_at(p, -1);
        d
    }

    pub fn plus_place(&self, p: PlaceId) -> Divisor {
        let mut d = self.clone();
        d.add_at(p, 1);
        d
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, a) in rhs.terms() {
            d.add_at(p, a);
        }
        d
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, a) in rhs.terms() {
            d.add_at(p, -a);
        }
        d
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor::from_terms(self.terms().map(|(p, a)| (p, -a)))
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, a)) in self.terms().enumerate() {
            let sign = if a < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let sep = if i > 0 { " " } else { "" };
            let space = if i > 0 { " " } else { "" };
            match a.abs() {
                1 => write!(f, "{sep}{sign}{space}{p}")?,
                k => write!(f, "{sep}{sign}{space}{k}{p}")?,
            }
        }
        Ok(())
    }
}

/// `D_alpha(Q) = alpha_1 Q_1 + ... + alpha_n Q_n`.
pub fn divisor_from_tuple(alpha: &TupleZ, places: &[PlaceId]) -> Result<Divisor> {
    if alpha.dim() != places.len() {
        return Err(Error::DimensionMismatch {
            expected: places.len(),
            got: alpha.dim(),
        });
    }
    for (i, p) in places.iter().enumerate() {
        if places[..i].contains(p) {
            return Err(Error::DuplicatePlace(p.to_string()));
        }
    }
    Ok(Divisor::from_terms(
        places.iter().copied().zip(alpha.coords().iter().copied()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1: PlaceId = PlaceId::Ramified(1);
    const P2: PlaceId = PlaceId::Ramified(2);
    const P3: PlaceId = PlaceId::Ramified(3);

    #[test]
    fn genus_of_small_curves() {
        assert_eq!(KummerCurve::new(5, 9, 1).unwrap().genus(), 16);
        assert_eq!(KummerCurve::new(3, 2, 1).unwrap().genus(), 1);
        assert_eq!(KummerCurve::new(4, 7, 1).unwrap().genus(), 9);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            KummerCurve::new(1, 5, 1),
            Err(Error::InvalidCurve(_))
        ));
        assert!(matches!(
            KummerCurve::new(5, 1, 1),
            Err(Error::InvalidCurve(_))
        ));
        assert!(matches!(
            KummerCurve::new(4, 6, 1),
            Err(Error::InvalidCurve(_))
        ));
        // gcd(m, r) = 1 but gcd(m, lambda r) = 3
        assert!(matches!(
            KummerCurve::new(3, 4, 3),
            Err(Error::InvalidCurve(_))
        ));
        assert!(KummerCurve::new(3, 4, 2).is_ok());
    }

    #[test]
    fn canonical_divisor_examples() {
        let w = KummerCurve::new(5, 9, 1).unwrap().canonical_divisor();
        assert_eq!(w, Divisor::single(PlaceId::Infinity, 30));
        assert!(KummerCurve::new(3, 2, 1)
            .unwrap()
            .canonical_divisor()
            .is_zero());
        let w = KummerCurve::new(3, 4, 1).unwrap().canonical_divisor();
        assert_eq!(w.coeff(PlaceId::Infinity), 4);
        assert_eq!(w.degree(), 4);
    }

    #[test]
    fn period_is_m() {
        assert_eq!(KummerCurve::new(5, 9, 1).unwrap().period(), 5);
        assert_eq!(KummerCurve::new(3, 2, 1).unwrap().period(), 3);
        assert_eq!(KummerCurve::new(4, 7, 1).unwrap().period(), 4);
    }

    #[test]
    fn divisor_from_tuple_examples() {
        let d = divisor_from_tuple(&TupleZ::from([2, -1]), &[P1, P2]).unwrap();
        assert_eq!(d, Divisor::from_terms([(P1, 2), (P2, -1)]));
        assert_eq!(d.degree(), 1);
        assert_eq!(d.to_string(), "2P1 - P2");
        let d = divisor_from_tuple(&TupleZ::zeros(3), &[P1, P2, P3]).unwrap();
        assert!(d.is_zero());
        let d = divisor_from_tuple(&TupleZ::from([26, 1, 1]), &[P1, P2, P3]).unwrap();
        assert_eq!(d.coeff(P1), 26);
        assert_eq!(d.degree(), 28);
    }

    #[test]
    fn divisor_from_tuple_rejects_duplicates() {
        let err = divisor_from_tuple(&TupleZ::from([1, 1]), &[P1, P1]).unwrap_err();
        assert!(matches!(err, Error::DuplicatePlace(_)));
        let err = divisor_from_tuple(&TupleZ::from([1]), &[P1, P2]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn json_shape() {
        let c = KummerCurve::new(5, 9, 1).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"m":5,"r":9,"lambda":1,"genus":16}"#);
        let back: KummerCurve = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(
            serde_json::from_str::<KummerCurve>(r#"{"m":5,"r":9,"lambda":1,"genus":3}"#).is_err()
        );
        assert!(serde_json::from_str::<KummerCurve>(r#"{"m":4,"r":6,"lambda":1}"#).is_err());
    }

    #[test]
    fn place_parsing() {
        assert_eq!("P3".parse::<PlaceId>().unwrap(), P3);
        assert_eq!("inf".parse::<PlaceId>().unwrap(), PlaceId::Infinity);
        assert!("P0".parse::<PlaceId>().is_err());
    }

    #[test]
    fn place_checks() {
        let c = KummerCurve::new(3, 4, 1).unwrap();
        assert!(c.check_place(PlaceId::Ramified(5)).is_err());
        assert!(c.check_ramified_places(&[P1, PlaceId::Infinity]).is_err());
        assert!(c.check_ramified_places(&[P1, P2, P1]).is_err());
        assert!(c.check_ramified_places(&[P2, P1]).is_ok());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn curve() -> impl Strategy<Value = KummerCurve> {
            (2u32..30, 2u32..30, 1u32..6)
                .prop_filter_map("coprime", |(m, r, l)| KummerCurve::new(m, r, l).ok())
        }

        proptest! {
            #[test]
            fn canonical_degree(c in curve()) {
                prop_assert_eq!(c.canonical_divisor().degree(), 2 * c.genus() - 2);
                prop_assert_eq!(2 * c.genus(), (c.m() - 1) * (c.r() - 1));
                prop_assert_eq!(c.m().gcd(&c.r()), 1);
            }

            #[test]
            fn divisor_from_tuple_is_linear(
                a in prop::collection::vec(-20i64..20, 3),
                b in prop::collection::vec(-20i64..20, 3),
            ) {
                let places = [P1, P2, P3];
                let (a, b) = (TupleZ::new(a), TupleZ::new(b));
                let lhs = divisor_from_tuple(&(&a + &b), &places).unwrap();
                let rhs = &divisor_from_tuple(&a, &places).unwrap() + &divisor_from_tuple(&b, &places).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
