//! Equal-period machinery for maximal elements and pure gaps at `n` places.
//!
//! With a common period `pi`, the lattice `Theta` of translations that preserve
//! maximal elements is `{ v in (pi Z)^n : sum v = 0 }`. A set of nonnegative
//! maximal elements splits into boxes `prod [k_i pi, (k_i + 1) pi)` and every
//! box is a translate of the box `(k_1 + ... + k_n, 0, ..., 0)` by
//! `w_{k_2..k_n} = (-pi sum k_i, k_2 pi, ..., k_n pi)`. A [`MaximalFamily`]
//! stores only those first-axis boxes.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{binomial, compositions};
use crate::error::{Error, Result};
use crate::tuple::{same_dim, TupleZ};

fn fold_coords(tuples: &[TupleZ], pick: fn(i64, i64) -> i64) -> Result<TupleZ> {
    let (first, rest) = tuples.split_first().ok_or(Error::EmptyInput)?;
    let mut acc = first.coords().to_vec();
    for t in rest {
        same_dim(first, t)?;
        for (a, &b) in acc.iter_mut().zip(t.coords()) {
            *a = pick(*a, b);
        }
    }
    Ok(TupleZ::new(acc))
}

/// Componentwise minimum.
pub fn glb(tuples: &[TupleZ]) -> Result<TupleZ> {
    fold_coords(tuples, i64::min)
}

/// Componentwise maximum.
pub fn lub(tuples: &[TupleZ]) -> Result<TupleZ> {
    fold_coords(tuples, i64::max)
}

/// `w_{k_2, ..., k_n}` for a period `pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WVector {
    k: Vec<u64>,
    pi: i64,
}

impl WVector {
    pub fn new(k: Vec<u64>, pi: i64) -> Self {
        WVector { k, pi }
    }

    /// From a full level vector `(k_1, ..., k_n)`; `k_1` does not enter.
    pub fn for_levels(levels: &[u64], pi: i64) -> Self {
        WVector::new(levels.iter().skip(1).copied().collect(), pi)
    }

    pub fn to_tuple(&self) -> TupleZ {
        let total: i64 = self.k.iter().map(|&k| k as i64).sum();
        let mut v = Vec::with_capacity(self.k.len() + 1);
        v.push(-self.pi * total);
        v.extend(self.k.iter().map(|&k| k as i64 * self.pi));
        TupleZ::new(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MaximalKind {
    Absolute,
    Relative,
}

/// Which orthant a family lives in: `N_0^n` or `N^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    NonNegative,
    Positive,
}

impl Domain {
    fn lower(self) -> i64 {
        match self {
            Domain::NonNegative => 0,
            Domain::Positive => 1,
        }
    }

    pub fn contains(self, t: &TupleZ) -> bool {
        t.coords().iter().all(|&a| a >= self.lower())
    }
}

/// Maximal elements of one kind, stored as the first-axis boxes
/// `X_{k,0,...,0}` for `k >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalFamily {
    pi: i64,
    n: usize,
    kind: MaximalKind,
    box0: BTreeMap<u64, BTreeSet<TupleZ>>,
}

impl MaximalFamily {
    pub fn new(pi: i64, n: usize, kind: MaximalKind) -> Result<Self> {
        if pi < 1 {
            return Err(Error::Precondition(format!("period {pi} must be positive")));
        }
        if n < 2 {
            return Err(Error::NOutOfRange {
                n: n as i64,
                min: 2,
                max: i64::MAX,
            });
        }
        Ok(MaximalFamily {
            pi,
            n,
            kind,
            box0: BTreeMap::new(),
        })
    }

    /// Adds an element of some box `[k pi, (k+1) pi) x [0, pi)^{n-1}`.
    pub fn insert(&mut self, t: TupleZ) -> Result<()> {
        if t.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: t.dim(),
            });
        }
        let c = t.coords();
        if c[0] < 0 || c[1..].iter().any(|&b| b < 0 || b >= self.pi) {
            return Err(Error::Precondition(format!(
                "{t} is not in a first-axis box of period {}",
                self.pi
            )));
        }
        let k = (c[0] / self.pi) as u64;
        self.box0.entry(k).or_default().insert(t);
        Ok(())
    }

    /// Builds the family from representatives of `C(Q)` (first coordinate any
    /// integer, the others in `[0, pi)`), keeping the ones inside `domain`.
    ///
    /// For [`Domain::Positive`] every kept element must have all residues mod
    /// `pi` nonzero, otherwise translation would leave the domain.
    pub fn from_seeds(
        seeds: impl IntoIterator<Item = TupleZ>,
        pi: i64,
        n: usize,
        kind: MaximalKind,
        domain: Domain,
    ) -> Result<Self> {
        let mut family = MaximalFamily::new(pi, n, kind)?;
        for s in seeds {
            if !domain.contains(&s) {
                continue;
            }
            if domain == Domain::Positive && s.coords().iter().any(|a| a.mod_floor(&pi) == 0) {
                return Err(Error::Precondition(format!(
                    "{s} has a zero residue mod {pi}; positive families need nonzero residues"
                )));
            }
            family.insert(s)?;
        }
        Ok(family)
    }

    pub fn pi(&self) -> i64 {
        self.pi
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> MaximalKind {
        self.kind
    }

    pub fn is_empty(&self) -> bool {
        self.box0.values().all(BTreeSet::is_empty)
    }

    pub fn box0(&self, k: u64) -> impl Iterator<Item = &TupleZ> {
        self.box0.get(&k).into_iter().flatten()
    }

    pub fn box0_len(&self, k: u64) -> usize {
        self.box0.get(&k).map_or(0, BTreeSet::len)
    }

    pub fn max_level(&self) -> Option<u64> {
        self.box0
            .iter()
            .filter(|(_, s)| !s.is_empty())
            .map(|(k, _)| *k)
            .next_back()
    }

    /// Boxes at level `k >= ceil((2g-1)/pi)` must be empty, because tuples
    /// of total at least `2g` are never maximal.
    pub fn check_degree_bound(&self, genus: i64) -> Result<()> {
        let bound = level_bound(genus, self.pi);
        match self.max_level() {
            Some(k) if k >= bound => Err(Error::Inconsistent(format!(
                "level {k} is occupied but levels >= {bound} must be empty"
            ))),
            _ => Ok(()),
        }
    }
}

/// `ceil((2g - 1) / pi)`, clamped at zero.
pub fn level_bound(genus: i64, pi: i64) -> u64 {
    Integer::div_ceil(&(2 * genus - 1), &pi).max(0) as u64
}

/// `X_{k_1,...,k_n} = X_{k_1+...+k_n,0,...,0} + w_{k_2,...,k_n}`.
pub fn translate_box(family: &MaximalFamily, k: &[u64]) -> Result<BTreeSet<TupleZ>> {
    if k.len() != family.n {
        return Err(Error::DimensionMismatch {
            expected: family.n,
            got: k.len(),
        });
    }
    let w = WVector::for_levels(k, family.pi).to_tuple();
    let total: u64 = k.iter().sum();
    Ok(family.box0(total).map(|x| x + &w).collect())
}

/// `sum_{k=0}^{ceil((2g-1)/pi) - 1} C(k+n-1, n-1) |X_{k,0,...,0}|`.
pub fn family_cardinality(family: &MaximalFamily, genus: i64) -> BigUint {
    let n = family.n as u64;
    (0..level_bound(genus, family.pi))
        .map(|k| binomial(k + n - 1, n - 1) * BigUint::from(family.box0_len(k)))
        .sum()
}

/// Every element of the family: the union of all translated boxes.
pub fn expand_family(family: &MaximalFamily, genus: i64) -> BTreeSet<TupleZ> {
    let mut out = BTreeSet::new();
    for total in 0..level_bound(genus, family.pi) {
        if family.box0_len(total) == 0 {
            continue;
        }
        for k in compositions(total, family.n) {
            out.extend(translate_box(family, &k).expect("dimension checked"));
        }
    }
    out
}

/// `(seeds + Theta) intersected with the domain`, enumerated directly over the
/// lattice coordinates. Independent of the box decomposition.
pub fn lattice_translates(
    seeds: impl IntoIterator<Item = TupleZ>,
    pi: i64,
    domain: Domain,
) -> BTreeSet<TupleZ> {
    let lo = domain.lower();
    let mut out = BTreeSet::new();
    for s in seeds {
        let c = s.coords();
        let n = c.len();
        // t_j >= ceil((lo - b_j) / pi) for j >= 2, sum t_j <= floor((a_1 - lo) / pi).
        let mins: Vec<i64> = c[1..]
            .iter()
            .map(|&b| Integer::div_ceil(&(lo - b), &pi))
            .collect();
        let budget = Integer::div_floor(&(c[0] - lo), &pi) - mins.iter().sum::<i64>();
        if budget < 0 {
            continue;
        }
        for extra in 0..=budget as u64 {
            for ks in compositions(extra, n - 1) {
                let mut v = c.to_vec();
                let mut shift = 0;
                for (j, (&m, &e)) in mins.iter().zip(&ks).enumerate() {
                    let t = m + e as i64;
                    v[j + 1] += t * pi;
                    shift += t;
                }
                v[0] -= shift * pi;
                out.insert(TupleZ::new(v));
            }
        }
    }
    out
}

/// All `glb(b^1, ..., b^n)` with `b^l` in `lambda_star` and
/// `b^l_l < min_{j != l} b^j_l` for every `l`, by exhaustive search over
/// ordered `n`-tuples with per-coordinate pruning.
pub fn pure_gaps_from_relative_maximals(
    lambda_star: &BTreeSet<TupleZ>,
    n: usize,
) -> Result<BTreeSet<TupleZ>> {
    if n < 1 {
        return Err(Error::NOutOfRange {
            n: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    if let Some(t) = lambda_star.iter().find(|t| t.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: t.dim(),
        });
    }
    let pool: Vec<&TupleZ> = lambda_star.iter().collect();
    let found = pool
        .par_iter()
        .map(|first| {
            let mut chosen = vec![*first];
            let mut out = BTreeSet::new();
            search(&pool, n, &mut chosen, &mut out);
            out
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found)
}

fn search<'a>(
    pool: &[&'a TupleZ],
    n: usize,
    chosen: &mut Vec<&'a TupleZ>,
    out: &mut BTreeSet<TupleZ>,
) {
    let p = chosen.len();
    if p == n {
        out.insert(TupleZ::new((0..n).map(|l| chosen[l][l]).collect()));
        return;
    }
    for &cand in pool {
        // Coordinates already owned by earlier picks must stay strictly
        // smaller than this candidate's; this candidate's own coordinate must
        // be strictly below every earlier pick's.
        let ok = (0..p).all(|l| chosen[l][l] < cand[l] && cand[p] < chosen[l][p]);
        if ok {
            chosen.push(cand);
            search(pool, n, chosen, out);
            chosen.pop();
        }
    }
}

/// Closure under every coordinate permutation. Adjacent transpositions
/// generate the symmetric group, so checking those suffices.
pub fn permutation_closed(set: &BTreeSet<TupleZ>) -> bool {
    set.iter().all(|t| {
        (1..t.dim()).all(|i| {
            let s = t.swapped(i - 1, i);
            s == *t || set.contains(&s)
        })
    })
}
