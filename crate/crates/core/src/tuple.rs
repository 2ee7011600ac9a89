use std::fmt;
use std::ops::{Add, Index, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `Z^n`, ordered lexicographically.
///
/// Carries gaps, pure gaps and maximal elements. The componentwise partial
/// order is available through [`TupleZ::le_componentwise`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TupleZ(Vec<i64>);

impl TupleZ {
    pub fn new(coords: Vec<i64>) -> Self {
        TupleZ(coords)
    }

    pub fn zeros(n: usize) -> Self {
        TupleZ(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        TupleZ(vec![1; n])
    }

    /// The unit vector `e_j` (zero based).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[j] = 1;
        TupleZ(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn le_componentwise(&self, other: &TupleZ) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&a| a > 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// `sigma(x) = (x_{sigma(1)}, ..., x_{sigma(n)})` for a zero based permutation.
    pub fn permuted(&self, sigma: &[usize]) -> TupleZ {
        TupleZ(sigma.iter().map(|&s| self.0[s]).collect())
    }

    pub fn swapped(&self, i: usize, j: usize) -> TupleZ {
        let mut v = self.0.clone();
        v.swap(i, j);
        TupleZ(v)
    }

    pub fn checked_add(&self, other: &TupleZ) -> Result<TupleZ> {
        same_dim(self, other)?;
        Ok(self + other)
    }
}

pub(crate) fn same_dim(a: &TupleZ, b: &TupleZ) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    Ok(())
}

impl From<Vec<i64>> for TupleZ {
    fn from(v: Vec<i64>) -> Self {
        TupleZ(v)
    }
}

impl<const N: usize> From<[i64; N]> for TupleZ {
    fn from(v: [i64; N]) -> Self {
        TupleZ(v.to_vec())
    }
}

impl Index<usize> for TupleZ {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &TupleZ {
    type Output = TupleZ;
    fn add(self, rhs: &TupleZ) -> TupleZ {
        debug_assert_eq!(self.dim(), rhs.dim());
        TupleZ(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &TupleZ {
    type Output = TupleZ;
    fn sub(self, rhs: &TupleZ) -> TupleZ {
        debug_assert_eq!(self.dim(), rhs.dim());
        TupleZ(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for TupleZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}
