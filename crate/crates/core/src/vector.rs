//! Sparse vectors of `V(B(n))` with exact integer coefficients.
//!
//! Terms are kept sorted by ascending mask and zero coefficients are never
//! stored, so equality of vectors is structural equality of their term lists.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{GroundSize, Subset};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactVector {
    n: GroundSize,
    terms: Vec<(u64, BigInt)>,
}

impl ExactVector {
    pub fn zero(n: GroundSize) -> Self {
        ExactVector {
            n,
            terms: Vec::new(),
        }
    }

    /// The basis vector of a single subset.
    pub fn basis(x: Subset) -> Self {
        ExactVector {
            n: x.ground(),
            terms: vec![(x.mask(), BigInt::from(1))],
        }
    }

    /// Collects terms, summing repeated subsets and dropping zeros.
    pub fn from_terms<I, C>(n: GroundSize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, C)>,
        C: Into<BigInt>,
    {
        let mut raw = Vec::new();
        for (x, c) in terms {
            if x.ground() != n {
                return Err(Error::Context {
                    left: n.get(),
                    right: x.ground().get(),
                });
            }
            raw.push((x.mask(), c.into()));
        }
        Ok(Self::from_unsorted(n, raw))
    }

    /// Sorts, merges duplicates and prunes zeros. Masks must already fit `n`.
    pub(crate) fn from_unsorted(n: GroundSize, mut raw: Vec<(u64, BigInt)>) -> Self {
        raw.sort_by_key(|(m, _)| *m);
        let mut terms: Vec<(u64, BigInt)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == m => *acc += c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        ExactVector { n, terms }
    }

    /// Terms already sorted, unique and nonzero.
    pub(crate) fn from_canonical(n: GroundSize, terms: Vec<(u64, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms
            .iter()
            .all(|(m, c)| !c.is_zero() && m & !n.full_mask() == 0));
        ExactVector { n, terms }
    }

    pub fn ground(&self) -> GroundSize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (Subset, &BigInt)> + '_ {
        let n = self.n;
        self.terms
            .iter()
            .map(move |(m, c)| (Subset::new_unchecked(*m, n), c))
    }

    pub(crate) fn raw_terms(&self) -> &[(u64, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, x: Subset) -> BigInt {
        match self.terms.binary_search_by_key(&x.mask(), |(m, _)| *m) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Context {
                left: self.n.get(),
                right: other.n.get(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.combine(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, rhs(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, rhs(c))));
        ExactVector {
            n: self.n,
            terms: out,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        ExactVector {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Standard inner product, subsets orthonormal.
    pub fn inner_product(&self, other: &Self) -> Result<BigInt> {
        self.check_same(other)?;
        Ok(self.dot(other))
    }

    pub(crate) fn dot(&self, other: &Self) -> BigInt {
        let (a, b) = (&self.terms, &other.terms);
        let mut acc = BigInt::zero();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &a[i].1 * &b[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    pub fn norm_squared(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c * c).sum()
    }

    /// Classifies the vector by the ranks of its support.
    pub fn as_homogeneous(&self) -> Result<HomogeneousVector> {
        let mut ranks = self.terms.iter().map(|(m, _)| m.count_ones() as usize);
        let rank = match ranks.next() {
            None => None,
            Some(first) => {
                if let Some(second) = ranks.find(|&r| r != first) {
                    return Err(Error::NotHomogeneous { first, second });
                }
                Some(first)
            }
        };
        Ok(HomogeneousVector {
            vector: self.clone(),
            rank,
        })
    }

    /// Same terms viewed over a different ground size. Fails if some subset
    /// does not fit.
    pub fn with_ground(&self, n: GroundSize) -> Result<Self> {
        if let Some((m, _)) = self.terms.iter().find(|(m, _)| m & !n.full_mask() != 0) {
            return Err(Error::InvalidSubset {
                mask: *m,
                n: n.get(),
            });
        }
        Ok(ExactVector {
            n,
            terms: self.terms.clone(),
        })
    }

    pub(crate) fn map_masks(&self, n: GroundSize, f: impl Fn(u64) -> u64) -> Self {
        ExactVector {
            n,
            terms: self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn into_raw(self) -> Vec<(u64, BigInt)> {
        self.terms
    }
}

/// A vector known to live in a single rank level, or the zero vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousVector {
    vector: ExactVector,
    rank: Option<usize>,
}

impl HomogeneousVector {
    /// `None` for the zero sentinel.
    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    pub fn is_zero_sentinel(&self) -> bool {
        self.rank.is_none()
    }

    pub fn vector(&self) -> &ExactVector {
        &self.vector
    }

    pub fn into_vector(self) -> ExactVector {
        self.vector
    }
}

impl Add for &ExactVector {
    type Output = ExactVector;

    /// Panics if the ground sizes differ; see [`ExactVector::checked_add`].
    fn add(self, rhs: &ExactVector) -> ExactVector {
        self.checked_add(rhs)
            .expect("adding vectors over different ground sizes")
    }
}

impl Sub for &ExactVector {
    type Output = ExactVector;

    fn sub(self, rhs: &ExactVector) -> ExactVector {
        self.checked_sub(rhs)
            .expect("subtracting vectors over different ground sizes")
    }
}

impl Neg for &ExactVector {
    type Output = ExactVector;

    fn neg(self) -> ExactVector {
        ExactVector {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if mag != BigInt::from(1) {
                write!(f, "{mag}·")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactVector[n={}]({})", self.n, self)
    }
}
