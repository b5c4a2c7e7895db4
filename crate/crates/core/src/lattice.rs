//! Ground sets, subsets as bitmasks, and the counts that go with them.
//!
//! Elements of `[n] = {1, ..., n}` are 1-indexed wherever they are shown to a
//! user; internally element `i` lives at bit `i - 1`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default largest ground size accepted at the API boundary.
pub const DEFAULT_CAP: usize = 24;
/// Largest ground size the 64-bit mask representation can carry through one
/// more extension step.
pub const HARD_CAP: usize = 63;

/// Size `n` of the ground set `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSize(u8);

impl GroundSize {
    /// Validates `n` against [`DEFAULT_CAP`].
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_CAP)
    }

    /// Validates `n` against a caller-supplied cap, itself clamped to [`HARD_CAP`].
    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(HARD_CAP);
        if n > cap {
            return Err(Error::Capacity { n, cap });
        }
        Ok(GroundSize(n as u8))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// The ground size one larger. Fails only past [`HARD_CAP`].
    pub fn succ(self) -> Result<Self> {
        Self::with_cap(self.get() + 1, HARD_CAP)
    }

    /// Mask with every element of `[n]` set.
    pub fn full_mask(self) -> u64 {
        if self.0 == 0 {
            0
        } else {
            u64::MAX >> (64 - self.0 as u32)
        }
    }

    pub fn check_rank(self, k: usize) -> Result<()> {
        if k > self.get() {
            return Err(Error::Range { k, n: self.get() });
        }
        Ok(())
    }
}

impl fmt::Display for GroundSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `[n]`, stored as a bitmask together with its ground size.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    mask: u64,
    n: GroundSize,
}

impl Subset {
    pub fn new(mask: u64, n: GroundSize) -> Result<Self> {
        if mask & !n.full_mask() != 0 {
            return Err(Error::InvalidSubset { mask, n: n.get() });
        }
        Ok(Subset { mask, n })
    }

    /// Builds a subset from 1-indexed elements. Duplicates are rejected.
    pub fn from_elements(elements: &[usize], n: GroundSize) -> Result<Self> {
        let mut mask = 0u64;
        for &e in elements {
            if e == 0 || e > n.get() || mask & (1 << (e - 1)) != 0 {
                return Err(Error::InvalidSubset {
                    mask: mask | 1u64.checked_shl(e.wrapping_sub(1) as u32).unwrap_or(0),
                    n: n.get(),
                });
            }
            mask |= 1 << (e - 1);
        }
        Ok(Subset { mask, n })
    }

    pub(crate) fn new_unchecked(mask: u64, n: GroundSize) -> Self {
        debug_assert_eq!(mask & !n.full_mask(), 0);
        Subset { mask, n }
    }

    pub fn empty(n: GroundSize) -> Self {
        Subset { mask: 0, n }
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn ground(self) -> GroundSize {
        self.n
    }

    pub fn rank(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= self.n.get() && self.mask & (1 << (element - 1)) != 0
    }

    /// Sorted 1-indexed elements.
    pub fn elements(self) -> Vec<usize> {
        (0..self.n.get())
            .filter(|i| self.mask & (1 << i) != 0)
            .map(|i| i + 1)
            .collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "∅");
        }
        write!(f, "{{")?;
        for (i, e) in self.elements().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc == C(n - k + i + 1, i + 1) after this step, so the division is exact
        acc = acc * (n - k + i + 1) / (i + 1);
    }
    acc
}

/// `C(n, k)` as a machine integer, for sizes that index into memory.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - k as u128 + i + 1) / (i + 1);
    }
    acc as usize
}

/// All `k`-subsets of `[n]`, in increasing mask order.
pub fn subsets_of_rank(n: GroundSize, k: usize) -> Result<Vec<Subset>> {
    n.check_rank(k)?;
    let mut out = Vec::with_capacity(binomial_usize(n.get(), k));
    if k == 0 {
        out.push(Subset::empty(n));
        return Ok(out);
    }
    // Gosper's hack walks same-popcount masks in increasing order.
    let limit = 1u128 << n.get();
    let mut mask: u64 = (1u64 << k) - 1;
    while (mask as u128) < limit {
        out.push(Subset::new_unchecked(mask, n));
        let c = mask & mask.wrapping_neg();
        let r = mask.wrapping_add(c);
        if r == 0 {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(out)
}

/// Every `Y` covering `x` (one extra element), in increasing mask order.
pub fn covers_of(x: Subset) -> Vec<Subset> {
    let n = x.ground();
    (0..n.get())
        .filter(|i| x.mask & (1 << i) == 0)
        .map(|i| Subset::new_unchecked(x.mask | (1 << i), n))
        .collect()
}

/// Position of a subset within [`subsets_of_rank`] for its rank, via the
/// combinatorial number system.
pub fn rank_position(x: Subset) -> usize {
    let mut pos = 0;
    let mut seen = 0;
    for i in 0..x.ground().get() {
        if x.mask & (1 << i) != 0 {
            seen += 1;
            pos += binomial_usize(i, seen);
        }
    }
    pos
}
