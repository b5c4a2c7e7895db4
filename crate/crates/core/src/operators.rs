//! The up operator, its adjoint, and the maps relating `V(B(n))` to
//! `V(B(n+1)) = V(0) ⊕ V(1)`.
//!
//! `up` and `down` expand sparse vectors directly. [`UpMatrix`] is only
//! materialized for rank computations and export.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{covers_of, rank_position, subsets_of_rank, GroundSize, Subset};
use crate::vector::ExactVector;

/// `U(X) = Σ Y` over all `Y` covering `X`, extended linearly.
pub fn up(v: &ExactVector) -> ExactVector {
    let n = v.ground();
    let full = n.full_mask();
    let mut raw = Vec::new();
    for (m, c) in v.raw_terms() {
        let mut free = full & !m;
        while free != 0 {
            let bit = free & free.wrapping_neg();
            raw.push((m | bit, c.clone()));
            free ^= bit;
        }
    }
    ExactVector::from_unsorted(n, raw)
}

/// `D(Y) = Σ X` over all `X` covered by `Y`; the adjoint of [`up`].
pub fn down(v: &ExactVector) -> ExactVector {
    let mut raw = Vec::new();
    for (m, c) in v.raw_terms() {
        let mut present = *m;
        while present != 0 {
            let bit = present & present.wrapping_neg();
            raw.push((m ^ bit, c.clone()));
            present ^= bit;
        }
    }
    ExactVector::from_unsorted(v.ground(), raw)
}

/// Views a vector over `[n]` as a vector over `[n+1]` supported in `V(0)`.
pub fn embed(v: &ExactVector) -> Result<ExactVector> {
    v.with_ground(v.ground().succ()?)
}

/// `X ↦ X ∪ {n+1}`, from `V(B(n))` onto `V(1) ⊂ V(B(n+1))`.
pub fn lift(v: &ExactVector) -> Result<ExactVector> {
    let n = v.ground();
    let top = 1u64 << n.get();
    Ok(v.map_masks(n.succ()?, |m| m | top))
}

/// Splits a vector over `[n+1]` into the part avoiding `n+1` and the part
/// containing it. Both halves stay over `[n+1]` and sum to the input.
pub fn split_by_top(v: &ExactVector) -> Result<(ExactVector, ExactVector)> {
    let ground = v.ground();
    if ground.get() == 0 {
        return Err(Error::Range { k: 1, n: 0 });
    }
    let top = 1u64 << (ground.get() - 1);
    let (with_top, without): (Vec<_>, Vec<_>) = v
        .raw_terms()
        .iter()
        .cloned()
        .partition(|(m, _)| m & top != 0);
    Ok((
        ExactVector::from_canonical(ground, without),
        ExactVector::from_canonical(ground, with_top),
    ))
}

/// Coordinate form of `U` restricted to `V(B(n)_k) → V(B(n)_{k+1})`.
///
/// Columns are indexed by the `k`-subsets and rows by the `(k+1)`-subsets,
/// both in ascending mask order. Stored column-sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpMatrix {
    n: GroundSize,
    k: usize,
    row_labels: Vec<Subset>,
    col_labels: Vec<Subset>,
    columns: Vec<Vec<usize>>,
}

impl UpMatrix {
    pub fn ground(&self) -> GroundSize {
        self.n
    }

    pub fn rank_index(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[Subset] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Subset] {
        &self.col_labels
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.columns[col].binary_search(&row).is_ok() as u8
    }

    pub fn column_sums(&self) -> Vec<usize> {
        self.columns.iter().map(Vec::len).collect()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.rows()];
        for col in &self.columns {
            for &r in col {
                sums[r] += 1;
            }
        }
        sums
    }

    /// Dense row-major copy with big-integer entries.
    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut dense = vec![vec![BigInt::from(0); self.cols()]; self.rows()];
        for (c, col) in self.columns.iter().enumerate() {
            for &r in col {
                dense[r][c] = BigInt::from(1);
            }
        }
        dense
    }
}

pub fn up_matrix(n: GroundSize, k: usize) -> Result<UpMatrix> {
    if k >= n.get() {
        return Err(Error::Range { k, n: n.get() });
    }
    let col_labels = subsets_of_rank(n, k)?;
    let row_labels = subsets_of_rank(n, k + 1)?;
    let columns = col_labels
        .iter()
        .map(|&x| covers_of(x).into_iter().map(rank_position).collect())
        .collect();
    Ok(UpMatrix {
        n,
        k,
        row_labels,
        col_labels,
        columns,
    })
}
