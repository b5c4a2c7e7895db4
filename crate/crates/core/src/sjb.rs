//! Inductive construction of a symmetric Jordan basis of `V(B(n))`.
//!
//! Each chain `(x_k, ..., x_{n-k})` of a basis over `[n]` yields chains over
//! `[n+1]`:
//!
//! * when `2k = n`, the pair `(x_k, x̄_k)`;
//! * otherwise the two chains
//!   `y_l = x_l + (l-k)·x̄_{l-1}` for `k ≤ l ≤ n+1-k` and
//!   `z_l = (n-k-l+1)·x̄_{l-1} - x_l` for `k+1 ≤ l ≤ n-k`,
//!   with `x_{k-1} = x_{n+1-k} = 0`.
//!
//! Here `x̄ = lift(x)` and `x_l` is read in `V(0)` unchanged. Coefficients are
//! kept exactly as constructed; no chain is rescaled.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{GroundSize, Subset};
use crate::operators::{embed, lift};
use crate::vector::ExactVector;

/// A candidate symmetric Jordan chain: vectors of ranks `k, k+1, ...` over a
/// common ground size. Chains produced by the builder always satisfy the chain
/// relations; chains read from elsewhere are certified by
/// [`crate::verify::verify_sjc`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymJordanChain {
    n: GroundSize,
    start_rank: usize,
    vectors: Vec<ExactVector>,
}

impl SymJordanChain {
    pub fn new(n: GroundSize, start_rank: usize, vectors: Vec<ExactVector>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidChain(
                "a chain needs at least one vector".into(),
            ));
        }
        if let Some(v) = vectors.iter().find(|v| v.ground() != n) {
            return Err(Error::Context {
                left: n.get(),
                right: v.ground().get(),
            });
        }
        Ok(SymJordanChain {
            n,
            start_rank,
            vectors,
        })
    }

    pub fn ground(&self) -> GroundSize {
        self.n
    }

    pub fn start_rank(&self) -> usize {
        self.start_rank
    }

    /// Declared rank of the last vector.
    pub fn end_rank(&self) -> usize {
        self.start_rank + self.vectors.len() - 1
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[ExactVector] {
        &self.vectors
    }

    /// The vector of declared rank `l`, or `None` outside the chain.
    pub fn at_rank(&self, l: usize) -> Option<&ExactVector> {
        l.checked_sub(self.start_rank)
            .and_then(|i| self.vectors.get(i))
    }

    /// Every vector multiplied by `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        SymJordanChain {
            n: self.n,
            start_rank: self.start_rank,
            vectors: self.vectors.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Replaces the vector at position `i`.
    pub fn with_vector(&self, i: usize, v: ExactVector) -> Result<Self> {
        let mut vectors = self.vectors.clone();
        if i >= vectors.len() {
            return Err(Error::InvalidChain(format!("no vector at position {i}")));
        }
        vectors[i] = v;
        Self::new(self.n, self.start_rank, vectors)
    }
}

/// An ordered list of chains meant to form a basis of `V(B(n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymJordanBasis {
    n: GroundSize,
    chains: Vec<SymJordanChain>,
}

impl SymJordanBasis {
    pub fn new(n: GroundSize, chains: Vec<SymJordanChain>) -> Result<Self> {
        if let Some(c) = chains.iter().find(|c| c.ground() != n) {
            return Err(Error::Context {
                left: n.get(),
                right: c.ground().get(),
            });
        }
        Ok(SymJordanBasis { n, chains })
    }

    /// The basis of `V(B(0))`: the single chain `(∅)`.
    pub fn base() -> Self {
        let n = GroundSize::new(0).expect("zero is within every cap");
        let chain = SymJordanChain {
            n,
            start_rank: 0,
            vectors: vec![ExactVector::basis(Subset::empty(n))],
        };
        SymJordanBasis {
            n,
            chains: vec![chain],
        }
    }

    pub fn ground(&self) -> GroundSize {
        self.n
    }

    pub fn chains(&self) -> &[SymJordanChain] {
        &self.chains
    }

    pub fn into_chains(self) -> Vec<SymJordanChain> {
        self.chains
    }

    pub fn vector_count(&self) -> usize {
        self.chains.iter().map(SymJordanChain::len).sum()
    }

    /// All vectors of declared rank `r`, tagged with their chain index, in
    /// chain order.
    pub fn vectors_of_rank(&self, r: usize) -> Vec<(usize, &ExactVector)> {
        self.chains
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.at_rank(r).map(|v| (i, v)))
            .collect()
    }
}

/// Value of `det [[1, l-k], [-1, n-k-l+1]] = n - 2k + 1`, the matrix relating
/// `(y_l, z_l)` to `(x_l, x̄_{l-1})`.
pub fn case_b_determinant(n: i64, k: i64, l: i64) -> Result<i64> {
    if !(k >= 0 && k < l && l <= n - k) {
        return Err(Error::Case(format!(
            "level {l} has no z-vector for n={n}, k={k}"
        )));
    }
    let det = (n - k - l + 1) + (l - k);
    if det <= 0 {
        return Err(Error::Consistency(format!(
            "singular 2x2 mixing matrix at n={n}, k={k}, l={l}"
        )));
    }
    Ok(det)
}

/// Extension of a middle-rank singleton chain `(x_k)` with `2k = n`.
pub fn extend_case_a(chain: &SymJordanChain) -> Result<SymJordanChain> {
    let (n, k) = (chain.ground().get(), chain.start_rank());
    if chain.len() != 1 || 2 * k != n {
        return Err(Error::Case(format!(
            "case (a) needs one vector at rank n/2, got {} vectors from rank {k} over n={n}",
            chain.len()
        )));
    }
    let x = &chain.vectors[0];
    let vectors = vec![embed(x)?, lift(x)?];
    SymJordanChain::new(chain.ground().succ()?, k, vectors)
}

/// Extension of a chain with `k < n - k` into its `y` and `z` chains.
pub fn extend_case_b(chain: &SymJordanChain) -> Result<(SymJordanChain, SymJordanChain)> {
    let (n, k) = (chain.ground().get(), chain.start_rank());
    if 2 * k >= n {
        return Err(Error::Case(format!(
            "case (b) needs k < n - k, got k={k} over n={n}"
        )));
    }
    if chain.len() != n - 2 * k + 1 {
        return Err(Error::Case(format!(
            "chain from rank {k} over n={n} should have {} vectors, has {}",
            n - 2 * k + 1,
            chain.len()
        )));
    }
    let next = chain.ground().succ()?;
    let zero = ExactVector::zero(next);

    // x_l in V(0) and x̄_l in V(1); zero outside k..=n-k.
    let lower: Vec<ExactVector> = chain.vectors.iter().map(embed).collect::<Result<_>>()?;
    let upper: Vec<ExactVector> = chain.vectors.iter().map(lift).collect::<Result<_>>()?;
    let x = |l: usize| l.checked_sub(k).and_then(|i| lower.get(i)).unwrap_or(&zero);
    let x_bar = |l: usize| l.checked_sub(k).and_then(|i| upper.get(i)).unwrap_or(&zero);
    let below = |l: usize| if l == 0 { &zero } else { x_bar(l - 1) };

    let y = (k..=n + 1 - k)
        .map(|l| x(l) + &below(l).scale(&BigInt::from(l - k)))
        .collect();
    let z = (k + 1..=n - k)
        .map(|l| {
            case_b_determinant(n as i64, k as i64, l as i64)?;
            let weight = BigInt::from(n - k - l + 1);
            Ok(&below(l).scale(&weight) - x(l))
        })
        .collect::<Result<_>>()?;

    Ok((
        SymJordanChain::new(next, k, y)?,
        SymJordanChain::new(next, k + 1, z)?,
    ))
}

fn extend_chain(chain: &SymJordanChain) -> Result<Vec<SymJordanChain>> {
    if 2 * chain.start_rank() == chain.ground().get() {
        Ok(vec![extend_case_a(chain)?])
    } else {
        let (y, z) = extend_case_b(chain)?;
        Ok(vec![y, z])
    }
}

/// One induction step: the basis over `[n+1]` from the basis over `[n]`.
/// Parent chains are processed in order; each contributes its case (a) chain
/// or its `y` chain followed by its `z` chain.
pub fn extend_basis(basis: &SymJordanBasis) -> Result<SymJordanBasis> {
    let next = basis.ground().succ()?;
    let pieces: Vec<Vec<SymJordanChain>> = basis
        .chains
        .par_iter()
        .map(extend_chain)
        .collect::<Result<_>>()?;
    SymJordanBasis::new(next, pieces.into_iter().flatten().collect())
}

/// The symmetric Jordan basis over `[n]`, built from `n = 0` upward. Only one
/// level is alive at a time.
pub fn build_sjb(n: GroundSize) -> Result<SymJordanBasis> {
    let mut basis = SymJordanBasis::base();
    for _ in 0..n.get() {
        basis = extend_basis(&basis)?;
    }
    Ok(basis)
}

/// Every level `0..=n`, for callers that want the whole induction.
pub fn build_sjb_levels(n: GroundSize) -> Result<Vec<SymJordanBasis>> {
    let mut levels = vec![SymJordanBasis::base()];
    for _ in 0..n.get() {
        let next = extend_basis(levels.last().expect("non-empty"))?;
        levels.push(next);
    }
    Ok(levels)
}
