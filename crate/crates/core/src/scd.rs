//! Symmetric chain decomposition of `B(n)`, grown by the same two-case
//! recursion as the Jordan basis: a chain `(X_k, ..., X_{n-k})` becomes
//! `(X_k, ..., X_{n-k}, X_{n-k} ∪ {n+1})` and, when it has at least two
//! members, `(X_k ∪ {n+1}, ..., X_{n-k-1} ∪ {n+1})`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{GroundSize, Subset};
use crate::sjb::SymJordanBasis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetChain {
    n: GroundSize,
    subsets: Vec<Subset>,
}

impl SubsetChain {
    pub fn new(n: GroundSize, subsets: Vec<Subset>) -> Result<Self> {
        if subsets.is_empty() {
            return Err(Error::InvalidChain(
                "a chain needs at least one subset".into(),
            ));
        }
        if let Some(x) = subsets.iter().find(|x| x.ground() != n) {
            return Err(Error::Context {
                left: n.get(),
                right: x.ground().get(),
            });
        }
        Ok(SubsetChain { n, subsets })
    }

    pub fn ground(&self) -> GroundSize {
        self.n
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn start_rank(&self) -> usize {
        self.subsets[0].rank()
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    n: GroundSize,
    chains: Vec<SubsetChain>,
}

impl ChainDecomposition {
    pub fn new(n: GroundSize, chains: Vec<SubsetChain>) -> Result<Self> {
        if let Some(c) = chains.iter().find(|c| c.ground() != n) {
            return Err(Error::Context {
                left: n.get(),
                right: c.ground().get(),
            });
        }
        Ok(ChainDecomposition { n, chains })
    }

    pub fn ground(&self) -> GroundSize {
        self.n
    }

    pub fn chains(&self) -> &[SubsetChain] {
        &self.chains
    }
}

fn extend_subset_chain(chain: &SubsetChain, next: GroundSize) -> Vec<SubsetChain> {
    let top = 1u64 << chain.n.get();
    let relabel = |x: &Subset, extra: u64| Subset::new_unchecked(x.mask() | extra, next);
    let last = chain.subsets.last().expect("chains are non-empty");

    let mut longer: Vec<Subset> = chain.subsets.iter().map(|x| relabel(x, 0)).collect();
    longer.push(relabel(last, top));
    let mut out = vec![SubsetChain {
        n: next,
        subsets: longer,
    }];
    if chain.len() >= 2 {
        let shorter = chain.subsets[..chain.len() - 1]
            .iter()
            .map(|x| relabel(x, top))
            .collect();
        out.push(SubsetChain {
            n: next,
            subsets: shorter,
        });
    }
    out
}

pub fn build_scd(n: GroundSize) -> Result<ChainDecomposition> {
    let zero = GroundSize::new(0)?;
    let mut chains = vec![SubsetChain {
        n: zero,
        subsets: vec![Subset::empty(zero)],
    }];
    let mut ground = zero;
    for _ in 0..n.get() {
        let next = ground.succ()?;
        chains = chains
            .par_iter()
            .map(|c| extend_subset_chain(c, next))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        ground = next;
    }
    ChainDecomposition::new(n, chains)
}

/// Anything decomposed into chains with a start rank and a length.
pub trait ChainShape {
    /// `(start_rank, length)` per chain, in stored order.
    fn chain_shapes(&self) -> Vec<(usize, usize)>;
}

impl ChainShape for ChainDecomposition {
    fn chain_shapes(&self) -> Vec<(usize, usize)> {
        self.chains
            .iter()
            .map(|c| (c.start_rank(), c.len()))
            .collect()
    }
}

impl ChainShape for SymJordanBasis {
    fn chain_shapes(&self) -> Vec<(usize, usize)> {
        self.chains()
            .iter()
            .map(|c| (c.start_rank(), c.len()))
            .collect()
    }
}

/// `(start_rank, length)` pairs of a decomposition, kept in chain order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthProfile {
    pub ordered: Vec<(usize, usize)>,
}

impl LengthProfile {
    /// Multiplicity of each `(start_rank, length)` pair.
    pub fn multiset(&self) -> BTreeMap<(usize, usize), usize> {
        let mut counts = BTreeMap::new();
        for &pair in &self.ordered {
            *counts.entry(pair).or_insert(0) += 1;
        }
        counts
    }
}

pub fn chain_length_profile<T: ChainShape + ?Sized>(d: &T) -> LengthProfile {
    LengthProfile {
        ordered: d.chain_shapes(),
    }
}
