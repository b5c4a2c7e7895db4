//! Symmetric Jordan bases of the Boolean lattice.
//!
//! `V(B(n))` is the vector space spanned by the subsets of `[n] = {1, ..., n}`,
//! and the up operator `U` sends a subset to the sum of the subsets covering
//! it. This crate builds, with exact integer arithmetic, a basis of `V(B(n))`
//! made of chains `v_k, U v_k, ..., U^{n-2k} v_k` symmetric about rank `n/2`
//! ([`sjb::build_sjb`]), alongside the combinatorial symmetric chain
//! decomposition it mirrors ([`scd::build_scd`]). The [`verify`] module then
//! checks the chain relations, linear independence, orthogonality, uniform
//! norm ratios, and the full rank of `U` between consecutive levels, which is
//! what makes the binomial coefficients unimodal.
//!
//! ```
//! use sjb::{build_sjb, verify_sjb, GroundSize};
//!
//! let basis = build_sjb(GroundSize::new(4)?)?;
//! assert_eq!(basis.vector_count(), 16);
//! assert!(verify_sjb(&basis).passed());
//! # Ok::<(), sjb::Error>(())
//! ```

pub mod cli;
pub mod document;
pub mod elimination;
pub mod error;
pub mod lattice;
pub mod operators;
pub mod scd;
pub mod sjb;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{binomial, covers_of, subsets_of_rank, GroundSize, Subset};
pub use operators::{down, lift, split_by_top, up, up_matrix, UpMatrix};
pub use scd::{build_scd, chain_length_profile, ChainDecomposition, SubsetChain};
pub use sjb::{build_sjb, SymJordanBasis, SymJordanChain};
pub use vector::{ExactVector, HomogeneousVector};
pub use verify::{
    check_orthogonality, check_ratio_uniformity, ratio_profile, unimodality_report, up_rank_check,
    verify_scd, verify_sjb, verify_sjc, VerificationReport,
};
