//! Exact separability analysis for graph-Laplacian density matrices.
//!
//! The Laplacian `L = D - A` of a nonempty graph, scaled by its trace, is a
//! density matrix. Under a fixed tensor factorization of the vertex space
//! into dimensions `p` and `q` (with `n = pq`), this crate decides in exact
//! integer arithmetic whether that state is separable or entangled, and
//! counts how many labeled graphs fall on each side.
//!
//! Every criterion used here — line-sum symmetry of blocks, row sums of the
//! partial transpose, positive semidefiniteness of the partial transpose — is
//! invariant under positive scaling, so the integer Laplacian stands in for
//! the normalized density matrix and no tolerance ever enters a decision.
//!
//! ```
//! use lapsep_core::{classify, FactorShape, LabeledGraph, Verdict};
//!
//! let shape = FactorShape::new(2, 2)?;
//! // the same edge, placed differently, flips the verdict:
//! let inside = LabeledGraph::from_edges(4, &[(0, 1)])?;
//! let across = LabeledGraph::from_edges(4, &[(1, 2)])?;
//! assert!(classify(&inside, shape)?.is_separable());
//! assert!(classify(&across, shape)?.is_entangled());
//! # Ok::<(), lapsep_core::Error>(())
//! ```
//!
//! The crate is `no_std` (with `alloc`). IO, file formats, the CLI, and the
//! thread-parallel census driver live in the companion `lapsep` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod counting;
pub mod criteria;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod tensor;

pub use criteria::{
    classify, factor_swap, ppt, pt_has_zero_row_sums, sufficient_separable,
    EntangledCertificate, SeparableCertificate, Verdict,
};
pub use error::{Error, Result};
pub use graph::{enumerate_graphs, LabeledGraph, MAX_VERTICES};
pub use matrix::{CharPolyCoeffs, IntMatrix, SymIntMatrix};
pub use num_bigint::BigInt;
pub use tensor::{
    block, block_pattern, edge_count_between, partial_transpose, BlockPattern, FactorShape,
};
