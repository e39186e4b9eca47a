//! Tensor-factorization machinery: block decomposition, partial transpose,
//! and the pattern of blocks that fail line-sum symmetry.
//!
//! A `pq x pq` matrix decomposes into `p x p` blocks of size `q x q`. Block
//! indices in this module are 1-based, matching the usual `A^{i,j}` notation;
//! vertices stay 0-based. Under the canonical index bijection
//! `(i, j) -> (i-1)q + j`, block row `i` corresponds to the vertex group
//! `V_i = {(i-1)q, ..., iq-1}` (0-based).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::matrix::{IntMatrix, SymIntMatrix};

/// The factorization `C^p (x) C^q` of an n-dimensional space, `n = pq`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FactorShape {
    p: usize,
    q: usize,
}

impl FactorShape {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidShape { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p * self.q
    }

    /// The mirrored factorization `C^q (x) C^p`.
    pub fn transposed(&self) -> FactorShape {
        FactorShape { p: self.q, q: self.p }
    }

    pub fn check_matches(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::ShapeMismatch { p: self.p, q: self.q, n });
        }
        Ok(())
    }

    /// 0-based vertices of group `i` (1-based block index).
    pub fn group(&self, i: usize) -> core::ops::Range<usize> {
        (i - 1) * self.q..i * self.q
    }
}

/// Block `A^{i,j}` (1-based `i`, `j`) of a `pq x pq` matrix.
pub fn block(a: &SymIntMatrix, shape: FactorShape, i: usize, j: usize) -> Result<IntMatrix> {
    shape.check_matches(a.n())?;
    if i < 1 || i > shape.p || j < 1 || j > shape.p {
        return Err(Error::BlockIndexOutOfRange { i, j, p: shape.p });
    }
    let q = shape.q;
    Ok(IntMatrix::from_fn(q, |r, c| a.get((i - 1) * q + r, (j - 1) * q + c)))
}

/// Partial transpose over the second factor: every `q x q` block transposed
/// in place. Diagonal entries are untouched, so the trace is preserved, and
/// the result of transposing the blocks of a symmetric matrix is symmetric.
pub fn partial_transpose(a: &SymIntMatrix, shape: FactorShape) -> Result<SymIntMatrix> {
    shape.check_matches(a.n())?;
    let q = shape.q;
    let out = IntMatrix::from_fn(a.n(), |r, c| {
        a.get((r / q) * q + c % q, (c / q) * q + r % q)
    });
    Ok(SymIntMatrix::from_matrix_unchecked(out))
}

/// Which blocks fail line-sum symmetry. Symmetric with a zero diagonal:
/// `A^{j,i} = (A^{i,j})^T` and transposition preserves line-sum symmetry,
/// while diagonal blocks of a symmetric matrix are symmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockPattern {
    p: usize,
    bits: Vec<bool>,
}

impl BlockPattern {
    pub fn p(&self) -> usize {
        self.p
    }

    /// True iff block `(i, j)` (1-based) is not line sum symmetric.
    pub fn fails_lss(&self, i: usize, j: usize) -> bool {
        assert!((1..=self.p).contains(&i) && (1..=self.p).contains(&j));
        self.bits[(i - 1) * self.p + (j - 1)]
    }

    /// True iff no block fails; this is the blockwise sufficient condition
    /// for separability.
    pub fn all_lss(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    /// True iff some row of the pattern contains exactly one failing block.
    /// Viewed as an adjacency matrix, the pattern then has a vertex of
    /// degree 1, which certifies a nonzero partial-transpose row sum.
    pub fn has_degree_one_row(&self) -> bool {
        (0..self.p).any(|i| {
            self.bits[i * self.p..(i + 1) * self.p].iter().filter(|&&b| b).count() == 1
        })
    }
}

/// Computes the failing-block pattern; only strictly-upper blocks are
/// examined, the rest filled in by symmetry.
pub fn block_pattern(a: &SymIntMatrix, shape: FactorShape) -> Result<BlockPattern> {
    shape.check_matches(a.n())?;
    let p = shape.p;
    let mut bits = alloc::vec![false; p * p];
    for i in 0..p {
        for j in i + 1..p {
            let fails = !block_is_lss(a, shape.q, i, j);
            bits[i * p + j] = fails;
            bits[j * p + i] = fails;
        }
    }
    Ok(BlockPattern { p, bits })
}

// Line-sum symmetry of block (bi, bj), 0-based, without materializing it.
fn block_is_lss(a: &SymIntMatrix, q: usize, bi: usize, bj: usize) -> bool {
    for m in 0..q {
        let mut rs = 0i128;
        let mut cs = 0i128;
        for t in 0..q {
            rs += a.get(bi * q + m, bj * q + t) as i128;
            cs += a.get(bi * q + t, bj * q + m) as i128;
        }
        if rs != cs {
            return false;
        }
    }
    true
}

/// Number of edges from vertex `v` into `group` (0-based vertices; `v` must
/// not belong to the group). Counts adjacency in the graph itself, so no
/// Laplacian sign conventions are involved.
pub fn edge_count_between(g: &LabeledGraph, v: usize, group: &[usize]) -> Result<u32> {
    let n = g.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut members = 0u16;
    for &w in group {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
        members |= 1 << w;
    }
    if members >> v & 1 == 1 {
        return Err(Error::VertexInGroup { vertex: v });
    }
    Ok((0..n).filter(|&w| members >> w & 1 == 1 && g.has_edge(v, w)).count() as u32)
}
