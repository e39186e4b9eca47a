//! Separability and entanglement decision procedures for graph Laplacians
//! viewed as density matrices.
//!
//! Three tests are combined:
//!
//! * blockwise line-sum symmetry — sufficient for separability in any shape;
//! * zero row sums of the partial transpose — necessary for any separable
//!   zero-row-sum state, and exactly equivalent to separability when one
//!   factor has dimension 2;
//! * positive semidefiniteness of the partial transpose (Peres-Horodecki) —
//!   necessary for separability in any shape.
//!
//! For `p, q >= 3` a state can pass every necessary test while failing the
//! sufficient one; those states are reported as undetermined rather than
//! guessed.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::matrix::{IntMatrix, SymIntMatrix};
use crate::tensor::{block_pattern, partial_transpose, FactorShape};

/// Certificate attached to a separable verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeparableCertificate {
    /// Every off-diagonal block is line sum symmetric.
    LineSumSymmetricBlocks,
    /// One factor has dimension 2, where zero partial-transpose row sums
    /// decide separability exactly.
    ExactTwoByQ,
}

/// Certificate attached to an entangled verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EntangledCertificate {
    /// The partial transpose has a nonzero row sum.
    PtRowSumNonzero,
    /// The partial transpose has a negative eigenvalue.
    PtNotPsd,
}

/// Outcome of [`classify`]. The certificate names the criterion that decided.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Separable(SeparableCertificate),
    Entangled(EntangledCertificate),
    /// Passes every necessary test but no sufficient one; not decided.
    Undetermined,
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Separable(_) => "Separable",
            Verdict::Entangled(_) => "Entangled",
            Verdict::Undetermined => "Undetermined",
        }
    }

    pub fn certificate(&self) -> &'static str {
        match self {
            Verdict::Separable(SeparableCertificate::LineSumSymmetricBlocks) => {
                "LineSumSymmetricBlocks"
            }
            Verdict::Separable(SeparableCertificate::ExactTwoByQ) => "ExactTwoByQ",
            Verdict::Entangled(EntangledCertificate::PtRowSumNonzero) => "PtRowSumNonzero",
            Verdict::Entangled(EntangledCertificate::PtNotPsd) => "PtNotPsd",
            Verdict::Undetermined => "PptButUnknown",
        }
    }

    pub fn is_separable(&self) -> bool {
        matches!(self, Verdict::Separable(_))
    }

    pub fn is_entangled(&self) -> bool {
        matches!(self, Verdict::Entangled(_))
    }
}

/// Sufficient condition: true iff every off-diagonal block with `i < j` is
/// line sum symmetric (the rest follow by symmetry). Requires positive trace.
pub fn sufficient_separable(a: &SymIntMatrix, shape: FactorShape) -> Result<bool> {
    shape.check_matches(a.n())?;
    if a.trace() == 0 {
        return Err(Error::ZeroTrace);
    }
    Ok(block_pattern(a, shape)?.all_lss())
}

/// True iff every row of the partial transpose sums to zero. The input must
/// itself have zero row sums (it is the Laplacian hypothesis of the test).
pub fn pt_has_zero_row_sums(a: &SymIntMatrix, shape: FactorShape) -> Result<bool> {
    shape.check_matches(a.n())?;
    if let Some(row) = a.row_sums().iter().position(|&s| s != 0) {
        return Err(Error::NonzeroRowSums { row });
    }
    let pt = partial_transpose(a, shape)?;
    Ok(pt.row_sums().iter().all(|&s| s == 0))
}

/// Peres-Horodecki test: true iff the partial transpose is positive
/// semidefinite. Scaling by the trace cannot change eigenvalue signs, so the
/// unnormalized Laplacian is tested directly. Requires positive trace.
pub fn ppt(a: &SymIntMatrix, shape: FactorShape) -> Result<bool> {
    shape.check_matches(a.n())?;
    if a.trace() == 0 {
        return Err(Error::ZeroTrace);
    }
    Ok(partial_transpose(a, shape)?.is_psd())
}

/// Conjugates by the permutation that exchanges the two tensor factors;
/// index `(i-1)q + j` moves to `(j-1)p + i` (1-based). The result is to be
/// analyzed under the transposed shape `(q, p)`. Separability is preserved:
/// a sum of products `rho (x) eta` maps to the sum of `eta (x) rho`.
pub fn factor_swap(a: &SymIntMatrix, shape: FactorShape) -> Result<SymIntMatrix> {
    shape.check_matches(a.n())?;
    let (p, q, n) = (shape.p(), shape.q(), a.n());
    let mut out = IntMatrix::zero(n);
    let perm = |k: usize| (k % q) * p + k / q;
    for r in 0..n {
        for c in 0..n {
            out.set(perm(r), perm(c), a.get(r, c));
        }
    }
    Ok(SymIntMatrix::from_matrix_unchecked(out))
}

/// Full decision procedure for the Laplacian of a nonempty graph, cheapest
/// test first:
///
/// 1. if `p == 2` or `q == 2`, orient so the first factor is the 2 (swapping
///    factors if needed) and decide exactly by partial-transpose row sums;
/// 2. blockwise line-sum symmetry: separable;
/// 3. nonzero partial-transpose row sum: entangled;
/// 4. partial transpose not positive semidefinite: entangled;
/// 5. otherwise undetermined.
pub fn classify(g: &LabeledGraph, shape: FactorShape) -> Result<Verdict> {
    shape.check_matches(g.n())?;
    if g.is_empty() {
        return Err(Error::ZeroTrace);
    }
    let a = g.laplacian();
    if shape.p() == 2 || shape.q() == 2 {
        let (m, s) = if shape.p() == 2 {
            (a, shape)
        } else {
            (factor_swap(&a, shape)?, shape.transposed())
        };
        return Ok(if pt_has_zero_row_sums(&m, s)? {
            Verdict::Separable(SeparableCertificate::ExactTwoByQ)
        } else {
            Verdict::Entangled(EntangledCertificate::PtRowSumNonzero)
        });
    }
    if sufficient_separable(&a, shape)? {
        return Ok(Verdict::Separable(SeparableCertificate::LineSumSymmetricBlocks));
    }
    if !pt_has_zero_row_sums(&a, shape)? {
        return Ok(Verdict::Entangled(EntangledCertificate::PtRowSumNonzero));
    }
    if !ppt(&a, shape)? {
        return Ok(Verdict::Entangled(EntangledCertificate::PtNotPsd));
    }
    Ok(Verdict::Undetermined)
}
