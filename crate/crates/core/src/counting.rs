//! Counting formulas and exhaustive-census kernels.
//!
//! Everything that can overflow a machine word is computed in arbitrary
//! precision; the enumeration counters themselves are bounded by what can be
//! enumerated at all, so they stay in u64.
//!
//! `census_interval` is the per-worker kernel of the census: a pure function
//! of its bitmask interval whose tallies merge by addition, so any disjoint
//! covering set of intervals reproduces the single full-range run exactly.

use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{edge_slots, enumerate_graphs};
use crate::tensor::{block_pattern, partial_transpose, FactorShape};

/// Cap on the 0-1 matrix enumeration: 2^25 matrices at n = 5.
pub const NS_ENUM_MAX: usize = 5;

/// Cap on the census vertex count. At 9 vertices (2^36 - 1 graphs) a full
/// run is already an hours-long job.
pub const CENSUS_MAX_VERTICES: usize = 9;

/// Cap on the census vertex count when the positive-semidefiniteness column
/// is included; the exact characteristic polynomial dominates the cost.
pub const PPT_CENSUS_MAX_VERTICES: usize = 8;

/// Number of nonempty labeled graphs on `n` vertices: `2^(n(n-1)/2) - 1`.
/// The empty graph is excluded because its Laplacian has trace zero.
pub fn count_nonempty_graphs(n: usize) -> BigInt {
    (BigInt::one() << (n * (n - 1) / 2)) - 1
}

/// Counts of `n x n` 0-1 matrices that are / are not line sum symmetric,
/// by exhaustive enumeration of all `2^(n*n)` of them.
pub fn count_lss_matrices(n: usize) -> Result<(u64, u64)> {
    if n > NS_ENUM_MAX {
        return Err(Error::NsCapExceeded { n, max: NS_ENUM_MAX });
    }
    let bits = n * n;
    let row_masks: Vec<u32> = (0..n).map(|i| (((1u64 << n) - 1) as u32) << (i * n)).collect();
    let col_masks: Vec<u32> =
        (0..n).map(|j| (0..n).fold(0u32, |m, i| m | 1 << (i * n + j))).collect();
    let total = 1u64 << bits;
    let mut lss = 0u64;
    for m in 0..total {
        let m = m as u32;
        if (0..n).all(|i| (m & row_masks[i]).count_ones() == (m & col_masks[i]).count_ones()) {
            lss += 1;
        }
    }
    Ok((lss, total - lss))
}

/// Number of labeled graphs with `n` vertices, exactly `i` edges, and at
/// least one vertex of degree 1, by enumerating the i-subsets of the
/// `n(n-1)/2` edge slots.
///
/// Returns 0 without enumeration when `i > (n-1)(n-2)/2 + 1`: the densest
/// such graph is a pendant vertex attached to a clique on the rest.
pub fn count_degree_one_graphs(n: usize, i: usize) -> u64 {
    if i == 0 || n < 2 || i > (n - 1) * (n - 2) / 2 + 1 {
        return 0;
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let slots = pairs.len();
    debug_assert!(i <= slots);
    let mut pick: Vec<usize> = (0..i).collect();
    let mut deg = alloc::vec![0u32; n];
    let mut count = 0u64;
    loop {
        deg.iter_mut().for_each(|d| *d = 0);
        for &s in &pick {
            let (u, v) = pairs[s];
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.contains(&1) {
            count += 1;
        }
        // next lexicographic i-subset
        let mut k = i;
        loop {
            if k == 0 {
                return count;
            }
            k -= 1;
            if pick[k] != slots - i + k {
                break;
            }
        }
        pick[k] += 1;
        for t in k + 1..i {
            pick[t] = pick[t - 1] + 1;
        }
    }
}

/// Closed forms for [`count_degree_one_graphs`] where they exist:
/// `i <= 3` (where the count coincides with the number of labeled bipartite
/// graphs), and near the maximum edge count, `i = (n-1)(n-2)/2 + 1 - j` with
/// `n >= 4 + j`, where the graph is a pendant vertex on an almost-clique.
pub fn degree_one_closed_form(n: usize, i: usize) -> Option<BigInt> {
    let nb = |x: usize| BigInt::from(x);
    let n_int = n as i64;
    match i {
        1 => return Some(BigInt::from(n_int * (n_int - 1) / 2)),
        2 if n >= 2 => {
            let prod = BigInt::from(n_int + 1) * (n_int) * (n_int - 1) * (n_int - 2);
            return Some(prod / 8);
        }
        3 if n >= 2 => {
            let head = BigInt::from((n_int + 1) * (n_int + 2) + 2);
            let prod = head * n_int * (n_int - 1) * (n_int - 2) * (n_int - 3);
            return Some(prod / 48);
        }
        _ => {}
    }
    if n < 2 {
        return None;
    }
    let half = (n - 1) * (n - 2) / 2;
    if i <= half + 1 {
        let j = half + 1 - i;
        if n >= 4 + j {
            return Some(nb(n) * nb(n - 1) * binomial(half, j));
        }
    }
    None
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Formula bounds on the separable/entangled counts for shape `(p, q)`,
/// together with the ingredient counts they are built from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundsReport {
    pub p: usize,
    pub q: usize,
    /// `2^(pq(q-1)/2) * N_s(q)^(p(p-1)/2) - 1`: graphs whose off-diagonal
    /// blocks are all line sum symmetric, minus the empty one.
    pub ls_lower: BigInt,
    /// Sum over block-pattern classes with a degree-1 row: each such graph
    /// has a nonzero partial-transpose row sum, hence is entangled.
    pub le_lower: BigInt,
    /// `L(pq) - le_lower`.
    pub ls_upper: BigInt,
    /// `L(pq) - ls_lower`.
    pub le_upper: BigInt,
    pub ns_q: u64,
    pub ne_q: u64,
    /// Degree-one graph counts `M_p(1..=(p-1)(p-2)/2+1)` entering `le_lower`.
    pub mp: Vec<u64>,
}

/// Evaluates the four bound formulas exactly.
pub fn bounds(p: usize, q: usize) -> Result<BoundsReport> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidShape { p, q });
    }
    let (ns_q, ne_q) = count_lss_matrices(q)?;
    let total = count_nonempty_graphs(p * q);
    let free_bits = p * q * (q - 1) / 2;
    let free = BigInt::one() << free_bits;
    let upper_blocks = p * (p - 1) / 2;

    let ls_lower = &free * BigInt::from(ns_q).pow(upper_blocks as u32) - 1;

    let kmax = (p - 1) * (p - 2) / 2 + 1;
    let mp: Vec<u64> = (1..=kmax).map(|i| count_degree_one_graphs(p, i)).collect();
    let mut le_lower = BigInt::from(0u32);
    for (idx, &m) in mp.iter().enumerate() {
        let i = idx + 1;
        le_lower += BigInt::from(m)
            * BigInt::from(ne_q).pow(i as u32)
            * BigInt::from(ns_q).pow((upper_blocks - i) as u32)
            * &free;
    }

    let ls_upper = &total - &le_lower;
    let le_upper = &total - &ls_lower;
    Ok(BoundsReport { p, q, ls_lower, le_lower, ls_upper, le_upper, ns_q, ne_q, mp })
}

/// Exact separable/entangled counts for shape `(2, q)`:
/// `L_s = 2^(q(q-1)) N_s(q) - 1` and `L_e = 2^(q(q-1)) N_e(q)`.
/// Here the lower and upper bounds coincide because zero partial-transpose
/// row sums decide separability exactly when one factor has dimension 2.
pub fn exact_two_by_q_counts(q: usize) -> Result<(BigInt, BigInt)> {
    let (ns, ne) = count_lss_matrices(q)?;
    let scale = BigInt::one() << (q * (q - 1));
    Ok((&scale * ns - 1, &scale * ne))
}

/// Mergeable census tally for one bitmask interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusTally {
    /// Nonempty graphs seen.
    pub total: u64,
    /// Graphs whose off-diagonal blocks are all line sum symmetric.
    pub thm3: u64,
    /// Graphs whose partial transpose has zero row sums.
    pub ptzero: u64,
    /// Graphs whose partial transpose is positive semidefinite; absent when
    /// the census ran without the PSD column.
    pub ppt: Option<u64>,
    /// Graphs whose failing-block pattern has a row with exactly one entry.
    pub pattern_deg1: u64,
}

impl CensusTally {
    pub fn new(with_ppt: bool) -> Self {
        Self { total: 0, thm3: 0, ptzero: 0, ppt: with_ppt.then_some(0), pattern_deg1: 0 }
    }

    /// Adds another interval's counts into this one. Addition is associative
    /// and commutative, so merge order never affects the result.
    pub fn absorb(&mut self, other: &CensusTally) {
        debug_assert_eq!(self.ppt.is_some(), other.ppt.is_some());
        self.total += other.total;
        self.thm3 += other.thm3;
        self.ptzero += other.ptzero;
        self.pattern_deg1 += other.pattern_deg1;
        if let (Some(a), Some(b)) = (self.ppt.as_mut(), other.ppt) {
            *a += b;
        }
    }
}

/// Checks the census feasibility caps for a shape.
pub fn census_caps(shape: FactorShape, with_ppt: bool) -> Result<()> {
    let n = shape.n();
    if n > CENSUS_MAX_VERTICES {
        return Err(Error::CensusCapExceeded { n, max: CENSUS_MAX_VERTICES });
    }
    if with_ppt && n > PPT_CENSUS_MAX_VERTICES {
        return Err(Error::PptCapExceeded { n, max: PPT_CENSUS_MAX_VERTICES });
    }
    Ok(())
}

/// Classifies every nonempty graph whose bitmask lies in `range` and tallies
/// the criteria. Pure in its inputs; see [`CensusTally::absorb`].
pub fn census_interval(
    shape: FactorShape,
    range: Range<u128>,
    with_ppt: bool,
) -> Result<CensusTally> {
    census_caps(shape, with_ppt)?;
    let mut tally = CensusTally::new(with_ppt);
    for g in enumerate_graphs(shape.n(), Some(range))? {
        if g.is_empty() {
            continue;
        }
        tally.total += 1;
        let lap = g.laplacian();
        let pattern = block_pattern(&lap, shape)?;
        if pattern.all_lss() {
            tally.thm3 += 1;
        }
        if pattern.has_degree_one_row() {
            tally.pattern_deg1 += 1;
        }
        let pt = partial_transpose(&lap, shape)?;
        if pt.row_sums().iter().all(|&s| s == 0) {
            tally.ptzero += 1;
        }
        if let Some(c) = tally.ppt.as_mut() {
            if pt.is_psd() {
                *c += 1;
            }
        }
    }
    Ok(tally)
}

/// Full bitmask range for a census on `n` vertices: `0..2^(n(n-1)/2)`.
/// (Mask 0 is the empty graph and is skipped by the tally.)
pub fn full_census_range(n: usize) -> Range<u128> {
    0..1u128 << edge_slots(n)
}

/// Census results for one shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusReport {
    pub p: usize,
    pub q: usize,
    pub total: u64,
    pub thm3_count: u64,
    pub ptzero_count: u64,
    pub ppt_count: Option<u64>,
    pub pattern_deg1_count: u64,
    /// Exact separable count; present iff `p == 2` or `q == 2`, where zero
    /// partial-transpose row sums decide separability, so it equals
    /// `ptzero_count`.
    pub separable_exact: Option<u64>,
}

impl CensusReport {
    pub fn from_tally(shape: FactorShape, tally: &CensusTally) -> Self {
        let exact = shape.p() == 2 || shape.q() == 2;
        CensusReport {
            p: shape.p(),
            q: shape.q(),
            total: tally.total,
            thm3_count: tally.thm3,
            ptzero_count: tally.ptzero,
            ppt_count: tally.ppt,
            pattern_deg1_count: tally.pattern_deg1,
            separable_exact: exact.then_some(tally.ptzero),
        }
    }

    /// Exact entangled count when the separable count is exact.
    pub fn entangled_exact(&self) -> Option<u64> {
        self.separable_exact.map(|s| self.total - s)
    }
}
