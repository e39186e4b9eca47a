//! Labeled graphs as edge bitmasks, and their integer Laplacians.
//!
//! A graph on `n` vertices is a bitmask over the `n(n-1)/2` vertex pairs
//! `(u, v)` with `u < v`, in row-major order: pair `(u, v)` sits at bit
//! `u*n - u*(u+1)/2 + (v-u-1)`. Vertices are 0-based throughout the library;
//! only the CLI speaks 1-based labels.

use core::ops::Range;

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, SymIntMatrix};

/// Construction cap. At 12 vertices there are already 2^66 labeled graphs,
/// so anything larger cannot be enumerated anyway.
pub const MAX_VERTICES: usize = 12;

/// Number of edge slots (bitmask length) for `n` vertices.
pub const fn edge_slots(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

const fn edge_index(n: usize, u: usize, v: usize) -> u32 {
    (u * n - u * (u + 1) / 2 + (v - u - 1)) as u32
}

fn check_vertex_count(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooFewVertices { n });
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

/// A labeled graph: vertex count plus edge bitmask.
///
/// Labeled means the vertex numbering is significant; separability of the
/// Laplacian is not invariant under relabeling, so two isomorphic graphs are
/// distinct census entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LabeledGraph {
    n: usize,
    edges: u128,
}

impl LabeledGraph {
    /// The graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        check_vertex_count(n)?;
        Ok(Self { n, edges: 0 })
    }

    /// Builds a graph from a raw edge bitmask in the canonical bit order.
    pub fn from_mask(n: usize, mask: u128) -> Result<Self> {
        check_vertex_count(n)?;
        if edge_slots(n) < 128 && mask >> edge_slots(n) != 0 {
            return Err(Error::MaskOutOfRange { n });
        }
        Ok(Self { n, edges: mask })
    }

    /// Builds a graph from an edge list. Every pair must satisfy
    /// `0 <= u < v < n` and appear at most once.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_vertex_count(n)?;
        let mut mask = 0u128;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if u > v {
                return Err(Error::UnorderedEdgePair { u, v });
            }
            let bit = 1u128 << edge_index(n, u, v);
            if mask & bit != 0 {
                return Err(Error::DuplicateEdge { u, v });
            }
            mask |= bit;
        }
        Ok(Self { n, edges: mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The raw edge bitmask.
    pub fn mask(&self) -> u128 {
        self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges == 0
    }

    pub fn edge_count(&self) -> u32 {
        self.edges.count_ones()
    }

    /// Adjacency test; accepts the endpoints in either order.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        if u == v {
            return false;
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges >> edge_index(self.n, a, b) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        debug_assert!(v < self.n);
        (0..self.n).filter(|&u| self.has_edge(v, u)).count() as u32
    }

    /// Edges as `(u, v)` pairs with `u < v`, in canonical bit order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| self.has_edge(u, v))
    }

    /// The integer Laplacian `D - A`: degrees on the diagonal, -1 per edge.
    /// Row and column sums are zero; the trace is twice the edge count.
    pub fn laplacian(&self) -> SymIntMatrix {
        let mut m = IntMatrix::zero(self.n);
        for (u, v) in self.edges() {
            m.set(u, v, -1);
            m.set(v, u, -1);
            m.set(u, u, m.get(u, u) + 1);
            m.set(v, v, m.get(v, v) + 1);
        }
        SymIntMatrix::from_matrix_unchecked(m)
    }
}

/// Streams every graph whose bitmask lies in `range` (default: all of
/// `0..2^(n(n-1)/2)`, empty graph included) in ascending mask order.
///
/// The stream is a pure function of the interval, so disjoint covering
/// intervals partition the full enumeration exactly; that is what makes the
/// range-parallel census deterministic.
pub fn enumerate_graphs(n: usize, range: Option<Range<u128>>) -> Result<GraphRange> {
    check_vertex_count(n)?;
    let full = 1u128 << edge_slots(n);
    let range = range.unwrap_or(0..full);
    if range.end > full {
        return Err(Error::IntervalOutOfRange { n });
    }
    Ok(GraphRange { n, next: range.start, end: range.end })
}

/// Iterator over an interval of edge bitmasks. See [`enumerate_graphs`].
#[derive(Clone, Debug)]
pub struct GraphRange {
    n: usize,
    next: u128,
    end: u128,
}

impl Iterator for GraphRange {
    type Item = LabeledGraph;

    fn next(&mut self) -> Option<LabeledGraph> {
        if self.next >= self.end {
            return None;
        }
        let g = LabeledGraph { n: self.n, edges: self.next };
        self.next += 1;
        Some(g)
    }
}
