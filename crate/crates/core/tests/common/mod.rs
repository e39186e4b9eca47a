#![allow(dead_code)] // not every test binary uses every oracle

//! Independent oracles for the integration suites. Each reimplements its
//! target from a different definition than the library uses, so agreement is
//! meaningful: the partial transpose is built entrywise from the index
//! relation instead of blockwise, positive semidefiniteness comes from a
//! floating-point eigensolver, determinants from cofactor expansion.

use lapsep_core::{LabeledGraph, SymIntMatrix};

/// Entrywise partial transpose straight from the index relation
/// `PT[(i,j),(k,l)] = A[(i,l),(k,j)]` (0-based here).
pub fn pt_definition(a: &SymIntMatrix, p: usize, q: usize) -> Vec<Vec<i64>> {
    let n = p * q;
    assert_eq!(a.n(), n);
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..p {
        for j in 0..q {
            for k in 0..p {
                for l in 0..q {
                    out[i * q + j][k * q + l] = a.get(i * q + l, k * q + j);
                }
            }
        }
    }
    out
}

pub fn sym_rows(a: &SymIntMatrix) -> Vec<Vec<i64>> {
    (0..a.n()).map(|i| (0..a.n()).map(|j| a.get(i, j)).collect()).collect()
}

/// Minimum eigenvalue via cyclic Jacobi rotations on f64.
pub fn jacobi_min_eigenvalue(a: &SymIntMatrix) -> f64 {
    let n = a.n();
    if n == 1 {
        return a.get(0, 0) as f64;
    }
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j) as f64).collect())
        .collect();
    for _ in 0..20_000 {
        let (mut p, mut q, mut max) = (0, 1, 0.0f64);
        for i in 0..n {
            for j in i + 1..n {
                if m[i][j].abs() > max {
                    max = m[i][j].abs();
                    p = i;
                    q = j;
                }
            }
        }
        if max < 1e-13 {
            break;
        }
        let (app, aqq, apq) = (m[p][p], m[q][q], m[p][q]);
        let tau = (aqq - app) / (2.0 * apq);
        let t = if tau >= 0.0 {
            1.0 / (tau + (1.0 + tau * tau).sqrt())
        } else {
            -1.0 / (-tau + (1.0 + tau * tau).sqrt())
        };
        let c = 1.0 / (1.0 + t * t).sqrt();
        let s = t * c;
        for i in 0..n {
            if i != p && i != q {
                let (mip, miq) = (m[i][p], m[i][q]);
                m[i][p] = c * mip - s * miq;
                m[p][i] = m[i][p];
                m[i][q] = s * mip + c * miq;
                m[q][i] = m[i][q];
            }
        }
        m[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        m[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        m[p][q] = 0.0;
        m[q][p] = 0.0;
    }
    (0..n).map(|i| m[i][i]).fold(f64::INFINITY, f64::min)
}

/// Determinant by cofactor expansion along the first row; for n <= 4 only.
pub fn det_cofactor(rows: &[Vec<i128>]) -> i128 {
    let n = rows.len();
    assert!(n <= 4);
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return rows[0][0];
    }
    let mut det = 0i128;
    for (j, &head) in rows[0].iter().enumerate() {
        if head == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * head * det_cofactor(&minor);
    }
    det
}

/// Labeled graphs with n vertices, i edges, and a proper 2-coloring,
/// counted by scanning every i-edge bitmask and BFS-coloring it.
pub fn count_bipartite_graphs(n: usize, i: u32) -> u64 {
    let slots = n * (n - 1) / 2;
    let mut count = 0u64;
    for mask in 0u128..1 << slots {
        if mask.count_ones() != i {
            continue;
        }
        let g = LabeledGraph::from_mask(n, mask).unwrap();
        if is_bipartite(&g) {
            count += 1;
        }
    }
    count
}

fn is_bipartite(g: &LabeledGraph) -> bool {
    let n = g.n();
    let mut color = vec![-1i8; n];
    for start in 0..n {
        if color[start] != -1 {
            continue;
        }
        color[start] = 0;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for u in 0..n {
                if g.has_edge(v, u) {
                    if color[u] == -1 {
                        color[u] = 1 - color[v];
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Applies a vertex permutation to a labeled graph.
pub fn relabel(g: &LabeledGraph, perm: impl Fn(usize) -> usize) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (perm(u), perm(v));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    LabeledGraph::from_edges(g.n(), &edges).unwrap()
}
