//! Built-in reference values for the degree-one graph counts `M_n(i)`
//! (labeled graphs with n vertices, i edges, and at least one vertex of
//! degree 1), for n = 2..=8 and i = 1..=8. `verify-table1` recomputes every
//! cell from scratch against these.

use lapsep_core::counting::count_degree_one_graphs;

/// Rows `(n, [M_n(1), M_n(2), ...])`. Rows stop where the count is zero
/// (for n <= 5 the cap `(n-1)(n-2)/2 + 1` falls below 8).
pub const REFERENCE: &[(usize, &[u64])] = &[
    (2, &[1]),
    (3, &[3, 3]),
    (4, &[6, 15, 16, 12]),
    (5, &[10, 45, 110, 195, 210, 120, 20]),
    (6, &[15, 105, 435, 1320, 2841, 4410, 4845, 3360]),
    (7, &[21, 210, 1295, 5880, 19887, 51954, 106785, 171360]),
    (8, &[28, 378, 3220, 20265, 97188, 369950, 1147000, 2931138]),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellCheck {
    pub n: usize,
    pub i: usize,
    pub expected: u64,
    pub computed: u64,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

/// Recomputes every populated cell with `n <= max_n` by brute-force
/// enumeration and compares against `table`.
pub fn verify(max_n: usize, table: &[(usize, &[u64])]) -> Vec<CellCheck> {
    let mut checks = Vec::new();
    for &(n, row) in table {
        if n > max_n {
            continue;
        }
        for (idx, &expected) in row.iter().enumerate() {
            let i = idx + 1;
            checks.push(CellCheck { n, i, expected, computed: count_degree_one_graphs(n, i) });
        }
    }
    checks
}
