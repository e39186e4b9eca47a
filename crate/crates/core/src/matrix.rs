//! Exact integer matrix predicates: line-sum symmetry, row sums, and
//! positive semidefiniteness decided through the characteristic polynomial.
//!
//! Nothing here touches floating point. Positive semidefiniteness of a
//! symmetric integer matrix is decided by the signs of the elementary
//! symmetric coefficients of its characteristic polynomial, which are exact
//! integers; a borderline zero eigenvalue (every Laplacian has one) can
//! therefore never flip a census count through rounding.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use crate::error::{Error, Result};

/// A square integer matrix, row-major. Not necessarily symmetric: the
/// off-diagonal blocks of a symmetric matrix are general square matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, data: vec![0; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Builds from explicit rows; every row must be as long as there are rows.
    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.n + j] = value;
    }

    pub fn transposed(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// Per-row entry sums. Widened to i128 so no i64 input can overflow.
    pub fn row_sums(&self) -> Vec<i128> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) as i128).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<i128> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j) as i128).sum())
            .collect()
    }

    /// True iff the i-th row sum equals the i-th column sum for every i.
    pub fn is_line_sum_symmetric(&self) -> bool {
        (0..self.n).all(|i| {
            let rs: i128 = (0..self.n).map(|j| self.get(i, j) as i128).sum();
            let cs: i128 = (0..self.n).map(|j| self.get(j, i) as i128).sum();
            rs == cs
        })
    }

    pub fn trace(&self) -> i128 {
        (0..self.n).map(|i| self.get(i, i) as i128).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// A symmetric integer matrix; symmetry is enforced at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymIntMatrix {
    inner: IntMatrix,
}

impl SymIntMatrix {
    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::try_from_matrix(IntMatrix::from_rows(rows)?)
    }

    pub fn try_from_matrix(m: IntMatrix) -> Result<Self> {
        for i in 0..m.n() {
            for j in i + 1..m.n() {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { inner: m })
    }

    /// For constructions that are symmetric by shape (Laplacians, blockwise
    /// transposes of symmetric input, permutation conjugates).
    pub(crate) fn from_matrix_unchecked(m: IntMatrix) -> Self {
        debug_assert!(m.is_symmetric());
        Self { inner: m }
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.inner
    }

    pub fn n(&self) -> usize {
        self.inner.n()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.inner.get(i, j)
    }

    pub fn trace(&self) -> i128 {
        self.inner.trace()
    }

    pub fn row_sums(&self) -> Vec<i128> {
        self.inner.row_sums()
    }

    /// Exact characteristic polynomial, written as
    /// `det(xI - M) = x^n - e[1] x^(n-1) + e[2] x^(n-2) - ...`.
    ///
    /// Computed with the Faddeev-LeVerrier recurrence; every division in the
    /// recurrence is exact over the integers. Runs in 128-bit arithmetic with
    /// overflow checks and falls back to arbitrary precision the moment any
    /// intermediate would not fit.
    pub fn char_poly(&self) -> CharPolyCoeffs {
        match char_poly_i128(&self.inner) {
            Some(e) => CharPolyCoeffs { e: e.into_iter().map(BigInt::from).collect() },
            None => CharPolyCoeffs { e: char_poly_bigint(&self.inner) },
        }
    }

    /// True iff all eigenvalues are nonnegative.
    ///
    /// A real symmetric matrix has only real eigenvalues, and a monic real
    /// polynomial with all-real roots has all roots >= 0 exactly when its
    /// elementary symmetric coefficients e[k] are all >= 0. So the decision
    /// reduces to integer sign checks on [`Self::char_poly`].
    pub fn is_psd(&self) -> bool {
        self.char_poly().all_nonnegative()
    }
}

/// Coefficients `e[1..=n]` of the characteristic polynomial in the
/// alternating form `x^n - e[1] x^(n-1) + e[2] x^(n-2) - ...`; `e[k]` is the
/// k-th elementary symmetric function of the eigenvalues, so `e[1]` is the
/// trace and `e[n]` the determinant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPolyCoeffs {
    e: Vec<BigInt>,
}

impl CharPolyCoeffs {
    pub fn dim(&self) -> usize {
        self.e.len()
    }

    /// `e[k]`, 1-based.
    pub fn e(&self, k: usize) -> &BigInt {
        &self.e[k - 1]
    }

    pub fn elementary(&self) -> &[BigInt] {
        &self.e
    }

    pub fn trace(&self) -> &BigInt {
        self.e(1)
    }

    pub fn determinant(&self) -> &BigInt {
        self.e(self.dim())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.e.iter().all(|c| c.sign() != Sign::Minus)
    }
}

// Faddeev-LeVerrier with c_n = 1, M_0 = 0:
//   M_k = A M_{k-1} + c_{n-k+1} I,   c_{n-k} = -tr(A M_k) / k
// and e_k = (-1)^k c_{n-k}. The trace is always divisible by k.
fn char_poly_i128(a: &IntMatrix) -> Option<Vec<i128>> {
    let n = a.n();
    let aw: Vec<i128> = a.data.iter().map(|&x| x as i128).collect();
    let mut m = vec![0i128; n * n];
    let mut c_prev = 1i128;
    let mut e = Vec::with_capacity(n);
    for k in 1..=n {
        let mut mk = vec![0i128; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i128;
                for t in 0..n {
                    acc = acc.checked_add(aw[i * n + t].checked_mul(m[t * n + j])?)?;
                }
                mk[i * n + j] = acc;
            }
        }
        for i in 0..n {
            mk[i * n + i] = mk[i * n + i].checked_add(c_prev)?;
        }
        let mut tr = 0i128;
        for i in 0..n {
            for t in 0..n {
                tr = tr.checked_add(aw[i * n + t].checked_mul(mk[t * n + i])?)?;
            }
        }
        debug_assert_eq!(tr % k as i128, 0);
        let ck = -(tr / k as i128);
        e.push(if k % 2 == 0 { ck } else { ck.checked_neg()? });
        m = mk;
        c_prev = ck;
    }
    Some(e)
}

fn char_poly_bigint(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.n();
    let aw: Vec<BigInt> = a.data.iter().map(|&x| BigInt::from(x)).collect();
    let mut m: Vec<BigInt> = vec![BigInt::zero(); n * n];
    let mut c_prev = BigInt::from(1);
    let mut e = Vec::with_capacity(n);
    for k in 1..=n {
        let mut mk: Vec<BigInt> = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for t in 0..n {
                    acc += &aw[i * n + t] * &m[t * n + j];
                }
                mk[i * n + j] = acc;
            }
        }
        for i in 0..n {
            mk[i * n + i] += &c_prev;
        }
        let mut tr = BigInt::zero();
        for i in 0..n {
            for t in 0..n {
                tr += &aw[i * n + t] * &mk[t * n + i];
            }
        }
        let k_big = BigInt::from(k);
        debug_assert!((&tr % &k_big).is_zero());
        let ck = -(tr / k_big);
        e.push(if k % 2 == 0 { ck.clone() } else { -ck.clone() });
        m = mk;
        c_prev = ck;
    }
    e
}
