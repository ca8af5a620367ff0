//! Small exact linear algebra over the integers and over the two-element field.

use std::ops::Mul;

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix must be square");
            data.extend_from_slice(row);
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim.max(1)).take(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m.set(i, i, m.get(i, i) - 1);
        }
        m
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        bareiss(self).0
    }

    pub fn determinant(&self) -> i64 {
        if self.dim == 0 {
            return 1;
        }
        let (rank, det) = bareiss(self);
        if rank < self.dim {
            0
        } else {
            det
        }
    }

    /// Rank of the reduction modulo 2.
    pub fn rank_mod2(&self) -> usize {
        let rows: Vec<u64> = (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(0u64, |acc, j| acc | (((self.get(i, j) & 1) as u64) << j))
            })
            .collect();
        f2_rank(rows)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

/// Fraction-free Gaussian elimination. Returns the rank and, when the matrix
/// is nonsingular, its determinant.
fn bareiss(m: &IntMatrix) -> (usize, i64) {
    let n = m.dim;
    let mut a: Vec<Vec<i128>> = m.rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    let mut rank = 0;
    let mut col = 0;
    while rank < n && col < n {
        let Some(pivot) = (rank..n).find(|&i| a[i][col] != 0) else {
            col += 1;
            continue;
        };
        if pivot != rank {
            a.swap(pivot, rank);
            sign = -sign;
        }
        for i in rank + 1..n {
            for j in col + 1..n {
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        col += 1;
    }
    let det = if rank == n && n > 0 { sign * a[n - 1][n - 1] } else { 0 };
    (rank, det as i64)
}

/// Rank of a matrix over the two-element field, rows given as bitmasks.
pub fn f2_rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let mask = 1u64 << bit;
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && *row & mask != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_rank() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.determinant(), 4);
        assert_eq!(m.rank(), 3);
        let s = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.rank(), 1);
        assert_eq!(s.determinant(), 0);
        assert_eq!(IntMatrix::identity(0).determinant(), 1);
    }

    #[test]
    fn mod2_rank_differs_from_rational_rank() {
        // det 4: full rank over Q, zero mod 2 except the off-diagonal entries
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_mod2(), 0);
        let a2 = IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.rank_mod2(), 2);
    }

    #[test]
    fn row_swap_sign() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), -1);
    }
}
