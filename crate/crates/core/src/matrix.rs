//! Small exact integer matrices: extended mutation matrices, matrix
//! mutation, skew-symmetrizability, and exact linear solves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    a: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Input("ragged matrix rows".into()));
        }
        Ok(IntMat {
            rows: r,
            cols: c,
            a: rows.concat(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Input("matrix dimension mismatch".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self[(i, k)];
                if v == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += v * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, &ri) in rows.iter().enumerate() {
            for (j, &cj) in cols.iter().enumerate() {
                out[(i, j)] = self[(ri, cj)];
            }
        }
        out
    }

    pub fn stack(top: &IntMat, bottom: &IntMat) -> Result<IntMat> {
        if top.cols != bottom.cols {
            return Err(Error::Input("stack: column count mismatch".into()));
        }
        let mut a = top.a.clone();
        a.extend_from_slice(&bottom.a);
        Ok(IntMat {
            rows: top.rows + bottom.rows,
            cols: top.cols,
            a,
        })
    }

    /// Exact solve of `self * x = v` over the rationals, demanding an
    /// integral solution; `None` if singular or non-integral.
    pub fn solve_integral(&self, v: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(self.rows, self.cols, "square system expected");
        assert_eq!(v.len(), self.rows);
        let n = self.rows;
        // fraction-free forward elimination in i128
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                let mut row: Vec<i128> = self.row(i).iter().map(|&x| x as i128).collect();
                row.push(v[i] as i128);
                row
            })
            .collect();
        let mut prev = 1i128;
        for k in 0..n {
            let piv = (k..n).find(|&i| m[i][k] != 0)?;
            m.swap(k, piv);
            for i in k + 1..n {
                for j in k + 1..=n {
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        // back substitution over rationals represented as num/den pairs
        let mut x = vec![(0i128, 1i128); n];
        for i in (0..n).rev() {
            let mut num = m[i][n];
            let mut den = 1i128;
            for j in i + 1..n {
                // num/den -= m[i][j] * x_j
                let (xn, xd) = x[j];
                num = num * xd - m[i][j] * xn * den;
                den *= xd;
            }
            // x_i = (num/den) / m[i][i]
            den *= m[i][i];
            let g = gcd128(num.abs(), den.abs()).max(1);
            let (mut nn, mut dd) = (num / g, den / g);
            if dd < 0 {
                nn = -nn;
                dd = -dd;
            }
            x[i] = (nn, dd);
        }
        let mut out = Vec::with_capacity(n);
        for (nn, dd) in x {
            if dd != 1 {
                return None;
            }
            out.push(i64::try_from(nn).ok()?);
        }
        Some(out)
    }

    /// Determinant via fraction-free elimination (Bareiss), exact in i128.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            let piv = match (k..n).find(|&i| m[i][k] != 0) {
                Some(p) => p,
                None => return 0,
            };
            if piv != k {
                m.swap(k, piv);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        if n == 0 {
            return 1;
        }
        sign * m[n - 1][n - 1]
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd128(b, a % b)
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.a[i * self.cols + j]
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Extended mutation matrix `(B \\ P)`: an `(r+l) x r` integer matrix whose
/// principal part `B` (first `r` rows) is skew-symmetrizable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtMatrix {
    mat: IntMat,
    rank: usize,
}

impl ExtMatrix {
    /// Validates skew-symmetrizability of the principal part at construction.
    pub fn new(mat: IntMat, rank: usize) -> Result<Self> {
        if mat.ncols() != rank || mat.nrows() < rank {
            return Err(Error::Input(format!(
                "extended matrix must be (r+l) x r with r = {rank}, got {} x {}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        let m = ExtMatrix { mat, rank };
        m.skew_symmetrizer()?;
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn frozen(&self) -> usize {
        self.mat.nrows() - self.rank
    }

    pub fn matrix(&self) -> &IntMat {
        &self.mat
    }

    pub fn principal(&self) -> IntMat {
        let idx: Vec<usize> = (0..self.rank).collect();
        self.mat.select(&idx, &idx)
    }

    pub fn coefficient_part(&self) -> IntMat {
        let rows: Vec<usize> = (self.rank..self.mat.nrows()).collect();
        let cols: Vec<usize> = (0..self.rank).collect();
        self.mat.select(&rows, &cols)
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.mat[(i, j)]
    }

    pub fn column(&self, k: usize) -> Vec<i64> {
        self.mat.col(k)
    }

    /// Positive integral diagonal `D` with `D B` skew-symmetric, found by
    /// scanning `b_ij / b_ji` ratios over connected components.
    pub fn skew_symmetrizer(&self) -> Result<Vec<i64>> {
        let r = self.rank;
        let b = |i: usize, j: usize| self.mat[(i, j)];
        for i in 0..r {
            if b(i, i) != 0 {
                return Err(Error::NotSkewSymmetrizable);
            }
            for j in 0..r {
                if (b(i, j) == 0) != (b(j, i) == 0) {
                    return Err(Error::NotSkewSymmetrizable);
                }
                if b(i, j) != 0 && b(i, j).signum() == b(j, i).signum() {
                    return Err(Error::NotSkewSymmetrizable);
                }
            }
        }
        // d_i * b_ij = -d_j * b_ji with d > 0: propagate rational weights on
        // each component, then clear denominators.
        let mut num = vec![0i64; r];
        let mut den = vec![0i64; r];
        for start in 0..r {
            if num[start] != 0 {
                continue;
            }
            num[start] = 1;
            den[start] = 1;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..r {
                    if b(i, j) == 0 || i == j {
                        continue;
                    }
                    // d_j = d_i * b_ij / (-b_ji) = d_i * |b_ij| / |b_ji|
                    let nj = num[i] * b(i, j).abs();
                    let dj = den[i] * b(j, i).abs();
                    let g = gcd64(nj, dj);
                    let (nj, dj) = (nj / g, dj / g);
                    if num[j] == 0 {
                        num[j] = nj;
                        den[j] = dj;
                        stack.push(j);
                    } else if num[j] * dj != nj * den[j] {
                        return Err(Error::NotSkewSymmetrizable);
                    }
                }
            }
        }
        let lcm_den = den.iter().fold(1i64, |acc, &d| lcm64(acc, d.max(1)));
        let d: Vec<i64> = num
            .iter()
            .zip(den.iter())
            .map(|(&n, &dd)| n * (lcm_den / dd.max(1)))
            .collect();
        for i in 0..r {
            for j in 0..r {
                if d[i] * b(i, j) != -d[j] * b(j, i) {
                    return Err(Error::NotSkewSymmetrizable);
                }
            }
        }
        Ok(d)
    }

    /// Matrix mutation in direction `k` (0-based): the full `(r+l) x r`
    /// matrix transforms by the standard rule.
    pub fn mutate(&self, k: usize) -> ExtMatrix {
        let mut out = self.mat.clone();
        for i in 0..self.mat.nrows() {
            for j in 0..self.rank {
                out[(i, j)] = if i == k || j == k {
                    -self.mat[(i, j)]
                } else {
                    self.mat[(i, j)]
                        + pos(self.mat[(i, k)]) * pos(self.mat[(k, j)])
                        - pos(-self.mat[(i, k)]) * pos(-self.mat[(k, j)])
                };
            }
        }
        ExtMatrix {
            mat: out,
            rank: self.rank,
        }
    }
}

pub(crate) fn pos(x: i64) -> i64 {
    x.max(0)
}

fn gcd64(a: i64, b: i64) -> i64 {
    let (a, b) = (a.abs(), b.abs());
    if b == 0 {
        a.max(1)
    } else {
        gcd64(b, a % b)
    }
}

fn lcm64(a: i64, b: i64) -> i64 {
    a / gcd64(a, b) * b
}

/// Mutation of a single coefficient row sitting below principal part `b`.
pub fn mutate_row(row: &[i64], b: &IntMat, k: usize) -> Vec<i64> {
    let r = b.nrows();
    (0..r)
        .map(|j| {
            if j == k {
                -row[k]
            } else {
                row[j] + pos(row[k]) * pos(b[(k, j)]) - pos(-row[k]) * pos(-b[(k, j)])
            }
        })
        .collect()
}
