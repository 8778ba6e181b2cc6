//! Symmetrizable generalized Cartan matrices, the associated acyclic
//! exchange matrix `B_A`, the unitriangular matrix `U_A`, and the named
//! finite types.
//!
//! Labeling conventions (these fix the Coxeter element `s_1 s_2 .. s_r` and
//! are part of the interface contract):
//! - `A_n`: path `1 - 2 - .. - n`.
//! - `B_n`: path with `a(n-1,n) = -2`; `C_n` is its transpose.
//! - `D_n`: path `1 - .. - (n-2)` with `n-1` and `n` attached to `n-2`.
//! - `E_n`: path `1 - .. - (n-1)` with `n` attached to vertex `3`.
//! - `F_4`: `a(2,3) = -2`, `a(3,2) = -1`.
//! - `G_2`: `a(1,2) = -3`, `a(2,1) = -1`.

use crate::error::{Error, Result};
use crate::matrix::IntMat;

/// Symmetrizable generalized Cartan matrix with its positive symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    a: IntMat,
    d: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(a: IntMat) -> Result<Self> {
        let r = a.nrows();
        if a.ncols() != r || r == 0 {
            return Err(Error::InvalidCartan("matrix must be square".into()));
        }
        for i in 0..r {
            if a[(i, i)] != 2 {
                return Err(Error::InvalidCartan(format!("a[{i}][{i}] != 2")));
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                if a[(i, j)] > 0 {
                    return Err(Error::InvalidCartan("positive off-diagonal entry".into()));
                }
                if (a[(i, j)] == 0) != (a[(j, i)] == 0) {
                    return Err(Error::InvalidCartan("zero pattern not symmetric".into()));
                }
            }
        }
        let d = symmetrizer(&a)?;
        Ok(CartanMatrix { a, d })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMat::from_rows(rows)?)
    }

    /// Standard Cartan matrix for a named type like `"A3"`, `"G2"`.
    pub fn of_type(name: &str) -> Result<Self> {
        let name = name.trim().to_uppercase();
        let (fam, n): (char, usize) = {
            let mut chars = name.chars();
            let fam = chars.next().ok_or(Error::Input("empty type name".into()))?;
            let n = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Input(format!("bad type name {name:?}")))?;
            (fam, n)
        };
        let path = |n: usize| -> Vec<Vec<i64>> {
            let mut a = vec![vec![0i64; n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a
        };
        let rows = match (fam, n) {
            ('A', n) if n >= 1 => path(n),
            ('B', n) if n >= 2 => {
                let mut a = path(n);
                a[n - 2][n - 1] = -2;
                a
            }
            ('C', n) if n >= 2 => {
                let mut a = path(n);
                a[n - 1][n - 2] = -2;
                a
            }
            ('D', n) if n >= 4 => {
                let mut a = path(n - 1);
                for row in a.iter_mut() {
                    row.push(0);
                }
                let mut last = vec![0i64; n];
                last[n - 1] = 2;
                a.push(last);
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                a[n - 3][n - 2] = -1;
                a[n - 2][n - 3] = -1;
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
                a
            }
            ('E', n) if (6..=8).contains(&n) => {
                let mut a = path(n - 1);
                for row in a.iter_mut() {
                    row.push(0);
                }
                let mut last = vec![0i64; n];
                last[n - 1] = 2;
                a.push(last);
                a[2][n - 1] = -1;
                a[n - 1][2] = -1;
                a
            }
            ('F', 4) => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            ('G', 2) => vec![vec![2, -3], vec![-1, 2]],
            _ => return Err(Error::Input(format!("unknown type {name:?}"))),
        };
        Self::from_rows(&rows)
    }

    pub fn rank(&self) -> usize {
        self.a.nrows()
    }

    pub fn matrix(&self) -> &IntMat {
        &self.a
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[(i, j)]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// Finite type iff the symmetrized matrix `DA` is positive definite
    /// (checked by leading principal minors).
    pub fn is_finite_type(&self) -> bool {
        let r = self.rank();
        let mut da = IntMat::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                da[(i, j)] = self.d[i] * self.a[(i, j)];
            }
        }
        let idx: Vec<usize> = (0..r).collect();
        (1..=r).all(|k| da.select(&idx[..k], &idx[..k]).det() > 0)
    }

    /// Affine type: `DA` positive semidefinite but not definite (every
    /// principal minor nonnegative, some leading minor zero).
    pub fn is_affine_type(&self) -> bool {
        let r = self.rank();
        let mut da = IntMat::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                da[(i, j)] = self.d[i] * self.a[(i, j)];
            }
        }
        let mut psd = true;
        for mask in 1u32..(1 << r) {
            let idx: Vec<usize> = (0..r).filter(|&k| mask & (1 << k) != 0).collect();
            if da.select(&idx, &idx).det() < 0 {
                psd = false;
                break;
            }
        }
        psd && !self.is_finite_type()
    }

    /// Connectivity of the Dynkin graph.
    pub fn is_indecomposable(&self) -> bool {
        let r = self.rank();
        let mut seen = vec![false; r];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..r {
                if !seen[j] && self.a[(i, j)] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Index sets of the connected components of the Dynkin graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let r = self.rank();
        let mut comp = vec![usize::MAX; r];
        let mut out = Vec::new();
        for start in 0..r {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..r {
                    if comp[j] == usize::MAX && self.a[(i, j)] != 0 {
                        comp[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The acyclic exchange matrix: `(B_A)_ij = -a_ij` for `i < j`,
    /// `a_ij` for `i > j`, zero on the diagonal.
    pub fn build_ba(&self) -> IntMat {
        let r = self.rank();
        let mut b = IntMat::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                b[(i, j)] = match i.cmp(&j) {
                    std::cmp::Ordering::Less => -self.a[(i, j)],
                    std::cmp::Ordering::Equal => 0,
                    std::cmp::Ordering::Greater => self.a[(i, j)],
                };
            }
        }
        b
    }

    /// Upper unitriangular `U_A`: `(U_A)_ij = a_ij` for `i < j`, 1 on the
    /// diagonal.
    pub fn build_ua(&self) -> IntMat {
        let r = self.rank();
        let mut u = IntMat::zeros(r, r);
        for i in 0..r {
            u[(i, i)] = 1;
            for j in i + 1..r {
                u[(i, j)] = self.a[(i, j)];
            }
        }
        u
    }

    /// Inverse of `U_A` by back substitution; integral since `U_A` is
    /// unitriangular.
    pub fn ua_inverse(&self) -> IntMat {
        let u = self.build_ua();
        let r = self.rank();
        let mut inv = IntMat::identity(r);
        // solve U X = I column by column, bottom-up
        for c in 0..r {
            for i in (0..r).rev() {
                let mut v = if i == c { 1 } else { 0 };
                for j in i + 1..r {
                    v -= u[(i, j)] * inv[(j, c)];
                }
                inv[(i, c)] = v;
            }
        }
        inv
    }
}

fn symmetrizer(a: &IntMat) -> Result<Vec<i64>> {
    let r = a.nrows();
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
                if i == j || a[(i, j)] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji  =>  d_j = d_i a_ij / a_ji
                let nj = num[i] * a[(i, j)];
                let dj = den[i] * a[(j, i)];
                let g = gcd(nj.abs(), dj.abs()).max(1);
                let (mut nj, mut dj) = (nj / g, dj / g);
                if dj < 0 {
                    nj = -nj;
                    dj = -dj;
                }
                if nj <= 0 {
                    return Err(Error::InvalidCartan("no positive symmetrizer".into()));
                }
                if num[j] == 0 {
                    num[j] = nj;
                    den[j] = dj;
                    stack.push(j);
                } else if num[j] * dj != nj * den[j] {
                    return Err(Error::InvalidCartan("not symmetrizable".into()));
                }
            }
        }
    }
    let lcm_den = den.iter().fold(1i64, |acc, &d| {
        let d = d.max(1);
        acc / gcd(acc, d) * d
    });
    let d: Vec<i64> = num
        .iter()
        .zip(den.iter())
        .map(|(&n, &dd)| n * (lcm_den / dd.max(1)))
        .collect();
    for i in 0..r {
        for j in 0..r {
            if d[i] * a[(i, j)] != d[j] * a[(j, i)] {
                return Err(Error::InvalidCartan("not symmetrizable".into()));
            }
        }
    }
    Ok(d)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
