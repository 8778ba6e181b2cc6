//! The acyclic belt: source mutations through the seed at `t(1, 0)`, the
//! knitting algorithm producing `u(i, m)`, coefficient columns `p(i, m)`,
//! and cluster-additive functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::cartan::CartanMatrix;
use crate::context::{Alphabet, Ctx};
use crate::error::{Error, Result};
use crate::matrix::{pos, ExtMatrix, IntMat};
use crate::poly::{ExpVec, LaurentPoly};
use crate::seed::Seed;

/// Indexed family of belt seeds, belt cluster variables `u(i, m)` and
/// coefficient columns `p(i, m)` over a window `[1, r] x [m_lo, m_hi]`.
#[derive(Debug, Clone)]
pub struct BeltTable {
    cartan: CartanMatrix,
    frozen: usize,
    m_lo: i64,
    m_hi: i64,
    seeds: BTreeMap<(usize, i64), Seed>,
    u: BTreeMap<(usize, i64), LaurentPoly>,
    p: BTreeMap<(usize, i64), Vec<i64>>,
}

/// `Z^l`-valued cluster-additive function on the window, extracted from a
/// belt.
#[derive(Debug, Clone)]
pub struct ClusterAdditiveFunction {
    pub values: BTreeMap<(usize, i64), Vec<i64>>,
}

impl BeltTable {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn window(&self) -> (i64, i64) {
        (self.m_lo, self.m_hi)
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn frozen(&self) -> usize {
        self.frozen
    }

    pub fn seed(&self, i: usize, m: i64) -> Result<&Seed> {
        self.seeds.get(&(i, m)).ok_or(Error::IndexOutOfWindow(i, m))
    }

    pub fn u(&self, i: usize, m: i64) -> Result<&LaurentPoly> {
        self.u.get(&(i, m)).ok_or(Error::IndexOutOfWindow(i, m))
    }

    pub fn p(&self, i: usize, m: i64) -> Result<&[i64]> {
        self.p
            .get(&(i, m))
            .map(|v| v.as_slice())
            .ok_or(Error::IndexOutOfWindow(i, m))
    }

    pub fn ctx(&self) -> &Ctx {
        self.seeds
            .values()
            .next()
            .expect("nonempty window")
            .ctx()
    }

    /// Extracts `(i, m) -> p(i, m)` and asserts the cluster-additive
    /// recursion together with the two boundary identities tying `p(i, m)`
    /// to the columns of `P_{t(1, m)}`.
    pub fn coefficient_columns(&self) -> Result<ClusterAdditiveFunction> {
        let r = self.rank();
        let a = &self.cartan;
        let l = self.frozen;
        for m in self.m_lo..self.m_hi {
            for i in 1..=r {
                // p(i,m) + p(i,m+1) = sum_{j>i} (-a_ji)[p(j,m)]_+ + sum_{j<i} (-a_ji)[p(j,m+1)]_+
                let lhs: Vec<i64> = self.p(i, m)?
                    .iter()
                    .zip(self.p(i, m + 1)?.iter())
                    .map(|(x, y)| x + y)
                    .collect();
                let mut rhs = vec![0i64; l];
                for j in i + 1..=r {
                    let c = -a.entry(j - 1, i - 1);
                    for (t, &v) in rhs.iter_mut().zip(self.p(j, m)?.iter()) {
                        *t += c * pos(v);
                    }
                }
                for j in 1..i {
                    let c = -a.entry(j - 1, i - 1);
                    for (t, &v) in rhs.iter_mut().zip(self.p(j, m + 1)?.iter()) {
                        *t += c * pos(v);
                    }
                }
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "cluster-additive recursion fails at ({i}, {m})"
                    )));
                }
            }
        }
        // P(i, m) = p(i,m) + sum_{j<i} a_ji [p(j,m)]_+   (column i of P_{t(1,m)})
        // P(i, m+1) = -p(i,m) + sum_{j>i} (-a_ji) [p(j,m)]_+
        for m in self.m_lo..=self.m_hi {
            let base = self.seed(1, m)?;
            for i in 1..=r {
                let col: Vec<i64> = (0..l)
                    .map(|q| base.matrix().entry(r + q, i - 1))
                    .collect();
                let mut rhs = self.p(i, m)?.to_vec();
                for j in 1..i {
                    let c = a.entry(j - 1, i - 1);
                    for (t, &v) in rhs.iter_mut().zip(self.p(j, m)?.iter()) {
                        *t += c * pos(v);
                    }
                }
                if col != rhs {
                    return Err(Error::Internal(format!(
                        "column identity P(i,m) fails at ({i}, {m})"
                    )));
                }
                if m < self.m_hi {
                    let base1 = self.seed(1, m + 1)?;
                    let col1: Vec<i64> = (0..l)
                        .map(|q| base1.matrix().entry(r + q, i - 1))
                        .collect();
                    let mut rhs1: Vec<i64> = self.p(i, m)?.iter().map(|&v| -v).collect();
                    for j in i + 1..=r {
                        let c = -a.entry(j - 1, i - 1);
                        for (t, &v) in rhs1.iter_mut().zip(self.p(j, m)?.iter()) {
                            *t += c * pos(v);
                        }
                    }
                    if col1 != rhs1 {
                        return Err(Error::Internal(format!(
                            "column identity P(i,m+1) fails at ({i}, {m})"
                        )));
                    }
                }
            }
        }
        Ok(ClusterAdditiveFunction {
            values: self.p.clone(),
        })
    }
}

/// Runs the knitting algorithm: belt seeds via source mutations in both
/// directions from `t(1, 0)`, with the produced exchange relations checked
/// exactly on the window.
pub fn knit(a: &CartanMatrix, p: &IntMat, m_lo: i64, m_hi: i64) -> Result<BeltTable> {
    let ctx = Alphabet::new(a.rank(), p.nrows());
    knit_with_ctx(a, p, m_lo, m_hi, ctx)
}

pub fn knit_with_ctx(
    a: &CartanMatrix,
    p: &IntMat,
    m_lo: i64,
    m_hi: i64,
    ctx: Ctx,
) -> Result<BeltTable> {
    if m_lo > 0 || m_hi < 0 {
        return Err(Error::Input("window must contain m = 0".into()));
    }
    if p.ncols() != a.rank() {
        return Err(Error::Input("P must have r columns".into()));
    }
    let r = a.rank();
    let ext = ExtMatrix::new(IntMat::stack(&a.build_ba(), p)?, r)?;
    let root = Seed::initial(ext, ctx)?;

    let mut seeds: BTreeMap<(usize, i64), Seed> = BTreeMap::new();
    seeds.insert((1, 0), root.clone());
    // backward: from t(1, m), mutations  r, r-1, .., 1  land at t(1, m-1),
    // passing through t(i, m-1) for i = r down to 1
    let mut cur = root.clone();
    for m in (m_lo..0).rev() {
        let mut s = cur.mutate(r)?;
        seeds.insert((r, m), s.clone());
        for i in (1..r).rev() {
            s = s.mutate(i)?;
            seeds.insert((i, m), s.clone());
        }
        cur = s;
    }
    // forward: mu_i : t(i, m) -> t(i+1, m),  mu_r : t(r, m) -> t(1, m+1)
    let mut cur = root;
    let mut m = 0i64;
    loop {
        for i in 1..r {
            let s = cur.mutate(i)?;
            seeds.insert((i + 1, m), s.clone());
            cur = s;
        }
        if m == m_hi {
            break;
        }
        let s = cur.mutate(r)?;
        m += 1;
        seeds.insert((1, m), s.clone());
        cur = s;
    }

    let mut u = BTreeMap::new();
    let mut pcols = BTreeMap::new();
    for (&(i, m), s) in &seeds {
        u.insert((i, m), s.cluster()[i - 1].clone());
        let col: Vec<i64> = (0..s.frozen())
            .map(|q| s.matrix().entry(r + q, i - 1))
            .collect();
        pcols.insert((i, m), col);
    }

    let belt = BeltTable {
        cartan: a.clone(),
        frozen: p.nrows(),
        m_lo,
        m_hi,
        seeds,
        u,
        p: pcols,
    };
    belt.verify_exchange()?;
    belt.verify_source_shape()?;
    Ok(belt)
}

impl BeltTable {
    /// Exchange relation at every interior window point, verified exactly:
    /// `u(i,m) u(i,m+1) = p^[p(i,m)]_+ + p^[-p(i,m)]_+ prod u(j,m)^{-a_ji}
    ///  prod u(j,m+1)^{-a_ji}`.
    fn verify_exchange(&self) -> Result<()> {
        let r = self.rank();
        let ctx = self.ctx().clone();
        for m in self.m_lo..self.m_hi {
            for i in 1..=r {
                let lhs = self.u(i, m)?.mul(self.u(i, m + 1)?)?;
                let rhs = self.exchange_rhs(i, m)?;
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "exchange relation fails at ({i}, {m}) in {}",
                        ctx
                    )));
                }
            }
        }
        Ok(())
    }

    /// Right-hand side of the belt exchange relation at `(i, m)`.
    pub fn exchange_rhs(&self, i: usize, m: i64) -> Result<LaurentPoly> {
        let r = self.rank();
        let ctx = self.ctx();
        let pm = self.p(i, m)?;
        let l = pm.len();
        let mono = |sign: i64| {
            let mut e = ExpVec::zeros(ctx.len());
            for (q, &v) in pm.iter().enumerate().take(l) {
                e.0[r + q] = pos(sign * v) as i32;
            }
            LaurentPoly::monomial(ctx, e, BigInt::one())
        };
        let mut second = mono(-1);
        for j in i + 1..=r {
            let c = -self.cartan.entry(j - 1, i - 1);
            second = second.mul(&self.u(j, m)?.pow(c as u32)?)?;
        }
        for j in 1..i {
            let c = -self.cartan.entry(j - 1, i - 1);
            second = second.mul(&self.u(j, m + 1)?.pow(c as u32)?)?;
        }
        mono(1).add(&second)
    }

    /// Source-mutation shape: the `i`th column of `B_{t(i,m)}` is <= 0, and
    /// `B_{t(1,m)} = B_A`.
    fn verify_source_shape(&self) -> Result<()> {
        let r = self.rank();
        let ba = self.cartan.build_ba();
        for (&(i, m), s) in &self.seeds {
            for j in 0..r {
                if s.matrix().entry(j, i - 1) > 0 {
                    return Err(Error::Internal(format!(
                        "column {i} of B at t({i},{m}) has a positive entry"
                    )));
                }
            }
            if i == 1 && s.matrix().principal() != ba {
                return Err(Error::Internal(format!(
                    "B at t(1,{m}) differs from B_A"
                )));
            }
        }
        Ok(())
    }
}

/// The coefficient columns `p(i, m)` computed purely from `P` via the
/// cluster-additive recursion, without any polynomial arithmetic. Matches
/// the belt extraction (tested); the frieze propagation engine feeds on
/// this.
pub fn additive_columns(
    a: &CartanMatrix,
    p: &IntMat,
    m_lo: i64,
    m_hi: i64,
) -> Result<BTreeMap<(usize, i64), Vec<i64>>> {
    if m_lo > 0 || m_hi < 0 {
        return Err(Error::Input("window must contain m = 0".into()));
    }
    let r = a.rank();
    let l = p.nrows();
    let mut out: BTreeMap<(usize, i64), Vec<i64>> = BTreeMap::new();
    // seed column m = 0 from  P(i,0) = p(i,0) + sum_{j<i} a_ji [p(j,0)]_+
    for i in 1..=r {
        let mut col = p.col(i - 1);
        for j in 1..i {
            let c = a.entry(j - 1, i - 1);
            let pj = &out[&(j, 0i64)];
            for (t, &v) in col.iter_mut().zip(pj.iter()) {
                *t -= c * pos(v);
            }
        }
        debug_assert_eq!(col.len(), l);
        out.insert((i, 0), col);
    }
    // forward:  p(i,m+1) = -p(i,m) + sum_{j>i} (-a_ji)[p(j,m)]_+ + sum_{j<i} (-a_ji)[p(j,m+1)]_+
    for m in 0..m_hi {
        for i in 1..=r {
            let mut col: Vec<i64> = out[&(i, m)].iter().map(|&v| -v).collect();
            for j in i + 1..=r {
                let c = -a.entry(j - 1, i - 1);
                let pj = &out[&(j, m)];
                for (t, &v) in col.iter_mut().zip(pj.iter()) {
                    *t += c * pos(v);
                }
            }
            for j in 1..i {
                let c = -a.entry(j - 1, i - 1);
                let pj = &out[&(j, m + 1)];
                for (t, &v) in col.iter_mut().zip(pj.iter()) {
                    *t += c * pos(v);
                }
            }
            out.insert((i, m + 1), col);
        }
    }
    // backward: solve the same relation for p(i,m), descending i
    for m in (m_lo..0).rev() {
        for i in (1..=r).rev() {
            let mut col: Vec<i64> = out[&(i, m + 1)].iter().map(|&v| -v).collect();
            for j in i + 1..=r {
                let c = -a.entry(j - 1, i - 1);
                let pj = &out[&(j, m)];
                for (t, &v) in col.iter_mut().zip(pj.iter()) {
                    *t += c * pos(v);
                }
            }
            for j in 1..i {
                let c = -a.entry(j - 1, i - 1);
                let pj = &out[&(j, m + 1)];
                for (t, &v) in col.iter_mut().zip(pj.iter()) {
                    *t += c * pos(v);
                }
            }
            out.insert((i, m), col);
        }
    }
    Ok(out)
}

/// The Ptolemy seed of rank `r >= 2`: tridiagonal `B` and the banded
/// `(r+3) x r` coefficient matrix of the shell triangulation of the
/// `(r+3)`-gon.
pub fn ptolemy_seed(r: usize) -> Result<(IntMat, IntMat)> {
    if r < 2 {
        return Err(Error::Input("Ptolemy seed needs rank >= 2".into()));
    }
    let mut b = IntMat::zeros(r, r);
    for i in 0..r - 1 {
        b[(i, i + 1)] = 1;
        b[(i + 1, i)] = -1;
    }
    let mut p = IntMat::zeros(r + 3, r);
    for i in 0..r - 1 {
        p[(i, i)] = 1;
        p[(i, i + 1)] = -1;
    }
    p[(r - 1, r - 1)] = 1;
    p[(r, r - 1)] = -1;
    p[(r + 1, 0)] = 1;
    p[(r + 2, 0)] = -1;
    Ok((b, p))
}
