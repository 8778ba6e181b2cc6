//! Friezes as positive-integer evaluations, frieze-pattern propagation and
//! enumeration with coefficients, frieze testing sets, and frieze points
//! for the BFZ / principal / trivial coefficient regimes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::belt::additive_columns;
use crate::cartan::CartanMatrix;
use crate::coxeter::coxeter_orbit;
use crate::error::{Error, Result};
use crate::matrix::{pos, IntMat};
use crate::poly::LaurentPoly;
use crate::seed::{explore, explore_partial, Seed};

/// A frieze: positive integers assigned to the initial extended cluster
/// (`u_1..u_r`, then `p_1..p_l`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Frieze {
    pub values: Vec<BigInt>,
    pub rank: usize,
}

impl Frieze {
    pub fn new(values: Vec<BigInt>, rank: usize) -> Result<Frieze> {
        if values.iter().any(|v| !v.is_positive()) {
            return Err(Error::Input("frieze values must be positive".into()));
        }
        Ok(Frieze { values, rank })
    }

    pub fn as_rationals(&self) -> Vec<BigRational> {
        self.values
            .iter()
            .map(|v| BigRational::from(v.clone()))
            .collect()
    }

    /// Positive-integer check of a polynomial's value at this frieze.
    pub fn accepts(&self, poly: &LaurentPoly) -> Result<bool> {
        let v = poly.evaluate(&self.as_rationals())?;
        Ok(v.is_integer() && v.is_positive())
    }
}

/// The unitary frieze `u_i -> 1`, `p_j -> m_j` at a given extended cluster;
/// valid by Laurent positivity.
pub fn unitary_frieze(seed: &Seed, m: &[BigInt]) -> Result<Frieze> {
    if m.len() != seed.frozen() {
        return Err(Error::Input(format!(
            "expected {} frozen values, got {}",
            seed.frozen(),
            m.len()
        )));
    }
    let mut values = vec![BigInt::one(); seed.rank()];
    values.extend_from_slice(m);
    Frieze::new(values, seed.rank())
}

/// Positive-integer solution of the belt recursion on a window, together
/// with its frozen values and the coefficient columns it was built from.
#[derive(Debug, Clone)]
pub struct FriezePattern {
    pub cartan: CartanMatrix,
    pub f: BTreeMap<(usize, i64), BigInt>,
    pub fp: Vec<BigInt>,
    pub pcols: BTreeMap<(usize, i64), Vec<i64>>,
    pub m_lo: i64,
    pub m_hi: i64,
}

impl FriezePattern {
    pub fn value(&self, i: usize, m: i64) -> Result<&BigInt> {
        self.f.get(&(i, m)).ok_or(Error::IndexOutOfWindow(i, m))
    }
}

/// Outcome of propagation: a pattern, or the first window position where
/// the exchange quotient fails to be a positive integer. Rejection is a
/// search outcome, not an error.
#[derive(Debug, Clone)]
pub enum Propagation {
    Pattern(FriezePattern),
    Rejected { at: (usize, i64) },
}

fn frozen_monomial_value(fp: &[BigInt], col: &[i64], sign: i64) -> BigInt {
    let mut acc = BigInt::one();
    for (v, &e) in fp.iter().zip(col.iter()) {
        let e = pos(sign * e);
        for _ in 0..e {
            acc *= v;
        }
    }
    acc
}

fn int_pow(v: &BigInt, e: i64) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= v;
    }
    acc
}

/// Forward/backward propagation of the frieze recursion
/// `f(i,m) f(i,m+1) = fp^[p(i,m)]_+ + fp^[-p(i,m)]_+ prod_{j>i} f(j,m)^{-a_ji}
///  prod_{j<i} f(j,m+1)^{-a_ji}` from the initial column `f(., 0)`.
pub fn propagate(
    a: &CartanMatrix,
    p: &IntMat,
    init: &[BigInt],
    fp: &[BigInt],
    m_lo: i64,
    m_hi: i64,
) -> Result<Propagation> {
    let r = a.rank();
    if init.len() != r || fp.len() != p.nrows() {
        return Err(Error::Input("init/fp length mismatch".into()));
    }
    if init.iter().chain(fp.iter()).any(|v| !v.is_positive()) {
        return Err(Error::Input("initial and frozen values must be positive".into()));
    }
    let pcols = additive_columns(a, p, m_lo, m_hi)?;
    let mut f: BTreeMap<(usize, i64), BigInt> = BTreeMap::new();
    for i in 1..=r {
        f.insert((i, 0), init[i - 1].clone());
    }
    // the two-term right-hand side at (i, m), readable once column m (for
    // j > i) and column m+1 (for j < i) values exist
    let rhs = |f: &BTreeMap<(usize, i64), BigInt>, i: usize, m: i64| -> BigInt {
        let col = &pcols[&(i, m)];
        let mut prod = frozen_monomial_value(fp, col, -1);
        for j in i + 1..=r {
            prod *= int_pow(&f[&(j, m)], -a.entry(j - 1, i - 1));
        }
        for j in 1..i {
            prod *= int_pow(&f[&(j, m + 1)], -a.entry(j - 1, i - 1));
        }
        frozen_monomial_value(fp, col, 1) + prod
    };
    for m in 0..m_hi {
        for i in 1..=r {
            let num = rhs(&f, i, m);
            let (q, rem) = num.div_rem(&f[&(i, m)]);
            if !rem.is_zero() || !q.is_positive() {
                return Ok(Propagation::Rejected { at: (i, m + 1) });
            }
            f.insert((i, m + 1), q);
        }
    }
    for m in (m_lo..0).rev() {
        for i in (1..=r).rev() {
            let num = rhs(&f, i, m);
            let (q, rem) = num.div_rem(&f[&(i, m + 1)]);
            if !rem.is_zero() || !q.is_positive() {
                return Ok(Propagation::Rejected { at: (i, m) });
            }
            f.insert((i, m), q);
        }
    }
    Ok(Propagation::Pattern(FriezePattern {
        cartan: a.clone(),
        f,
        fp: fp.to_vec(),
        pcols,
        m_lo,
        m_hi,
    }))
}

/// Exhaustive scan of initial columns in `[1, bound]^r`: accepted iff
/// propagation over `[0, h+2]` yields positive integers with column
/// closure `f(i, h_comp+2) = f(i, 0)` on each component. Finite type only.
///
/// Completeness is relative to the bound; the largest entry over accepted
/// friezes is reported so stabilization can be observed.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub friezes: Vec<Frieze>,
    pub bound: u64,
    pub max_entry: BigInt,
}

pub fn enumerate_friezes(
    a: &CartanMatrix,
    p: &IntMat,
    fp: &[BigInt],
    bound: u64,
) -> Result<Enumeration> {
    if !a.is_finite_type() {
        return Err(Error::NonFiniteType);
    }
    let r = a.rank();
    let cd = coxeter_orbit(a)?;
    // per-component closure period h_comp + 2
    let comps = a.components();
    let mut period = vec![0i64; r];
    for comp in &comps {
        let h = cd.h_of(comp[0] + 1) + cd.h_of(cd.istar(comp[0] + 1));
        for &i in comp {
            period[i] = h + 2;
        }
    }
    let m_hi = *period.iter().max().unwrap();
    let firsts: Vec<u64> = (1..=bound).collect();
    let mut accepted: Vec<Frieze> = firsts
        .par_iter()
        .map(|&first| {
            let mut local = Vec::new();
            let mut init = vec![BigInt::one(); r];
            init[0] = BigInt::from(first);
            let mut counters = vec![1u64; r.saturating_sub(1)];
            loop {
                for (k, &c) in counters.iter().enumerate() {
                    init[k + 1] = BigInt::from(c);
                }
                if let Propagation::Pattern(pat) = propagate(a, p, &init, fp, 0, m_hi)? {
                    let closed = (1..=r)
                        .all(|i| pat.f[&(i, period[i - 1])] == pat.f[&(i, 0)]);
                    if closed {
                        let mut values = init.clone();
                        values.extend_from_slice(fp);
                        local.push(Frieze { values, rank: r });
                    }
                }
                // odometer over the remaining r-1 coordinates
                let mut k = 0;
                loop {
                    if k == counters.len() {
                        return Ok(local);
                    }
                    counters[k] += 1;
                    if counters[k] <= bound {
                        break;
                    }
                    counters[k] = 1;
                    k += 1;
                }
            }
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    accepted.sort();
    accepted.dedup();
    let mut max_entry = BigInt::zero();
    for fr in &accepted {
        if let Propagation::Pattern(pat) =
            propagate(a, p, &fr.values[..r], fp, 0, m_hi)?
        {
            for v in pat.f.values() {
                if v > &max_entry {
                    max_entry = v.clone();
                }
            }
        }
    }
    Ok(Enumeration {
        friezes: accepted,
        bound,
        max_entry,
    })
}

/// Frieze testing criterion of polynomial type: integrality on a caller-
/// supplied generating subset plus positivity on one extended cluster.
///
/// `values` determines the candidate homomorphism on the initial extended
/// cluster. Whether `generators` actually generates is the caller's
/// obligation and is not detected; when the criterion passes, positive
/// integrality of every explored cluster variable is asserted (exhaustive
/// in finite type).
pub fn testing_set_check(
    seed: &Seed,
    generators: &[LaurentPoly],
    values: &[BigRational],
    budget: usize,
) -> Result<bool> {
    if values.len() != seed.rank() + seed.frozen() {
        return Err(Error::Input("values must cover the initial extended cluster".into()));
    }
    for z in generators {
        if !z.evaluate(values)?.is_integer() {
            return Ok(false);
        }
    }
    for u in seed.extended_cluster() {
        if !u.evaluate(values)?.is_positive() {
            return Ok(false);
        }
    }
    let ex = explore_partial(seed, usize::MAX, budget)?;
    for x in &ex.variables {
        let v = x.evaluate(values)?;
        if !v.is_integer() || !v.is_positive() {
            return Err(Error::Input(
                "generating-set premise violated: an explored cluster variable is not a positive integer"
                    .into(),
            ));
        }
    }
    Ok(true)
}

/// Coefficient regime of a frieze-point check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    Bfz,
    Principal,
    TrivialV,
    TrivialW,
}

impl Regime {
    pub fn point_len(&self, r: usize) -> usize {
        match self {
            Regime::Bfz | Regime::TrivialV | Regime::TrivialW => 2 * r,
            Regime::Principal => 3 * r,
        }
    }
}

/// Verdict plus violated-constraint witnesses for a candidate point.
#[derive(Debug, Clone, Serialize)]
pub struct FriezePointReport {
    pub regime: Regime,
    pub point: Vec<String>,
    pub verdict: bool,
    pub witnesses: Vec<String>,
}

/// Checks the defining equations/inequalities of the regime at a candidate
/// integer point.
pub fn frieze_point_check(
    regime: Regime,
    a: &CartanMatrix,
    point: &[BigInt],
) -> Result<FriezePointReport> {
    let r = a.rank();
    if point.len() != regime.point_len(r) {
        return Err(Error::RegimeMismatch(point.len(), regime.point_len(r)));
    }
    let mut witnesses = Vec::new();
    for (k, v) in point.iter().enumerate() {
        if !v.is_positive() {
            witnesses.push(format!("coordinate {} = {} is not positive", k + 1, v));
        }
    }
    if witnesses.is_empty() {
        match regime {
            Regime::Bfz => {
                // p_i = z_i z_{r+i} - prod_{j>i} z_j^{-a_ji} prod_{j<i} z_{r+j}^{-a_ji} > 0
                for i in 1..=r {
                    let mut prod = BigInt::one();
                    for j in i + 1..=r {
                        prod *= int_pow(&point[j - 1], -a.entry(j - 1, i - 1));
                    }
                    for j in 1..i {
                        prod *= int_pow(&point[r + j - 1], -a.entry(j - 1, i - 1));
                    }
                    let pi = &point[i - 1] * &point[r + i - 1] - prod;
                    if !pi.is_positive() {
                        witnesses.push(format!("p_{i} = {pi} is not positive"));
                    }
                }
            }
            Regime::Principal => {
                // point = (x_1, x_1', .., x_r, x_r', y_1, .., y_r)
                let x = |i: usize| &point[2 * (i - 1)];
                let xp = |i: usize| &point[2 * (i - 1) + 1];
                let y = |i: usize| &point[2 * r + i - 1];
                for i in 1..=r {
                    let mut t1 = y(i).clone();
                    for j in 1..i {
                        t1 *= int_pow(x(j), -a.entry(j - 1, i - 1));
                    }
                    let mut t2 = BigInt::one();
                    for j in i + 1..=r {
                        t2 *= int_pow(x(j), -a.entry(j - 1, i - 1));
                    }
                    let lhs = x(i) * xp(i);
                    let rhs = t1 + t2;
                    if lhs != rhs {
                        witnesses.push(format!("x_{i} x_{i}' = {lhs} != {rhs}"));
                    }
                }
            }
            Regime::TrivialV => {
                for i in 1..=r {
                    let mut prod = BigInt::one();
                    for j in i + 1..=r {
                        prod *= int_pow(&point[j - 1], -a.entry(j - 1, i - 1));
                    }
                    for j in 1..i {
                        prod *= int_pow(&point[r + j - 1], -a.entry(j - 1, i - 1));
                    }
                    let lhs = &point[i - 1] * &point[r + i - 1];
                    let rhs = BigInt::one() + prod;
                    if lhs != rhs {
                        witnesses.push(format!("z_{i} z_{} = {lhs} != {rhs}", r + i));
                    }
                }
            }
            Regime::TrivialW => {
                let x = |i: usize| &point[2 * (i - 1)];
                let xp = |i: usize| &point[2 * (i - 1) + 1];
                for i in 1..=r {
                    let mut t1 = BigInt::one();
                    for j in 1..i {
                        t1 *= int_pow(x(j), -a.entry(j - 1, i - 1));
                    }
                    let mut t2 = BigInt::one();
                    for j in i + 1..=r {
                        t2 *= int_pow(x(j), -a.entry(j - 1, i - 1));
                    }
                    let lhs = x(i) * xp(i);
                    let rhs = t1 + t2;
                    if lhs != rhs {
                        witnesses.push(format!("x_{i} x_{i}' = {lhs} != {rhs}"));
                    }
                }
            }
        }
    }
    Ok(FriezePointReport {
        regime,
        point: point.iter().map(|v| v.to_string()).collect(),
        verdict: witnesses.is_empty(),
        witnesses,
    })
}

/// Outcome of the BFZ reconstruction `z_{r+i} = Q_i(z, p)`.
#[derive(Debug, Clone)]
pub enum BfzReconstruction {
    Accepted(Vec<BigInt>),
    Rejected { index: usize },
}

/// Solves `p_i = z_i z_{r+i} - ..` recursively for `z_{r+i}`; accepts iff
/// every quotient is a (positive) integer.
pub fn bfz_reconstruct(
    a: &CartanMatrix,
    z: &[BigInt],
    p: &[BigInt],
) -> Result<BfzReconstruction> {
    let r = a.rank();
    if z.len() != r || p.len() != r {
        return Err(Error::RegimeMismatch(z.len() + p.len(), 2 * r));
    }
    if z.iter().chain(p.iter()).any(|v| !v.is_positive()) {
        return Err(Error::Input("reconstruction needs positive inputs".into()));
    }
    let mut full = z.to_vec();
    full.resize(2 * r, BigInt::zero());
    for i in 1..=r {
        let mut prod = BigInt::one();
        for j in i + 1..=r {
            prod *= int_pow(&full[j - 1], -a.entry(j - 1, i - 1));
        }
        for j in 1..i {
            prod *= int_pow(&full[r + j - 1], -a.entry(j - 1, i - 1));
        }
        let num = &p[i - 1] + prod;
        let (q, rem) = num.div_rem(&full[i - 1]);
        if !rem.is_zero() {
            return Ok(BfzReconstruction::Rejected { index: i });
        }
        full[r + i - 1] = q;
    }
    Ok(BfzReconstruction::Accepted(full))
}

/// Certifies a frieze against every cluster variable found by exploration
/// (exhaustive for finite type).
pub fn certify_frieze(seed: &Seed, frieze: &Frieze, budget: usize) -> Result<bool> {
    let ex = explore(seed, usize::MAX, budget)?;
    let vals = frieze.as_rationals();
    for x in &ex.variables {
        let v = x.evaluate(&vals)?;
        if !v.is_integer() || !v.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}
