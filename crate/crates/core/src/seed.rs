//! Seeds of geometric type: mutation in any direction, y-hat variables,
//! and breadth-first seed-pattern exploration with deduplication.
//!
//! Every cluster variable is stored as a Laurent polynomial expressed in
//! the fixed initial extended cluster of the root seed.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::context::{Alphabet, Ctx};
use crate::error::{Error, Result};
use crate::matrix::{pos, ExtMatrix, IntMat};
use crate::poly::{ExpVec, LaurentPoly, PolyJson};

/// Default node budget for exploration; all finite types of rank <= 6
/// close far below this.
pub const DEFAULT_NODE_BUDGET: usize = 100_000;

/// A seed: extended mutation matrix, cluster of `r` Laurent polynomials in
/// the initial extended cluster, and the frozen-variable roster carried by
/// the ambient alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    ctx: Ctx,
    mat: ExtMatrix,
    cluster: Vec<LaurentPoly>,
    label: Vec<usize>,
}

impl Seed {
    /// Root seed: cluster `(u_1, .., u_r)`, the given extended matrix.
    pub fn initial(mat: ExtMatrix, ctx: Ctx) -> Result<Seed> {
        if ctx.rank() != mat.rank() || ctx.frozen() != mat.frozen() {
            return Err(Error::Input(format!(
                "alphabet {ctx} does not match a {}x{} extended matrix",
                mat.rank() + mat.frozen(),
                mat.rank()
            )));
        }
        let cluster = (0..ctx.rank())
            .map(|i| LaurentPoly::variable(&ctx, i))
            .collect();
        Ok(Seed {
            ctx,
            mat,
            cluster,
            label: Vec::new(),
        })
    }

    /// Root seed with default variable names.
    pub fn with_default_names(mat: ExtMatrix) -> Result<Seed> {
        let ctx = Alphabet::new(mat.rank(), mat.frozen());
        Seed::initial(mat, ctx)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn frozen(&self) -> usize {
        self.mat.frozen()
    }

    pub fn matrix(&self) -> &ExtMatrix {
        &self.mat
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    /// Mutation word from the root seed (1-based directions, reduced).
    pub fn label(&self) -> &[usize] {
        &self.label
    }

    /// The extended cluster as polynomials: cluster entries then frozen
    /// variables.
    pub fn extended_cluster(&self) -> Vec<LaurentPoly> {
        let mut out = self.cluster.clone();
        for j in 0..self.ctx.frozen() {
            out.push(LaurentPoly::variable(&self.ctx, self.ctx.rank() + j));
        }
        out
    }

    /// The frozen monomial `p^[±P_k]_+` for column `k` (0-based).
    fn frozen_monomial(&self, k: usize, sign: i64) -> LaurentPoly {
        let r = self.rank();
        let n = self.ctx.len();
        let mut e = ExpVec::zeros(n);
        for j in 0..self.frozen() {
            e.0[r + j] = pos(sign * self.mat.entry(r + j, k)) as i32;
        }
        LaurentPoly::monomial(&self.ctx, e, BigInt::one())
    }

    /// The two exchange-relation products for direction `k` (0-based):
    /// `u^[B_k]_+ p^[P_k]_+` and `u^[-B_k]_+ p^[-P_k]_+`, expanded in the
    /// initial extended cluster.
    pub fn exchange_terms(&self, k: usize) -> Result<(LaurentPoly, LaurentPoly)> {
        let r = self.rank();
        let mut plus = self.frozen_monomial(k, 1);
        let mut minus = self.frozen_monomial(k, -1);
        for j in 0..r {
            let b = self.mat.entry(j, k);
            if b > 0 {
                plus = plus.mul(&self.cluster[j].pow(b as u32)?)?;
            } else if b < 0 {
                minus = minus.mul(&self.cluster[j].pow((-b) as u32)?)?;
            }
        }
        Ok((plus, minus))
    }

    /// Seed mutation in direction `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let r = self.rank();
        if k == 0 || k > r {
            return Err(Error::DirectionOutOfRange(k, r));
        }
        let kk = k - 1;
        let (plus, minus) = self.exchange_terms(kk)?;
        let new_var = plus.add(&minus)?.exact_div(&self.cluster[kk])?;
        if !new_var.is_positive() {
            return Err(Error::Internal(format!(
                "mutated variable fails Laurent positivity in direction {k}"
            )));
        }
        let mut cluster = self.cluster.clone();
        cluster[kk] = new_var;
        let mut label = self.label.clone();
        if label.last() == Some(&k) {
            label.pop();
        } else {
            label.push(k);
        }
        Ok(Seed {
            ctx: self.ctx.clone(),
            mat: self.mat.mutate(kk),
            cluster,
            label,
        })
    }

    /// Applies a mutation word left to right.
    pub fn apply_word(&self, word: &[usize]) -> Result<Seed> {
        let mut s = self.clone();
        for &k in word {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    /// A fresh root seed carrying this seed's extended matrix: the cluster
    /// becomes the identity and expansions are re-based here. Combined with
    /// the inverse mutation word this re-expands variables in this seed's
    /// own extended cluster.
    pub fn reroot(&self) -> Result<Seed> {
        Seed::initial(self.mat.clone(), self.ctx.clone())
    }

    /// y-hat variables in the seed's own extended cluster, expanded into
    /// the initial variables as a numerator/denominator pair.
    pub fn y_hat(&self) -> Result<Vec<YHat>> {
        let r = self.rank();
        (0..r)
            .map(|k| {
                let mut num = self.frozen_monomial(k, 1);
                let mut den = self.frozen_monomial(k, -1);
                for j in 0..r {
                    let b = self.mat.entry(j, k);
                    if b > 0 {
                        num = num.mul(&self.cluster[j].pow(b as u32)?)?;
                    } else if b < 0 {
                        den = den.mul(&self.cluster[j].pow((-b) as u32)?)?;
                    }
                }
                Ok(YHat { num, den })
            })
            .collect()
    }

    /// Canonical identity for deduplication: the cluster as a sorted
    /// multiset, with the matrix columns (and principal rows) permuted by
    /// the induced permutation.
    pub fn canonical_key(&self) -> (Vec<LaurentPoly>, IntMat) {
        let r = self.rank();
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by(|&a, &b| self.cluster[a].cmp(&self.cluster[b]));
        let sorted: Vec<LaurentPoly> = order.iter().map(|&i| self.cluster[i].clone()).collect();
        let m = self.mat.matrix();
        let mut out = IntMat::zeros(m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            for j in 0..r {
                let src_row = if i < r { order[i] } else { i };
                out[(i, j)] = m[(src_row, order[j])];
            }
        }
        (sorted, out)
    }
}

/// A y-hat value as an exact fraction of Laurent polynomials in the initial
/// extended cluster. Only the bookkeeping needed to state the y-hat
/// mutation law; cross-multiplication decides equality.
#[derive(Debug, Clone)]
pub struct YHat {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl YHat {
    pub fn one(ctx: &Ctx) -> YHat {
        YHat {
            num: LaurentPoly::one(ctx),
            den: LaurentPoly::one(ctx),
        }
    }

    pub fn inv(&self) -> YHat {
        YHat {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn mul(&self, other: &YHat) -> Result<YHat> {
        Ok(YHat {
            num: self.num.mul(&other.num)?,
            den: self.den.mul(&other.den)?,
        })
    }

    pub fn pow(&self, n: i64) -> Result<YHat> {
        let base = if n >= 0 { self.clone() } else { self.inv() };
        let mut acc = YHat::one(self.num.ctx());
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// `1 + y` as a fraction.
    pub fn plus_one(&self) -> Result<YHat> {
        Ok(YHat {
            num: self.num.add(&self.den)?,
            den: self.den.clone(),
        })
    }

    /// Equality of fractions by cross-multiplication.
    pub fn eq_fraction(&self, other: &YHat) -> Result<bool> {
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }
}

/// Result of a breadth-first closure of mutations.
#[derive(Debug, Clone)]
pub struct Exploration {
    /// Distinct cluster variables found, sorted canonically.
    pub variables: Vec<LaurentPoly>,
    /// Number of distinct seeds (by canonical key).
    pub seeds: usize,
    /// True when the frontier emptied before the depth cap.
    pub closed: bool,
    /// Depth of the last completed layer.
    pub depth_reached: usize,
}

fn explore_impl(root: &Seed, max_depth: usize, budget: usize) -> Result<(Exploration, bool)> {
    let mut seen: HashSet<(Vec<LaurentPoly>, IntMat)> = HashSet::new();
    let mut vars: BTreeSet<LaurentPoly> = BTreeSet::new();
    let mut frontier: VecDeque<Seed> = VecDeque::new();
    seen.insert(root.canonical_key());
    for v in root.cluster() {
        vars.insert(v.clone());
    }
    frontier.push_back(root.clone());
    let mut depth = 0usize;
    let mut budget_hit = false;
    'outer: while !frontier.is_empty() && depth < max_depth {
        let mut next = VecDeque::new();
        for s in frontier.drain(..) {
            for k in 1..=s.rank() {
                let t = s.mutate(k)?;
                let key = t.canonical_key();
                if seen.contains(&key) {
                    continue;
                }
                if seen.len() >= budget {
                    budget_hit = true;
                    break 'outer;
                }
                for v in t.cluster() {
                    vars.insert(v.clone());
                }
                seen.insert(key);
                next.push_back(t);
            }
        }
        frontier = next;
        depth += 1;
    }
    let closed = frontier.is_empty() && !budget_hit;
    Ok((
        Exploration {
            variables: vars.into_iter().collect(),
            seeds: seen.len(),
            closed,
            depth_reached: depth,
        },
        budget_hit,
    ))
}

/// Breadth-first closure of mutations up to `max_depth`, deduplicating
/// seeds by (matrix, unordered cluster). Errors with `BudgetExceeded` when
/// the node budget is hit.
pub fn explore(root: &Seed, max_depth: usize, budget: usize) -> Result<Exploration> {
    let (e, hit) = explore_impl(root, max_depth, budget)?;
    if hit {
        return Err(Error::BudgetExceeded(budget));
    }
    Ok(e)
}

/// Exploration that reports partial results when the budget is hit instead
/// of failing; used for bounded-evidence verdicts on infinite type.
pub fn explore_partial(root: &Seed, max_depth: usize, budget: usize) -> Result<Exploration> {
    Ok(explore_impl(root, max_depth, budget)?.0)
}

/// Whether the seed pattern generated by this extended matrix has finitely
/// many cluster variables.
///
/// Exploration-based: true iff the mutation closure terminates under the
/// node budget. For a Cartan-shaped principal part the verdict is
/// cross-checked against (or, for the infinite case, decided by) positive
/// definiteness of the symmetrized Cartan matrix.
pub fn is_finite_type(mat: &ExtMatrix, budget: usize) -> Result<bool> {
    let cartan_pd = cartan_shaped_positive_definite(mat);
    if let Some(false) = cartan_pd {
        return Ok(false);
    }
    let root = Seed::with_default_names(mat.clone())?;
    let (e, hit) = explore_impl(&root, usize::MAX, budget)?;
    if hit {
        return Err(Error::Inconclusive);
    }
    debug_assert!(e.closed);
    if let Some(pd) = cartan_pd {
        if pd != e.closed {
            return Err(Error::Internal(
                "finite-type cross-check disagrees with exploration".into(),
            ));
        }
    }
    Ok(e.closed)
}

/// For `B` of the shape `B_A` (nonnegative above the diagonal, nonpositive
/// below), positive definiteness of the symmetrized Cartan counterpart.
fn cartan_shaped_positive_definite(mat: &ExtMatrix) -> Option<bool> {
    let r = mat.rank();
    let b = mat.principal();
    for i in 0..r {
        for j in 0..r {
            if i < j && b[(i, j)] < 0 {
                return None;
            }
            if i > j && b[(i, j)] > 0 {
                return None;
            }
        }
    }
    let mut rows = vec![vec![0i64; r]; r];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = if i == j { 2 } else { -b[(i, j)].abs() };
        }
    }
    let a = crate::cartan::CartanMatrix::from_rows(&rows).ok()?;
    Some(a.is_finite_type())
}

/// JSON seed file: the root data, plus cluster expansions and the mutation
/// word once the seed has been moved.
#[derive(Serialize, Deserialize)]
pub struct SeedJson {
    pub r: usize,
    pub l: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    pub frozen_names: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutable_names: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cluster: Option<Vec<PolyJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<Vec<usize>>,
}

impl Seed {
    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            r: self.rank(),
            l: self.frozen(),
            b: self.mat.matrix().rows_vec(),
            frozen_names: self.ctx.frozen_names().to_vec(),
            mutable_names: Some(
                self.ctx.names()[..self.rank()].to_vec(),
            ),
            cluster: Some(self.cluster.iter().map(|p| p.to_json()).collect()),
            label: Some(self.label.clone()),
        }
    }

    pub fn from_json(json: &SeedJson) -> Result<Seed> {
        if json.frozen_names.len() != json.l {
            return Err(Error::Input("frozen_names length must equal l".into()));
        }
        let mat = IntMat::from_rows(&json.b)?;
        if mat.nrows() != json.r + json.l || mat.ncols() != json.r {
            return Err(Error::Input(format!(
                "B must be (r+l) x r = {} x {}",
                json.r + json.l,
                json.r
            )));
        }
        let ext = ExtMatrix::new(mat, json.r)?;
        let mut names: Vec<String> = match &json.mutable_names {
            Some(m) if m.len() == json.r => m.clone(),
            _ => (1..=json.r).map(|i| format!("u{i}")).collect(),
        };
        names.extend(json.frozen_names.iter().cloned());
        let ctx = Alphabet::from_name_vec(names, json.r)?;
        let mut seed = Seed::initial(ext, ctx)?;
        if let Some(cl) = &json.cluster {
            if cl.len() != json.r {
                return Err(Error::Input("cluster length must equal r".into()));
            }
            seed.cluster = cl
                .iter()
                .map(|p| LaurentPoly::from_json(p, &seed.ctx))
                .collect::<Result<_>>()?;
        }
        if let Some(lbl) = &json.label {
            seed.label = lbl.clone();
        }
        Ok(seed)
    }
}
