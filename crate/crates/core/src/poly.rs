//! Sparse exact Laurent-polynomial arithmetic over arbitrary-precision
//! integers, in an alphabet split into mutable variables `u_1..u_r` and
//! frozen variables `p_1..p_l`.
//!
//! Polynomials are canonical: terms are kept in a map ordered graded-
//! lexicographically on exponent vectors, zero coefficients are never
//! stored, and two polynomials are equal iff their term maps are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::context::{check_same_ctx, Ctx};
use crate::error::{Error, Result};

/// Exponent vector of length `r + l`; `u`-exponents may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExpVec(pub SmallVec<[i32; 8]>);

impl ExpVec {
    pub fn zeros(n: usize) -> Self {
        ExpVec(smallvec::smallvec![0; n])
    }

    pub fn unit(n: usize, idx: usize) -> Self {
        let mut e = Self::zeros(n);
        e.0[idx] = 1;
        e
    }

    pub fn from_slice(s: &[i32]) -> Self {
        ExpVec(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

/// Graded lexicographic: total degree first, then lexicographic.
impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Value in `trop(p_1, .., p_l)`, written `p^v`: the exponent vector `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalVector(pub Vec<i64>);

impl TropicalVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &TropicalVector) -> TropicalVector {
        TropicalVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Sparse multivariate Laurent polynomial over `Z`, canonical by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ctx: Ctx,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ctx: &Ctx) -> Self {
        LaurentPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: &Ctx, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExpVec::zeros(ctx.len()), c);
        }
        LaurentPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// The variable with alphabet index `idx` (0-based, `u`-block then `p`-block).
    pub fn variable(ctx: &Ctx, idx: usize) -> Self {
        Self::monomial(ctx, ExpVec::unit(ctx.len(), idx), BigInt::one())
    }

    pub fn monomial(ctx: &Ctx, exp: ExpVec, c: BigInt) -> Self {
        assert_eq!(exp.len(), ctx.len(), "exponent length must match alphabet");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.total_degree() == 0 && e.0.iter().all(|&x| x == 0) && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    /// Single-term polynomials expose their (exponent, coefficient) pair.
    pub fn as_monomial(&self) -> Option<(&ExpVec, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn insert_term(terms: &mut BTreeMap<ExpVec, BigInt>, exp: ExpVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Termwise sum with zero-coefficient cancellation.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_ctx(&self.ctx, &other.ctx)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Convolution product, canonicalized.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same_ctx(&self.ctx, &other.ctx)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                Self::insert_term(&mut terms, ea.add(eb), ca * cb);
            }
        }
        Ok(LaurentPoly {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn mul_monomial(&self, exp: &ExpVec, c: &BigInt) -> Self {
        let mut terms = BTreeMap::new();
        for (e, k) in &self.terms {
            let v = k * c;
            if !v.is_zero() {
                terms.insert(e.add(exp), v);
            }
        }
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Componentwise exponent bounds over all terms: `(min, max)`.
    fn exponent_box(&self) -> Option<(ExpVec, ExpVec)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for e in it {
            for k in 0..e.len() {
                lo.0[k] = lo.0[k].min(e.0[k]);
                hi.0[k] = hi.0[k].max(e.0[k]);
            }
        }
        Some((lo, hi))
    }

    /// Exact single-divisor division: returns `q` with `q * den == self`.
    ///
    /// Long division on graded-lex leading terms after factoring out the
    /// monomial gcd of the denominator. The quotient's Newton polytope is
    /// confined to the componentwise box `Newt(num) - Newt(den)`; any
    /// candidate term escaping the box, a non-divisible leading coefficient,
    /// or a nonzero final remainder signals `InexactDivision`.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        check_same_ctx(&self.ctx, &den.ctx)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let (dlo, dhi) = den.exponent_box().expect("nonzero");
        let (nlo, nhi) = self.exponent_box().expect("nonzero");
        let qlo = nlo.sub(&dlo);
        let qhi = nhi.sub(&dhi);
        if qlo.0.iter().zip(qhi.0.iter()).any(|(a, b)| a > b) {
            return Err(Error::InexactDivision);
        }
        // shift both by the denominator's monomial gcd
        let mut rem = LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.sub(&dlo), c.clone()))
                .collect(),
        };
        let dnorm: BTreeMap<ExpVec, BigInt> = den
            .terms
            .iter()
            .map(|(e, c)| (e.sub(&dlo), c.clone()))
            .collect();
        let (dlead_exp, dlead_coeff) = {
            let (e, c) = dnorm.iter().next_back().expect("nonzero");
            (e.clone(), c.clone())
        };
        let mut quot: BTreeMap<ExpVec, BigInt> = BTreeMap::new();
        loop {
            let (rlead_exp, rlead_coeff) = match rem.terms.iter().next_back() {
                None => break,
                Some((e, c)) => (e.clone(), c.clone()),
            };
            let qexp = rlead_exp.sub(&dlead_exp);
            let in_box = qexp
                .0
                .iter()
                .zip(qlo.0.iter().zip(qhi.0.iter()))
                .all(|(e, (lo, hi))| lo <= e && e <= hi);
            if !in_box {
                return Err(Error::InexactDivision);
            }
            let (qc, r) = num_integer::Integer::div_rem(&rlead_coeff, &dlead_coeff);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let mut sub_terms = rem.terms;
            for (e, c) in &dnorm {
                Self::insert_term(&mut sub_terms, e.add(&qexp), -(c * &qc));
            }
            rem = LaurentPoly {
                ctx: self.ctx.clone(),
                terms: sub_terms,
            };
            quot.insert(qexp, qc);
        }
        Ok(LaurentPoly {
            ctx: self.ctx.clone(),
            terms: quot,
        })
    }

    /// Image under the semifield map `u_i -> 1`, `p_j -> p_j` into `trop(p)`:
    /// the componentwise minimum of the `p`-exponent subvectors.
    ///
    /// Demands a syntactically subtraction-free (all coefficients positive)
    /// nonzero representative.
    pub fn tropicalize(&self) -> Result<TropicalVector> {
        if self.is_zero() || self.terms.values().any(|c| !c.is_positive()) {
            return Err(Error::NonPositiveCoefficients);
        }
        let r = self.ctx.rank();
        let l = self.ctx.frozen();
        let mut min: Option<Vec<i64>> = None;
        for e in self.terms.keys() {
            let pexp: Vec<i64> = (0..l).map(|j| e.0[r + j] as i64).collect();
            min = Some(match min {
                None => pexp,
                Some(m) => m.iter().zip(pexp.iter()).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        Ok(TropicalVector(min.expect("nonzero")))
    }

    /// True iff nonzero, every coefficient is positive, and every frozen
    /// exponent is nonnegative.
    pub fn is_positive(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let r = self.ctx.rank();
        self.terms.iter().all(|(e, c)| {
            c.is_positive() && e.0[r..].iter().all(|&x| x >= 0)
        })
    }

    /// Exact rational value at `point` (length `r + l`).
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ctx.len() {
            return Err(Error::Input(format!(
                "evaluation point has length {}, expected {}",
                point.len(),
                self.ctx.len()
            )));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            for (k, &ek) in e.0.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                if point[k].is_zero() {
                    if ek < 0 {
                        return Err(Error::PoleAtPoint);
                    }
                    t = BigRational::zero();
                    break;
                }
                let base = if ek > 0 {
                    point[k].clone()
                } else {
                    point[k].recip()
                };
                for _ in 0..ek.unsigned_abs() {
                    t *= &base;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `images[k]` (in a common target alphabet) for variable `k`.
    /// A variable occurring with a negative exponent must have a unit
    /// monomial image (coefficient `±1`).
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.ctx.len() {
            return Err(Error::Input(format!(
                "expected {} images, got {}",
                self.ctx.len(),
                images.len()
            )));
        }
        let tctx = images
            .first()
            .map(|p| p.ctx.clone())
            .ok_or_else(|| Error::Input("empty alphabet substitution".into()))?;
        for im in images {
            check_same_ctx(&tctx, &im.ctx)?;
        }
        let mut acc = LaurentPoly::zero(&tctx);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(&tctx, c.clone());
            for (k, &ek) in e.0.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                let factor = if ek > 0 {
                    images[k].pow(ek as u32)?
                } else {
                    let (me, mc) = images[k].as_monomial().ok_or(Error::Input(
                        "negative exponent on a variable with a non-monomial image".into(),
                    ))?;
                    if !mc.abs().is_one() {
                        return Err(Error::Input(
                            "negative exponent on a non-unit monomial image".into(),
                        ));
                    }
                    let inv = LaurentPoly::monomial(
                        &tctx,
                        ExpVec(me.0.iter().map(|x| -x).collect()),
                        mc.clone(),
                    );
                    inv.pow(ek.unsigned_abs())?
                };
                term = term.mul(&factor)?;
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Monomial substitution: variable `k` maps to
    /// `coeff_sign * target^{map[k]}`; always well defined on Laurent
    /// polynomials (the exponent map is linear).
    pub fn map_exponents(&self, tctx: &Ctx, map: &[ExpVec]) -> Result<LaurentPoly> {
        if map.len() != self.ctx.len() {
            return Err(Error::Input(format!(
                "expected {} exponent images, got {}",
                self.ctx.len(),
                map.len()
            )));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut img = ExpVec::zeros(tctx.len());
            for (k, &ek) in e.0.iter().enumerate() {
                if ek != 0 {
                    for (t, &m) in img.0.iter_mut().zip(map[k].0.iter()) {
                        *t += ek * m;
                    }
                }
            }
            Self::insert_term(&mut terms, img, c.clone());
        }
        Ok(LaurentPoly {
            ctx: tctx.clone(),
            terms,
        })
    }
}

/// Canonical total order: graded-lex on the term lists, leading terms first.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ea, ca)), Some((eb, cb))) => {
                    let o = ea.cmp(eb).then_with(|| ca.cmp(cb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (k, &ek) in e.0.iter().enumerate() {
                match ek {
                    0 => {}
                    1 => factors.push(self.ctx.name(k).to_string()),
                    _ => factors.push(format!("{}^{}", self.ctx.name(k), ek)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// JSON form: `{"vars": [...], "terms": [{"e": [...], "c": "decimal"}]}`.
#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<i32>,
    pub c: String,
}

impl LaurentPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.ctx.names().to_vec(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermJson {
                    e: e.0.to_vec(),
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson, ctx: &Ctx) -> Result<LaurentPoly> {
        if json.vars != ctx.names() {
            return Err(Error::ContextMismatch(format!(
                "variable list {:?} does not match alphabet {}",
                json.vars, ctx
            )));
        }
        let mut terms = BTreeMap::new();
        for t in &json.terms {
            if t.e.len() != ctx.len() {
                return Err(Error::Input("exponent vector length mismatch".into()));
            }
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| Error::Input(format!("bad coefficient {:?}", t.c)))?;
            Self::insert_term(&mut terms, ExpVec::from_slice(&t.e), c);
        }
        Ok(LaurentPoly {
            ctx: ctx.clone(),
            terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Alphabet;

    fn ctx2_2() -> Ctx {
        Alphabet::new(2, 2) // u1, u2, p1, p2
    }

    fn mono(ctx: &Ctx, c: i64, e: &[i32]) -> LaurentPoly {
        LaurentPoly::monomial(ctx, ExpVec::from_slice(e), BigInt::from(c))
    }

    #[test]
    fn add_cancels_and_merges() {
        let ctx = ctx2_2();
        let u1 = mono(&ctx, 1, &[1, 0, 0, 0]);
        let p1 = mono(&ctx, 1, &[0, 0, 1, 0]);
        let s = u1.add(&p1).unwrap().add(&u1.neg()).unwrap();
        assert_eq!(s, p1);
        let x = mono(&ctx, 3, &[1, -2, 0, 1]);
        assert_eq!(LaurentPoly::zero(&ctx).add(&x).unwrap(), x);
        let one = LaurentPoly::one(&ctx);
        let u2 = mono(&ctx, 1, &[0, 1, 0, 0]);
        let lhs = one.add(&u2).unwrap().add(&one.add(&u1).unwrap()).unwrap();
        let expect = mono(&ctx, 2, &[0, 0, 0, 0])
            .add(&u1)
            .unwrap()
            .add(&u2)
            .unwrap();
        assert_eq!(lhs, expect);
    }

    #[test]
    fn mul_examples() {
        let ctx = ctx2_2();
        let u1 = mono(&ctx, 1, &[1, 0, 0, 0]);
        let u1inv = mono(&ctx, 1, &[-1, 0, 0, 0]);
        assert!(u1.mul(&u1inv).unwrap().is_one());
        let one = LaurentPoly::one(&ctx);
        let u2 = mono(&ctx, 1, &[0, 1, 0, 0]);
        let prod = one.add(&u2).unwrap().mul(&one.add(&u1).unwrap()).unwrap();
        assert_eq!(prod.num_terms(), 4);
        let p1 = mono(&ctx, 1, &[0, 0, 1, 0]);
        let t = p1.mul(&u1inv).unwrap();
        assert_eq!(t, mono(&ctx, 1, &[-1, 0, 1, 0]));
        assert_eq!(t.num_terms(), 1);
    }

    #[test]
    fn ctx_mismatch_is_an_error() {
        let a = LaurentPoly::one(&ctx2_2());
        let b = LaurentPoly::one(&Alphabet::new(1, 0));
        assert!(matches!(a.add(&b), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn exact_div_examples() {
        let ctx = ctx2_2();
        let u1 = mono(&ctx, 1, &[1, 0, 0, 0]);
        let u2 = mono(&ctx, 1, &[0, 1, 0, 0]);
        let one = LaurentPoly::one(&ctx);
        // (u1 u2 + u2) / u2 = u1 + 1
        let num = u1.mul(&u2).unwrap().add(&u2).unwrap();
        assert_eq!(num.exact_div(&u2).unwrap(), u1.add(&one).unwrap());
        // (1 + u2) / u1 = u1^-1 + u2 u1^-1
        let q = one.add(&u2).unwrap().exact_div(&u1).unwrap();
        let expect = mono(&ctx, 1, &[-1, 0, 0, 0])
            .add(&mono(&ctx, 1, &[-1, 1, 0, 0]))
            .unwrap();
        assert_eq!(q, expect);
        // (u1 + u2) / (1 + u1) is inexact
        let bad = u1.add(&u2).unwrap().exact_div(&one.add(&u1).unwrap());
        assert_eq!(bad.unwrap_err(), Error::InexactDivision);
        // division by zero
        assert_eq!(
            u1.exact_div(&LaurentPoly::zero(&ctx)).unwrap_err(),
            Error::DivisionByZero
        );
        // coefficient inexactness
        let three_u1 = mono(&ctx, 3, &[1, 0, 0, 0]);
        let two = LaurentPoly::constant(&ctx, BigInt::from(2));
        assert_eq!(three_u1.exact_div(&two).unwrap_err(), Error::InexactDivision);
    }

    #[test]
    fn tropicalize_examples() {
        let ctx = ctx2_2();
        let p1 = mono(&ctx, 1, &[0, 0, 1, 0]);
        let p1p2 = mono(&ctx, 1, &[0, 0, 1, 1]);
        assert_eq!(p1.add(&p1p2).unwrap().tropicalize().unwrap().0, vec![1, 0]);
        // u1^-1 (1 + p1) has tropicalization (0, 0)
        let x = mono(&ctx, 1, &[-1, 0, 0, 0])
            .add(&mono(&ctx, 1, &[-1, 0, 1, 0]))
            .unwrap();
        assert!(x.tropicalize().unwrap().is_zero());
        let p2cubed = mono(&ctx, 1, &[0, 0, 0, 3]);
        assert_eq!(p2cubed.tropicalize().unwrap().0, vec![0, 3]);
        let neg = mono(&ctx, 1, &[1, 0, 0, 0])
            .add(&mono(&ctx, -1, &[0, 1, 0, 0]))
            .unwrap();
        assert_eq!(neg.tropicalize().unwrap_err(), Error::NonPositiveCoefficients);
        assert_eq!(
            LaurentPoly::zero(&ctx).tropicalize().unwrap_err(),
            Error::NonPositiveCoefficients
        );
    }

    #[test]
    fn is_positive_examples() {
        let ctx = ctx2_2();
        let x = LaurentPoly::one(&ctx)
            .add(&mono(&ctx, 1, &[-1, 1, 0, 0]))
            .unwrap();
        assert!(x.is_positive());
        let y = mono(&ctx, 1, &[1, 0, 0, 0])
            .add(&mono(&ctx, -1, &[0, 1, 0, 0]))
            .unwrap();
        assert!(!y.is_positive());
        let z = mono(&ctx, 1, &[1, 0, -1, 0]);
        assert!(!z.is_positive());
    }

    #[test]
    fn evaluate_examples() {
        let ctx = ctx2_2();
        let big = |n: i64| BigRational::from(BigInt::from(n));
        // (1 + u2)/u1 at (1, 1, *, *) = 2
        let x = LaurentPoly::one(&ctx)
            .add(&mono(&ctx, 1, &[0, 1, 0, 0]))
            .unwrap()
            .exact_div(&mono(&ctx, 1, &[1, 0, 0, 0]))
            .unwrap();
        let v = x.evaluate(&[big(1), big(1), big(1), big(1)]).unwrap();
        assert_eq!(v, big(2));
        let u1 = mono(&ctx, 1, &[1, 0, 0, 0]);
        assert_eq!(u1.evaluate(&[big(5), big(1), big(1), big(1)]).unwrap(), big(5));
        let u1inv = mono(&ctx, 1, &[-1, 0, 0, 0]);
        assert_eq!(
            u1inv.evaluate(&[big(0), big(1), big(1), big(1)]).unwrap_err(),
            Error::PoleAtPoint
        );
    }

    #[test]
    fn json_round_trip_and_term_order() {
        let ctx = ctx2_2();
        let x = mono(&ctx, -7, &[2, -1, 0, 3])
            .add(&mono(&ctx, 1, &[0, 0, 0, 0]))
            .unwrap()
            .add(&mono(&ctx, 123456789012345678i64, &[1, 1, 1, 1]))
            .unwrap();
        let js = x.to_json();
        assert_eq!(js.vars, ctx.names());
        // leading (graded-lex greatest) term serialized first
        assert_eq!(js.terms[0].e, vec![2, -1, 0, 3]);
        let back = LaurentPoly::from_json(&js, &ctx).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display_is_readable() {
        let ctx = ctx2_2();
        let x = mono(&ctx, 1, &[-1, 0, 0, 0])
            .add(&mono(&ctx, 2, &[0, 1, 1, 0]))
            .unwrap();
        assert_eq!(x.to_string(), "2*u2*p1 + u1^-1");
    }
}
