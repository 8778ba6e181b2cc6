#![allow(clippy::needless_range_loop)]

//! Rank-2 linear-algebra checks of the basis statements:
//! - products of A2 cluster variables decompose uniquely as nonnegative
//!   integer combinations of cluster monomials;
//! - for principal coefficients, cluster variables lie in the span of
//!   standard monomials over the polynomial ring in y;
//! - for the A2 BFZ coefficients the analogous statement fails: the last
//!   cluster variable is outside the span of standard monomials.

use std::collections::BTreeMap;

use frieze_core::cartan::CartanMatrix;
use frieze_core::context::Alphabet;
use frieze_core::matrix::{ExtMatrix, IntMat};
use frieze_core::poly::{ExpVec, LaurentPoly};
use frieze_core::seed::Seed;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact solve of `sum_j c_j basis_j = target` over the rationals by
/// elimination on the term-vector matrix. Returns `(solution, unique)` when
/// consistent.
fn decompose(target: &LaurentPoly, basis: &[LaurentPoly]) -> Option<(Vec<BigRational>, bool)> {
    let mut exps: BTreeMap<ExpVec, usize> = BTreeMap::new();
    for p in basis.iter().chain(std::iter::once(target)) {
        for (e, _) in p.terms() {
            let n = exps.len();
            exps.entry(e.clone()).or_insert(n);
        }
    }
    let rows = exps.len();
    let cols = basis.len();
    let mut m = vec![vec![BigRational::zero(); cols + 1]; rows];
    for (j, p) in basis.iter().enumerate() {
        for (e, c) in p.terms() {
            m[exps[e]][j] = BigRational::from(c.clone());
        }
    }
    for (e, c) in target.terms() {
        m[exps[e]][cols] = BigRational::from(c.clone());
    }
    // forward elimination with partial pivoting by first nonzero
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        if let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) {
            m.swap(row, p);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows {
                if i != row && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for c2 in 0..=cols {
                        let sub = &f * &m[row][c2];
                        m[i][c2] -= sub;
                    }
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
        }
    }
    // consistency: no row of the form (0..0 | nonzero)
    for i in row..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let unique = pivot_col_of_row.len() == cols;
    let mut sol = vec![BigRational::zero(); cols];
    for (i, &col) in pivot_col_of_row.iter().enumerate() {
        sol[col] = m[i][cols].clone();
    }
    Some((sol, unique))
}

/// All distinct clusters of a small pattern, by brute-force closure.
fn clusters_of(root: &Seed) -> Vec<Vec<LaurentPoly>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![root.clone()];
    seen.insert(root.canonical_key());
    out.push(root.cluster().to_vec());
    while let Some(s) = frontier.pop() {
        for k in 1..=s.rank() {
            let t = s.mutate(k).unwrap();
            if seen.insert(t.canonical_key()) {
                out.push(t.cluster().to_vec());
                frontier.push(t);
            }
        }
    }
    out
}

#[test]
fn a2_products_decompose_into_cluster_monomials() {
    let b = CartanMatrix::of_type("A2").unwrap().build_ba();
    let root = Seed::with_default_names(ExtMatrix::new(b, 2).unwrap()).unwrap();
    let ctx = root.ctx().clone();
    let clusters = clusters_of(&root);
    assert_eq!(clusters.len(), 5);
    // cluster monomials of degree <= 2
    let mut basis: Vec<LaurentPoly> = vec![LaurentPoly::one(&ctx)];
    for cl in &clusters {
        for x in cl {
            basis.push(x.clone());
            basis.push(x.mul(x).unwrap());
        }
        basis.push(cl[0].mul(&cl[1]).unwrap());
    }
    basis.sort();
    basis.dedup();
    assert_eq!(basis.len(), 16);
    // every pairwise product of cluster variables decomposes uniquely with
    // nonnegative integer coefficients
    let mut vars: Vec<LaurentPoly> = clusters.iter().flatten().cloned().collect();
    vars.sort();
    vars.dedup();
    assert_eq!(vars.len(), 5);
    for x in &vars {
        for y in &vars {
            let target = x.mul(y).unwrap();
            let (sol, unique) = decompose(&target, &basis)
                .unwrap_or_else(|| panic!("{target} failed to decompose"));
            assert!(unique, "basis is not linearly independent");
            for c in &sol {
                assert!(c.is_integer(), "non-integer coefficient for {target}");
                assert!(!c.is_negative(), "negative coefficient for {target}");
            }
        }
    }
}

fn standard_monomials(
    cluster: &[LaurentPoly],
    primed: &[LaurentPoly],
    span: i32,
) -> Vec<LaurentPoly> {
    // x^<m> with m in [-span, span]^2
    let mut out = Vec::new();
    for m1 in -span..=span {
        for m2 in -span..=span {
            let f1 = if m1 >= 0 {
                cluster[0].pow(m1 as u32).unwrap()
            } else {
                primed[0].pow((-m1) as u32).unwrap()
            };
            let f2 = if m2 >= 0 {
                cluster[1].pow(m2 as u32).unwrap()
            } else {
                primed[1].pow((-m2) as u32).unwrap()
            };
            out.push(f1.mul(&f2).unwrap());
        }
    }
    out
}

fn frozen_monomials(ctx: &frieze_core::context::Ctx, r: usize, l: usize, deg: i32) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    let mut g = vec![0i32; l];
    loop {
        let mut e = ExpVec::zeros(ctx.len());
        for (q, &v) in g.iter().enumerate() {
            e.0[r + q] = v;
        }
        out.push(LaurentPoly::monomial(ctx, e, BigInt::one()));
        let mut q = 0;
        loop {
            if q == l {
                return out;
            }
            g[q] += 1;
            if g[q] <= deg {
                break;
            }
            g[q] = 0;
            q += 1;
        }
    }
}

#[test]
fn principal_standard_monomials_span_cluster_variables() {
    // A2 with principal coefficients: every cluster variable is a Z[y]-
    // combination of standard monomials
    let a = CartanMatrix::of_type("A2").unwrap();
    let ext = ExtMatrix::new(
        IntMat::stack(&a.build_ba(), &IntMat::identity(2)).unwrap(),
        2,
    )
    .unwrap();
    let root = Seed::with_default_names(ext).unwrap();
    let ctx = root.ctx().clone();
    let x1p = root.mutate(1).unwrap().cluster()[0].clone();
    let x2p = root.mutate(2).unwrap().cluster()[1].clone();
    let std_monos = standard_monomials(root.cluster(), &[x1p, x2p], 2);
    let mut basis = Vec::new();
    for sm in &std_monos {
        for ym in frozen_monomials(&ctx, 2, 2, 2) {
            basis.push(sm.mul(&ym).unwrap());
        }
    }
    let ex = frieze_core::seed::explore(&root, 8, 100_000).unwrap();
    assert_eq!(ex.variables.len(), 5);
    for v in &ex.variables {
        let (sol, _) = decompose(v, &basis)
            .unwrap_or_else(|| panic!("{v} is not in the standard-monomial span"));
        for c in &sol {
            assert!(c.is_integer(), "non-integer coefficient for {v}");
        }
    }
}

#[test]
fn bfz_standard_monomials_miss_the_last_variable() {
    // contrast: with BFZ coefficients, z4 = (z1'z2' - p2)/p1
    // is outside the span of standard monomials over the polynomial ring
    // in (p1, p2).
    let a = CartanMatrix::of_type("A2").unwrap();
    let ext = ExtMatrix::new(
        IntMat::stack(&a.build_ba(), &a.build_ua()).unwrap(),
        2,
    )
    .unwrap();
    let ctx = Alphabet::with_names(&["z1", "z2"], &["p1", "p2"]);
    let root = Seed::initial(ext, ctx.clone()).unwrap();
    let z1p = root.mutate(1).unwrap().cluster()[0].clone();
    let z2p = root.mutate(2).unwrap().cluster()[1].clone();
    // the fifth variable
    let ex = frieze_core::seed::explore(&root, 8, 100_000).unwrap();
    let known = [
        root.cluster()[0].clone(),
        root.cluster()[1].clone(),
        z1p.clone(),
        z2p.clone(),
    ];
    let z4 = ex
        .variables
        .iter()
        .find(|v| !known.contains(v))
        .unwrap()
        .clone();
    // identity p1 z4 = z1' z2' - p2
    let p1 = LaurentPoly::variable(&ctx, 2);
    let p2 = LaurentPoly::variable(&ctx, 3);
    assert_eq!(
        p1.mul(&z4).unwrap(),
        z1p.mul(&z2p).unwrap().sub(&p2).unwrap()
    );
    let std_monos = standard_monomials(root.cluster(), &[z1p, z2p], 3);
    let mut basis = Vec::new();
    for sm in &std_monos {
        for pm in frozen_monomials(&ctx, 2, 2, 3) {
            basis.push(sm.mul(&pm).unwrap());
        }
    }
    assert!(
        decompose(&z4, &basis).is_none(),
        "z4 unexpectedly decomposed over standard monomials"
    );
}
