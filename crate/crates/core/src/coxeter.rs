//! Weyl-group weight combinatorics for finite-type Cartan matrices:
//! Coxeter element orbits, h(i;c), the involution i*, the gliding map F,
//! the weights gamma(i,m), roots alpha(i,m), columns c(i,m), and the
//! fundamental domain D.
//!
//! Weights live in the fundamental-weight basis, roots in the simple-root
//! basis; conversion goes through the Cartan matrix (`alpha_j = sum_i
//! a_ij omega_i`).

use crate::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::matrix::IntMat;

/// Weight in the omega-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn fundamental(r: usize, i: usize) -> Weight {
        let mut v = vec![0; r];
        v[i] = 1;
        Weight(v)
    }

    fn is_neg_fundamental(&self) -> Option<usize> {
        let mut idx = None;
        for (k, &v) in self.0.iter().enumerate() {
            match v {
                0 => {}
                -1 if idx.is_none() => idx = Some(k),
                _ => return None,
            }
        }
        idx
    }
}

/// `s_i(lambda) = lambda - lambda(alpha_i^vee) alpha_i` in omega coordinates.
pub fn simple_reflection(a: &CartanMatrix, i: usize, w: &Weight) -> Weight {
    let r = a.rank();
    let li = w.0[i];
    Weight((0..r).map(|k| w.0[k] - li * a.entry(k, i)).collect())
}

/// The Coxeter element `c = s_1 s_2 .. s_r` applied to a weight.
pub fn coxeter_apply(a: &CartanMatrix, w: &Weight) -> Weight {
    let mut w = w.clone();
    for i in (0..a.rank()).rev() {
        w = simple_reflection(a, i, &w);
    }
    w
}

/// Orbit data of the Coxeter element: `h(i;c)`, `i*`, the Coxeter number,
/// and the roots `beta_i = omega_i - c omega_i` in the alpha-basis.
#[derive(Debug, Clone)]
pub struct CoxeterData {
    cartan: CartanMatrix,
    h: i64,
    h_i: Vec<i64>,
    istar: Vec<usize>,
    betas: IntMat,
    indecomposable: bool,
}

impl CoxeterData {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// Coxeter number (of the component, when indecomposable).
    pub fn coxeter_number(&self) -> i64 {
        self.h
    }

    /// `h(i; c)` for 1-based `i`.
    pub fn h_of(&self, i: usize) -> i64 {
        self.h_i[i - 1]
    }

    /// `i*` for 1-based `i` (1-based result).
    pub fn istar(&self, i: usize) -> usize {
        self.istar[i - 1] + 1
    }

    /// Columns are `[beta_i : alpha]`.
    pub fn betas(&self) -> &IntMat {
        &self.betas
    }

    pub fn is_indecomposable(&self) -> bool {
        self.indecomposable
    }

    fn require_indecomposable(&self) -> Result<()> {
        if self.indecomposable {
            Ok(())
        } else {
            Err(Error::Decomposable)
        }
    }
}

/// Iterates `c` on each fundamental weight until `-omega_{i*}` is reached,
/// recording `h(i;c)` and `i*`; computes `beta_i` and checks
/// `h(i;c) + h(i*;c) = h` per indecomposable component.
pub fn coxeter_orbit(a: &CartanMatrix) -> Result<CoxeterData> {
    let r = a.rank();
    let cap = 2 * (r as i64) * 30;
    let mut h_i = vec![0i64; r];
    let mut istar = vec![0usize; r];
    for i in 0..r {
        let mut w = Weight::fundamental(r, i);
        let mut m = 0i64;
        loop {
            if let Some(j) = w.is_neg_fundamental() {
                if m == 0 {
                    return Err(Error::NonFiniteType);
                }
                h_i[i] = m;
                istar[i] = j;
                break;
            }
            if m > cap {
                return Err(Error::NonFiniteType);
            }
            w = coxeter_apply(a, &w);
            m += 1;
        }
    }
    // h per component: h(i;c) + h(i*;c) = h
    let comps = a.components();
    let mut h_global = 0i64;
    for comp in &comps {
        let h = h_i[comp[0]] + h_i[istar[comp[0]]];
        for &i in comp {
            if h_i[i] + h_i[istar[i]] != h {
                return Err(Error::Internal(format!(
                    "h(i;c) + h(i*;c) not constant on a component (i = {})",
                    i + 1
                )));
            }
        }
        h_global = h_global.max(h);
    }
    // beta_i = omega_i - c omega_i, stored in the alpha-basis
    let mut betas = IntMat::zeros(r, r);
    for i in 0..r {
        let w = Weight::fundamental(r, i);
        let cw = coxeter_apply(a, &w);
        let diff: Vec<i64> = (0..r).map(|k| w.0[k] - cw.0[k]).collect();
        let coords = weight_to_alpha(a, &diff)?;
        for k in 0..r {
            betas[(k, i)] = coords[k];
        }
    }
    Ok(CoxeterData {
        indecomposable: comps.len() == 1,
        cartan: a.clone(),
        h: h_global,
        h_i,
        istar,
        betas,
    })
}

/// Coordinates of a root-lattice vector (given in the omega-basis) in the
/// alpha-basis: the integral solution of `A x = v`.
pub fn weight_to_alpha(a: &CartanMatrix, v: &[i64]) -> Result<Vec<i64>> {
    a.matrix()
        .solve_integral(v)
        .ok_or_else(|| Error::Internal("weight is not in the root lattice".into()))
}

/// The gliding map `F(i, m) = (i*, m + h(i*;c) + 1)`, 1-based `i`.
pub fn f_map(cd: &CoxeterData, i: usize, m: i64) -> Result<(usize, i64)> {
    cd.require_indecomposable()?;
    let isr = cd.istar(i);
    Ok((isr, m + cd.h_of(isr) + 1))
}

/// gamma(i, m), alpha(i, m) and c(i, m) for `m` in `[0, h+1]` (1-based `i`).
///
/// gamma is `c^m omega_i` up to `m = h(i;c)` and then restarts at
/// `omega_{i*}`; alpha follows the four-case definition; `c(i, m)` is the
/// alpha-basis coordinate vector of alpha(i, m).
pub fn gamma_alpha_c(
    cd: &CoxeterData,
    i: usize,
    m: i64,
) -> Result<(Weight, Vec<i64>, Vec<i64>)> {
    cd.require_indecomposable()?;
    let a = cd.cartan();
    let r = cd.rank();
    let h = cd.coxeter_number();
    if !(0..=h + 1).contains(&m) || i == 0 || i > r {
        return Err(Error::IndexOutOfWindow(i, m));
    }
    let hi = cd.h_of(i);
    let isr = cd.istar(i);
    let cpow = |w: &Weight, n: i64| -> Weight {
        let mut w = w.clone();
        for _ in 0..n {
            w = coxeter_apply(a, &w);
        }
        w
    };
    let gamma = if m <= hi {
        cpow(&Weight::fundamental(r, i - 1), m)
    } else {
        cpow(&Weight::fundamental(r, isr - 1), m - hi - 1)
    };
    // beta_i in omega coordinates: omega_i - c omega_i
    let beta_omega = |j: usize| -> Weight {
        let w = Weight::fundamental(r, j - 1);
        let cw = coxeter_apply(a, &w);
        Weight((0..r).map(|k| w.0[k] - cw.0[k]).collect())
    };
    let alpha_omega = |j: usize| -> Weight {
        // alpha_j = sum_k a_kj omega_k
        Weight((0..r).map(|k| a.entry(k, j - 1)).collect())
    };
    let alpha = if m < hi {
        cpow(&beta_omega(i), m)
    } else if m == hi {
        Weight(alpha_omega(isr).0.iter().map(|x| -x).collect())
    } else if m <= h {
        cpow(&beta_omega(isr), m - hi - 1)
    } else {
        Weight(alpha_omega(i).0.iter().map(|x| -x).collect())
    };
    let c_coords = weight_to_alpha(a, &alpha.0)?;
    Ok((gamma, alpha.0, c_coords))
}

/// The fundamental domain `D = {(i, m): m in [0, h(i;c)]}` of `F`.
pub fn fundamental_domain(cd: &CoxeterData) -> Result<Vec<(usize, i64)>> {
    cd.require_indecomposable()?;
    let mut out = Vec::new();
    for i in 1..=cd.rank() {
        for m in 0..=cd.h_of(i) {
            out.push((i, m));
        }
    }
    Ok(out)
}

/// Recognized finite-type labels for reporting and for the Bedard path
/// formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeLabel {
    pub family: char,
    pub n: usize,
    /// Permutation sigma with `A[sigma i][sigma j] = standard A[i][j]`.
    pub relabel: Vec<usize>,
}

/// Classifies an indecomposable finite-type Cartan matrix by graph
/// isomorphism against the standard list. Reporting aid and Bedard-branch
/// selector only; the orbit machinery never consults it.
pub fn classify(a: &CartanMatrix) -> Result<TypeLabel> {
    if !a.is_indecomposable() {
        return Err(Error::Decomposable);
    }
    if !a.is_finite_type() {
        return Err(Error::NonFiniteType);
    }
    let r = a.rank();
    let candidates: Vec<String> = match r {
        1 => vec!["A1".into()],
        2 => vec!["A2".into(), "B2".into(), "C2".into(), "G2".into()],
        3 => vec!["A3".into(), "B3".into(), "C3".into()],
        _ => {
            let mut v = vec![format!("A{r}"), format!("B{r}"), format!("C{r}"), format!("D{r}")];
            if r == 4 {
                v.push("F4".into());
            }
            if (6..=8).contains(&r) {
                v.push(format!("E{r}"));
            }
            v
        }
    };
    for name in candidates {
        let std_a = CartanMatrix::of_type(&name)?;
        if let Some(perm) = find_isomorphism(a, &std_a) {
            let mut chars = name.chars();
            let family = chars.next().unwrap();
            let n: usize = chars.as_str().parse().unwrap();
            return Ok(TypeLabel {
                family,
                n,
                relabel: perm,
            });
        }
    }
    Err(Error::UnsupportedType("unrecognized finite type".into()))
}

/// Permutation `sigma` with `a[sigma(i)][sigma(j)] == b[i][j]`, by
/// backtracking on the (tree-shaped) Dynkin graph.
fn find_isomorphism(a: &CartanMatrix, b: &CartanMatrix) -> Option<Vec<usize>> {
    let r = a.rank();
    if b.rank() != r {
        return None;
    }
    let mut perm = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn rec(
        a: &CartanMatrix,
        b: &CartanMatrix,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let r = a.rank();
        if i == r {
            return true;
        }
        for cand in 0..r {
            if used[cand] {
                continue;
            }
            let ok = (0..i).all(|j| {
                a.entry(cand, perm[j]) == b.entry(i, j) && a.entry(perm[j], cand) == b.entry(j, i)
            });
            if ok {
                perm[i] = cand;
                used[cand] = true;
                if rec(a, b, perm, used, i + 1) {
                    return true;
                }
                used[cand] = false;
                perm[i] = usize::MAX;
            }
        }
        false
    }
    if rec(a, b, &mut perm, &mut used, 0) {
        Some(perm)
    } else {
        None
    }
}

/// All graph automorphisms of the Dynkin diagram (value-preserving vertex
/// permutations).
fn automorphisms(a: &CartanMatrix) -> Vec<Vec<usize>> {
    let r = a.rank();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn rec(
        a: &CartanMatrix,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = a.rank();
        if i == r {
            out.push(perm.clone());
            return;
        }
        for cand in 0..r {
            if used[cand] {
                continue;
            }
            let ok = (0..i).all(|j| {
                a.entry(cand, perm[j]) == a.entry(i, j) && a.entry(perm[j], cand) == a.entry(j, i)
            });
            if ok {
                perm[i] = cand;
                used[cand] = true;
                rec(a, perm, used, i + 1, out);
                used[cand] = false;
                perm[i] = usize::MAX;
            }
        }
    }
    rec(a, &mut perm, &mut used, 0, &mut out);
    out
}

/// Bedard's numbers `m_i = (h + a_i - b_i) / 2` from the Dynkin-diagram
/// path `pi(i, i*)` and the arrow counts in the quiver of `B_A`.
///
/// Defined through the diagram automorphism for types `A_n`, `D_{2n+1}`
/// and `E_6`; in the remaining finite types `w_0 = -1` forces `i = i*` and
/// the 0-path value `h/2` is returned for every index.
pub fn bedard_numbers(a: &CartanMatrix) -> Result<Vec<i64>> {
    let label = classify(a)?;
    let r = a.rank();
    let h: i64 = match (label.family, label.n) {
        ('A', n) => n as i64 + 1,
        ('B', n) | ('C', n) => 2 * n as i64,
        ('D', n) => 2 * n as i64 - 2,
        ('E', 6) => 12,
        ('E', 7) => 18,
        ('E', 8) => 30,
        ('F', 4) => 12,
        ('G', 2) => 6,
        _ => return Err(Error::UnsupportedType("unknown label".into())),
    };
    let star_types = matches!(
        (label.family, label.n),
        ('A', n) if n >= 2
    ) || matches!((label.family, label.n), ('D', n) if n >= 5 && n % 2 == 1)
        || (label.family, label.n) == ('E', 6);
    if !star_types {
        if h % 2 != 0 {
            return Err(Error::Internal("odd Coxeter number with w0 = -1".into()));
        }
        return Ok(vec![h / 2; r]);
    }
    // i* = the unique nontrivial diagram automorphism
    let autos = automorphisms(a);
    let star = autos
        .into_iter()
        .find(|p| p.iter().enumerate().any(|(i, &pi)| pi != i))
        .ok_or_else(|| Error::Internal("expected a nontrivial diagram automorphism".into()))?;
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let t = star[i];
        if t == i {
            out.push(h / 2);
            continue;
        }
        let path = tree_path(a, i, t)
            .ok_or_else(|| Error::Internal("Dynkin diagram is not connected".into()))?;
        // arrows of the quiver of B_A: i -> j iff i < j and a_ij != 0
        let mut toward_star = 0i64;
        let mut toward_i = 0i64;
        for w in path.windows(2) {
            let (x, y) = (w[0], w[1]);
            if x < y {
                toward_star += 1;
            } else {
                toward_i += 1;
            }
        }
        let m2 = h + toward_star - toward_i;
        if m2 % 2 != 0 {
            return Err(Error::Internal("Bedard number is not integral".into()));
        }
        out.push(m2 / 2);
    }
    Ok(out)
}

/// Unique path between two vertices of the (tree) Dynkin diagram.
fn tree_path(a: &CartanMatrix, from: usize, to: usize) -> Option<Vec<usize>> {
    let r = a.rank();
    let mut prev = vec![usize::MAX; r];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in 0..r {
            if y != x && a.entry(x, y) != 0 && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}



#[cfg(test)]
mod gamma_alpha_tests {
    use super::*;

    #[test]
    fn boundary_columns_match_ua_inverse_and_units() {
        for t in ["A2", "A3", "B3", "G2", "D4", "E6"] {
            let a = CartanMatrix::of_type(t).unwrap();
            let cd = coxeter_orbit(&a).unwrap();
            let h = cd.coxeter_number();
            let inv = a.ua_inverse();
            for i in 1..=a.rank() {
                // m = 0: alpha(i,0) = beta_i, c(i,0) = column i of U_A^{-1}
                let (_, _, c0) = gamma_alpha_c(&cd, i, 0).unwrap();
                assert_eq!(c0, inv.col(i - 1), "{t}: c({i},0)");
                // m = h(i;c): alpha = -alpha_{i*}, c = -e_{i*}
                let (_, _, chi) = gamma_alpha_c(&cd, i, cd.h_of(i)).unwrap();
                let mut expect = vec![0i64; a.rank()];
                expect[cd.istar(i) - 1] = -1;
                assert_eq!(chi, expect, "{t}: c({i},h(i;c))");
                // m = h + 1: c = -e_i
                let (_, _, clast) = gamma_alpha_c(&cd, i, h + 1).unwrap();
                let mut expect = vec![0i64; a.rank()];
                expect[i - 1] = -1;
                assert_eq!(clast, expect, "{t}: c({i},h+1)");
            }
            assert!(gamma_alpha_c(&cd, 1, h + 2).is_err());
        }
    }

    // c(F(i, m)) = c(i, m), with F's image reduced by the period h + 2
    #[test]
    fn c_is_f_invariant() {
        for t in ["A2", "A3", "A4", "B2", "B3", "C3", "D4", "F4", "G2", "D5", "E6"] {
            let a = CartanMatrix::of_type(t).unwrap();
            let cd = coxeter_orbit(&a).unwrap();
            let h = cd.coxeter_number();
            for i in 1..=a.rank() {
                for m in 0..=h + 1 {
                    let (j, m2) = f_map(&cd, i, m).unwrap();
                    let m2 = m2.rem_euclid(h + 2);
                    let (_, _, c1) = gamma_alpha_c(&cd, i, m).unwrap();
                    let (_, _, c2) = gamma_alpha_c(&cd, j, m2).unwrap();
                    assert_eq!(c1, c2, "{t}: c(F({i},{m})) != c({i},{m})");
                }
            }
        }
    }
}
