//! With BFZ coefficients the cluster algebra is a polynomial ring in
//! `z_1..z_{2r}`: substituting `p_i = z_i z_{r+i} - ..` re-expands every
//! cluster variable as an honest polynomial with integer coefficients, and
//! the cluster at `t(1, 1)` is exactly `(z_{r+1}, .., z_{2r})`. Checked for
//! every finite type of rank <= 3.

use frieze_core::cartan::CartanMatrix;
use frieze_core::context::Alphabet;
use frieze_core::matrix::{ExtMatrix, IntMat};
use frieze_core::poly::LaurentPoly;
use frieze_core::seed::{explore, Seed, DEFAULT_NODE_BUDGET};

#[test]
fn bfz_cluster_variables_are_polynomials_in_z() {
    for t in ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"] {
        let a = CartanMatrix::of_type(t).unwrap();
        let r = a.rank();
        let ext = ExtMatrix::new(
            IntMat::stack(&a.build_ba(), &a.build_ua()).unwrap(),
            r,
        )
        .unwrap();
        let znames: Vec<String> = (1..=r).map(|i| format!("z{i}")).collect();
        let pnames: Vec<String> = (1..=r).map(|i| format!("p{i}")).collect();
        let ctx = Alphabet::with_names(
            &znames.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            &pnames.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        );
        let root = Seed::initial(ext, ctx).unwrap();

        // ambient polynomial ring in z_1..z_{2r}
        let all_z: Vec<String> = (1..=2 * r).map(|i| format!("z{i}")).collect();
        let zctx = Alphabet::with_names(
            &all_z.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            &[],
        );
        let zvar = |i: usize| LaurentPoly::variable(&zctx, i);
        // p_i = z_i z_{r+i} - prod_{j>i} z_j^{-a_ji} prod_{j<i} z_{r+j}^{-a_ji}
        let mut images: Vec<LaurentPoly> = (0..r).map(zvar).collect();
        for i in 1..=r {
            let mut prod = LaurentPoly::one(&zctx);
            for j in i + 1..=r {
                prod = prod
                    .mul(&zvar(j - 1).pow((-a.entry(j - 1, i - 1)) as u32).unwrap())
                    .unwrap();
            }
            for j in 1..i {
                prod = prod
                    .mul(&zvar(r + j - 1).pow((-a.entry(j - 1, i - 1)) as u32).unwrap())
                    .unwrap();
            }
            images.push(
                zvar(i - 1)
                    .mul(&zvar(r + i - 1))
                    .unwrap()
                    .sub(&prod)
                    .unwrap(),
            );
        }

        // the cluster at t(1, 1) = mu_r .. mu_1 substitutes to (z_{r+1}, ..)
        let word: Vec<usize> = (1..=r).collect();
        let at_t11 = root.apply_word(&word).unwrap();
        for i in 0..r {
            let img = at_t11.cluster()[i].substitute(&images).unwrap();
            assert_eq!(img, zvar(r + i), "{t}: z[1] is not (z_r+1 .. z_2r)");
        }

        // every cluster variable becomes a polynomial (no negative exponents)
        let ex = explore(&root, usize::MAX, DEFAULT_NODE_BUDGET).unwrap();
        for v in &ex.variables {
            let img = v.substitute(&images).unwrap();
            for (e, _) in img.terms() {
                assert!(
                    e.0.iter().all(|&x| x >= 0),
                    "{t}: {v} does not re-expand polynomially"
                );
            }
        }
    }
}
