#![allow(clippy::needless_range_loop)]

//! Shared helpers for randomized integration tests.

use frieze_core::cartan::CartanMatrix;
use frieze_core::matrix::IntMat;
use rand::Rng;

/// Random symmetrizable generalized Cartan matrix of finite or affine
/// type (belt polynomials stay tractable there; indefinite types grow
/// doubly exponentially along the belt and are out of reach for exact
/// window checks).
#[allow(dead_code)]
pub fn random_tame_cartan<R: Rng>(rng: &mut R, r: usize) -> CartanMatrix {
    loop {
        let mut rows = vec![vec![0i64; r]; r];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for i in 0..r {
            for j in i + 1..r {
                if rng.gen_bool(0.65) {
                    let (a, b) = match rng.gen_range(0..20) {
                        0..=11 => (-1, -1),
                        12..=14 => (-1, -2),
                        15..=17 => (-2, -1),
                        18 => (-2, -2),
                        _ => {
                            if rng.gen_bool(0.5) {
                                (-1, -3)
                            } else {
                                (-3, -1)
                            }
                        }
                    };
                    rows[i][j] = a;
                    rows[j][i] = b;
                }
            }
        }
        if let Ok(a) = CartanMatrix::from_rows(&rows) {
            if a.is_finite_type() || a.is_affine_type() {
                return a;
            }
        }
    }
}

#[allow(dead_code)]
pub fn random_coefficients<R: Rng>(rng: &mut R, l: usize, r: usize, span: i64) -> IntMat {
    let mut p = IntMat::zeros(l, r);
    for q in 0..l {
        for j in 0..r {
            p[(q, j)] = rng.gen_range(-span..=span);
        }
    }
    p
}
