//! First-order expansion of the relation map with dual numbers.
//!
//! Each `A_i` is perturbed to `(1 + ε a_i) A_i` and each `B_i` to
//! `(1 + ε b_i) B_i`; the `ε` coefficient of `z·∏[A_i, B_i]` must equal
//! `dμ·v` read as a traceless matrix.

#![allow(dead_code)]

use charvar::linalg::{GaussianRational, Matrix};
use charvar::tangent::{dmu_matrix, sl2_basis, Mat2, SurfaceTuple};
use num_traits::Zero;
use rand::Rng;

pub type Q = GaussianRational;

/// `x + ε y` with `ε² = 0`, entrywise on 2x2 matrices.
#[derive(Clone)]
struct Dual {
    x: Mat2,
    y: Mat2,
}

impl Dual {
    fn mul(&self, o: &Dual) -> Dual {
        Dual {
            x: self.x.mul(&o.x),
            y: self.x.mul(&o.y).add(&self.y.mul(&o.x)),
        }
    }

    /// Inverse of `x + ε y` is `x⁻¹ − ε x⁻¹ y x⁻¹`.
    fn inv(&self) -> Dual {
        let xi = self.x.inverse().unwrap();
        Dual {
            y: xi.mul(&self.y).mul(&xi).scale(&Q::from(-1)),
            x: xi,
        }
    }
}

fn perturb(m: &Mat2, dir: &Mat2) -> Dual {
    Dual {
        x: m.clone(),
        y: dir.mul(m),
    }
}

pub fn random_sl2<R: Rng>(rng: &mut R) -> Mat2 {
    let mut m = Matrix::zeros(2, 2);
    for b in &sl2_basis() {
        let c = Q::from_ints(rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        m = m.add(&b.scale(&c));
    }
    m
}

/// The `ε` coefficient of the perturbed relation.
pub fn first_order(t: &SurfaceTuple, dirs: &[Mat2]) -> Mat2 {
    let mut acc = Dual {
        x: Matrix::identity(2),
        y: Matrix::zeros(2, 2),
    };
    for (k, pair) in t.matrices().chunks(2).enumerate() {
        let a = perturb(&pair[0], &dirs[2 * k]);
        let b = perturb(&pair[1], &dirs[2 * k + 1]);
        acc = acc.mul(&a.mul(&b).mul(&a.inv()).mul(&b.inv()));
    }
    acc.y.scale(&Q::from(i64::from(t.twist())))
}

pub fn coords(m: &Mat2) -> Vec<Q> {
    vec![m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone()]
}

/// Number of random directions where `dμ·v` differs from the expansion.
pub fn mismatches<R: Rng>(t: &SurfaceTuple, rng: &mut R, directions: usize) -> usize {
    let d = dmu_matrix(t);
    let n = 2 * t.genus().get() as usize;
    (0..directions)
        .filter(|_| {
            let dirs: Vec<Mat2> = (0..n).map(|_| random_sl2(rng)).collect();
            let v: Vec<Q> = dirs.iter().flat_map(coords).collect();
            let image = d.matrix.mul(&Matrix::column(v));
            let expected = first_order(t, &dirs);
            let traceless = (expected.get(0, 0).clone() + expected.get(1, 1).clone()).is_zero();
            !traceless || image.col(0) != coords(&expected)
        })
        .count()
}
