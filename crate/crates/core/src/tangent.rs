//! Exact tangent-space computations for surface-group representations into
//! `SL₂`.
//!
//! A tuple `(A₁, B₁, …, A_g, B_g)` with `z·∏[A_i, B_i] = 1` is a point of the
//! representation variety. The differential of the relation map, written in
//! right-trivialized coordinates, sends `(a_i, b_i)` to `Σ f_i(a_i) + g_i(b_i)`
//! with
//!
//! ```text
//! f_i(a) = Ad(h₁⋯h_{i−1}) (a − Ad(h_i) τ_i(a))
//! g_i(b) = Ad(h₁⋯h_{i−1}) (σ_i(b) − Ad(h_i) b)
//! ```
//!
//! where `σ_i, τ_i` are the actions of `A_i, B_i` and `h_i = [A_i, B_i]`.
//! The assembly in [`assemble_differential`] only sees operator matrices, so
//! it applies to any group once its adjoint operators are available.

use std::fmt;

use serde::Serialize;

use crate::dimensions::Genus;
use crate::linalg::{Field, GaussianRational, Matrix};
use crate::{Error, Result};

pub type Mat2 = Matrix<GaussianRational>;

/// Dimension of `sl₂`.
pub const SL2_DIM: usize = 3;

fn gq(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

fn mat2(entries: [[(i64, i64); 2]; 2]) -> Mat2 {
    Matrix::from_fn(2, 2, |i, j| gq(entries[i][j].0, entries[i][j].1))
}

/// The basis `H = diag(1, −1)`, `E = e₁₂`, `F = e₂₁` of `sl₂`.
pub fn sl2_basis() -> [Mat2; 3] {
    [
        mat2([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]),
        mat2([[(0, 0), (1, 0)], [(0, 0), (0, 0)]]),
        mat2([[(0, 0), (0, 0)], [(1, 0), (0, 0)]]),
    ]
}

/// Coordinates of a traceless matrix in the basis `{H, E, F}`.
pub fn sl2_coords(m: &Mat2) -> Result<[GaussianRational; 3]> {
    let trace = m.get(0, 0).clone() + m.get(1, 1).clone();
    if !num_traits::Zero::is_zero(&trace) {
        return Err(Error::Validation("matrix is not traceless".into()));
    }
    Ok([m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone()])
}

/// Inverse of a determinant-one 2x2 matrix.
fn inv2(m: &Mat2) -> Mat2 {
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    Matrix::from_rows(vec![
        vec![d.clone(), -b.clone()],
        vec![-c.clone(), a.clone()],
    ])
}

fn det2(m: &Mat2) -> GaussianRational {
    m.get(0, 0).clone() * m.get(1, 1).clone() - m.get(0, 1).clone() * m.get(1, 0).clone()
}

pub fn commutator(a: &Mat2, b: &Mat2) -> Mat2 {
    a.mul(b).mul(&inv2(a)).mul(&inv2(b))
}

/// Matrix of `Ad(X)` on `sl₂` in the basis `{H, E, F}`.
pub fn adjoint_operator(x: &Mat2) -> Matrix<GaussianRational> {
    let xi = inv2(x);
    let cols: Vec<[GaussianRational; 3]> = sl2_basis()
        .iter()
        .map(|e| sl2_coords(&x.mul(e).mul(&xi)).expect("conjugation preserves trace"))
        .collect();
    Matrix::from_fn(SL2_DIM, SL2_DIM, |i, j| cols[j][i].clone())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceTuple {
    genus: Genus,
    matrices: Vec<Mat2>,
    twist: i8,
}

impl SurfaceTuple {
    /// Validate shapes, determinants and the relation `z·∏[A_i, B_i] = 1`.
    pub fn new(genus: Genus, matrices: Vec<Mat2>, twist: i8) -> Result<Self> {
        let g = genus.get() as usize;
        if matrices.len() != 2 * g {
            return Err(Error::Validation(format!(
                "expected {} matrices for genus {g}, got {}",
                2 * g,
                matrices.len()
            )));
        }
        if twist != 1 && twist != -1 {
            return Err(Error::Validation(format!("twist must be 1 or -1, got {twist}")));
        }
        for (k, m) in matrices.iter().enumerate() {
            if m.rows() != 2 || m.cols() != 2 {
                return Err(Error::Validation(format!("matrix {k} is not 2x2")));
            }
            if det2(m) != gq(1, 0) {
                return Err(Error::Validation(format!("matrix {k} does not have determinant 1")));
            }
        }
        let tuple = SurfaceTuple {
            genus,
            matrices,
            twist,
        };
        if tuple.relation() != Matrix::identity(2) {
            return Err(Error::Validation(
                "tuple does not satisfy z times the product of commutators = 1".into(),
            ));
        }
        Ok(tuple)
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn matrices(&self) -> &[Mat2] {
        &self.matrices
    }

    pub fn twist(&self) -> i8 {
        self.twist
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Mat2, &Mat2)> {
        self.matrices.chunks(2).map(|p| (&p[0], &p[1]))
    }

    /// `z·∏[A_i, B_i]`.
    pub fn relation(&self) -> Mat2 {
        let prod = self
            .pairs()
            .fold(Matrix::identity(2), |acc, (a, b)| acc.mul(&commutator(a, b)));
        prod.scale(&gq(i64::from(self.twist), 0))
    }
}

impl fmt::Display for SurfaceTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "genus {} tuple, z = {}", self.genus, self.twist)
    }
}

/// `A = diag(i, −i)` and `B = [[0, 1], [−1, 0]]`, generating the quaternion
/// group of order 8 with `[A, B] = −1`.
pub fn quaternion_pair() -> (Mat2, Mat2) {
    (
        mat2([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]),
        mat2([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]),
    )
}

/// Untwisted: pairs 1 and 2 are the quaternion pair, so the two `−1`
/// commutators cancel. Twisted (`z = −1`): pair 1 only. All other slots are
/// the identity.
pub fn quaternion_tuple(genus: Genus, twisted: bool) -> SurfaceTuple {
    let (a, b) = quaternion_pair();
    let nontrivial = if twisted { 1 } else { 2 };
    let mut matrices = Vec::new();
    for i in 0..genus.get() as usize {
        if i < nontrivial {
            matrices.push(a.clone());
            matrices.push(b.clone());
        } else {
            matrices.push(Matrix::identity(2));
            matrices.push(Matrix::identity(2));
        }
    }
    SurfaceTuple::new(genus, matrices, if twisted { -1 } else { 1 })
        .expect("quaternion tuples satisfy the relation")
}

pub fn identity_tuple(genus: Genus) -> SurfaceTuple {
    let matrices = vec![Matrix::identity(2); 2 * genus.get() as usize];
    SurfaceTuple::new(genus, matrices, 1).expect("identity tuple satisfies the relation")
}

/// Dimension of the common fixed space of `Ad(A_i), Ad(B_i)` on `sl₂`.
pub fn centralizer_dim(t: &SurfaceTuple) -> usize {
    let blocks: Vec<Matrix<GaussianRational>> = t
        .matrices
        .iter()
        .map(|m| adjoint_operator(m).sub(&Matrix::identity(SL2_DIM)))
        .collect();
    SL2_DIM - Matrix::vstack(&blocks).rank()
}

/// Matrix of the differential of the relation map; `dim 𝔤` rows and
/// `2g·dim 𝔤` columns grouped as `(a₁, b₁, …, a_g, b_g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DifferentialMatrix {
    pub matrix: Matrix<GaussianRational>,
}

impl DifferentialMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.matrix.nullspace().len()
    }
}

/// Assemble the blocks `f_i, g_i` from the operators `σ_i, τ_i` acting on a
/// Lie algebra of dimension `dim`.
pub fn assemble_differential<F: Field>(
    dim: usize,
    sigma: &[Matrix<F>],
    tau: &[Matrix<F>],
) -> Result<Matrix<F>> {
    if sigma.len() != tau.len() {
        return Err(Error::Validation("sigma and tau lists differ in length".into()));
    }
    let id = Matrix::<F>::identity(dim);
    let mut prefix = id.clone();
    let mut blocks = Vec::with_capacity(2 * sigma.len());
    for (s, t) in sigma.iter().zip(tau) {
        let s_inv = s
            .inverse()
            .ok_or_else(|| Error::Validation("sigma operator is not invertible".into()))?;
        let t_inv = t
            .inverse()
            .ok_or_else(|| Error::Validation("tau operator is not invertible".into()))?;
        let h = s.mul(t).mul(&s_inv).mul(&t_inv);
        blocks.push(prefix.mul(&id.sub(&h.mul(t))));
        blocks.push(prefix.mul(&s.sub(&h)));
        prefix = prefix.mul(&h);
    }
    Ok(Matrix::hstack(&blocks))
}

pub fn dmu_matrix(t: &SurfaceTuple) -> DifferentialMatrix {
    let (sigma, tau): (Vec<_>, Vec<_>) = t
        .pairs()
        .map(|(a, b)| (adjoint_operator(a), adjoint_operator(b)))
        .unzip();
    let matrix = assemble_differential(SL2_DIM, &sigma, &tau)
        .expect("adjoint operators of SL2 elements are invertible");
    DifferentialMatrix { matrix }
}

/// `2g·dim 𝔤 − rank dμ`.
pub fn tangent_dim(t: &SurfaceTuple) -> usize {
    2 * t.genus.get() as usize * SL2_DIM - dmu_matrix(t).rank()
}

/// `(2g−1)·dim G + dim Z` for `SL₂`, where `dim Z = 0`.
pub fn smooth_formula_value(genus: Genus) -> usize {
    (2 * genus.get() as usize - 1) * SL2_DIM
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentCheck {
    pub genus: Genus,
    pub twist: i8,
    pub rank: usize,
    pub tangent_dim: usize,
    pub formula_value: usize,
    pub centralizer_dim: usize,
    pub matches: bool,
}

pub fn tangent_check(t: &SurfaceTuple) -> TangentCheck {
    let rank = dmu_matrix(t).rank();
    let tangent_dim = 2 * t.genus.get() as usize * SL2_DIM - rank;
    let formula_value = smooth_formula_value(t.genus);
    TangentCheck {
        genus: t.genus,
        twist: t.twist,
        rank,
        tangent_dim,
        formula_value,
        centralizer_dim: centralizer_dim(t),
        matches: tangent_dim == formula_value,
    }
}
