//! Exact linear algebra: integer matrices (Smith normal form, fraction-free
//! rank, cofactor determinants) and dense matrices over exact fields.

mod field;
mod gaussian;
mod int;

pub use field::{Field, Matrix};
pub use gaussian::GaussianRational;
pub use int::{
    bareiss_rank, cofactor_determinant, integer_kernel_basis, primitive, rational_determinant,
    smith_normal_form,
    IntMatrix, SmithForm,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Lift an integer matrix to the rationals.
pub fn to_rational(m: &IntMatrix) -> Matrix<BigRational> {
    Matrix::from_fn(m.len(), m.first().map_or(0, Vec::len), |i, j| {
        BigRational::from_integer(BigInt::from(m[i][j]))
    })
}
