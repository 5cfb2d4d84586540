use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::to_rational;

/// Row-major integer matrix.
pub type IntMatrix = Vec<Vec<i64>>;

/// `left · input · right = diagonal`, with `left`, `right` unimodular and the
/// nonzero diagonal entries positive and forming a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d != 0).count()
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

// row[dst] += k * row[src]
fn add_row(m: &mut IntMatrix, dst: usize, src: usize, k: i64) {
    if k == 0 {
        return;
    }
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(src_row) {
        *d += k * s;
    }
}

fn add_col(m: &mut IntMatrix, dst: usize, src: usize, k: i64) {
    if k == 0 {
        return;
    }
    for row in m.iter_mut() {
        row[dst] += k * row[src];
    }
}

/// Smith normal form with transforms.
pub fn smith_normal_form(input: &IntMatrix) -> SmithForm {
    let rows = input.len();
    let cols = input.first().map_or(0, Vec::len);
    let mut a = input.clone();
    let mut left = identity(rows);
    let mut right = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| (a[i][j].abs(), i, j));
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(t, pi);
            left.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut right, t, pj);

            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&a[i][t], &p);
                add_row(&mut a, i, t, -q);
                add_row(&mut left, i, t, -q);
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&a[t][j], &p);
                add_col(&mut a, j, t, -q);
                add_col(&mut right, j, t, -q);
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // enforce the divisibility chain
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match offender {
                Some(i) => {
                    add_row(&mut a, t, i, 1);
                    add_row(&mut left, t, i, 1);
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for v in a[t].iter_mut() {
                *v = -*v;
            }
            for v in left[t].iter_mut() {
                *v = -*v;
            }
        }
    }
    let diagonal = (0..rows.min(cols)).map(|i| a[i][i]).collect();
    SmithForm {
        diagonal,
        left,
        right,
    }
}

/// A basis of `{x ∈ Zⁿ : m·x = 0}` as columns, read off the right transform.
pub fn integer_kernel_basis(m: &IntMatrix) -> Vec<Vec<i64>> {
    let cols = m.first().map_or(0, Vec::len);
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..cols)
        .map(|j| snf.right.iter().map(|row| row[j]).collect())
        .collect()
}

/// Divide out the gcd and make the first nonzero entry positive.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    let sign = v.iter().find(|&&x| x != 0).map_or(1, |&x| x.signum());
    v.iter().map(|&x| sign * x / g).collect()
}

/// Determinant by Laplace expansion along the first row.
///
/// Exponential, kept as an independent cross-check for small matrices.
pub fn cofactor_determinant(m: &IntMatrix) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: IntMatrix = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * cofactor_determinant(&minor)
            })
            .sum(),
    }
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
pub fn bareiss_rank(m: &IntMatrix) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].abs();
        rank += 1;
    }
    rank
}

/// Exact determinant through rational elimination.
pub fn rational_determinant(m: &IntMatrix) -> i64 {
    let d: BigRational = to_rational(m).determinant();
    d.to_integer()
        .to_i64()
        .expect("determinant of a small integer matrix fits in i64")
}
