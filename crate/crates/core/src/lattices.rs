//! Finite abelian group actions on cocharacter lattices `Z^r`.
//!
//! For a finite abelian group `Γ` acting on a torus `T`, the identity
//! component of the fixed points and the subtorus generated by the elements
//! `t·γ(t)⁻¹` have complementary dimensions and finite intersection. On
//! cocharacter lattices these are the kernel of the stacked matrix of all
//! `γ − 1` and the span of their columns.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::linalg::{bareiss_rank, rational_determinant, to_rational, IntMatrix, Matrix};
use crate::{Error, Execution, Result};

/// Largest generator order accepted before the generator is treated as
/// having infinite order.
pub const MAX_ORDER: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeAction {
    rank: usize,
    generators: Vec<IntMatrix>,
    orders: Vec<u64>,
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mul(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc: i128 = 0;
            for k in 0..n {
                acc = acc.checked_add(i128::from(a[i][k]) * i128::from(b[k][j]))?;
            }
            out[i][j] = i64::try_from(acc).ok()?;
        }
    }
    Some(out)
}

fn minus_identity(m: &IntMatrix) -> IntMatrix {
    let mut out = m.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] -= 1;
    }
    out
}

/// Multiplicative order, or `None` past [`MAX_ORDER`] or on overflow.
fn order(m: &IntMatrix) -> Option<u64> {
    let id = identity(m.len());
    let mut p = m.clone();
    for k in 1..=MAX_ORDER {
        if p == id {
            return Some(k);
        }
        p = mul(&p, m)?;
    }
    None
}

impl LatticeAction {
    /// Validate shapes, determinants, finite orders and commutativity.
    pub fn new(rank: usize, generators: Vec<IntMatrix>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Validation("lattice rank must be positive".into()));
        }
        let mut orders = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.len() != rank || g.iter().any(|row| row.len() != rank) {
                return Err(Error::Validation(format!(
                    "generator {i} is not a {rank}x{rank} matrix"
                )));
            }
            let det = rational_determinant(g);
            if det.abs() != 1 {
                return Err(Error::Validation(format!(
                    "generator {i} has determinant {det}, expected 1 or -1"
                )));
            }
            let ord = order(g).ok_or_else(|| {
                Error::Validation(format!(
                    "generator {i} has infinite order (no power up to {MAX_ORDER} is the identity)"
                ))
            })?;
            orders.push(ord);
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if mul(&generators[i], &generators[j]) != mul(&generators[j], &generators[i]) {
                    return Err(Error::Validation(format!(
                        "generators {i} and {j} do not commute"
                    )));
                }
            }
        }
        Ok(LatticeAction {
            rank,
            generators,
            orders,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Conjugate every generator: `γ ↦ u·γ·u⁻¹`.
    pub fn conjugate(&self, u: &IntMatrix, u_inv: &IntMatrix) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                mul(u, g)
                    .and_then(|x| mul(&x, u_inv))
                    .ok_or_else(|| Error::Validation("conjugated entries overflow i64".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        LatticeAction::new(self.rank, gens)
    }

    fn stacked(&self) -> IntMatrix {
        self.generators.iter().flat_map(minus_identity).collect()
    }

    fn side_by_side(&self) -> IntMatrix {
        let blocks: Vec<IntMatrix> = self.generators.iter().map(minus_identity).collect();
        (0..self.rank)
            .map(|i| blocks.iter().flat_map(|b| b[i].iter().copied()).collect())
            .collect()
    }
}

/// Rank of the fixed sublattice.
pub fn fixed_rank(act: &LatticeAction) -> usize {
    if act.generators.is_empty() {
        return act.rank;
    }
    act.rank - bareiss_rank(&act.stacked())
}

/// Rank of the sublattice spanned by the columns of all `γ − 1`.
pub fn commutator_rank(act: &LatticeAction) -> usize {
    if act.generators.is_empty() {
        return 0;
    }
    bareiss_rank(&act.side_by_side())
}

/// Rank of the intersection of the fixed and commutator sublattices.
pub fn intersection_rank(act: &LatticeAction) -> usize {
    if act.generators.is_empty() {
        return 0;
    }
    let kernel = to_rational(&act.stacked()).nullspace();
    let span = to_rational(&act.side_by_side());
    if kernel.is_empty() || span.rank() == 0 {
        return 0;
    }
    let k = Matrix::from_fn(act.rank, kernel.len(), |i, j| kernel[j][i].clone());
    let joint = Matrix::hstack(&[k, span.clone()]);
    kernel.len() + span.rank() - joint.rank()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TorusLemmaCheck {
    pub rank: usize,
    pub fixed_rank: usize,
    pub commutator_rank: usize,
    pub intersection_rank: usize,
}

impl TorusLemmaCheck {
    pub fn holds(&self) -> bool {
        self.fixed_rank + self.commutator_rank == self.rank && self.intersection_rank == 0
    }
}

pub fn torus_lemma_check(act: &LatticeAction) -> TorusLemmaCheck {
    TorusLemmaCheck {
        rank: act.rank,
        fixed_rank: fixed_rank(act),
        commutator_rank: commutator_rank(act),
        intersection_rank: intersection_rank(act),
    }
}

/// `fixed_rank + commutator_rank == rank`, with trivial intersection.
pub fn verify_torus_lemma(act: &LatticeAction) -> bool {
    torus_lemma_check(act).holds()
}

pub fn torus_lemma_batch(acts: &[LatticeAction], exec: Execution) -> Vec<TorusLemmaCheck> {
    exec.map(acts, torus_lemma_check)
}

/// Companion matrices of the cyclotomic polynomials of degree at most 4 that
/// have integral companion forms of small order, with their orders.
fn cyclotomic_blocks() -> Vec<(IntMatrix, u64)> {
    vec![
        (vec![vec![1]], 1),
        (vec![vec![-1]], 2),
        (vec![vec![0, -1], vec![1, -1]], 3),
        (vec![vec![0, -1], vec![1, 0]], 4),
        (vec![vec![0, -1], vec![1, 1]], 6),
        (
            vec![
                vec![0, 0, 0, -1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
            ],
            8,
        ),
    ]
}

fn power(m: &IntMatrix, e: u64) -> IntMatrix {
    let mut p = identity(m.len());
    for _ in 0..e {
        p = mul(&p, m).expect("finite-order block powers stay small");
    }
    p
}

/// A random unimodular matrix and its inverse, built from a few elementary
/// row operations with coefficients in `{-1, 1}`.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> (IntMatrix, IntMatrix) {
    let mut u = identity(n);
    let mut inv = identity(n);
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        // u ← E·u with E = 1 + c·e_ij; inv ← inv·E⁻¹
        for k in 0..n {
            u[i][k] += c * u[j][k];
        }
        for row in inv.iter_mut() {
            row[j] -= c * row[i];
        }
    }
    (u, inv)
}

/// A random commuting family of finite-order automorphisms of `Z^r`,
/// `1 <= r <= max_rank`, each of order dividing some `n <= max_order`:
/// block-diagonal powers of cyclotomic companion matrices whose orders
/// divide `n`, conjugated by a random unimodular matrix.
pub fn sample_commuting_action<R: Rng + ?Sized>(
    rng: &mut R,
    max_rank: usize,
    max_order: u64,
) -> LatticeAction {
    let max_rank = max_rank.max(1);
    let rank = rng.gen_range(1..=max_rank);
    let catalogue = cyclotomic_blocks();
    let targets: Vec<u64> = catalogue
        .iter()
        .map(|b| b.1)
        .filter(|&o| o <= max_order.max(1))
        .collect();
    let n = *targets.choose(rng).expect("order 1 is always available");
    let mut blocks: Vec<&(IntMatrix, u64)> = Vec::new();
    let mut used = 0;
    while used < rank {
        let fitting: Vec<&(IntMatrix, u64)> = catalogue
            .iter()
            .filter(|b| b.0.len() <= rank - used && n.is_multiple_of(b.1))
            .collect();
        let b = *fitting.choose(rng).expect("rank-one blocks always fit");
        used += b.0.len();
        blocks.push(b);
    }
    let count = rng.gen_range(1..=3);
    let generators: Vec<IntMatrix> = (0..count)
        .map(|_| {
            let mut g = vec![vec![0i64; rank]; rank];
            let mut at = 0;
            for (block, ord) in &blocks {
                let p = power(block, rng.gen_range(0..*ord));
                for (i, row) in p.iter().enumerate() {
                    for (j, &v) in row.iter().enumerate() {
                        g[at + i][at + j] = v;
                    }
                }
                at += block.len();
            }
            g
        })
        .collect();
    let base = LatticeAction::new(rank, generators).expect("block construction is valid");
    let (u, u_inv) = random_unimodular(rng, rank, 2 * rank);
    base.conjugate(&u, &u_inv)
        .expect("small unimodular conjugates stay within range")
}
