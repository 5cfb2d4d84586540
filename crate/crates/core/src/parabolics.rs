//! Standard parabolic subgroups as subsets of simple roots.
//!
//! A standard parabolic `P_I` contains the Borel subgroup; its Levi factor has
//! root system spanned by the nodes in `I`, and its unipotent radical is
//! spanned by the positive roots not supported inside `I`. Conjugacy classes
//! of parabolics correspond to subsets `I`, so nothing here enumerates Weyl
//! orbits.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::linalg::{primitive, Matrix};
use crate::rootdata::{classify_cartan, RootSystem, Root, SimpleTypeRank};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardParabolic {
    pub typerank: SimpleTypeRank,
    /// Sorted node indices of the Levi factor.
    pub levi_nodes: Vec<usize>,
}

impl StandardParabolic {
    pub fn new(rs: &RootSystem, mut levi_nodes: Vec<usize>) -> Result<Self> {
        levi_nodes.sort_unstable();
        levi_nodes.dedup();
        if let Some(&bad) = levi_nodes.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::Validation(format!(
                "node {bad} out of range for {} (nodes are 0..{})",
                rs.typerank(),
                rs.rank()
            )));
        }
        Ok(StandardParabolic {
            typerank: rs.typerank(),
            levi_nodes,
        })
    }

    pub fn is_proper(&self) -> bool {
        self.levi_nodes.len() < self.typerank.rank()
    }

    pub fn is_borel(&self) -> bool {
        self.levi_nodes.is_empty()
    }

    /// Complement of the Levi nodes.
    pub fn removed_nodes(&self) -> Vec<usize> {
        (0..self.typerank.rank())
            .filter(|i| !self.levi_nodes.contains(i))
            .collect()
    }

    fn in_levi(&self, root: &Root) -> bool {
        root.support().all(|i| self.levi_nodes.contains(&i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviDatum {
    pub parabolic: StandardParabolic,
    pub levi_positive_root_count: usize,
    pub dim_l: i64,
    pub dim_u: i64,
    pub dim_zl: i64,
    pub levi_type: Vec<SimpleTypeRank>,
}

pub fn levi_datum(rs: &RootSystem, levi_nodes: &[usize]) -> Result<LeviDatum> {
    let parabolic = StandardParabolic::new(rs, levi_nodes.to_vec())?;
    let levi_positive_root_count = rs
        .positive_roots()
        .iter()
        .filter(|r| parabolic.in_levi(r))
        .count();
    let sub: Vec<Vec<i64>> = parabolic
        .levi_nodes
        .iter()
        .map(|&i| parabolic.levi_nodes.iter().map(|&j| rs.cartan()[i][j]).collect())
        .collect();
    let levi_type = classify_cartan(&sub)?
        .into_iter()
        .map(|c| c.typerank)
        .collect();
    let rank = rs.rank() as i64;
    let lp = levi_positive_root_count as i64;
    Ok(LeviDatum {
        levi_positive_root_count,
        dim_l: rank + 2 * lp,
        dim_u: rs.positive_roots().len() as i64 - lp,
        dim_zl: rank - parabolic.levi_nodes.len() as i64,
        levi_type,
        parabolic,
    })
}

/// One Levi datum per maximal parabolic, ordered by the removed node.
pub fn enumerate_maximal_parabolics(rs: &RootSystem) -> Vec<LeviDatum> {
    (0..rs.rank())
        .map(|k| {
            let nodes: Vec<usize> = (0..rs.rank()).filter(|&i| i != k).collect();
            levi_datum(rs, &nodes).expect("nodes in range")
        })
        .collect()
}

/// Move a cocharacter, given in fundamental-coweight coordinates, into the
/// dominant chamber by simple reflections `s_i(λ) = λ − ⟨α_i, λ⟩ α_i∨`.
pub fn dominant_representative(rs: &RootSystem, lam: &[i64]) -> Result<Vec<i64>> {
    check_len(rs, lam)?;
    let mut lam = lam.to_vec();
    let cartan = rs.cartan();
    while let Some(i) = lam.iter().position(|&x| x < 0) {
        let li = lam[i];
        for (j, v) in lam.iter_mut().enumerate() {
            *v -= li * cartan[j][i];
        }
    }
    Ok(lam)
}

fn check_len(rs: &RootSystem, lam: &[i64]) -> Result<()> {
    if lam.len() != rs.rank() {
        return Err(Error::Validation(format!(
            "cocharacter has {} coordinates, {} needs {}",
            lam.len(),
            rs.typerank(),
            rs.rank()
        )));
    }
    Ok(())
}

/// `⟨β, λ⟩` for a root in simple-root coordinates and a cocharacter in
/// fundamental-coweight coordinates.
pub fn root_cocharacter_pairing(root: &Root, lam: &[i64]) -> i64 {
    root.coords().iter().zip(lam).map(|(c, l)| c * l).sum()
}

/// The standard parabolic `P_λ` of elements whose limit under `λ(t)` exists
/// as `t → 0`: roots with `⟨α, λ⟩ ≥ 0`. Non-dominant input is first moved to
/// the dominant chamber, which returns the standard representative of the
/// conjugacy class.
pub fn parabolic_from_cocharacter(rs: &RootSystem, lam: &[i64]) -> Result<StandardParabolic> {
    let lam = dominant_representative(rs, lam)?;
    let levi: Vec<usize> = (0..rs.rank()).filter(|&i| lam[i] == 0).collect();
    let p = StandardParabolic::new(rs, levi)?;
    for r in rs.roots() {
        let in_p_lambda = root_cocharacter_pairing(r, &lam) >= 0;
        let in_standard = r.is_positive() || p.in_levi(r);
        if in_p_lambda != in_standard {
            return Err(Error::InvariantViolation(format!(
                "root {r} disagrees between P_lambda and the standard parabolic"
            )));
        }
    }
    Ok(p)
}

/// Lattice in which the one-dimensional Levi center's cocharacters live.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CocharacterLattice {
    /// Cocharacters of the simply connected group.
    #[default]
    Coroot,
    /// Cocharacters of the adjoint group.
    Coweight,
}

/// Weights of `Z_L°` on the root spaces of the unipotent radical, for a
/// parabolic whose Levi misses exactly one node. The generator of `Z_L°`'s
/// cocharacter lattice is taken primitive in the simply connected group's
/// coroot lattice and oriented so that every weight is positive.
pub fn center_weights_on_u(rs: &RootSystem, levi_nodes: &[usize]) -> Result<BTreeMap<Root, i64>> {
    center_weights_on_u_in(rs, levi_nodes, CocharacterLattice::Coroot)
}

pub fn center_weights_on_u_in(
    rs: &RootSystem,
    levi_nodes: &[usize],
    lattice: CocharacterLattice,
) -> Result<BTreeMap<Root, i64>> {
    let p = StandardParabolic::new(rs, levi_nodes.to_vec())?;
    let removed = p.removed_nodes();
    let [k] = removed.as_slice() else {
        return Err(Error::Unsupported(format!(
            "Levi center weights need exactly one removed node; {} were removed, so Z_L has dimension {}",
            removed.len(),
            removed.len()
        )));
    };
    let k = *k;
    // coweight coordinate k of the generator; all others vanish
    let scale = match lattice {
        CocharacterLattice::Coweight => 1,
        CocharacterLattice::Coroot => coroot_generator_scale(rs, &p.levi_nodes, k)?,
    };
    let weights: BTreeMap<Root, i64> = rs
        .positive_roots()
        .iter()
        .filter(|r| !p.in_levi(r))
        .map(|r| (r.clone(), r.coords()[k] * scale))
        .collect();
    if weights.values().any(|&w| w <= 0) {
        return Err(Error::InvariantViolation("nonpositive weight on U".into()));
    }
    Ok(weights)
}

/// Primitive `n ∈ Z^r` with `Σ nᵢ αᵢ∨` vanishing on every Levi node; returns
/// its (positive) pairing with `α_k`.
fn coroot_generator_scale(rs: &RootSystem, levi_nodes: &[usize], k: usize) -> Result<i64> {
    let r = rs.rank();
    let cartan = rs.cartan();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    // ⟨α_j, Σ nᵢ αᵢ∨⟩ = Σ cartan[j][i] nᵢ
    let m = Matrix::from_fn(levi_nodes.len(), r, |row, i| q(cartan[levi_nodes[row]][i]));
    let kernel = m.nullspace();
    let [v] = kernel.as_slice() else {
        return Err(Error::InvariantViolation("Levi center is not one-dimensional".into()));
    };
    let denom_lcm = v.iter().fold(BigInt::from(1), |acc, x| {
        num_integer::lcm(acc, x.denom().clone())
    });
    let ints: Vec<i64> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(denom_lcm.clone())).to_integer().to_i64())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvariantViolation("coroot generator overflow".into()))?;
    let n = primitive(&ints);
    let pairing: i64 = (0..r).map(|i| cartan[k][i] * n[i]).sum();
    if pairing == 0 {
        return Err(Error::InvariantViolation("generator pairs trivially with α_k".into()));
    }
    Ok(pairing.abs())
}
