//! Connected reductive groups as combinatorial data.
//!
//! A datum is a list of almost-simple factors, each with the Cartan type of
//! its simply connected cover and an isogeny label, plus the rank of the
//! central torus. The center of a simply connected factor is `P∨/Q∨`, the
//! cokernel of the matrix whose columns are the simple coroots written in
//! fundamental coweights (the Cartan matrix itself in our convention).
//!
//! Center elements are residue tuples in a labeled basis: each invariant
//! factor is generated by the class of a fundamental coweight, chosen as the
//! first node (Bourbaki order) whose class has the required order; for `D_n`
//! with `n` even the two `Z/2` factors are generated by the half-spin nodes
//! `ω∨_{n-1}, ω∨_n` (0-based `n-2, n-1`). [`center_basis`] reports the choice.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{integer_kernel_basis, smith_normal_form, IntMatrix};
use crate::rootdata::{build_root_system, Family, SimpleTypeRank};
use crate::{Error, Result};

/// A finite abelian group by invariant factors `d₁ | d₂ | …`, each `≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_orders(&[n])
    }

    /// Invariant factors of `⊕ Z/nᵢ` for arbitrary positive `nᵢ`.
    pub fn from_orders(orders: &[u64]) -> Self {
        let diag: IntMatrix = (0..orders.len())
            .map(|i| {
                (0..orders.len())
                    .map(|j| if i == j { orders[i] as i64 } else { 0 })
                    .collect()
            })
            .collect();
        Self::from_diagonal(&smith_normal_form(&diag).diagonal)
    }

    fn from_diagonal(diag: &[i64]) -> Self {
        let factors = diag
            .iter()
            .filter(|&&d| d > 1)
            .map(|&d| d as u64)
            .collect();
        FiniteAbelianGroup { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(groups: &[FiniteAbelianGroup]) -> Self {
        let orders: Vec<u64> = groups.iter().flat_map(|g| g.factors.iter().copied()).collect();
        Self::from_orders(&orders)
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn contains(&self, residues: &[u64]) -> bool {
        residues.len() == self.factors.len()
            && residues.iter().zip(&self.factors).all(|(r, d)| r < d)
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.factors)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    /// All elements, sorted.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |r| {
                        let mut v = prefix.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Elements of the subgroup generated by `generators`, sorted.
    pub fn span(&self, generators: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut stack = vec![self.identity()];
        while let Some(x) = stack.pop() {
            if !seen.insert(x.clone()) {
                continue;
            }
            for g in generators {
                let y = self.add(&x, g);
                if !seen.contains(&y) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Invariant factors of the subgroup generated by `generators`.
    ///
    /// The subgroup is `Zᵐ / R` with `R` the relations among the generators,
    /// read off an integer kernel of `[generators | diag(d)]`.
    pub fn subgroup(&self, generators: &[Vec<u64>]) -> FiniteAbelianGroup {
        let k = self.factors.len();
        let m = generators.len();
        if m == 0 || k == 0 {
            return FiniteAbelianGroup::trivial();
        }
        let mat: IntMatrix = (0..k)
            .map(|i| {
                let mut row: Vec<i64> = generators.iter().map(|g| g[i] as i64).collect();
                row.extend((0..k).map(|j| if i == j { self.factors[i] as i64 } else { 0 }));
                row
            })
            .collect();
        let relations: IntMatrix = integer_kernel_basis(&mat)
            .into_iter()
            .map(|v| v[..m].to_vec())
            .collect();
        // relations as columns of an m × s matrix
        let rel_cols: IntMatrix = (0..m)
            .map(|i| relations.iter().map(|v| v[i]).collect())
            .collect();
        let mut diag = smith_normal_form(&rel_cols).diagonal;
        diag.resize(m, 0);
        debug_assert!(diag.iter().all(|&d| d != 0), "finite subgroup");
        Self::from_diagonal(&diag)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Center of the simply connected group of type `tr`.
pub fn center_of_simply_connected(tr: SimpleTypeRank) -> FiniteAbelianGroup {
    let rs = build_root_system(tr);
    FiniteAbelianGroup::from_diagonal(&smith_normal_form(rs.cartan()).diagonal)
}

/// The fundamental coweight (0-based node) generating each invariant factor
/// of [`center_of_simply_connected`].
pub fn center_basis(tr: SimpleTypeRank) -> Vec<usize> {
    let n = tr.rank();
    let center = center_of_simply_connected(tr);
    if tr.family() == Family::D && n.is_multiple_of(2) {
        return vec![n - 2, n - 1];
    }
    let Some(&order) = center.factors().first() else {
        return vec![];
    };
    let rs = build_root_system(tr);
    let snf = smith_normal_form(rs.cartan());
    let k = (0..n)
        .find(|&k| coweight_class_order(&snf.left, &snf.diagonal, k) == order)
        .expect("a fundamental coweight generates a cyclic center");
    vec![k]
}

fn coweight_class_order(left: &IntMatrix, diag: &[i64], k: usize) -> u64 {
    // class of ω∨_k in ⊕ Z/dᵢ is column k of the left transform, reduced
    let mut order = 1u64;
    for (i, &d) in diag.iter().enumerate() {
        if d > 1 {
            let r = left[i][k].rem_euclid(d);
            let o = (d / num_integer::gcd(r, d)) as u64;
            order = num_integer::lcm(order, o);
        }
    }
    order
}

/// How a factor sits between its simply connected cover and its adjoint form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IsogenyLabel {
    SimplyConnected,
    Adjoint,
    /// Quotient of the cover by the subgroup of its center generated by these
    /// residue tuples.
    Intermediate(Vec<Vec<u64>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    pub typerank: SimpleTypeRank,
    pub isogeny: IsogenyLabel,
}

impl Factor {
    pub fn new(typerank: SimpleTypeRank, isogeny: IsogenyLabel) -> Result<Self> {
        if let IsogenyLabel::Intermediate(gens) = &isogeny {
            let center = center_of_simply_connected(typerank);
            for g in gens {
                if !center.contains(g) {
                    return Err(Error::Validation(format!(
                        "subgroup generator {g:?} is not an element of the center {center} of {typerank}"
                    )));
                }
            }
        }
        Ok(Factor { typerank, isogeny })
    }

    pub fn simply_connected(typerank: SimpleTypeRank) -> Self {
        Factor {
            typerank,
            isogeny: IsogenyLabel::SimplyConnected,
        }
    }

    pub fn adjoint(typerank: SimpleTypeRank) -> Self {
        Factor {
            typerank,
            isogeny: IsogenyLabel::Adjoint,
        }
    }

    pub fn center(&self) -> FiniteAbelianGroup {
        center_of_simply_connected(self.typerank)
    }

    /// Generators of the isogeny kernel inside the center of the cover.
    fn kernel_generators(&self) -> Vec<Vec<u64>> {
        let center = self.center();
        match &self.isogeny {
            IsogenyLabel::SimplyConnected => vec![],
            IsogenyLabel::Adjoint => (0..center.factors().len())
                .map(|i| {
                    let mut e = center.identity();
                    e[i] = 1;
                    e
                })
                .collect(),
            IsogenyLabel::Intermediate(gens) => gens.clone(),
        }
    }

    /// Elements of the isogeny kernel, sorted.
    pub fn kernel_elements(&self) -> Vec<Vec<u64>> {
        self.center().span(&self.kernel_generators())
    }

    pub fn kernel(&self) -> FiniteAbelianGroup {
        self.center().subgroup(&self.kernel_generators())
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.isogeny {
            IsogenyLabel::SimplyConnected => write!(f, "{}(sc)", self.typerank),
            IsogenyLabel::Adjoint => write!(f, "{}(ad)", self.typerank),
            IsogenyLabel::Intermediate(g) => write!(f, "{}(/{g:?})", self.typerank),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductiveGroupDatum {
    factors: Vec<Factor>,
    central_torus_rank: usize,
}

impl ReductiveGroupDatum {
    pub fn new(factors: Vec<Factor>, central_torus_rank: usize) -> Self {
        ReductiveGroupDatum {
            factors,
            central_torus_rank,
        }
    }

    /// Single simply connected factor, no torus.
    pub fn simply_connected(tr: SimpleTypeRank) -> Self {
        Self::new(vec![Factor::simply_connected(tr)], 0)
    }

    pub fn adjoint(tr: SimpleTypeRank) -> Self {
        Self::new(vec![Factor::adjoint(tr)], 0)
    }

    pub fn torus(rank: usize) -> Self {
        Self::new(vec![], rank)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn central_torus_rank(&self) -> usize {
        self.central_torus_rank
    }

    pub fn is_semisimple(&self) -> bool {
        self.central_torus_rank == 0
    }

    pub fn is_simply_connected(&self) -> bool {
        self.factors
            .iter()
            .all(|f| f.isogeny == IsogenyLabel::SimplyConnected || f.center().is_trivial())
    }

    /// Same factors, no central torus.
    pub fn derived(&self) -> Self {
        Self::new(self.factors.clone(), 0)
    }

    /// Direct product.
    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self::new(factors, self.central_torus_rank + other.central_torus_rank)
    }

    /// Center of the simply connected cover of the derived subgroup, one
    /// group per factor.
    pub fn cover_centers(&self) -> Vec<FiniteAbelianGroup> {
        self.factors.iter().map(Factor::center).collect()
    }

    /// Whether `z` has one residue tuple per factor, each inside that
    /// factor's center.
    pub fn in_cover_center(&self, z: &CenterElement) -> bool {
        z.0.len() == self.factors.len()
            && z.0.iter().zip(&self.factors).all(|(r, f)| f.center().contains(r))
    }

    /// Whether `z` lies in the isogeny kernel `π₁(G₁)`.
    pub fn in_fundamental_group(&self, z: &CenterElement) -> bool {
        self.in_cover_center(z)
            && z.0
                .iter()
                .zip(&self.factors)
                .all(|(r, f)| f.kernel_elements().contains(r))
    }
}

impl fmt::Display for ReductiveGroupDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        if self.central_torus_rank > 0 || parts.is_empty() {
            parts.push(format!("T{}", self.central_torus_rank));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// `(dim G, dim Z_G)`.
pub fn dims(datum: &ReductiveGroupDatum) -> (i64, i64) {
    let semisimple: usize = datum
        .factors
        .iter()
        .map(|f| f.typerank.group_dimension())
        .sum();
    let z = datum.central_torus_rank as i64;
    (semisimple as i64 + z, z)
}

/// `π₁(G₁)`: kernel of the isogeny from the simply connected cover onto the
/// derived subgroup, as an abstract group.
pub fn fundamental_group_of_derived(datum: &ReductiveGroupDatum) -> FiniteAbelianGroup {
    let kernels: Vec<FiniteAbelianGroup> = datum.factors.iter().map(Factor::kernel).collect();
    FiniteAbelianGroup::product(&kernels)
}

/// A central element of the simply connected cover: one residue tuple per
/// factor in that factor's labeled center basis. The torus part is implicit
/// (always the identity).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CenterElement(pub Vec<Vec<u64>>);

impl CenterElement {
    pub fn identity(datum: &ReductiveGroupDatum) -> Self {
        CenterElement(datum.cover_centers().iter().map(FiniteAbelianGroup::identity).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().flatten().all(|&r| r == 0)
    }

    /// Whether the component for factor `i` is trivial.
    pub fn is_trivial_at(&self, i: usize) -> bool {
        self.0[i].iter().all(|&r| r == 0)
    }

    pub fn components(&self) -> &[Vec<u64>] {
        &self.0
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|r| {
                let inner: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Enumerate the elements of `π₁(G₁)` as center elements of the cover.
pub fn fundamental_group_elements(datum: &ReductiveGroupDatum) -> Vec<CenterElement> {
    elements_of_product(datum.factors.iter().map(Factor::kernel_elements).collect())
}

/// Enumerate the whole center of the simply connected cover.
pub fn cover_center_elements(datum: &ReductiveGroupDatum) -> Vec<CenterElement> {
    elements_of_product(datum.cover_centers().iter().map(FiniteAbelianGroup::elements).collect())
}

fn elements_of_product(per_factor: Vec<Vec<Vec<u64>>>) -> Vec<CenterElement> {
    let mut out: Vec<Vec<Vec<u64>>> = vec![vec![]];
    for elems in per_factor {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                elems.iter().map(move |e| {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<CenterElement> = out.into_iter().map(CenterElement).collect();
    out.sort();
    out
}

/// Parsing for the group-datum document:
///
/// ```json
/// {"factors": [{"family": "A", "rank": 1, "isogeny": "adjoint"}],
///  "central_torus_rank": 0,
///  "twist": [[1]]}
/// ```
///
/// `isogeny` is `"sc"`, `"adjoint"` or `{"subgroup": [[residues], …]}`;
/// `twist` is optional, one residue tuple per factor.
pub mod schema {
    use serde::{Deserialize, Serialize};

    use super::{CenterElement, Factor, IsogenyLabel, ReductiveGroupDatum};
    use crate::rootdata::{Family, SimpleTypeRank};
    use crate::{Error, Result};

    #[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct GroupDocument {
        pub factors: Vec<FactorDocument>,
        #[serde(default)]
        pub central_torus_rank: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pub twist: Option<Vec<Vec<u64>>>,
    }

    #[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct FactorDocument {
        pub family: String,
        pub rank: usize,
        #[serde(default = "default_isogeny")]
        pub isogeny: IsogenyDocument,
    }

    fn default_isogeny() -> IsogenyDocument {
        IsogenyDocument::Named("sc".into())
    }

    #[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
    #[serde(untagged)]
    pub enum IsogenyDocument {
        Named(String),
        Subgroup { subgroup: Vec<Vec<u64>> },
    }

    impl GroupDocument {
        pub fn to_datum(&self) -> Result<ReductiveGroupDatum> {
            let mut factors = Vec::new();
            for (i, f) in self.factors.iter().enumerate() {
                let field = |name: &str| format!("factors[{i}].{name}");
                let mut letters = f.family.chars();
                let family = match (letters.next().and_then(Family::from_letter), letters.next()) {
                    (Some(fam), None) => fam,
                    _ => {
                        return Err(Error::schema(
                            field("family"),
                            format!("expected one of A..G, got {:?}", f.family),
                        ))
                    }
                };
                let typerank = SimpleTypeRank::new(family, f.rank)
                    .map_err(|e| Error::schema(field("rank"), e.to_string()))?;
                let isogeny = match &f.isogeny {
                    IsogenyDocument::Named(s) => match s.as_str() {
                        "sc" | "simply_connected" => IsogenyLabel::SimplyConnected,
                        "adjoint" | "ad" => IsogenyLabel::Adjoint,
                        other => {
                            return Err(Error::schema(
                                field("isogeny"),
                                format!("expected \"sc\", \"adjoint\" or {{\"subgroup\": …}}, got {other:?}"),
                            ))
                        }
                    },
                    IsogenyDocument::Subgroup { subgroup } => {
                        IsogenyLabel::Intermediate(subgroup.clone())
                    }
                };
                let factor = Factor::new(typerank, isogeny)
                    .map_err(|e| Error::schema(field("isogeny"), e.to_string()))?;
                factors.push(factor);
            }
            Ok(ReductiveGroupDatum::new(factors, self.central_torus_rank))
        }

        /// The twist, if present, checked to lie in the cover's center.
        pub fn twist_element(&self, datum: &ReductiveGroupDatum) -> Result<Option<CenterElement>> {
            let Some(t) = &self.twist else {
                return Ok(None);
            };
            let z = CenterElement(t.clone());
            if !datum.in_cover_center(&z) {
                return Err(Error::schema(
                    "twist",
                    format!("{z} is not an element of the center of the simply connected cover"),
                ));
            }
            Ok(Some(z))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(s: &str) -> SimpleTypeRank {
        s.parse().unwrap()
    }

    #[test]
    fn centers() {
        assert_eq!(center_of_simply_connected(tr("A1")), FiniteAbelianGroup::cyclic(2));
        assert_eq!(center_of_simply_connected(tr("D4")).factors(), &[2, 2]);
        assert_eq!(center_of_simply_connected(tr("D5")).factors(), &[4]);
        assert!(center_of_simply_connected(tr("G2")).is_trivial());
        assert_eq!(center_of_simply_connected(tr("E6")).factors(), &[3]);
        assert_eq!(center_of_simply_connected(tr("A4")).factors(), &[5]);
    }

    #[test]
    fn labeled_bases() {
        assert_eq!(center_basis(tr("A3")), vec![0]);
        assert_eq!(center_basis(tr("D6")), vec![4, 5]);
        assert!(center_basis(tr("E8")).is_empty());
        for t in SimpleTypeRank::all_up_to(8) {
            assert_eq!(center_basis(t).len(), center_of_simply_connected(t).factors().len());
        }
    }

    #[test]
    fn dims_examples() {
        assert_eq!(dims(&ReductiveGroupDatum::simply_connected(tr("A1"))), (3, 0));
        let gl3 = ReductiveGroupDatum::new(vec![Factor::simply_connected(tr("A2"))], 1);
        assert_eq!(dims(&gl3), (9, 1));
        assert_eq!(dims(&ReductiveGroupDatum::simply_connected(tr("C2"))), (10, 0));
        let p = gl3.product(&ReductiveGroupDatum::simply_connected(tr("C2")));
        assert_eq!(dims(&p), (19, 1));
    }

    #[test]
    fn fundamental_groups() {
        assert!(fundamental_group_of_derived(&ReductiveGroupDatum::simply_connected(tr("A1"))).is_trivial());
        assert_eq!(
            fundamental_group_of_derived(&ReductiveGroupDatum::adjoint(tr("A1"))),
            FiniteAbelianGroup::cyclic(2)
        );
        assert_eq!(
            fundamental_group_of_derived(&ReductiveGroupDatum::adjoint(tr("A2"))),
            FiniteAbelianGroup::cyclic(3)
        );
        // SL4 / μ2
        let f = Factor::new(tr("A3"), IsogenyLabel::Intermediate(vec![vec![2]])).unwrap();
        assert_eq!(f.kernel(), FiniteAbelianGroup::cyclic(2));
        assert_eq!(f.kernel_elements(), vec![vec![0], vec![2]]);
        // SO8 inside the D4 center
        let f = Factor::new(tr("D4"), IsogenyLabel::Intermediate(vec![vec![1, 1]])).unwrap();
        assert_eq!(f.kernel(), FiniteAbelianGroup::cyclic(2));
        assert!(Factor::new(tr("A1"), IsogenyLabel::Intermediate(vec![vec![2]])).is_err());
        assert!(Factor::new(tr("A1"), IsogenyLabel::Intermediate(vec![vec![0, 1]])).is_err());
    }

    #[test]
    fn adjoint_kernel_is_center() {
        for t in SimpleTypeRank::all_up_to(8) {
            assert_eq!(
                fundamental_group_of_derived(&ReductiveGroupDatum::adjoint(t)),
                center_of_simply_connected(t),
                "{t}"
            );
        }
    }

    #[test]
    fn group_products() {
        let g = FiniteAbelianGroup::from_orders(&[2, 3]);
        assert_eq!(g.factors(), &[6]);
        let g = FiniteAbelianGroup::from_orders(&[2, 4, 1]);
        assert_eq!(g.factors(), &[2, 4]);
        assert_eq!(g.elements().len(), 8);
        assert_eq!(FiniteAbelianGroup::cyclic(4).subgroup(&[vec![2]]).factors(), &[2]);
        assert_eq!(FiniteAbelianGroup::cyclic(6).subgroup(&[vec![4]]).factors(), &[3]);
        let k = FiniteAbelianGroup::from_orders(&[2, 2]);
        assert_eq!(k.subgroup(&[vec![1, 0], vec![0, 1]]).factors(), &[2, 2]);
        assert_eq!(k.subgroup(&[vec![1, 1], vec![1, 1]]).factors(), &[2]);
    }

    #[test]
    fn components_of_pgl2() {
        let pgl2 = ReductiveGroupDatum::adjoint(tr("A1"));
        let elems = fundamental_group_elements(&pgl2);
        assert_eq!(elems, vec![CenterElement(vec![vec![0]]), CenterElement(vec![vec![1]])]);
        let sl2 = ReductiveGroupDatum::simply_connected(tr("A1"));
        assert_eq!(fundamental_group_elements(&sl2).len(), 1);
        assert_eq!(cover_center_elements(&sl2).len(), 2);
    }

    #[test]
    fn schema_round_trip_and_errors() {
        let doc: schema::GroupDocument = serde_json::from_str(
            r#"{"factors":[{"family":"A","rank":3,"isogeny":{"subgroup":[[2]]}},
                           {"family":"C","rank":2,"isogeny":"sc"}],
                "central_torus_rank":1, "twist":[[2],[1]]}"#,
        )
        .unwrap();
        let d = doc.to_datum().unwrap();
        assert_eq!(dims(&d), (15 + 10 + 1, 1));
        let z = doc.twist_element(&d).unwrap().unwrap();
        assert!(d.in_cover_center(&z));
        assert!(!d.in_fundamental_group(&z));

        let bad: schema::GroupDocument =
            serde_json::from_str(r#"{"factors":[{"family":"D","rank":3}]}"#).unwrap();
        match bad.to_datum() {
            Err(Error::Schema { field, .. }) => assert_eq!(field, "factors[0].rank"),
            other => panic!("unexpected {other:?}"),
        }
        let bad: schema::GroupDocument =
            serde_json::from_str(r#"{"factors":[{"family":"A","rank":1,"isogeny":"weird"}]}"#).unwrap();
        assert!(matches!(bad.to_datum(), Err(Error::Schema { .. })));
        let bad: schema::GroupDocument =
            serde_json::from_str(r#"{"factors":[{"family":"A","rank":1}],"twist":[[5]]}"#).unwrap();
        let d = bad.to_datum().unwrap();
        assert!(bad.twist_element(&d).is_err());
    }
}
