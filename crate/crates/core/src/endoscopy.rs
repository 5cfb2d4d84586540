//! Pseudo-Levi subgroups and elliptic endoscopic strata.
//!
//! Pseudo-Levi subgroups (identity components of centralizers of semisimple
//! elements) containing a fixed maximal torus are described by root
//! subsystems. They are generated here by iterating one step: pick a simple
//! component of the current subsystem, attach its lowest root to get the
//! extended diagram, and delete a nonempty set of nodes. The iteration runs
//! until no new subsystem appears.
//!
//! Subsystems are tracked together with the ambient length of each
//! component's long roots, so that long-root and short-root copies of the
//! same abstract type in non-simply-laced groups stay distinct while
//! iterating. Results are reported per abstract type, listing every length
//! variant that occurs.
//!
//! Component groups of disconnected centralizers and the homomorphisms from
//! the surface group to them are not enumerated: the stratum bound
//! `(2g−2)·dim H` does not depend on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::dimensions::Genus;
use crate::rootdata::{
    build_root_system, classify_cartan, extended_diagram, format_type, RootSystem, SimpleTypeRank,
};
use crate::Execution;

/// Ambient length class of a component's long roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootLength {
    Long,
    Short,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubsystemComponent {
    pub typerank: SimpleTypeRank,
    /// Whether this component's long roots are long in the ambient system.
    pub length: RootLength,
}

impl fmt::Display for SubsystemComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.length {
            RootLength::Long => write!(f, "{}", self.typerank),
            RootLength::Short => write!(f, "{}~", self.typerank),
        }
    }
}

/// A subsystem as a sorted multiset of components.
pub type Subsystem = Vec<SubsystemComponent>;

fn abstract_type(s: &[SubsystemComponent]) -> Vec<SimpleTypeRank> {
    let mut t: Vec<SimpleTypeRank> = s.iter().map(|c| c.typerank).collect();
    t.sort();
    t
}

/// One extend-and-delete step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalStep {
    pub component: SubsystemComponent,
    /// Deleted nodes of the component's extended diagram; the lowest root is
    /// node `rank`.
    pub removed_nodes: Vec<usize>,
    pub result: Subsystem,
}

impl fmt::Display for RemovalStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.removed_nodes.iter().map(ToString::to_string).collect();
        let result: Vec<String> = self.result.iter().map(ToString::to_string).collect();
        let result = if result.is_empty() {
            "T".to_string()
        } else {
            result.join("x")
        };
        write!(f, "{}: delete {{{}}} -> {}", self.component, nodes.join(","), result)
    }
}

impl Serialize for RemovalStep {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoLevi {
    #[serde(serialize_with = "serialize_type")]
    pub subsystem_type: Vec<SimpleTypeRank>,
    pub subsystem_positive_roots: usize,
    pub dim_h: i64,
    pub proper: bool,
    pub is_torus: bool,
    /// Every ambient length pattern realizing this abstract type.
    pub embeddings: Vec<Subsystem>,
    /// A derivation of the first embedding from the whole root system.
    pub provenance: Vec<RemovalStep>,
}

fn serialize_type<S: Serializer>(t: &[SimpleTypeRank], s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_type(t))
}

impl PseudoLevi {
    pub fn type_name(&self) -> String {
        format_type(&self.subsystem_type)
    }

    /// Positive-dimensional in the sense of having roots; the maximal torus
    /// is excluded from endoscopic minima.
    pub fn has_roots(&self) -> bool {
        !self.is_torus
    }
}

#[derive(Debug, Clone)]
struct Child {
    removed: Vec<usize>,
    /// Components with a flag: are their long roots long in the parent?
    parts: Vec<(SimpleTypeRank, bool)>,
}

/// All distinct results of deleting a nonempty node set from the extended
/// diagram of `tr`. Smaller deletions come first so witnesses stay short.
fn component_children(tr: SimpleTypeRank) -> Vec<Child> {
    let rs = build_root_system(tr);
    let ext = extended_diagram(&rs);
    let m = ext.nodes().len();
    let long: Vec<bool> = ext.nodes().iter().map(|r| rs.is_long(r.coords())).collect();
    let mut masks: Vec<u32> = (1..(1u32 << m)).collect();
    masks.sort_by_key(|&mask| (mask.count_ones(), mask));
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in masks {
        let keep: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) == 0).collect();
        let removed: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
        let comps = classify_cartan(&ext.sub_cartan(&keep))
            .expect("proper subdiagrams of an affine diagram are of finite type");
        let mut parts: Vec<(SimpleTypeRank, bool)> = comps
            .iter()
            .map(|c| (c.typerank, c.nodes.iter().any(|&i| long[keep[i]])))
            .collect();
        parts.sort();
        if seen.insert(parts.clone()) {
            out.push(Child { removed, parts });
        }
    }
    out
}

type ChildCache = BTreeMap<SimpleTypeRank, Vec<Child>>;

fn expand(state: &[SubsystemComponent], cache: &ChildCache) -> Vec<(Subsystem, RemovalStep)> {
    let distinct: BTreeSet<SubsystemComponent> = state.iter().copied().collect();
    let mut out = Vec::new();
    for comp in distinct {
        let idx = state.iter().position(|c| *c == comp).expect("present");
        for child in &cache[&comp.typerank] {
            let result: Subsystem = child
                .parts
                .iter()
                .map(|&(typerank, long_in_parent)| SubsystemComponent {
                    typerank,
                    length: if long_in_parent {
                        comp.length
                    } else {
                        RootLength::Short
                    },
                })
                .collect();
            let mut next: Subsystem = state.to_vec();
            next.remove(idx);
            next.extend(result.iter().copied());
            next.sort();
            out.push((
                next,
                RemovalStep {
                    component: comp,
                    removed_nodes: child.removed.clone(),
                    result,
                },
            ));
        }
    }
    out
}

/// All subsystems reachable from the full root system, with a witness
/// derivation for each. Deterministic for either execution mode.
pub fn enumerate_subsystems(rs: &RootSystem, exec: Execution) -> BTreeMap<Subsystem, Vec<RemovalStep>> {
    let start = vec![SubsystemComponent {
        typerank: rs.typerank().canonical(),
        length: RootLength::Long,
    }];
    let mut found: BTreeMap<Subsystem, Vec<RemovalStep>> = BTreeMap::new();
    found.insert(start.clone(), vec![]);
    let mut cache = ChildCache::new();
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let missing: Vec<SimpleTypeRank> = frontier
            .iter()
            .flatten()
            .map(|c| c.typerank)
            .filter(|t| !cache.contains_key(t))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let computed = exec.map(&missing, |&t| component_children(t));
        cache.extend(missing.into_iter().zip(computed));

        let expanded = exec.map(&frontier, |s| expand(s, &cache));
        let mut next = Vec::new();
        for (parent, children) in frontier.iter().zip(expanded) {
            for (sub, step) in children {
                if !found.contains_key(&sub) {
                    let mut prov = found[parent].clone();
                    prov.push(step);
                    found.insert(sub.clone(), prov);
                    next.push(sub);
                }
            }
        }
        frontier = next;
    }
    found
}

/// Pseudo-Levi subgroups of the simply connected group of type `rs`, one per
/// abstract subsystem type, ordered by decreasing dimension. The whole group
/// (not proper) and the maximal torus are included and flagged.
pub fn enumerate_pseudo_levis(rs: &RootSystem) -> Vec<PseudoLevi> {
    enumerate_pseudo_levis_with(rs, Execution::default())
}

pub fn enumerate_pseudo_levis_with(rs: &RootSystem, exec: Execution) -> Vec<PseudoLevi> {
    let whole = vec![rs.typerank().canonical()];
    let mut by_type: BTreeMap<Vec<SimpleTypeRank>, PseudoLevi> = BTreeMap::new();
    for (sub, prov) in enumerate_subsystems(rs, exec) {
        let t = abstract_type(&sub);
        if let Some(pl) = by_type.get_mut(&t) {
            pl.embeddings.push(sub);
            continue;
        }
        let pos: usize = t.iter().map(|c| c.positive_root_count()).sum();
        let pl = PseudoLevi {
            proper: t != whole,
            is_torus: t.is_empty(),
            subsystem_positive_roots: pos,
            dim_h: (rs.rank() + 2 * pos) as i64,
            embeddings: vec![sub],
            provenance: prov,
            subsystem_type: t.clone(),
        };
        by_type.insert(t, pl);
    }
    let mut out: Vec<PseudoLevi> = by_type.into_values().collect();
    out.sort_by(|a, b| {
        b.dim_h
            .cmp(&a.dim_h)
            .then_with(|| a.subsystem_type.cmp(&b.subsystem_type))
    });
    out
}

/// Abstract types reachable in one step from the given list; used to check
/// that an enumeration is closed.
pub fn one_step_types(pls: &[PseudoLevi]) -> BTreeSet<Vec<SimpleTypeRank>> {
    let mut cache = ChildCache::new();
    let mut out = BTreeSet::new();
    for pl in pls {
        for emb in &pl.embeddings {
            for c in emb {
                cache
                    .entry(c.typerank)
                    .or_insert_with(|| component_children(c.typerank));
            }
            for (sub, _) in expand(emb, &cache) {
                out.insert(abstract_type(&sub));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub pseudo_levi: String,
    pub dim_h: i64,
    /// `(2g−2)·dim H`, an upper bound for the stratum dimension.
    pub dim_stratum_upper: i64,
    /// `(2g−2)·(dim G − dim H)`, a lower bound for its codimension.
    pub codim_lower: i64,
    /// The bounds hold for each endoscopic datum `(s, ω)` with this
    /// identity component, independent of `ω`.
    pub scope: &'static str,
}

pub fn stratum_report(rs: &RootSystem, g: Genus, pl: &PseudoLevi) -> StratumReport {
    let k = 2 * i64::from(g.get()) - 2;
    let dim_g = rs.group_dimension() as i64;
    StratumReport {
        pseudo_levi: pl.type_name(),
        dim_h: pl.dim_h,
        dim_stratum_upper: k * pl.dim_h,
        codim_lower: k * (dim_g - pl.dim_h),
        scope: "per (s, omega)",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndoscopicMinimum {
    NoStrata,
    Codim(i64),
}

impl EndoscopicMinimum {
    pub fn value(self) -> Option<i64> {
        match self {
            EndoscopicMinimum::NoStrata => None,
            EndoscopicMinimum::Codim(c) => Some(c),
        }
    }
}

impl fmt::Display for EndoscopicMinimum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndoscopicMinimum::NoStrata => f.write_str("no strata"),
            EndoscopicMinimum::Codim(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for EndoscopicMinimum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            EndoscopicMinimum::NoStrata => s.serialize_str("no_strata"),
            EndoscopicMinimum::Codim(c) => s.serialize_i64(*c),
        }
    }
}

fn minimum_over(rs: &RootSystem, g: Genus, pls: &[PseudoLevi]) -> EndoscopicMinimum {
    pls.iter()
        .filter(|pl| pl.proper && pl.has_roots())
        .map(|pl| stratum_report(rs, g, pl).codim_lower)
        .min()
        .map_or(EndoscopicMinimum::NoStrata, EndoscopicMinimum::Codim)
}

/// Minimum codimension bound over proper pseudo-Levis that have roots.
pub fn min_endoscopic_codim(rs: &RootSystem, g: Genus) -> EndoscopicMinimum {
    minimum_over(rs, g, &enumerate_pseudo_levis(rs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndoscopyReport {
    pub typerank: SimpleTypeRank,
    pub genus: Genus,
    pub pseudo_levis: Vec<PseudoLevi>,
    pub strata: Vec<StratumReport>,
    pub min_endoscopic_codim: EndoscopicMinimum,
}

/// Pseudo-Levis, the strata of the proper ones with roots, and the minimum.
pub fn endoscopy_report(rs: &RootSystem, g: Genus, exec: Execution) -> EndoscopyReport {
    let pseudo_levis = enumerate_pseudo_levis_with(rs, exec);
    let strata = pseudo_levis
        .iter()
        .filter(|pl| pl.proper && pl.has_roots())
        .map(|pl| stratum_report(rs, g, pl))
        .collect();
    EndoscopyReport {
        typerank: rs.typerank(),
        genus: g,
        min_endoscopic_codim: minimum_over(rs, g, &pseudo_levis),
        strata,
        pseudo_levis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        build_root_system(s.parse().unwrap())
    }

    fn g(v: u32) -> Genus {
        Genus::new(v).unwrap()
    }

    fn names(pls: &[PseudoLevi]) -> Vec<String> {
        pls.iter().map(PseudoLevi::type_name).collect()
    }

    #[test]
    fn a1_has_only_the_torus() {
        let pls = enumerate_pseudo_levis(&rs("A1"));
        assert_eq!(names(&pls), vec!["A1", "T"]);
        assert!(!pls[0].proper);
        assert!(pls[1].is_torus);
        assert_eq!(min_endoscopic_codim(&rs("A1"), g(2)), EndoscopicMinimum::NoStrata);
    }

    #[test]
    fn c2_pseudo_levis() {
        let c2 = rs("C2");
        let pls = enumerate_pseudo_levis(&c2);
        assert_eq!(names(&pls), vec!["C2", "A1xA1", "A1", "T"]);
        let a1a1 = &pls[1];
        assert_eq!(a1a1.dim_h, 6);
        assert_eq!(a1a1.embeddings.len(), 1);
        assert!(a1a1.embeddings[0].iter().all(|c| c.length == RootLength::Long));
        // rank-one subsystems come in both lengths
        assert_eq!(pls[2].embeddings.len(), 2);
        let s = stratum_report(&c2, g(2), a1a1);
        assert_eq!((s.dim_stratum_upper, s.codim_lower), (12, 8));
        assert_eq!(min_endoscopic_codim(&c2, g(2)), EndoscopicMinimum::Codim(8));
        let whole = stratum_report(&c2, g(5), &pls[0]);
        assert_eq!(whole.codim_lower, 0);
    }

    #[test]
    fn g2_pseudo_levis() {
        let g2 = rs("G2");
        let pls = enumerate_pseudo_levis(&g2);
        let n = names(&pls);
        assert!(n.contains(&"A1xA1".to_string()));
        assert!(n.contains(&"A2".to_string()));
        let a2 = pls.iter().find(|p| p.type_name() == "A2").unwrap();
        assert_eq!(a2.dim_h, 8);
        assert_eq!(stratum_report(&g2, g(3), a2).codim_lower, 24);
        let a1a1 = pls.iter().find(|p| p.type_name() == "A1xA1").unwrap();
        assert_eq!(a1a1.dim_h, 6);
    }

    #[test]
    fn provenance_reaches_each_type() {
        let pls = enumerate_pseudo_levis(&rs("B3"));
        for pl in &pls {
            let last = pl.provenance.last();
            match last {
                None => assert!(!pl.proper),
                Some(_) => {
                    let mut sub = vec![SubsystemComponent {
                        typerank: "B3".parse().unwrap(),
                        length: RootLength::Long,
                    }];
                    for step in &pl.provenance {
                        let i = sub.iter().position(|c| *c == step.component).unwrap();
                        sub.remove(i);
                        sub.extend(step.result.iter().copied());
                        sub.sort();
                    }
                    assert_eq!(sub, pl.embeddings[0]);
                }
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let e7 = rs("E7");
        let a = enumerate_pseudo_levis_with(&e7, Execution::Sequential);
        let b = enumerate_pseudo_levis_with(&e7, Execution::Parallel);
        assert_eq!(a, b);
    }
}
