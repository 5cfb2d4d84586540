//! Dimensions of representation and character varieties, and lower bounds
//! on the codimension of loci of reducible representations.
//!
//! Every bound in this module is a lower bound, and reports label it so.

use std::fmt;

use serde::Serialize;

use crate::groupdatum::{dims, ReductiveGroupDatum};
use crate::parabolics::{enumerate_maximal_parabolics, levi_datum, LeviDatum};
use crate::rootdata::{Family, RootSystem, SimpleTypeRank};
use crate::{Error, Execution, Result};

/// Genus of the surface, at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::Validation(format!("genus must be at least 2, got {g}")));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn i(self) -> i64 {
        i64::from(self.0)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `(2g−1)·dim G + dim Z_G`.
pub fn dim_rep(datum: &ReductiveGroupDatum, g: Genus) -> i64 {
    let (dg, dz) = dims(datum);
    (2 * g.i() - 1) * dg + dz
}

/// `(2g−2)·dim G + 2·dim Z_G`.
pub fn dim_ch(datum: &ReductiveGroupDatum, g: Genus) -> i64 {
    let (dg, dz) = dims(datum);
    (2 * g.i() - 2) * dg + 2 * dz
}

fn proper_levi(rs: &RootSystem, levi_nodes: &[usize]) -> Result<LeviDatum> {
    let levi = levi_datum(rs, levi_nodes)?;
    if !levi.parabolic.is_proper() {
        return Err(Error::Validation(
            "the bound needs a proper parabolic; all nodes were kept".into(),
        ));
    }
    Ok(levi)
}

/// `(2g−3)·dim U − dim Z_L`, a lower bound for the codimension of the
/// representations landing in a conjugate of `P_I`.
pub fn codim_reducible_bound(rs: &RootSystem, g: Genus, levi_nodes: &[usize]) -> Result<i64> {
    let levi = proper_levi(rs, levi_nodes)?;
    Ok(bound(g, &levi))
}

fn bound(g: Genus, levi: &LeviDatum) -> i64 {
    (2 * g.i() - 3) * levi.dim_u - levi.dim_zl
}

/// `2(2g−2)·dim U − 2·dim Z_L`: lower bound for the codimension of the image
/// of `Ch_z(Π, L)` in `Ch_z(Π, G)` (the difference of the two character
/// variety dimensions). Genus 2 in rank 1 is excluded.
pub fn levi_image_codim_in_ch(rs: &RootSystem, g: Genus, levi_nodes: &[usize]) -> Result<i64> {
    if g.get() == 2 && rs.rank() == 1 {
        return Err(Error::ExcludedCase(
            "genus 2 with a rank-one group is not covered by the Levi-image bound".into(),
        ));
    }
    let levi = proper_levi(rs, levi_nodes)?;
    Ok(2 * (2 * g.i() - 2) * levi.dim_u - 2 * levi.dim_zl)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CodimTag {
    /// Every maximal class has codimension at least 4.
    Ge4,
    /// Genus 2 and type `A₂, A₃, A₄` or `C₂`: codimension at least 2.
    Ge2Exception,
    /// Type `A₁`, where the bound is vacuous.
    Rank1,
}

impl fmt::Display for CodimTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodimTag::Ge4 => "ge4",
            CodimTag::Ge2Exception => "ge2_exception",
            CodimTag::Rank1 => "rank1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicBound {
    pub removed_node: usize,
    pub levi_type: Vec<SimpleTypeRank>,
    pub dim_u: i64,
    pub dim_zl: i64,
    pub lower_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub typerank: SimpleTypeRank,
    pub genus: Genus,
    pub parabolics: Vec<ParabolicBound>,
    pub min_lower_bound: i64,
    pub tag: CodimTag,
    /// Facts that complement the formula where it is too weak.
    pub notes: Vec<String>,
}

/// The four genus-2 exceptions, up to `B₂ = C₂`.
pub fn is_genus_two_exception(tr: SimpleTypeRank) -> bool {
    let tr = tr.canonical();
    matches!(
        (tr.family(), tr.rank()),
        (Family::A, 2..=4) | (Family::C, 2)
    )
}

const NOTE_RANK1: &str =
    "rank one: the formula bound is vacuous; the reducible locus of GL2 is known to have codimension at least 1";
const NOTE_A2: &str =
    "A2: the formula gives 1; the reducible locus of GL3 at z = 1 is known to have codimension at least 2, and z != 1 admits no reducible representations";

/// Evaluate the bound over all maximal parabolics and classify the minimum.
pub fn reducible_locus_report(rs: &RootSystem, g: Genus) -> Result<CodimReport> {
    let parabolics: Vec<ParabolicBound> = enumerate_maximal_parabolics(rs)
        .into_iter()
        .map(|levi| ParabolicBound {
            removed_node: levi.parabolic.removed_nodes()[0],
            lower_bound: bound(g, &levi),
            levi_type: levi.levi_type,
            dim_u: levi.dim_u,
            dim_zl: levi.dim_zl,
        })
        .collect();
    let min_lower_bound = parabolics
        .iter()
        .map(|p| p.lower_bound)
        .min()
        .expect("at least one maximal parabolic");
    let tr = rs.typerank();
    let mut notes = Vec::new();
    let tag = if rs.rank() == 1 {
        notes.push(NOTE_RANK1.to_string());
        CodimTag::Rank1
    } else if min_lower_bound >= 4 {
        CodimTag::Ge4
    } else if g.get() == 2 && is_genus_two_exception(tr) {
        if tr.canonical().family() == Family::A && tr.rank() == 2 {
            notes.push(NOTE_A2.to_string());
        } else if min_lower_bound < 2 {
            return Err(Error::InvariantViolation(format!(
                "{tr} at genus 2: bound {min_lower_bound} below 2"
            )));
        }
        CodimTag::Ge2Exception
    } else {
        return Err(Error::InvariantViolation(format!(
            "{tr} at genus {g}: minimum bound {min_lower_bound} below 4 outside the known exceptions"
        )));
    };
    Ok(CodimReport {
        typerank: tr,
        genus: g,
        parabolics,
        min_lower_bound,
        tag,
        notes,
    })
}

/// [`reducible_locus_report`] for many `(type, genus)` pairs.
pub fn reducible_locus_survey(
    cases: &[(SimpleTypeRank, Genus)],
    exec: Execution,
) -> Vec<Result<CodimReport>> {
    exec.map(cases, |&(tr, g)| {
        reducible_locus_report(&crate::rootdata::build_root_system(tr), g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupdatum::{Factor, ReductiveGroupDatum};
    use crate::rootdata::build_root_system;

    fn tr(s: &str) -> SimpleTypeRank {
        s.parse().unwrap()
    }

    fn g(v: u32) -> Genus {
        Genus::new(v).unwrap()
    }

    #[test]
    fn genus_validation() {
        assert!(Genus::new(1).is_err());
        assert!(Genus::new(0).is_err());
        assert_eq!(g(2).get(), 2);
    }

    #[test]
    fn variety_dimensions() {
        let sl2 = ReductiveGroupDatum::simply_connected(tr("A1"));
        assert_eq!(dim_rep(&sl2, g(2)), 9);
        assert_eq!(dim_ch(&sl2, g(2)), 6);
        let gl3 = ReductiveGroupDatum::new(vec![Factor::simply_connected(tr("A2"))], 1);
        assert_eq!(dim_rep(&gl3, g(2)), 28);
        let sp4 = ReductiveGroupDatum::simply_connected(tr("C2"));
        assert_eq!(dim_ch(&sp4, g(2)), 20);
        for r in 1..5 {
            let t = ReductiveGroupDatum::torus(r);
            assert_eq!(dim_rep(&t, g(2)), 4 * r as i64);
            for genus in 2..6 {
                assert_eq!(dim_ch(&t, g(genus)), 2 * genus as i64 * r as i64);
            }
        }
    }

    #[test]
    fn codim_bounds() {
        let c2 = build_root_system(tr("C2"));
        assert_eq!(codim_reducible_bound(&c2, g(2), &[1]).unwrap(), 2);
        let a2 = build_root_system(tr("A2"));
        assert_eq!(codim_reducible_bound(&a2, g(2), &[0]).unwrap(), 1);
        let g2 = build_root_system(tr("G2"));
        assert_eq!(codim_reducible_bound(&g2, g(3), &[]).unwrap(), 16);
        assert!(codim_reducible_bound(&g2, g(3), &[0, 1]).is_err());
    }

    #[test]
    fn levi_image_bounds() {
        let c2 = build_root_system(tr("C2"));
        assert_eq!(levi_image_codim_in_ch(&c2, g(2), &[0]).unwrap(), 10);
        let a2 = build_root_system(tr("A2"));
        assert_eq!(levi_image_codim_in_ch(&a2, g(2), &[1]).unwrap(), 6);
        let g2 = build_root_system(tr("G2"));
        for node in 0..2 {
            assert_eq!(levi_image_codim_in_ch(&g2, g(2), &[node]).unwrap(), 18);
        }
        let a1 = build_root_system(tr("A1"));
        assert!(matches!(
            levi_image_codim_in_ch(&a1, g(2), &[]),
            Err(Error::ExcludedCase(_))
        ));
        assert!(levi_image_codim_in_ch(&a1, g(3), &[]).is_ok());
    }

    #[test]
    fn reports() {
        let f4 = reducible_locus_report(&build_root_system(tr("F4")), g(2)).unwrap();
        assert_eq!(f4.parabolics.iter().map(|p| p.dim_u).min(), Some(15));
        assert_eq!((f4.min_lower_bound, f4.tag), (14, CodimTag::Ge4));
        let a4 = reducible_locus_report(&build_root_system(tr("A4")), g(2)).unwrap();
        assert_eq!((a4.min_lower_bound, a4.tag), (3, CodimTag::Ge2Exception));
        let a2 = reducible_locus_report(&build_root_system(tr("A2")), g(2)).unwrap();
        assert_eq!((a2.min_lower_bound, a2.tag), (1, CodimTag::Ge2Exception));
        assert_eq!(a2.notes.len(), 1);
        let a1 = reducible_locus_report(&build_root_system(tr("A1")), g(2)).unwrap();
        assert_eq!(a1.tag, CodimTag::Rank1);
        let b2 = reducible_locus_report(&build_root_system(tr("B2")), g(2)).unwrap();
        assert_eq!((b2.min_lower_bound, b2.tag), (2, CodimTag::Ge2Exception));
    }
}
