//! Singularity verdicts for the connected components of character varieties
//! of surface groups, and the full analysis report.
//!
//! Components are labeled by central elements `z` of the simply connected
//! cover of the derived subgroup, one residue tuple per factor. For a
//! simply connected datum every central `z` gives a (twisted) variety; for
//! other data the components correspond to the elements of `π₁(G₁)`.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::dimensions::{dim_ch, dim_rep, reducible_locus_report, CodimReport, Genus};
use crate::endoscopy::{endoscopy_report, EndoscopicMinimum, StratumReport};
use crate::groupdatum::{
    cover_center_elements, dims, fundamental_group_elements, fundamental_group_of_derived,
    CenterElement, ReductiveGroupDatum,
};
use crate::rootdata::{build_root_system, Family, SimpleTypeRank};
use crate::{Error, Execution, Result};

/// Machine-readable pointer to the result a verdict relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub tag: &'static str,
    pub statement: &'static str,
}

const NORMAL: Citation = Citation {
    tag: "normality",
    statement: "character varieties of surface groups of genus at least 2 are normal for every reductive group",
};
const SYMPLECTIC: Citation = Citation {
    tag: "symplectic_singularities",
    statement: "every connected component has symplectic singularities",
};
const TERMINAL: Citation = Citation {
    tag: "terminality_criterion",
    statement: "terminal iff g > 2, or g = 2 and z_i is nontrivial on every A1 factor of the cover",
};
const Q_FACTORIAL: Citation = Citation {
    tag: "identity_component_q_factorial",
    statement: "the identity component is Q-factorial; other components are not settled",
};
const LOCALLY_FACTORIAL: Citation = Citation {
    tag: "rep_variety_locally_factorial",
    statement: "the representation variety is locally factorial except the identity component at (g, rank) = (2, 1)",
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CitedFlag {
    pub value: bool,
    pub citation: Citation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalVerdict {
    pub value: bool,
    pub reason: String,
    pub citation: Citation,
}

/// Q-factoriality is only known for the identity component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QFactorial {
    True,
    Unknown,
}

impl Serialize for QFactorial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            QFactorial::True => "true",
            QFactorial::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QFactorialVerdict {
    pub value: QFactorial,
    pub citation: Citation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepVarietyProperties {
    pub factor: SimpleTypeRank,
    pub component: Vec<u64>,
    pub normal: bool,
    pub locally_factorial: bool,
    pub note: Option<String>,
    pub citation: Citation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEndoscopy {
    pub factor: SimpleTypeRank,
    pub min_endoscopic_codim: EndoscopicMinimum,
    pub strata: Vec<StratumReport>,
}

/// Data from the dimension and endoscopy modules behind a verdict; it does
/// not depend on the component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Supporting {
    pub reducible_locus: Vec<CodimReport>,
    pub endoscopy: Vec<FactorEndoscopy>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub component: CenterElement,
    pub genus: Genus,
    pub normal: CitedFlag,
    pub symplectic: CitedFlag,
    pub terminal: TerminalVerdict,
    pub q_factorial: QFactorialVerdict,
    /// Recorded per almost-simple factor of the cover.
    pub locally_factorial_rep: Vec<RepVarietyProperties>,
}

fn is_a1(tr: SimpleTypeRank) -> bool {
    tr.family() == Family::A && tr.rank() == 1
}

/// Component labels: elements of `π₁(G₁)`.
pub fn connected_components(datum: &ReductiveGroupDatum) -> Vec<CenterElement> {
    fundamental_group_elements(datum)
}

/// Labels analyzed by "all components": the whole center of the cover for a
/// simply connected datum (twisted varieties), `π₁(G₁)` otherwise.
pub fn admissible_twists(datum: &ReductiveGroupDatum) -> Vec<CenterElement> {
    if datum.is_simply_connected() {
        cover_center_elements(datum)
    } else {
        connected_components(datum)
    }
}

fn check_twist(datum: &ReductiveGroupDatum, z: &CenterElement) -> Result<()> {
    if !datum.in_cover_center(z) {
        return Err(Error::Validation(format!(
            "twist {z} does not have one central residue tuple per factor of {datum}"
        )));
    }
    if !datum.is_simply_connected() && !datum.in_fundamental_group(z) {
        return Err(Error::TwistNotInKernel(format!(
            "{z} of {datum} (fundamental group {})",
            fundamental_group_of_derived(datum)
        )));
    }
    Ok(())
}

fn factor_properties(tr: SimpleTypeRank, residues: &[u64], g: Genus) -> RepVarietyProperties {
    let identity = residues.iter().all(|&r| r == 0);
    let exception = identity && g.get() == 2 && tr.rank() == 1;
    RepVarietyProperties {
        factor: tr,
        component: residues.to_vec(),
        normal: true,
        locally_factorial: !exception,
        note: exception.then(|| {
            "identity component at genus 2 in rank 1 is not locally factorial".to_string()
        }),
        citation: LOCALLY_FACTORIAL,
    }
}

/// Normality and local factoriality of `Rep_z` for a single almost-simple
/// factor without central torus.
pub fn rep_variety_properties(
    datum: &ReductiveGroupDatum,
    g: Genus,
    z: &CenterElement,
) -> Result<RepVarietyProperties> {
    if datum.factors().len() != 1 || !datum.is_semisimple() {
        return Err(Error::Unsupported(
            "representation-variety properties are recorded for a single almost-simple factor only"
                .into(),
        ));
    }
    if !datum.in_cover_center(z) {
        return Err(Error::Validation(format!(
            "twist {z} is not central in the cover of {datum}"
        )));
    }
    Ok(factor_properties(datum.factors()[0].typerank, &z.0[0], g))
}

fn terminal_verdict(datum: &ReductiveGroupDatum, g: Genus, z: &CenterElement) -> TerminalVerdict {
    let (value, reason) = if g.get() > 2 {
        (true, format!("genus {g} > 2"))
    } else {
        let untwisted_a1: Vec<String> = datum
            .factors()
            .iter()
            .enumerate()
            .filter(|(i, f)| is_a1(f.typerank) && z.is_trivial_at(*i))
            .map(|(i, _)| format!("factor {i}"))
            .collect();
        if datum.factors().iter().all(|f| !is_a1(f.typerank)) {
            (true, "genus 2 and no A1 factor".to_string())
        } else if untwisted_a1.is_empty() {
            (true, "genus 2 and the twist is nontrivial on every A1 factor".to_string())
        } else {
            (
                false,
                format!(
                    "genus 2 and the twist is trivial on the A1 {}",
                    untwisted_a1.join(", ")
                ),
            )
        }
    };
    TerminalVerdict {
        value,
        reason,
        citation: TERMINAL,
    }
}

fn verdict(datum: &ReductiveGroupDatum, g: Genus, z: &CenterElement) -> ComponentVerdict {
    ComponentVerdict {
        component: z.clone(),
        genus: g,
        normal: CitedFlag {
            value: true,
            citation: NORMAL,
        },
        symplectic: CitedFlag {
            value: true,
            citation: SYMPLECTIC,
        },
        terminal: terminal_verdict(datum, g, z),
        q_factorial: QFactorialVerdict {
            value: if z.is_identity() {
                QFactorial::True
            } else {
                QFactorial::Unknown
            },
            citation: Q_FACTORIAL,
        },
        locally_factorial_rep: datum
            .factors()
            .iter()
            .zip(z.components())
            .map(|(f, r)| factor_properties(f.typerank, r, g))
            .collect(),
    }
}

/// Verdict for the component labeled `z`.
pub fn classify_component(
    datum: &ReductiveGroupDatum,
    g: Genus,
    z: &CenterElement,
) -> Result<ComponentVerdict> {
    check_twist(datum, z)?;
    Ok(verdict(datum, g, z))
}

/// Reducible-locus and endoscopy data for each distinct factor type.
pub fn supporting_reports(
    datum: &ReductiveGroupDatum,
    g: Genus,
    exec: Execution,
) -> Result<Supporting> {
    let types: Vec<SimpleTypeRank> = datum
        .factors()
        .iter()
        .map(|f| f.typerank.canonical())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let per_type = exec.map(&types, |&tr| {
        let rs = build_root_system(tr);
        let reducible = reducible_locus_report(&rs, g)?;
        let endo = endoscopy_report(&rs, g, Execution::Sequential);
        Ok::<_, Error>((
            reducible,
            FactorEndoscopy {
                factor: tr,
                min_endoscopic_codim: endo.min_endoscopic_codim,
                strata: endo.strata,
            },
        ))
    });
    let mut out = Supporting {
        reducible_locus: vec![],
        endoscopy: vec![],
    };
    for r in per_type {
        let (reducible, endo) = r?;
        out.reducible_locus.push(reducible);
        out.endoscopy.push(endo);
    }
    Ok(out)
}

/// Which components to analyze.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistSelection {
    All,
    One(CenterElement),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub datum: ReductiveGroupDatum,
    pub genus: Genus,
    pub twist: TwistSelection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub genus: Genus,
    pub dim_g: i64,
    pub dim_center: i64,
    pub dim_rep: i64,
    pub dim_ch: i64,
    pub fundamental_group: String,
    pub components: Vec<CenterElement>,
    pub supporting: Supporting,
    pub verdicts: Vec<ComponentVerdict>,
}

impl AnalysisReport {
    pub fn min_reducible_bound(&self) -> Option<i64> {
        self.supporting
            .reducible_locus
            .iter()
            .map(|r| r.min_lower_bound)
            .min()
    }

    pub fn min_endoscopic_codim(&self) -> EndoscopicMinimum {
        self.supporting
            .endoscopy
            .iter()
            .filter_map(|e| e.min_endoscopic_codim.value())
            .min()
            .map_or(EndoscopicMinimum::NoStrata, EndoscopicMinimum::Codim)
    }

    /// Report keyed by component label, convenient for lookups.
    pub fn verdicts_by_component(&self) -> BTreeMap<&CenterElement, &ComponentVerdict> {
        self.verdicts.iter().map(|v| (&v.component, v)).collect()
    }
}

pub fn analyze(request: &AnalysisRequest) -> Result<AnalysisReport> {
    analyze_with(request, Execution::default())
}

/// Output is identical for both execution modes.
pub fn analyze_with(request: &AnalysisRequest, exec: Execution) -> Result<AnalysisReport> {
    let datum = &request.datum;
    let g = request.genus;
    let twists = match &request.twist {
        TwistSelection::All => admissible_twists(datum),
        TwistSelection::One(z) => {
            check_twist(datum, z)?;
            vec![z.clone()]
        }
    };
    let supporting = supporting_reports(datum, g, exec)?;
    let verdicts = exec.map(&twists, |z| verdict(datum, g, z));
    let (dim_g, dim_center) = dims(datum);
    Ok(AnalysisReport {
        group: datum.to_string(),
        genus: g,
        dim_g,
        dim_center,
        dim_rep: dim_rep(datum, g),
        dim_ch: dim_ch(datum, g),
        fundamental_group: fundamental_group_of_derived(datum).to_string(),
        components: twists,
        supporting,
        verdicts,
    })
}
