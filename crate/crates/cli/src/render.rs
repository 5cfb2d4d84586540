//! Plain-text rendering and the serializable summaries that have no core
//! counterpart.

use std::fmt::Write;

use serde::Serialize;

use charvar::classify::AnalysisReport;
use charvar::dimensions::CodimReport;
use charvar::endoscopy::EndoscopyReport;
use charvar::lattices::{LatticeAction, TorusLemmaCheck};
use charvar::linalg::IntMatrix;
use charvar::parabolics::LeviDatum;
use charvar::rootdata::{format_type, Bond, ExtendedDiagram, Root, RootSystem, SimpleTypeRank};
use charvar::tangent::TangentCheck;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
pub struct RootSummary {
    typerank: SimpleTypeRank,
    rank: usize,
    root_count: usize,
    positive_roots: Vec<Root>,
    highest_root: Root,
    cartan: IntMatrix,
    group_dimension: usize,
    extended_bonds: Vec<Bond>,
}

impl RootSummary {
    pub fn new(rs: &RootSystem, ext: &ExtendedDiagram) -> Self {
        RootSummary {
            typerank: rs.typerank(),
            rank: rs.rank(),
            root_count: rs.roots().len(),
            positive_roots: rs.positive_roots().to_vec(),
            highest_root: rs.highest_root().clone(),
            cartan: rs.cartan().clone(),
            group_dimension: rs.group_dimension(),
            extended_bonds: ext.edges().to_vec(),
        }
    }
}

pub fn roots(s: &RootSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}  rank {}  dim G {}", s.typerank, s.rank, s.group_dimension);
    let _ = writeln!(
        out,
        "roots {}  positive {}  highest {}",
        s.root_count,
        s.positive_roots.len(),
        s.highest_root
    );
    let _ = writeln!(out, "cartan matrix:");
    for row in &s.cartan {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        let _ = writeln!(out, "  {}", cells.join(""));
    }
    let _ = writeln!(out, "positive roots:");
    for r in &s.positive_roots {
        let _ = writeln!(out, "  {:>3}  {}", r.height(), r);
    }
    let bonds: Vec<String> = s
        .extended_bonds
        .iter()
        .map(|b| format!("{}-{}({})", b.a, b.b, b.multiplicity))
        .collect();
    let _ = writeln!(out, "extended diagram bonds (node {} is -theta): {}", s.rank, bonds.join(" "));
    out
}

#[derive(Serialize)]
pub struct ParabolicSummary {
    pub typerank: SimpleTypeRank,
    pub positive_roots: usize,
    pub maximal_parabolics: Vec<LeviDatum>,
    pub reducible_locus: Option<CodimReport>,
}

pub fn parabolics(s: &ParabolicSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}  positive roots {}", s.typerank, s.positive_roots);
    let _ = writeln!(
        out,
        "{:>6}  {:<12}{:>8}{:>7}{:>7}{:>7}",
        "node", "levi", "|Phi_L+|", "dim L", "dim U", "dim ZL"
    );
    for l in &s.maximal_parabolics {
        let _ = writeln!(
            out,
            "{:>6}  {:<12}{:>8}{:>7}{:>7}{:>7}",
            l.parabolic.removed_nodes()[0],
            format_type(&l.levi_type),
            l.levi_positive_root_count,
            l.dim_l,
            l.dim_u,
            l.dim_zl
        );
    }
    if let Some(r) = &s.reducible_locus {
        let _ = writeln!(out, "genus {}: codimension lower bounds of reducible loci", r.genus);
        for p in &r.parabolics {
            let _ = writeln!(out, "  node {:>2}  >= {}", p.removed_node, p.lower_bound);
        }
        let _ = writeln!(out, "minimum >= {}  tag {}", r.min_lower_bound, r.tag);
        for n in &r.notes {
            let _ = writeln!(out, "note: {n}");
        }
    }
    out
}

pub fn endoscopy(r: &EndoscopyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type {}  genus {}", r.typerank, r.genus);
    let _ = writeln!(out, "{:<16}{:>7}{:>8}  witness", "pseudo-Levi", "dim H", "proper");
    for pl in &r.pseudo_levis {
        let witness: Vec<String> = pl.provenance.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "{:<16}{:>7}{:>8}  {}",
            pl.type_name(),
            pl.dim_h,
            yes_no(pl.proper),
            if witness.is_empty() { "-".to_string() } else { witness.join("; ") }
        );
    }
    let _ = writeln!(out, "strata (proper, with roots):");
    for s in &r.strata {
        let _ = writeln!(
            out,
            "  {:<14} dim <= {:<5} codim >= {}",
            s.pseudo_levi, s.dim_stratum_upper, s.codim_lower
        );
    }
    let _ = writeln!(out, "minimum endoscopic codimension: {}", r.min_endoscopic_codim);
    if r.pseudo_levis.iter().any(|pl| pl.provenance.iter().any(|s| s.to_string().contains('~'))) {
        let _ = writeln!(out, "(~ marks a component whose long roots are short in {})", r.typerank);
    }
    out
}

pub fn tangent(c: &TangentCheck) -> String {
    format!(
        "g={} twist={} rank={} tangent_dim={} formula_value={} match: {}\n",
        c.genus,
        c.twist,
        c.rank,
        c.tangent_dim,
        c.formula_value,
        yes_no(c.matches)
    )
}

#[derive(Serialize)]
pub struct TorusSummary {
    orders: Vec<u64>,
    #[serde(flatten)]
    check: TorusLemmaCheck,
    holds: bool,
}

impl TorusSummary {
    pub fn new(act: &LatticeAction, check: TorusLemmaCheck) -> Self {
        TorusSummary {
            orders: act.orders().to_vec(),
            holds: check.holds(),
            check,
        }
    }
}

pub fn torus(s: &TorusSummary) -> String {
    format!(
        "rank={} generator_orders={:?} fixed_rank={} commutator_rank={} intersection_rank={} holds: {}\n",
        s.check.rank,
        s.orders,
        s.check.fixed_rank,
        s.check.commutator_rank,
        s.check.intersection_rank,
        yes_no(s.holds)
    )
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {}  genus {}", r.group, r.genus);
    let _ = writeln!(out, "dim G {}  dim Z {}", r.dim_g, r.dim_center);
    let _ = writeln!(out, "dim Rep {}  dim Ch {}", r.dim_rep, r.dim_ch);
    let _ = writeln!(out, "pi1 of derived subgroup: {}", r.fundamental_group);
    for rep in &r.supporting.reducible_locus {
        let _ = writeln!(
            out,
            "reducible locus {}: codim >= {} ({})",
            rep.typerank, rep.min_lower_bound, rep.tag
        );
        for n in &rep.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }
    for e in &r.supporting.endoscopy {
        match e.min_endoscopic_codim.value() {
            Some(c) => {
                let _ = writeln!(out, "endoscopic strata {}: codim >= {c}", e.factor);
            }
            None => {
                let _ = writeln!(out, "endoscopic strata {}: none", e.factor);
            }
        }
    }
    let _ = writeln!(
        out,
        "{:<14}{:>8}{:>12}{:>10}{:>14}  reason",
        "component", "normal", "symplectic", "terminal", "Q-factorial"
    );
    for v in &r.verdicts {
        let q = match v.q_factorial.value {
            charvar::classify::QFactorial::True => "yes",
            charvar::classify::QFactorial::Unknown => "unknown",
        };
        let _ = writeln!(
            out,
            "{:<14}{:>8}{:>12}{:>10}{:>14}  {}",
            v.component.to_string(),
            yes_no(v.normal.value),
            yes_no(v.symplectic.value),
            yes_no(v.terminal.value),
            q,
            v.terminal.reason
        );
        for f in v.locally_factorial_rep.iter().filter(|f| !f.locally_factorial) {
            let _ = writeln!(
                out,
                "  Rep of {} not locally factorial: {}",
                f.factor,
                f.note.as_deref().unwrap_or("")
            );
        }
    }
    out
}
