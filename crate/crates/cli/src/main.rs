use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use charvar::classify::{analyze_with, AnalysisRequest, TwistSelection};
use charvar::dimensions::{reducible_locus_report, Genus};
use charvar::endoscopy::endoscopy_report;
use charvar::groupdatum::CenterElement;
use charvar::lattices::{torus_lemma_check, LatticeAction};
use charvar::parabolics::enumerate_maximal_parabolics;
use charvar::rootdata::{build_root_system, extended_diagram, Family, SimpleTypeRank};
use charvar::tangent::{quaternion_tuple, tangent_check};
use charvar::{Error, Execution};

mod input;
mod render;

#[derive(Parser)]
#[command(name = "charvar", version, about = "Combinatorics of character varieties of surface groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan family, A to G.
    #[arg(long = "type")]
    family: char,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn typerank(&self) -> Result<SimpleTypeRank> {
        let family = Family::from_letter(self.family.to_ascii_uppercase()).ok_or_else(|| {
            Error::Validation(format!("unknown Cartan family {:?}", self.family))
        })?;
        Ok(SimpleTypeRank::new(family, self.rank)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, reducible and endoscopic loci, and component verdicts.
    Analyze {
        /// JSON file, inline JSON, or compact form such as `A1:ad,C2,T1`.
        #[arg(long)]
        group: String,
        #[arg(long)]
        genus: u32,
        /// Residues per factor: `1;0` or `[[1],[0]]`.
        #[arg(long, conflicts_with = "all_components")]
        twist: Option<String>,
        #[arg(long)]
        all_components: bool,
    },
    /// Root system, Cartan matrix and extended diagram.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Maximal parabolics and their Levi data.
    Parabolics {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        genus: Option<u32>,
    },
    /// Pseudo-Levi subgroups and endoscopic strata bounds.
    Endoscopy {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        genus: u32,
    },
    /// Exact tangent-space dimension at a quaternion representation into SL2.
    TangentCheck {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        twisted: bool,
    },
    /// Fixed and commutator ranks of a commuting family of lattice automorphisms.
    TorusCheck {
        #[arg(long)]
        file: PathBuf,
    },
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> Result<()> {
    let out = match format {
        Format::Structured => {
            // serde_json maps are ordered by key, so output is stable
            let v = serde_json::to_value(value)?;
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Text => text(value),
    };
    match std::io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn run(cli: Cli) -> Result<()> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let format = cli.format;
    match cli.command {
        Command::Analyze {
            group,
            genus,
            twist,
            all_components,
        } => {
            let parsed = input::parse_group(&group)?;
            let genus = Genus::new(genus)?;
            let twist = match (twist, all_components, parsed.twist) {
                (Some(text), _, _) => TwistSelection::One(input::parse_twist(&text, &parsed.datum)?),
                (None, true, _) => TwistSelection::All,
                (None, false, Some(z)) => TwistSelection::One(z),
                (None, false, None) => TwistSelection::One(CenterElement::identity(&parsed.datum)),
            };
            let request = AnalysisRequest {
                datum: parsed.datum,
                genus,
                twist,
            };
            let report = analyze_with(&request, exec)?;
            emit(format, &report, render::analysis)
        }
        Command::Roots { ty } => {
            let rs = build_root_system(ty.typerank()?);
            let summary = render::RootSummary::new(&rs, &extended_diagram(&rs));
            emit(format, &summary, render::roots)
        }
        Command::Parabolics { ty, genus } => {
            let rs = build_root_system(ty.typerank()?);
            let levis = enumerate_maximal_parabolics(&rs);
            let report = match genus {
                Some(g) => Some(reducible_locus_report(&rs, Genus::new(g)?)?),
                None => None,
            };
            let out = render::ParabolicSummary {
                typerank: rs.typerank(),
                positive_roots: rs.positive_roots().len(),
                maximal_parabolics: levis,
                reducible_locus: report,
            };
            emit(format, &out, render::parabolics)
        }
        Command::Endoscopy { ty, genus } => {
            let rs = build_root_system(ty.typerank()?);
            let report = endoscopy_report(&rs, Genus::new(genus)?, exec);
            emit(format, &report, render::endoscopy)
        }
        Command::TangentCheck { genus, twisted } => {
            let tuple = quaternion_tuple(Genus::new(genus)?, twisted);
            let check = tangent_check(&tuple);
            emit(format, &check, render::tangent)
        }
        Command::TorusCheck { file } => {
            let (rank, generators) = input::read_matrices(&file)?;
            let act = LatticeAction::new(rank, generators)?;
            let check = torus_lemma_check(&act);
            emit(format, &render::TorusSummary::new(&act, check), render::torus)?;
            if !check.holds() {
                return Err(Error::InvariantViolation(format!(
                    "fixed rank {} + commutator rank {} != rank {}, or intersection rank {} != 0",
                    check.fixed_rank, check.commutator_rank, check.rank, check.intersection_rank
                ))
                .into());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let internal = err
                .downcast_ref::<Error>()
                .is_some_and(Error::is_invariant_violation);
            ExitCode::from(if internal { 3 } else { 2 })
        }
    }
}
