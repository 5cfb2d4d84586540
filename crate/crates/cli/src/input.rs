//! Parsing of group data, twists and matrix files.

use std::path::Path;

use anyhow::{bail, Context, Result};
use charvar::groupdatum::schema::GroupDocument;
use charvar::groupdatum::{CenterElement, Factor, ReductiveGroupDatum};
use charvar::linalg::IntMatrix;
use charvar::rootdata::SimpleTypeRank;
use charvar::Error;
use serde::Deserialize;

/// A group datum read from `--group`, with the twist it carries, if any.
pub struct GroupInput {
    pub datum: ReductiveGroupDatum,
    pub twist: Option<CenterElement>,
}

fn validation(msg: String) -> anyhow::Error {
    Error::Validation(msg).into()
}

/// `--group` accepts a path to a JSON document, inline JSON, or the compact
/// form `A1:ad,C2,T1` (factors with optional `:sc`/`:ad`, and `T<k>` for a
/// central torus of rank `k`).
pub fn parse_group(text: &str) -> Result<GroupInput> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return parse_document(trimmed);
    }
    let path = Path::new(trimmed);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        return parse_document(&text);
    }
    parse_compact(trimmed)
}

fn parse_document(text: &str) -> Result<GroupInput> {
    let doc: GroupDocument = serde_json::from_str(text)
        .map_err(|e| validation(format!("group document: {e}")))?;
    let datum = doc.to_datum()?;
    let twist = doc.twist_element(&datum)?;
    Ok(GroupInput { datum, twist })
}

fn parse_compact(text: &str) -> Result<GroupInput> {
    let mut factors = Vec::new();
    let mut torus = 0usize;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some(k) = part.strip_prefix('T') {
            torus += k
                .parse::<usize>()
                .map_err(|_| validation(format!("bad torus rank in {part:?}")))?;
            continue;
        }
        let (name, isogeny) = part.split_once(':').unwrap_or((part, "sc"));
        let tr: SimpleTypeRank = name.parse()?;
        let factor = match isogeny {
            "sc" => Factor::simply_connected(tr),
            "ad" | "adjoint" => Factor::adjoint(tr),
            other => {
                return Err(validation(format!(
                    "unknown isogeny {other:?} in {part:?}; use sc, ad, or a JSON document"
                )))
            }
        };
        factors.push(factor);
    }
    if factors.is_empty() && torus == 0 {
        bail!(validation(format!("no factors in group {text:?}")));
    }
    Ok(GroupInput {
        datum: ReductiveGroupDatum::new(factors, torus),
        twist: None,
    })
}

/// `--twist` accepts JSON (`[[1],[0]]`) or residues per factor separated by
/// `;` with `,` inside a factor (`1;0`). Factors with trivial center take an
/// empty entry.
pub fn parse_twist(text: &str, datum: &ReductiveGroupDatum) -> Result<CenterElement> {
    let trimmed = text.trim();
    let residues: Vec<Vec<u64>> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| validation(format!("twist: {e}")))?
    } else {
        trimmed
            .split(';')
            .map(|f| {
                f.split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<u64>()
                            .map_err(|_| validation(format!("bad residue {s:?} in twist")))
                    })
                    .collect::<Result<Vec<u64>>>()
            })
            .collect::<Result<_>>()?
    };
    let z = CenterElement(residues);
    if !datum.in_cover_center(&z) {
        bail!(validation(format!(
            "twist {z} is not an element of the center of the simply connected cover of {datum}"
        )));
    }
    Ok(z)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Bare(Vec<IntMatrix>),
    Full { rank: usize, generators: Vec<IntMatrix> },
}

/// A matrix-list file: either `{"rank": n, "generators": [...]}` or a bare
/// JSON list of square matrices.
pub fn read_matrices(path: &Path) -> Result<(usize, Vec<IntMatrix>)> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| validation(format!("{}: {e}", path.display())))?;
    match parsed {
        MatrixFile::Full { rank, generators } => Ok((rank, generators)),
        MatrixFile::Bare(generators) => {
            let Some(first) = generators.first() else {
                bail!(validation(
                    "an empty matrix list needs the {\"rank\": n, \"generators\": []} form".into()
                ));
            };
            Ok((first.len(), generators))
        }
    }
}
