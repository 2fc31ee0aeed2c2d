//! Reference tables for the F4 verification: the claimed list of maximal
//! orthogonal non-singular rook placements, the tabulated distinctness
//! certificates, and the extra placements used in the completeness argument.
//!
//! The tables ship embedded in the binary (`data/f4_reference.json`) and can
//! be overridden with `--data` or the `ROOK_ORBITS_DATA` environment
//! variable. Every entry is validated on load against the F4 root system.

use serde::Deserialize;
use thiserror::Error;

use crate::rootsys::{is_rook_placement, Root, RootSystem, SystemKind};

/// Embedded copy of the reference tables.
pub const EMBEDDED_JSON: &str = include_str!("../data/f4_reference.json");

#[derive(Debug, Error)]
pub enum RefDataError {
    #[error("failed to parse reference data: {0}")]
    Parse(String),
    #[error("invalid reference data: {0}")]
    Invalid(String),
    #[error("failed to read reference data file {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Deserialize)]
struct RawData {
    schema: u32,
    maximal_placements: Vec<RawPlacement>,
    beta2_maximal: Vec<usize>,
    reduced_tuple_rows: Vec<RawTableRow>,
    #[serde(rename = "separating_triples")]
    separating_triples_raw: Vec<RawTriple>,
    extra_placements: Vec<RawExtra>,
}

#[derive(Debug, Deserialize)]
struct RawPlacement {
    index: usize,
    roots: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct RawTableRow {
    index: usize,
    roots: Vec<String>,
    simple_order: Vec<usize>,
    i_tuple: Vec<usize>,
}

#[derive(Debug, Deserialize)]
struct RawTriple {
    placement: usize,
    beta_pos: usize,
    alpha: usize,
}

#[derive(Debug, Deserialize)]
struct RawExtra {
    index: usize,
    roots: Vec<String>,
    unique_max_positions: Vec<usize>,
}

/// One claimed maximal placement, roots in the tabulated order
/// (`roots[0]` is the claimed maximal root beta_1).
#[derive(Debug, Clone)]
pub struct ListedPlacement {
    pub index: usize,
    pub roots: Vec<Root>,
}

/// One row of the tabulated reduced-tuple certificates: a placement, a
/// claimed reordering of the simple roots (1-based simple indices), and the
/// claimed index tuple (i_1, ..., i_k), one entry per placement root.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub index: usize,
    pub roots: Vec<Root>,
    pub simple_order: Vec<usize>,
    pub i_tuple: Vec<usize>,
}

/// A claimed separating-simple-root certificate: for placement `placement`,
/// the sub-placement of roots at positions `1..=beta_pos` (in tabulated
/// order) is separated by the simple root `alpha`.
#[derive(Debug, Clone, Copy)]
pub struct SeparatingTriple {
    pub placement: usize,
    pub beta_pos: usize,
    pub alpha: usize,
}

/// A non-maximal placement used in the completeness argument, together with
/// the positions (1-based, in tabulated order) of the roots whose removal is
/// claimed to be certified by the unique-maximum argument.
#[derive(Debug, Clone)]
pub struct ExtraPlacement {
    pub index: usize,
    pub roots: Vec<Root>,
    pub unique_max_positions: Vec<usize>,
}

/// Parsed and validated reference tables.
#[derive(Debug, Clone)]
pub struct RefData {
    pub maximal_placements: Vec<ListedPlacement>,
    pub beta2_maximal: Vec<usize>,
    pub table_rows: Vec<TableRow>,
    pub separating_triples: Vec<SeparatingTriple>,
    pub extra_placements: Vec<ExtraPlacement>,
}

fn parse_roots(sys: &RootSystem, raw: &[String], what: &str) -> Result<Vec<Root>, RefDataError> {
    let mut out = Vec::with_capacity(raw.len());
    for s in raw {
        let r = Root::from_compact(s).map_err(|e| RefDataError::Invalid(format!("{what}: {e}")))?;
        if !sys.is_positive_root(&r) {
            return Err(RefDataError::Invalid(format!(
                "{what}: {s} is not a positive F4 root"
            )));
        }
        out.push(r);
    }
    Ok(out)
}

impl RefData {
    /// Parse from a JSON string and validate against the F4 root system.
    pub fn from_json_str(s: &str) -> Result<RefData, RefDataError> {
        let raw: RawData =
            serde_json::from_str(s).map_err(|e| RefDataError::Parse(e.to_string()))?;
        if raw.schema != 1 {
            return Err(RefDataError::Parse(format!(
                "unsupported schema {}",
                raw.schema
            )));
        }
        let sys = RootSystem::build(SystemKind::F4);

        let mut maximal_placements = Vec::new();
        for (pos, p) in raw.maximal_placements.iter().enumerate() {
            if p.index != pos + 1 {
                return Err(RefDataError::Invalid(format!(
                    "maximal placement indices must be 1..n in order, found {}",
                    p.index
                )));
            }
            let roots = parse_roots(&sys, &p.roots, &format!("placement {}", p.index))?;
            if !is_rook_placement(&sys, &roots) {
                return Err(RefDataError::Invalid(format!(
                    "placement {} is not a rook placement",
                    p.index
                )));
            }
            maximal_placements.push(ListedPlacement {
                index: p.index,
                roots,
            });
        }

        for &i in &raw.beta2_maximal {
            if i == 0 || i > maximal_placements.len() {
                return Err(RefDataError::Invalid(format!(
                    "beta2_maximal index {i} out of range"
                )));
            }
        }

        let mut table_rows = Vec::new();
        for row in &raw.reduced_tuple_rows {
            let roots = parse_roots(&sys, &row.roots, &format!("table row {}", row.index))?;
            if row.simple_order.len() != sys.rank() {
                return Err(RefDataError::Invalid(format!(
                    "table row {}: simple order must have {} entries",
                    row.index,
                    sys.rank()
                )));
            }
            if row.simple_order.iter().any(|&i| i == 0 || i > sys.rank()) {
                return Err(RefDataError::Invalid(format!(
                    "table row {}: simple order entry out of range",
                    row.index
                )));
            }
            if row.i_tuple.len() != roots.len() {
                return Err(RefDataError::Invalid(format!(
                    "table row {}: index tuple length {} != placement size {}",
                    row.index,
                    row.i_tuple.len(),
                    roots.len()
                )));
            }
            table_rows.push(TableRow {
                index: row.index,
                roots,
                simple_order: row.simple_order.clone(),
                i_tuple: row.i_tuple.clone(),
            });
        }

        let mut separating_triples = Vec::new();
        for t in &raw.separating_triples_raw {
            if t.placement == 0 || t.placement > maximal_placements.len() {
                return Err(RefDataError::Invalid(format!(
                    "separating triple refers to unknown placement {}",
                    t.placement
                )));
            }
            let size = maximal_placements[t.placement - 1].roots.len();
            if t.beta_pos < 2 || t.beta_pos > size {
                return Err(RefDataError::Invalid(format!(
                    "separating triple for placement {}: beta position {} out of range",
                    t.placement, t.beta_pos
                )));
            }
            if t.alpha == 0 || t.alpha > sys.rank() {
                return Err(RefDataError::Invalid(format!(
                    "separating triple for placement {}: simple index {} out of range",
                    t.placement, t.alpha
                )));
            }
            separating_triples.push(SeparatingTriple {
                placement: t.placement,
                beta_pos: t.beta_pos,
                alpha: t.alpha,
            });
        }

        let mut extra_placements = Vec::new();
        for e in &raw.extra_placements {
            let roots = parse_roots(&sys, &e.roots, &format!("placement {}", e.index))?;
            if !is_rook_placement(&sys, &roots) {
                return Err(RefDataError::Invalid(format!(
                    "placement {} is not a rook placement",
                    e.index
                )));
            }
            for &p in &e.unique_max_positions {
                if p == 0 || p > roots.len() {
                    return Err(RefDataError::Invalid(format!(
                        "placement {}: beta position {p} out of range",
                        e.index
                    )));
                }
            }
            extra_placements.push(ExtraPlacement {
                index: e.index,
                roots,
                unique_max_positions: e.unique_max_positions.clone(),
            });
        }

        Ok(RefData {
            maximal_placements,
            beta2_maximal: raw.beta2_maximal,
            table_rows,
            separating_triples,
            extra_placements,
        })
    }

    /// Load the embedded copy.
    pub fn embedded() -> RefData {
        RefData::from_json_str(EMBEDDED_JSON).expect("embedded reference data is valid")
    }

    /// Load from an explicit path.
    pub fn from_path(path: &str) -> Result<RefData, RefDataError> {
        let s = std::fs::read_to_string(path).map_err(|e| RefDataError::Io {
            path: path.to_string(),
            message: e.to_string(),
        })?;
        RefData::from_json_str(&s)
    }

    /// Resolution order: explicit path, then `ROOK_ORBITS_DATA`, then the
    /// embedded copy.
    pub fn load(explicit: Option<&str>) -> Result<RefData, RefDataError> {
        if let Some(p) = explicit {
            return RefData::from_path(p);
        }
        if let Ok(p) = std::env::var("ROOK_ORBITS_DATA") {
            if !p.is_empty() {
                return RefData::from_path(&p);
            }
        }
        Ok(RefData::embedded())
    }

    pub fn listed_placement(&self, index: usize) -> Option<&ListedPlacement> {
        self.maximal_placements.iter().find(|p| p.index == index)
    }

    pub fn table_row(&self, index: usize) -> Option<&TableRow> {
        self.table_rows.iter().find(|r| r.index == index)
    }
}
