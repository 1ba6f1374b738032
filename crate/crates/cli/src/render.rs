//! Abacus documents: ASCII, SVG and a JSON occupancy grid that can be read back.

use std::fmt::Write as _;

use abacus_core::Abacus;
use serde::{Deserialize, Serialize};

pub const MAX_RUNNERS: usize = 64;

const CELL: usize = 32;
const MARGIN: usize = 16;
const BEAD_RADIUS: usize = 11;

/// JSON form of a grid. `grid` lists rows top row first, like the ASCII drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridDocument {
    pub runners: usize,
    pub rows: usize,
    pub grid: Vec<Vec<bool>>,
}

pub fn check_runners(runners: usize) -> Result<(), String> {
    if runners > MAX_RUNNERS {
        return Err(format!("grid has {runners} runners; at most {MAX_RUNNERS} can be rendered"));
    }
    Ok(())
}

pub fn ascii(abacus: &Abacus) -> String {
    abacus.render_ascii()
}

pub fn to_document(abacus: &Abacus) -> GridDocument {
    let mut grid = abacus.grid();
    grid.reverse();
    GridDocument { runners: abacus.runners(), rows: abacus.rows(), grid }
}

pub fn json(abacus: &Abacus) -> String {
    serde_json::to_string(&to_document(abacus)).expect("grid documents always serialize")
}

pub fn from_document(doc: &GridDocument) -> Result<Abacus, String> {
    check_runners(doc.runners)?;
    if doc.grid.len() != doc.rows {
        return Err(format!("grid lists {} rows but declares {}", doc.grid.len(), doc.rows));
    }
    let mut bottom_first = doc.grid.clone();
    bottom_first.reverse();
    Abacus::from_rows(doc.runners, &bottom_first).map_err(|e| e.to_string())
}

/// Reads a document produced by [`json`].
pub fn parse_json(text: &str) -> Result<Abacus, String> {
    let doc: GridDocument = serde_json::from_str(text).map_err(|e| format!("invalid grid document: {e}"))?;
    from_document(&doc)
}

/// Vertical runners with a filled circle on every bead; row 0 at the bottom.
pub fn svg(abacus: &Abacus) -> String {
    let (runners, rows) = (abacus.runners(), abacus.rows());
    let width = runners * CELL + 2 * MARGIN;
    let height = rows * CELL + 2 * MARGIN;
    let cx = |i: usize| MARGIN + i * CELL + CELL / 2;
    let cy = |j: usize| MARGIN + (rows - 1 - j) * CELL + CELL / 2;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str("  <g stroke=\"#999\" stroke-width=\"2\">\n");
    for i in 0..runners {
        let _ = writeln!(
            out,
            r#"    <line x1="{x}" y1="{top}" x2="{x}" y2="{bottom}"/>"#,
            x = cx(i),
            top = MARGIN,
            bottom = height - MARGIN
        );
    }
    out.push_str("  </g>\n  <g fill=\"#000\">\n");
    for j in 0..rows {
        for i in 0..runners {
            if abacus.is_bead(i, j) {
                let _ = writeln!(out, r#"    <circle cx="{}" cy="{}" r="{BEAD_RADIUS}"/>"#, cx(i), cy(j));
            }
        }
    }
    out.push_str("  </g>\n</svg>");
    out
}
