//! String diagrams: the Jordan strings of `l` laid over the Ferrers diagram of
//! the Hilbert vector.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jordan::EijTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Strand {
    pub start: usize,
    pub length: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StringDiagram {
    pub hilbert: Vec<usize>,
    pub strands: Vec<Strand>,
}

impl StringDiagram {
    pub fn socle_degree(&self) -> usize {
        self.hilbert.len() - 1
    }

    /// Number of strand cells in degree `i`.
    pub fn cells_in_degree(&self, i: usize) -> usize {
        self.strands
            .iter()
            .filter(|s| s.start <= i && i < s.start + s.length)
            .map(|s| s.count)
            .sum()
    }

    /// One `(start, length)` per strand copy, in column order.
    pub fn columns(&self) -> Vec<(usize, usize)> {
        self.strands
            .iter()
            .flat_map(|s| std::iter::repeat_n((s.start, s.length), s.count))
            .collect()
    }

    /// Reflects every strand `(i, j)` to `(d - i - j + 1, j)` and compares.
    pub fn is_symmetric(&self) -> bool {
        let d = self.socle_degree();
        let mut a = self.columns();
        let mut b: Vec<(usize, usize)> = a.iter().map(|&(i, j)| (d + 1 - i - j, j)).collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

/// Strands from the nonzero `e(i, j)`, ordered by start and then by length,
/// longest first.
pub fn build_diagram(eij: &EijTable, hilbert: &[usize]) -> Result<StringDiagram> {
    let d = eij.socle_degree();
    if hilbert.len() != d + 1 {
        return Err(Error::TilingMismatch(format!(
            "Hilbert vector has {} entries for socle degree {d}",
            hilbert.len()
        )));
    }
    let mut strands: Vec<Strand> = eij
        .nonzero()
        .map(|(start, length, count)| Strand {
            start,
            length,
            count,
        })
        .collect();
    strands.sort_by(|a, b| a.start.cmp(&b.start).then(b.length.cmp(&a.length)));
    let dg = StringDiagram {
        hilbert: hilbert.to_vec(),
        strands,
    };
    if let Some(s) = dg.strands.iter().find(|s| s.start + s.length > d + 1) {
        return Err(Error::TilingMismatch(format!(
            "strand from degree {} of length {} passes the socle",
            s.start, s.length
        )));
    }
    for (i, &h) in hilbert.iter().enumerate() {
        let got = dg.cells_in_degree(i);
        if got != h {
            return Err(Error::TilingMismatch(format!(
                "degree {i} has {got} strand cells, dim A_{i} = {h}"
            )));
        }
    }
    let full: Vec<&Strand> = dg.strands.iter().filter(|s| s.length == d + 1).collect();
    if full.len() != 1 || full[0].count != 1 {
        return Err(Error::TilingMismatch(
            "expected a single strand through every degree".into(),
        ));
    }
    Ok(dg)
}

/// Degree `d` on top, degree 0 at the bottom; `●` per cell, `│` between
/// consecutive cells of a strand.
pub fn render_ascii(dg: &StringDiagram) -> String {
    let cols = dg.columns();
    let d = dg.socle_degree();
    let width = d.to_string().len();
    let mut lines = Vec::new();
    for i in (0..=d).rev() {
        let cells: Vec<&str> = cols
            .iter()
            .map(|&(s, l)| if s <= i && i < s + l { "●" } else { " " })
            .collect();
        lines.push(format!("{i:>width$}  {}", cells.join(" ")));
        if i > 0 {
            let links: Vec<&str> = cols
                .iter()
                .map(|&(s, l)| if s < i && i < s + l { "│" } else { " " })
                .collect();
            lines.push(format!("{:width$}  {}", "", links.join(" ")));
        }
    }
    let mut out: Vec<String> = lines
        .into_iter()
        .map(|l| l.trim_end().to_string())
        .collect();
    out.push(String::new());
    out.join("\n")
}

/// Reads the `(start, length)` of each column back from [`render_ascii`].
pub fn parse_ascii(text: &str) -> Vec<(usize, usize)> {
    let mut rows: Vec<(usize, Vec<bool>)> = Vec::new();
    for line in text.lines() {
        let Some((label, rest)) = line.split_once("  ") else {
            continue;
        };
        let Ok(deg) = label.trim().parse::<usize>() else {
            continue;
        };
        let cells = rest.chars().step_by(2).map(|c| c == '●').collect();
        rows.push((deg, cells));
    }
    rows.sort_by_key(|(deg, _)| *deg);
    let ncols = rows.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    (0..ncols)
        .map(|c| {
            let degs: Vec<usize> = rows
                .iter()
                .filter(|(_, cells)| cells.get(c).copied().unwrap_or(false))
                .map(|(d, _)| *d)
                .collect();
            (degs[0], degs.len())
        })
        .collect()
}
