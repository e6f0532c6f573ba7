//! Built-in regression corpus of worked examples.

use serde::Serialize;

use crate::error::Result;
use crate::hessian::GenericRankConfig;
use crate::jordan::{closed_form, Partition};
use crate::oracle::cross_check;
use crate::pipeline::analyze;
use crate::poly::parse_poly;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub poly: &'static str,
    pub hilbert: &'static [usize],
    /// Generic rank of the classical Hessian.
    pub hessian_rank: Option<usize>,
    pub jordan: Option<&'static str>,
    pub wlp: Option<bool>,
    pub slp: Option<bool>,
    /// Expected value fixed by the brute-force oracle rather than by the
    /// worked example it comes from.
    pub oracle_adjudicated: bool,
    pub note: &'static str,
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "perazzo-cubic",
        poly: "x*u^2+y*u*v+z*v^2",
        hilbert: &[1, 5, 5, 1],
        hessian_rank: Some(4),
        jordan: Some("4^1 + 2^3 + 1^2"),
        wlp: Some(false),
        slp: Some(false),
        oracle_adjudicated: false,
        note: "vanishing Hessian, gap 1",
    },
    CorpusEntry {
        name: "cubic-n8",
        poly: "x1*u^2+x2*u*v+x3*v^2+x4*v*w+x5*w^2",
        hilbert: &[1, 8, 8, 1],
        hessian_rank: Some(6),
        jordan: Some("4^1 + 2^5 + 1^4"),
        wlp: Some(false),
        slp: Some(false),
        oracle_adjudicated: false,
        note: "concatenation of two Perazzo cubics, gap 2",
    },
    CorpusEntry {
        name: "cubic-n9",
        poly: "x1*u1^2+x2*u1*u2+x3*u2^2+x4*u2*u3+x5*u3^2+x6*u3*u1",
        hilbert: &[1, 9, 9, 1],
        hessian_rank: Some(6),
        jordan: Some("4^1 + 2^5 + 1^6"),
        wlp: Some(false),
        slp: Some(false),
        oracle_adjudicated: false,
        note: "Hessian corank 3",
    },
    CorpusEntry {
        name: "quartic-n8",
        poly: "x1*u^2*v+x2*u*v^2+x3*u^3+x4*u*w^2+x5*u^2*w",
        hilbert: &[1, 8, 10, 8, 1],
        hessian_rank: Some(6),
        jordan: Some("5^1 + 3^5 + 2^4"),
        wlp: Some(true),
        slp: Some(false),
        oracle_adjudicated: false,
        note: "WLP without SLP",
    },
    CorpusEntry {
        name: "quintic-n4",
        poly: "x*u^3*v+y*u*v^3",
        hilbert: &[1, 4, 7, 7, 4, 1],
        hessian_rank: Some(4),
        jordan: Some("6^1 + 4^3 + 2^2 + 1^2"),
        wlp: Some(false),
        slp: Some(false),
        oracle_adjudicated: true,
        note: "6^1 + 3^4 + 2^2 + 1^2 would contradict the nonzero Hessian",
    },
    CorpusEntry {
        name: "hess2-example",
        poly: "x*u*v^3+y*u^3*v",
        hilbert: &[1, 4, 7, 7, 4, 1],
        hessian_rank: Some(4),
        jordan: Some("6^1 + 4^3 + 2^2 + 1^2"),
        wlp: Some(false),
        slp: Some(false),
        oracle_adjudicated: true,
        note: "second Hessian vanishes, A_2 -> A_3 not injective",
    },
];

#[derive(Clone, Debug, Serialize)]
pub struct CorpusResult {
    pub name: String,
    pub poly: String,
    pub hilbert: Vec<usize>,
    pub hessian_rank: Option<usize>,
    pub ranks: Vec<[usize; 3]>,
    pub jordan: Partition,
    pub oracle: Partition,
    pub closed_form: Option<Partition>,
    pub wlp: bool,
    pub slp: bool,
    pub oracle_adjudicated: bool,
    /// Human-readable descriptions of every failed expectation.
    pub mismatches: Vec<String>,
}

impl CorpusResult {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<String>,
    what: &str,
    want: Option<T>,
    got: T,
) {
    if let Some(w) = want {
        if w != got {
            out.push(format!("{what}: expected {w:?}, got {got:?}"));
        }
    }
}

pub fn run_entry(entry: &CorpusEntry, cfg: &GenericRankConfig) -> Result<CorpusResult> {
    let f = parse_poly(entry.poly, None)?;
    let a = analyze(&f, cfg)?;
    let check = cross_check(&a.basis, cfg)?;
    let mut mismatches = Vec::new();
    expect(
        &mut mismatches,
        "hilbert",
        Some(entry.hilbert.to_vec()),
        a.jordan.hilbert.clone(),
    );
    expect(
        &mut mismatches,
        "hessian rank",
        entry.hessian_rank,
        a.hessian_rank().unwrap_or(0),
    );
    let want_jordan = entry.jordan.map(|s| s.parse::<Partition>()).transpose()?;
    expect(
        &mut mismatches,
        "jordan",
        want_jordan.clone(),
        a.jordan.jordan.clone(),
    );
    expect(&mut mismatches, "wlp", entry.wlp, a.lefschetz.wlp);
    expect(&mut mismatches, "slp", entry.slp, a.lefschetz.slp);
    if check.consensus != a.jordan.jordan {
        mismatches.push(format!("oracle gives {}", check.consensus));
    }
    let closed = closed_form(&a.rank_table).transpose()?;
    if let Some(c) = &closed {
        if *c != a.jordan.jordan {
            mismatches.push(format!("closed form gives {c}"));
        }
    }
    if let Err(e) = a.check_invariants() {
        mismatches.push(e);
    }
    Ok(CorpusResult {
        name: entry.name.to_string(),
        poly: f.to_string(),
        hilbert: a.jordan.hilbert.clone(),
        hessian_rank: a.hessian_rank(),
        ranks: a.rank_table.cells().map(|(i, j, r)| [i, j, r]).collect(),
        jordan: a.jordan.jordan.clone(),
        oracle: check.consensus,
        closed_form: closed,
        wlp: a.lefschetz.wlp,
        slp: a.lefschetz.slp,
        oracle_adjudicated: entry.oracle_adjudicated,
        mismatches,
    })
}

pub fn run_corpus(cfg: &GenericRankConfig) -> Result<Vec<CorpusResult>> {
    CORPUS.iter().map(|e| run_entry(e, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes() {
        for r in run_corpus(&GenericRankConfig::default()).unwrap() {
            assert!(r.passed(), "{}: {:?}", r.name, r.mismatches);
        }
    }
}
