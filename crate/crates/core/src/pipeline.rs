//! End-to-end analysis of one form: basis, ranks, Jordan type, Lefschetz
//! verdicts and string diagram.

use serde::Serialize;

use crate::apolarity::{graded_basis, GradedAlgebraBasis};
use crate::diagram::{build_diagram, StringDiagram};
use crate::error::{Error, Result};
use crate::hessian::{rank_table, rank_table_at, GenericRankConfig, RankTable};
use crate::jordan::{jordan_type, JordanTypeReport};
use crate::lefschetz::{lefschetz_report, LefschetzReport};
use crate::poly::{LinearForm, Poly};

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    #[serde(skip)]
    pub basis: GradedAlgebraBasis,
    pub rank_table: RankTable,
    pub jordan: JordanTypeReport,
    pub lefschetz: LefschetzReport,
    pub diagram: StringDiagram,
}

impl Analysis {
    /// Generic rank of the classical Hessian, `r(1, d-2)`; `None` for `d < 2`.
    pub fn hessian_rank(&self) -> Option<usize> {
        let d = self.rank_table.socle_degree();
        (d >= 2).then(|| self.rank_table.r(1, d as isize - 2))
    }

    /// Every structural invariant that holds for any computed table.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        self.jordan.check_invariants()?;
        let l = &self.lefschetz;
        if l.slp && !l.wlp {
            return Err("SLP without WLP".into());
        }
        if !self.diagram.is_symmetric() {
            return Err("string diagram is not symmetric".into());
        }
        Ok(())
    }
}

fn finish(basis: GradedAlgebraBasis, rt: RankTable) -> Result<Analysis> {
    let jordan = jordan_type(&rt)?;
    let lefschetz = lefschetz_report(&rt, &jordan)?;
    let diagram = build_diagram(&jordan.eij, &jordan.hilbert)?;
    Ok(Analysis {
        basis,
        rank_table: rt,
        jordan,
        lefschetz,
        diagram,
    })
}

/// Full analysis at a generic linear form.
pub fn analyze(f: &Poly, cfg: &GenericRankConfig) -> Result<Analysis> {
    let basis = graded_basis(f)?;
    let rt = rank_table(&basis, cfg)?;
    finish(basis, rt)
}

/// Full analysis at a given `l` with `f(l^perp) != 0`.
pub fn analyze_at(f: &Poly, l: &LinearForm) -> Result<Analysis> {
    let basis = graded_basis(f)?;
    if num_traits::Zero::is_zero(&f.evaluate(l.point())?) {
        return Err(Error::DegenerateLinearForm);
    }
    let rt = rank_table_at(&basis, l.point())?;
    finish(basis, rt)
}
