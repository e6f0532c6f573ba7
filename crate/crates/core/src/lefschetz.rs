//! Weak and strong Lefschetz verdicts.
//!
//! Each verdict is computed from the rank table and again from the shape of
//! the Jordan type (number of parts against the Sperner number, and equality
//! with the dual of the Hilbert vector); the two must agree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hessian::RankTable;
use crate::jordan::{JordanTypeReport, Partition};

/// Largest entry of the Hilbert vector.
pub fn sperner(hilbert: &[usize]) -> usize {
    hilbert.iter().copied().max().unwrap_or(0)
}

/// `Δ(A) = n - r` for socle degree three.
pub fn cubic_gap(n: usize, r: usize) -> Result<usize> {
    if r > n {
        return Err(Error::InvalidArgument(format!(
            "rank {r} exceeds {n} variables"
        )));
    }
    Ok(n - r)
}

/// A multiplication map `l^j : A_i -> A_{i+j}` below the rank it needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingMap {
    pub i: usize,
    pub j: usize,
    pub rank: usize,
    pub required: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzReport {
    pub wlp: bool,
    pub slp: bool,
    pub sperner: usize,
    pub jordan: Partition,
    pub hilbert_dual: Partition,
    pub failing_maps: Vec<FailingMap>,
    /// `Δ(A)`, only for socle degree three.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cubic_gap: Option<usize>,
}

pub fn lefschetz_report(rt: &RankTable, jt: &JordanTypeReport) -> Result<LefschetzReport> {
    let h = rt.hilbert();
    let d = rt.socle_degree();
    let mut failing = Vec::new();
    let mut wlp = true;
    for i in 0..d {
        let (rank, required) = (rt.r(i as isize, 1), h[i].min(h[i + 1]));
        if rank < required {
            wlp = false;
            failing.push(FailingMap {
                i,
                j: 1,
                rank,
                required,
            });
        }
    }
    let mut slp = true;
    for (i, &required) in h.iter().enumerate().take(d / 2 + 1) {
        let j = d - 2 * i;
        let rank = rt.r(i as isize, j as isize);
        if rank < required {
            slp = false;
            if j != 1 {
                failing.push(FailingMap {
                    i,
                    j,
                    rank,
                    required,
                });
            }
        }
    }
    failing.sort_by_key(|m| (m.i, m.j));

    let sp = sperner(h);
    let wlp_shape = jt.jordan.num_parts() == sp;
    let slp_shape = jt.jordan == jt.hilbert_dual;
    if wlp != wlp_shape || slp != slp_shape {
        return Err(Error::InternalInconsistency(format!(
            "rank verdicts (WLP {wlp}, SLP {slp}) disagree with Jordan type {} (parts {}, Sperner {sp})",
            jt.jordan,
            jt.jordan.num_parts()
        )));
    }
    let cubic_gap = (d == 3).then(|| h[1] - rt.r(1, 1));
    Ok(LefschetzReport {
        wlp,
        slp,
        sperner: sp,
        jordan: jt.jordan.clone(),
        hilbert_dual: jt.hilbert_dual.clone(),
        failing_maps: failing,
        cubic_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolarity::graded_basis;
    use crate::hessian::{rank_table, GenericRankConfig};
    use crate::jordan::jordan_type;
    use crate::poly::parse_poly;

    fn report(text: &str) -> LefschetzReport {
        let b = graded_basis(&parse_poly(text, None).unwrap()).unwrap();
        let rt = rank_table(&b, &GenericRankConfig::default()).unwrap();
        lefschetz_report(&rt, &jordan_type(&rt).unwrap()).unwrap()
    }

    #[test]
    fn sperner_numbers() {
        assert_eq!(sperner(&[1, 5, 5, 1]), 5);
        assert_eq!(sperner(&[1, 4, 7, 7, 4, 1]), 7);
        assert_eq!(sperner(&[1]), 1);
    }

    #[test]
    fn gaps() {
        assert_eq!(cubic_gap(5, 4).unwrap(), 1);
        assert_eq!(cubic_gap(8, 6).unwrap(), 2);
        assert_eq!(cubic_gap(3, 3).unwrap(), 0);
        assert!(cubic_gap(3, 4).is_err());
    }

    #[test]
    fn perazzo_cubic_fails_both() {
        let r = report("x*u^2 + y*u*v + z*v^2");
        assert!(!r.wlp && !r.slp);
        assert_eq!(r.cubic_gap, Some(1));
        assert_eq!(
            r.failing_maps,
            vec![FailingMap {
                i: 1,
                j: 1,
                rank: 4,
                required: 5
            }]
        );
    }

    #[test]
    fn quintic_fails_wlp_in_the_middle() {
        let r = report("x*u*v^3 + y*u^3*v");
        assert!(!r.wlp);
        assert!(r.failing_maps.iter().any(|m| m.i == 2 && m.j == 1));
    }

    #[test]
    fn quartic_has_wlp_only() {
        let r = report("x1*u^2*v + x2*u*v^2 + x3*u^3 + x4*u*w^2 + x5*u^2*w");
        assert!(r.wlp && !r.slp);
        assert_eq!(
            r.failing_maps,
            vec![FailingMap {
                i: 1,
                j: 2,
                rank: 6,
                required: 8
            }]
        );
    }

    #[test]
    fn general_cubic_has_slp() {
        let r = report("x^3 + y^3 + z^3 + x*y*z + 2*x^2*z");
        assert!(r.wlp && r.slp);
        assert!(r.failing_maps.is_empty());
    }
}
