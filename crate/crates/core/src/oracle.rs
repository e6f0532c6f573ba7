//! Brute-force Jordan type from the full multiplication matrix of `l` on `A`.
//!
//! Nothing here reads a Hessian. Classes in `A_{i+1}` are identified by how
//! they pair with `Q_{d-i-1}`: the square block `S = [(b c)(f)]` over
//! `b ∈ B_{i+1}`, `c ∈ B_{d-i-1}` is invertible, so the coordinates of any
//! operator `γ` are `[(γ c)(f)]_c · S^{-1}`.

use num_traits::Zero;
use serde::Serialize;

use crate::apolarity::{pairing_matrix, GradedAlgebraBasis};
use crate::error::{Error, Result};
use crate::hessian::{sample_points, GenericRankConfig, RankTable, TableHessians};
use crate::jordan::{jordan_type, Partition};
use crate::linalg::{self, QMatrix};
use crate::poly::{LinearForm, Monomial};
use crate::Rational;

/// Matrix of `μ_l` in the graded basis of `A`, degree blocks in order.
#[derive(Clone, Debug)]
pub struct MultiplicationMatrix {
    pub matrix: QMatrix,
    /// Index of the first basis vector of each degree.
    pub offsets: Vec<usize>,
    pub l: LinearForm,
}

impl MultiplicationMatrix {
    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }

    /// `[rank μ_l^0, ..., rank μ_l^{d+1}]`.
    pub fn power_ranks(&self) -> Vec<usize> {
        linalg::matrix_power_ranks(&self.matrix, self.offsets.len())
    }

    /// Only the blocks `A_i -> A_{i+1}` may be nonzero.
    pub fn is_block_superdiagonal(&self) -> bool {
        let degree_of = |idx: usize| self.offsets.partition_point(|&o| o <= idx) - 1;
        (0..self.matrix.rows()).all(|r| {
            (0..self.matrix.cols())
                .all(|c| self.matrix[(r, c)].is_zero() || degree_of(r) == degree_of(c) + 1)
        })
    }
}

pub fn multiplication_matrix(
    basis: &GradedAlgebraBasis,
    l: &LinearForm,
) -> Result<MultiplicationMatrix> {
    let n = basis.num_vars();
    if l.num_vars() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: l.num_vars(),
        });
    }
    let d = basis.socle_degree();
    let mut offsets = Vec::with_capacity(d + 1);
    let mut total = 0;
    for k in 0..=d {
        offsets.push(total);
        total += basis.hilbert()[k];
    }
    let f = basis.f();
    let mut m = QMatrix::zeros(total, total);
    for i in 0..d {
        let target = basis.basis(i + 1);
        let dual = basis.basis(d - i - 1);
        let s_inv = linalg::inverse(&pairing_matrix(f, target, dual)).ok_or_else(|| {
            Error::InternalInconsistency(format!("pairing in degree {} is singular", i + 1))
        })?;
        for (b, beta) in basis.basis(i).iter().enumerate() {
            // pairing vector of l*beta against B_{d-i-1}
            let mut v = vec![Rational::zero(); dual.len()];
            for (k, a) in l.point().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let gamma = [beta.mul(&Monomial::var(n, k))];
                let row = pairing_matrix(f, &gamma, dual);
                for (slot, x) in v.iter_mut().zip(row.row(0)) {
                    *slot += a * x;
                }
            }
            for t in 0..target.len() {
                let mut coord = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        coord += x * &s_inv[(c, t)];
                    }
                }
                m[(offsets[i + 1] + t, offsets[i] + b)] = coord;
            }
        }
    }
    Ok(MultiplicationMatrix {
        matrix: m,
        offsets,
        l: l.clone(),
    })
}

/// Jordan type of `μ_l` from ranks of its powers: part `j` occurs
/// `ρ_{j-1} - 2ρ_j + ρ_{j+1}` times.
pub fn oracle_jordan_type(basis: &GradedAlgebraBasis, l: &LinearForm) -> Result<Partition> {
    let mm = multiplication_matrix(basis, l)?;
    partition_from_power_ranks(&mm.power_ranks())
}

pub fn partition_from_power_ranks(rho: &[usize]) -> Result<Partition> {
    let at = |j: usize| rho.get(j).copied().unwrap_or(0) as i64;
    if at(rho.len() - 1) != 0 {
        return Err(Error::InternalInconsistency(
            "multiplication map is not nilpotent".into(),
        ));
    }
    let mut pairs = Vec::new();
    for j in 1..rho.len() {
        let mult = at(j - 1) - 2 * at(j) + at(j + 1);
        if mult < 0 {
            return Err(Error::InternalInconsistency(format!(
                "ranks of powers {rho:?} are not convex"
            )));
        }
        pairs.push((j, mult as usize));
    }
    Ok(Partition::from_multiplicities(&pairs))
}

#[derive(Clone, Debug, Serialize)]
pub struct PointCheck {
    pub point: Vec<String>,
    pub oracle: Partition,
    pub formula: Partition,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub points: Vec<PointCheck>,
    /// Jordan type of the merged (generic) rank table.
    pub consensus: Partition,
}

fn show_point(p: &[Rational]) -> String {
    let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", coords.join(", "))
}

/// Compares the oracle with the Hessian formula at each of the points the
/// randomized rank table would use.
pub fn cross_check(
    basis: &GradedAlgebraBasis,
    cfg: &GenericRankConfig,
) -> Result<CrossCheckReport> {
    let hs = TableHessians::new(basis)?;
    let mut points = Vec::new();
    let mut merged: Option<RankTable> = None;
    for p in sample_points(basis.f(), cfg)? {
        let table = hs.at(&p)?;
        let formula = jordan_type(&table)?.jordan;
        match &mut merged {
            None => merged = Some(table),
            Some(m) => m.merge_max(&table),
        }
        let oracle = oracle_jordan_type(basis, &LinearForm::new(p.clone())?)?;
        if oracle != formula {
            return Err(Error::Mismatch {
                point: show_point(&p),
                oracle: oracle.to_string(),
                formula: formula.to_string(),
            });
        }
        points.push(PointCheck {
            point: p.iter().map(ToString::to_string).collect(),
            oracle,
            formula,
        });
    }
    let table = if cfg.exact {
        hs.exact()
    } else {
        merged.expect("at least one trial")
    };
    let consensus = jordan_type(&table)?.jordan;
    Ok(CrossCheckReport { points, consensus })
}
