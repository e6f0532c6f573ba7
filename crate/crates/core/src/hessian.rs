//! Mixed Hessians and the generic rank table.
//!
//! `Hess^(k,t) = [(a_i b_j)(f)]` over the bases `B_k`, `B_t` of `A`. Evaluated
//! at `l^perp`, its rank is the rank of multiplication by `l^(d-k-t)` from
//! `A_k` to `A_{d-t}`, so `r(i, j) = rank Hess^(i, d-i-j)(l^perp)` is the rank
//! of `l^j : A_i -> A_{i+j}`.
//!
//! Matrices printed from here can differ from hand computations by nonzero
//! scalars (factorials from the contraction convention and the `(t-k)!`
//! normalisation of the multiplication map). Only ranks are consumed, and they
//! are invariant under such scaling.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::apolarity::GradedAlgebraBasis;
use crate::error::{Error, Result};
use crate::linalg::{self, bareiss, Matrix, QMatrix};
use crate::poly::{Monomial, Poly};
use crate::{PolyMatrix, Rational};

/// Draw limit per trial when resampling points where `f` vanishes.
pub const MAX_DRAWS: usize = 100;

#[derive(Clone, Debug)]
pub struct MixedHessian {
    k: usize,
    t: usize,
    row_basis: Vec<Monomial>,
    col_basis: Vec<Monomial>,
    entries: PolyMatrix,
    f: Poly,
}

/// `Hess^(k,t)` of `f` with respect to the pivot bases of `A_k` and `A_t`.
pub fn mixed_hessian(basis: &GradedAlgebraBasis, k: usize, t: usize) -> Result<MixedHessian> {
    let d = basis.socle_degree();
    if k + t > d {
        return Err(Error::InvalidArgument(format!(
            "mixed order ({k},{t}) exceeds socle degree {d}"
        )));
    }
    let f = basis.f();
    let rows = basis.basis(k).to_vec();
    let cols = basis.basis(t).to_vec();
    let entries = Matrix::from_fn(rows.len(), cols.len(), |r, c| {
        f.contract_monomial(&rows[r].mul(&cols[c]))
    });
    Ok(MixedHessian {
        k,
        t,
        row_basis: rows,
        col_basis: cols,
        entries,
        f: f.clone(),
    })
}

impl MixedHessian {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn row_basis(&self) -> &[Monomial] {
        &self.row_basis
    }

    pub fn col_basis(&self) -> &[Monomial] {
        &self.col_basis
    }

    pub fn entries(&self) -> &PolyMatrix {
        &self.entries
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<QMatrix> {
        if point.len() != self.f.num_vars() {
            return Err(Error::ArityMismatch {
                expected: self.f.num_vars(),
                got: point.len(),
            });
        }
        Ok(self.entries.map(|p| p.evaluate_unchecked(point)))
    }

    pub fn rank_at(&self, point: &[Rational]) -> Result<usize> {
        Ok(linalg::rank(&self.evaluate(point)?))
    }

    /// Rank over the fraction field `Q(x_1, ..., x_n)`, by fraction-free
    /// elimination on the polynomial entries.
    pub fn exact_rank(&self) -> usize {
        if self.entries.rows() == 0 || self.entries.cols() == 0 {
            return 0;
        }
        bareiss(&self.entries).rank
    }

    /// Symbolic determinant `hess^(k,t)`; `None` when not square.
    pub fn determinant(&self) -> Option<Poly> {
        if !self.entries.is_square() {
            return None;
        }
        if self.entries.rows() == 0 {
            return Some(Poly::constant(
                self.f.names().clone(),
                Rational::from_integer(1.into()),
            ));
        }
        linalg::determinant(&self.entries)
    }
}

/// How "a generic `l`" is realised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericRankConfig {
    /// Random points per computation; results are merged by maximum.
    pub trials: usize,
    /// Coordinates are drawn uniformly from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: u64,
    pub seed: u64,
    /// Rank over the fraction field instead of at random points.
    pub exact: bool,
}

pub const DEFAULT_SEED: u64 = 0x00C0_5747_A60D_1A11;

impl Default for GenericRankConfig {
    fn default() -> Self {
        GenericRankConfig {
            trials: 3,
            coeff_bound: 10_000,
            seed: DEFAULT_SEED,
            exact: false,
        }
    }
}

impl GenericRankConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if self.coeff_bound == 0 {
            return Err(Error::InvalidArgument(
                "coefficient bound must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// The seeded points `l^perp` used for every randomized computation on `f`:
/// one per trial, integer coordinates, `f` nonzero at each.
pub fn sample_points(f: &Poly, cfg: &GenericRankConfig) -> Result<Vec<Vec<Rational>>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let bound = cfg.coeff_bound.min(i64::MAX as u64) as i64;
    let mut points = Vec::with_capacity(cfg.trials);
    for _ in 0..cfg.trials {
        let mut found = None;
        for _ in 0..MAX_DRAWS {
            let p: Vec<Rational> = (0..f.num_vars())
                .map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()))
                .collect();
            if !f.evaluate_unchecked(&p).is_zero() {
                found = Some(p);
                break;
            }
        }
        points.push(found.ok_or(Error::GenericityFailure(MAX_DRAWS))?);
    }
    Ok(points)
}

/// Generic rank of a polynomial matrix.
pub fn generic_rank(h: &MixedHessian, cfg: &GenericRankConfig) -> Result<usize> {
    if cfg.exact {
        return Ok(h.exact_rank());
    }
    let mut best = 0;
    for p in sample_points(&h.f, cfg)? {
        best = best.max(h.rank_at(&p)?);
    }
    Ok(best)
}

/// Ranks `r(i, j)` of `l^j : A_i -> A_{i+j}`.
///
/// Stored for `0 <= i <= d`, `0 <= j <= d - i`; other indices follow the
/// boundary conventions `r(i, 0) = dim A_i` and zero outside the range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    socle_degree: usize,
    hilbert: Vec<usize>,
    ranks: Vec<Vec<usize>>,
}

impl RankTable {
    /// Builds a table from `(i, j) -> rank` for `j >= 1`, `i + j <= d`.
    pub fn from_fn(hilbert: &[usize], mut cell: impl FnMut(usize, usize) -> usize) -> Self {
        let d = hilbert.len() - 1;
        let ranks = (0..=d)
            .map(|i| {
                (0..=d - i)
                    .map(|j| if j == 0 { hilbert[i] } else { cell(i, j) })
                    .collect()
            })
            .collect();
        RankTable {
            socle_degree: d,
            hilbert: hilbert.to_vec(),
            ranks,
        }
    }

    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    /// `r(i, j)` with the boundary conventions applied.
    pub fn r(&self, i: isize, j: isize) -> usize {
        if i < 0 || j < 0 {
            return 0;
        }
        let (i, j) = (i as usize, j as usize);
        if i + j > self.socle_degree {
            return 0;
        }
        self.ranks[i][j]
    }

    /// `k(i, j) = dim ker(l^j : A_i -> A_{i+j})`.
    pub fn kernel_dim(&self, i: isize, j: isize) -> usize {
        if i < 0 || i as usize > self.socle_degree {
            return 0;
        }
        self.hilbert[i as usize] - self.r(i, j)
    }

    /// All stored cells with `j >= 1`, as `(i, j, r)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().skip(1).map(move |(j, &r)| (i, j, r)))
    }

    pub(crate) fn merge_max(&mut self, other: &RankTable) {
        for (row, orow) in self.ranks.iter_mut().zip(&other.ranks) {
            for (a, b) in row.iter_mut().zip(orow) {
                *a = (*a).max(*b);
            }
        }
    }

    /// Checks monotonicity in `j`, the duality `r(i,j) = r(d-i-j, j)` and the
    /// size bounds. Returns a description of the first violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let d = self.socle_degree as isize;
        for (i, j, r) in self.cells() {
            let (ii, jj) = (i as isize, j as isize);
            if r > self.r(ii, jj - 1) {
                return Err(format!("r({i},{j}) = {r} exceeds r({i},{})", j - 1));
            }
            let dual = self.r(d - ii - jj, jj);
            if r != dual {
                return Err(format!(
                    "r({i},{j}) = {r} but r({},{j}) = {dual}",
                    d - ii - jj
                ));
            }
            if r > self.hilbert[i].min(self.hilbert[i + j]) {
                return Err(format!("r({i},{j}) = {r} exceeds the dimensions"));
            }
        }
        Ok(())
    }
}

impl Serialize for RankTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cells: Vec<[usize; 3]> = self.cells().map(|(i, j, r)| [i, j, r]).collect();
        let mut st = s.serialize_struct("RankTable", 3)?;
        st.serialize_field("socle_degree", &self.socle_degree)?;
        st.serialize_field("hilbert", &self.hilbert)?;
        st.serialize_field("ranks", &cells)?;
        st.end()
    }
}

/// Every mixed Hessian the rank table needs: cell `(i, j)` reads
/// `Hess^(i, d-i-j)`.
pub struct TableHessians {
    hilbert: Vec<usize>,
    cells: Vec<(usize, usize, MixedHessian)>,
}

impl TableHessians {
    pub fn new(basis: &GradedAlgebraBasis) -> Result<Self> {
        let d = basis.socle_degree();
        let mut cells = Vec::new();
        for i in 0..=d {
            for j in 1..=d - i {
                cells.push((i, j, mixed_hessian(basis, i, d - i - j)?));
            }
        }
        Ok(TableHessians {
            hilbert: basis.hilbert().to_vec(),
            cells,
        })
    }

    fn table(&self, mut rank: impl FnMut(&MixedHessian) -> Result<usize>) -> Result<RankTable> {
        let mut values = std::collections::HashMap::new();
        for (i, j, h) in &self.cells {
            values.insert((*i, *j), rank(h)?);
        }
        Ok(RankTable::from_fn(&self.hilbert, |i, j| values[&(i, j)]))
    }

    pub fn at(&self, point: &[Rational]) -> Result<RankTable> {
        self.table(|h| h.rank_at(point))
    }

    pub fn exact(&self) -> RankTable {
        self.table(|h| Ok(h.exact_rank()))
            .expect("exact ranks are infallible")
    }
}

/// Rank table at one explicit point `l^perp`.
pub fn rank_table_at(basis: &GradedAlgebraBasis, point: &[Rational]) -> Result<RankTable> {
    TableHessians::new(basis)?.at(point)
}

/// The generic rank table. In randomized mode every cell of one trial is
/// evaluated at the same point, and trials are merged cell-wise by maximum.
pub fn rank_table(basis: &GradedAlgebraBasis, cfg: &GenericRankConfig) -> Result<RankTable> {
    let hs = TableHessians::new(basis)?;
    if cfg.exact {
        return Ok(hs.exact());
    }
    let mut merged: Option<RankTable> = None;
    for p in sample_points(basis.f(), cfg)? {
        let t = hs.at(&p)?;
        match &mut merged {
            None => merged = Some(t),
            Some(m) => m.merge_max(&t),
        }
    }
    Ok(merged.expect("at least one trial"))
}
