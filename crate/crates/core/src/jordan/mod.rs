//! Jordan type of multiplication by a linear form, read off the rank table.
//!
//! `e(i, j)` counts the strings of length `j` starting in degree `i`;
//! `e(i, j) = r(i, j-1) - r(i, j) - r(i-1, j) + r(i-1, j+1)` and the Jordan type
//! is `⊕_j j^{e_j}` with `e_j = Σ_i e(i, j)`.

mod partition;

pub use partition::Partition;

use num_traits::Zero;
use serde::Serialize;

use crate::apolarity::GradedAlgebraBasis;
use crate::error::{Error, Result};
use crate::hessian::{rank_table_at, RankTable};
use crate::poly::LinearForm;

/// String counts `e(i, j)` for `0 <= i <= d`, `1 <= j <= d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EijTable {
    socle_degree: usize,
    e: Vec<Vec<usize>>,
}

impl EijTable {
    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    /// `e(i, j)`, zero outside the stored range.
    pub fn e(&self, i: usize, j: usize) -> usize {
        if i > self.socle_degree || j == 0 || j > self.socle_degree + 1 {
            return 0;
        }
        self.e[i][j - 1]
    }

    /// `e_j`, the number of strings of length `j`.
    pub fn e_j(&self, j: usize) -> usize {
        (0..=self.socle_degree).map(|i| self.e(i, j)).sum()
    }

    /// Nonzero entries as `(start, length, count)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.e.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(move |(j, &c)| (i, j + 1, c))
        })
    }

    /// Vanishing above `d - j`, the string symmetry `e(i,j) = e(d-i-j+1, j)`,
    /// the single full string, the tiling of `dim A` and the kernel-sum
    /// identity `Σ_{s<=j} e(i,s) = k(i,j) - k(i-1,j+1) + k(i-1,1)`.
    pub fn check_invariants(&self, rt: &RankTable) -> std::result::Result<(), String> {
        let d = self.socle_degree;
        for i in 0..=d {
            for j in 1..=d + 1 {
                let e = self.e(i, j);
                if i + j > d + 1 {
                    if e != 0 {
                        return Err(format!("e({i},{j}) = {e} beyond degree {d}"));
                    }
                } else if e != self.e(d + 1 - i - j, j) {
                    return Err(format!("e({i},{j}) is not symmetric"));
                }
                let lhs: usize = (1..=j).map(|s| self.e(i, s)).sum();
                let (ii, jj) = (i as isize, j as isize);
                let rhs = rt.kernel_dim(ii, jj) as isize - rt.kernel_dim(ii - 1, jj + 1) as isize
                    + rt.kernel_dim(ii - 1, 1) as isize;
                if lhs as isize != rhs {
                    return Err(format!("kernel-sum identity fails at ({i},{j})"));
                }
            }
        }
        if self.e(0, d + 1) != 1 {
            return Err("expected exactly one string of full length".into());
        }
        let tiled: usize = (1..=d + 1).map(|j| j * self.e_j(j)).sum();
        let dim: usize = rt.hilbert().iter().sum();
        if tiled != dim {
            return Err(format!("strings cover {tiled} cells, dim A = {dim}"));
        }
        Ok(())
    }
}

/// Applies the string-count formula to every cell.
pub fn eij_table(rt: &RankTable) -> Result<EijTable> {
    let d = rt.socle_degree();
    let r =
        |i: usize, j: usize, di: isize, dj: isize| rt.r(i as isize + di, j as isize + dj) as i64;
    let mut e = vec![vec![0; d + 1]; d + 1];
    for (i, row) in e.iter_mut().enumerate() {
        for j in 1..=d + 1 {
            let value = r(i, j, 0, -1) - r(i, j, 0, 0) - r(i, j, -1, 0) + r(i, j, -1, 1);
            if value < 0 {
                return Err(Error::NonGenericRankTable { i, j, value });
            }
            row[j - 1] = value as usize;
        }
    }
    Ok(EijTable { socle_degree: d, e })
}

/// `e_j` by the parity-split closed form in the rank table, using the
/// duality `r(i, j) = r(d-i-j, j)` to fold the sums in half.
pub fn ej_closed_form(rt: &RankTable, j: usize) -> i64 {
    let d = rt.socle_degree();
    if j == d + 1 {
        return 1;
    }
    if j == 0 || j >= d {
        return 0;
    }
    let r = |s: usize, k: usize| rt.r(s as isize, k as isize) as i64;
    let m = (d - j) / 2;
    let sum = |k: usize, upto: usize| (0..=upto).map(|s| r(s, k)).sum::<i64>();
    let head = 2 * sum(j - 1, m) - 4 * sum(j, m);
    if (d - j).is_multiple_of(2) {
        let tail = if m == 0 { 0 } else { sum(j + 1, m - 1) };
        head + 2 * tail + 2 * r(m, j)
    } else {
        head + 2 * sum(j + 1, m) + r(m + 1, j - 1) - r(m, j + 1)
    }
}

/// Everything computed on the way from ranks to a Jordan type.
#[derive(Clone, Debug, Serialize)]
pub struct JordanTypeReport {
    pub hilbert: Vec<usize>,
    pub rank_table: RankTable,
    #[serde(skip)]
    pub eij: EijTable,
    pub jordan: Partition,
    pub hilbert_dual: Partition,
}

impl JordanTypeReport {
    /// `e_j` for `j = 1..=d+1`.
    pub fn string_counts(&self) -> Vec<usize> {
        (1..=self.hilbert.len()).map(|j| self.eij.e_j(j)).collect()
    }

    /// Rank-table and string invariants, the partition total, and
    /// `jordan ⪯ hilbert_dual` for unimodal Hilbert vectors.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        self.rank_table.check_invariants()?;
        self.eij.check_invariants(&self.rank_table)?;
        let dim: usize = self.hilbert.iter().sum();
        if self.jordan.total() != dim {
            return Err(format!(
                "Jordan type {} does not partition {dim}",
                self.jordan
            ));
        }
        if is_unimodal(&self.hilbert)
            && !self
                .jordan
                .leq(&self.hilbert_dual)
                .map_err(|e| e.to_string())?
        {
            return Err(format!(
                "{} is not below {}",
                self.jordan, self.hilbert_dual
            ));
        }
        Ok(())
    }
}

pub fn is_unimodal(h: &[usize]) -> bool {
    let peak = h
        .iter()
        .enumerate()
        .max_by_key(|(_, &v)| v)
        .map_or(0, |(i, _)| i);
    h[..=peak].windows(2).all(|w| w[0] <= w[1]) && h[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// Jordan type from a rank table.
pub fn jordan_type(rt: &RankTable) -> Result<JordanTypeReport> {
    rt.check_invariants().map_err(Error::InvalidRankProfile)?;
    let eij = eij_table(rt)?;
    let d = rt.socle_degree();
    let mut pairs = Vec::with_capacity(d + 1);
    for j in 1..=d + 1 {
        let summed = eij.e_j(j);
        let closed = ej_closed_form(rt, j);
        if closed != summed as i64 {
            return Err(Error::InternalInconsistency(format!(
                "e_{j}: summed {summed}, closed form {closed}"
            )));
        }
        pairs.push((j, summed));
    }
    let hilbert = rt.hilbert().to_vec();
    Ok(JordanTypeReport {
        hilbert_dual: Partition::from_hilbert(&hilbert).dual(),
        hilbert,
        rank_table: rt.clone(),
        eij,
        jordan: Partition::from_multiplicities(&pairs),
    })
}

/// Jordan type for a specific `l`, which must satisfy `f(l^perp) != 0`.
pub fn jordan_type_at(basis: &GradedAlgebraBasis, l: &LinearForm) -> Result<JordanTypeReport> {
    if basis.f().evaluate(l.point())?.is_zero() {
        return Err(Error::DegenerateLinearForm);
    }
    jordan_type(&rank_table_at(basis, l.point())?)
}

fn profile(pairs: &[(usize, i64)]) -> Result<Partition> {
    if let Some((p, m)) = pairs.iter().find(|(_, m)| *m < 0) {
        return Err(Error::InvalidRankProfile(format!(
            "part {p} would have multiplicity {m}"
        )));
    }
    Ok(Partition::from_multiplicities(
        &pairs
            .iter()
            .map(|&(p, m)| (p, m as usize))
            .collect::<Vec<_>>(),
    ))
}

fn c(v: usize) -> i64 {
    v as i64
}

/// Socle degree 3: `4 ⊕ 2^{r-1} ⊕ 1^{2(n-r)}` with `r = rk Hess_f`.
pub fn closed_form_d3(n: usize, r: usize) -> Result<Partition> {
    if r < 1 || r > n {
        return Err(Error::InvalidRankProfile(format!(
            "need 1 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    profile(&[(4, 1), (2, c(r) - 1), (1, 2 * (c(n) - c(r)))])
}

/// Socle degree 4 with `r = r(1,2)` and `s = r(1,1)`:
/// `5 ⊕ 3^{r-1} ⊕ 2^{2(s-r)} ⊕ 1^{2n+a-4s+r}`.
pub fn closed_form_d4(n: usize, a: usize, r: usize, s: usize) -> Result<Partition> {
    if r > s || s > n.min(a) {
        return Err(Error::InvalidRankProfile(format!(
            "need r <= s <= min(n, a), got r = {r}, s = {s}, n = {n}, a = {a}"
        )));
    }
    let (n, a, r, s) = (c(n), c(a), c(r), c(s));
    profile(&[
        (5, 1),
        (3, r - 1),
        (2, 2 * (s - r)),
        (1, 2 * n + a - 4 * s + r),
    ])
}

/// Socle degree 5 with `r = r(1,3)`, `p = r(1,2)`, `q = r(2,1)`, `s = r(1,1)`:
/// `6 ⊕ 4^{r-1} ⊕ 3^{2(p-r)} ⊕ 2^{2s-4p+q+r} ⊕ 1^{2n+2a-4s-2q+2p}`.
pub fn closed_form_d5(
    n: usize,
    a: usize,
    r: usize,
    p: usize,
    q: usize,
    s: usize,
) -> Result<Partition> {
    if r > p || p > s || s > n {
        return Err(Error::InvalidRankProfile(format!(
            "need r <= p <= s <= n, got r = {r}, p = {p}, s = {s}, n = {n}"
        )));
    }
    let (n, a, r, p, q, s) = (c(n), c(a), c(r), c(p), c(q), c(s));
    profile(&[
        (6, 1),
        (4, r - 1),
        (3, 2 * (p - r)),
        (2, 2 * s - 4 * p + q + r),
        (1, 2 * n + 2 * a - 4 * s - 2 * q + 2 * p),
    ])
}

/// The closed form matching the socle degree of `rt`, with its parameters
/// read from the table; `None` outside degrees 3 to 5.
pub fn closed_form(rt: &RankTable) -> Option<Result<Partition>> {
    let h = rt.hilbert();
    let r = |i, j| rt.r(i, j);
    match rt.socle_degree() {
        3 => Some(closed_form_d3(h[1], r(1, 1))),
        4 => Some(closed_form_d4(h[1], h[2], r(1, 2), r(1, 1))),
        5 => Some(closed_form_d5(
            h[1],
            h[2],
            r(1, 3),
            r(1, 2),
            r(2, 1),
            r(1, 1),
        )),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolarity::graded_basis;
    use crate::hessian::{rank_table, GenericRankConfig};
    use crate::poly::parse_poly;

    fn report(text: &str) -> JordanTypeReport {
        let b = graded_basis(&parse_poly(text, None).unwrap()).unwrap();
        jordan_type(&rank_table(&b, &GenericRankConfig::default()).unwrap()).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    const PERAZZO: &str = "x*u^2 + y*u*v + z*v^2";

    #[test]
    fn chain_has_one_string() {
        let rep = report("x^3");
        assert_eq!(rep.eij.nonzero().collect::<Vec<_>>(), vec![(0, 4, 1)]);
        assert_eq!(rep.jordan, part("4^1"));
        assert_eq!(ej_closed_form(&rep.rank_table, 1), 0);
    }

    #[test]
    fn perazzo_strings() {
        let rep = report(PERAZZO);
        let e = &rep.eij;
        assert_eq!((e.e(1, 1), e.e(2, 1), e.e(1, 2), e.e(0, 4)), (1, 1, 3, 1));
        assert_eq!(ej_closed_form(&rep.rank_table, 1), 2);
        assert_eq!(ej_closed_form(&rep.rank_table, 2), 3);
        assert_eq!(rep.jordan, part("4^1 + 2^3 + 1^2"));
        rep.check_invariants().unwrap();
    }

    #[test]
    fn larger_cubics() {
        let g = report("x1*u^2 + x2*u*v + x3*v^2 + x4*v*w + x5*w^2");
        assert_eq!(g.jordan, part("4^1 + 2^5 + 1^4"));
        let h = report("x1*u1^2 + x2*u1*u2 + x3*u2^2 + x4*u2*u3 + x5*u3^2 + x6*u3*u1");
        assert_eq!(h.jordan, part("4^1 + 2^5 + 1^6"));
    }

    #[test]
    fn quartic_with_wlp() {
        let rep = report("x1*u^2*v + x2*u*v^2 + x3*u^3 + x4*u*w^2 + x5*u^2*w");
        let e = &rep.eij;
        assert_eq!(e.e(2, 1), 0);
        assert_eq!((e.e(1, 2), e.e(2, 2)), (2, 2));
        assert_eq!(e.e(1, 3), 5);
        assert_eq!(rep.jordan, part("5^1 + 3^5 + 2^4"));
        assert_eq!(closed_form(&rep.rank_table).unwrap().unwrap(), rep.jordan);
    }

    #[test]
    fn quintic_follows_its_ranks() {
        let rep = report("x*u^3*v + y*u*v^3");
        assert_eq!(ej_closed_form(&rep.rank_table, 1), 2);
        assert_eq!(rep.jordan, part("6^1 + 4^3 + 2^2 + 1^2"));
        assert_eq!(closed_form(&rep.rank_table).unwrap().unwrap(), rep.jordan);
    }

    #[test]
    fn wlp_quintic_has_no_singletons() {
        // x^5 + y^5 has the strong Lefschetz property
        let rep = report("x^5 + y^5");
        assert_eq!(ej_closed_form(&rep.rank_table, 1), 0);
        assert_eq!(rep.jordan, part("6 + 4"));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_d3(5, 4).unwrap(), part("4 + 2^3 + 1^2"));
        assert_eq!(closed_form_d3(6, 6).unwrap(), part("4 + 2^5"));
        assert_eq!(closed_form_d3(8, 6).unwrap(), part("4 + 2^5 + 1^4"));
        assert!(closed_form_d3(3, 4).is_err());
        assert_eq!(closed_form_d4(8, 10, 6, 8).unwrap(), part("5 + 3^5 + 2^4"));
        assert_eq!(closed_form_d4(4, 7, 4, 4).unwrap(), part("5 + 3^3 + 1^3"));
        assert_eq!(
            closed_form_d4(5, 9, 4, 5).unwrap(),
            part("5 + 3^3 + 2^2 + 1^3")
        );
        assert_eq!(
            closed_form_d5(4, 7, 4, 4, 6, 4).unwrap(),
            part("6 + 4^3 + 2^2 + 1^2")
        );
        assert_eq!(
            closed_form_d5(3, 5, 2, 3, 5, 3).unwrap(),
            part("6 + 4 + 3^2 + 2")
        );
        assert_eq!(closed_form_d5(4, 7, 1, 1, 3, 1).unwrap().multiplicity(4), 0);
        assert!(matches!(
            closed_form_d5(4, 7, 4, 4, 0, 4),
            Err(Error::InvalidRankProfile(_))
        ));
    }

    #[test]
    fn explicit_linear_forms() {
        let b = graded_basis(&parse_poly("x^3", None).unwrap()).unwrap();
        let x = LinearForm::parse("X", b.f().names()).unwrap();
        assert_eq!(jordan_type_at(&b, &x).unwrap().jordan, part("4"));

        let b = graded_basis(&parse_poly(PERAZZO, None).unwrap()).unwrap();
        let all = LinearForm::parse("X+Y+Z+U+V", b.f().names()).unwrap();
        assert_eq!(
            jordan_type_at(&b, &all).unwrap().jordan,
            part("4 + 2^3 + 1^2")
        );
        let x = LinearForm::parse("X", b.f().names()).unwrap();
        assert_eq!(
            jordan_type_at(&b, &x).unwrap_err(),
            Error::DegenerateLinearForm
        );
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&[1, 4, 7, 7, 4, 1]));
        assert!(is_unimodal(&[1, 1]));
        assert!(!is_unimodal(&[1, 3, 2, 3, 1]));
    }
}
