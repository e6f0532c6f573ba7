//! The graded algebra `A = Q / Ann_f` through catalecticant matrices.
//!
//! `Cat_k(f)` is the matrix of the pairing `Q_k x Q_{d-k} -> Q`,
//! `(a, b) -> (X^a X^b)(f)`. Its rank is `dim A_k`, its left kernel is
//! `(Ann_f)_k`, and its greedy independent rows give a monomial basis of `A_k`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, QMatrix};
use crate::poly::{monomials_of_degree, var_names, Monomial, Poly};
use crate::Rational;

fn socle_degree(f: &Poly) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.homogeneous_degree()
        .map(|d| d as usize)
        .ok_or(Error::NotHomogeneous)
}

/// Entry `(a, b)` is the scalar `X^{a+b}(f) = coeff_{a+b}(f) * (a+b)!`.
pub fn catalecticant_matrix(f: &Poly, k: usize) -> Result<QMatrix> {
    let d = socle_degree(f)?;
    if k > d {
        return Err(Error::DegreeOutOfRange { k, d });
    }
    Ok(catalecticant_unchecked(f, d, k))
}

fn catalecticant_unchecked(f: &Poly, d: usize, k: usize) -> QMatrix {
    let rows = monomials_of_degree(f.num_vars(), k);
    let cols = monomials_of_degree(f.num_vars(), d - k);
    pairing_matrix(f, &rows, &cols)
}

/// `[(X^a X^b)(f)]` over arbitrary monomial lists with `|a| + |b| = deg f`.
pub(crate) fn pairing_matrix(f: &Poly, rows: &[Monomial], cols: &[Monomial]) -> QMatrix {
    QMatrix::from_fn(rows.len(), cols.len(), |r, c| {
        let m = rows[r].mul(&cols[c]);
        let coeff = f.coefficient(&m);
        if coeff.is_zero() {
            coeff
        } else {
            coeff * Rational::from_integer(m.factorial())
        }
    })
}

/// Monomial bases of every graded piece of `A = Q / Ann_f`.
#[derive(Clone, Debug)]
pub struct GradedAlgebraBasis {
    f: Poly,
    socle_degree: usize,
    hilbert: Vec<usize>,
    basis_monomials: Vec<Vec<Monomial>>,
}

impl GradedAlgebraBasis {
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    pub fn num_vars(&self) -> usize {
        self.f.num_vars()
    }

    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    /// `dim A`.
    pub fn dimension(&self) -> usize {
        self.hilbert.iter().sum()
    }

    /// Basis monomials of `A_k`; empty above the socle degree.
    pub fn basis(&self, k: usize) -> &[Monomial] {
        self.basis_monomials.get(k).map_or(&[], Vec::as_slice)
    }
}

/// Builds the graded basis of `Q / Ann_f`.
///
/// Fails with [`Error::DegenerateVariables`] when some linear operator
/// annihilates `f`; see [`reduce_essential`].
pub fn graded_basis(f: &Poly) -> Result<GradedAlgebraBasis> {
    let d = socle_degree(f)?;
    if d == 0 {
        return Err(Error::InvalidArgument(
            "f must have degree at least 1".into(),
        ));
    }
    let n = f.num_vars();
    let cat1 = catalecticant_unchecked(f, d, 1);
    let kernel = linalg::kernel_basis(&cat1.transpose());
    if !kernel.is_empty() {
        return Err(Error::DegenerateVariables { kernel });
    }

    let mut basis_monomials = vec![Vec::new(); d + 1];
    // Rows of Cat_k are B_k candidates; columns of Cat_k are the rows of
    // Cat_{d-k}, so one elimination on each side covers both degrees.
    for k in 0..=d / 2 {
        let rows = monomials_of_degree(n, k);
        let cols = monomials_of_degree(n, d - k);
        let cat = pairing_matrix(f, &rows, &cols);
        let low: Vec<Monomial> = linalg::pivot_rows(&cat)
            .into_iter()
            .map(|i| rows[i].clone())
            .collect();
        let high: Vec<Monomial> = linalg::pivot_columns(&cat)
            .into_iter()
            .map(|i| cols[i].clone())
            .collect();
        debug_assert_eq!(low.len(), high.len());
        basis_monomials[d - k] = high;
        basis_monomials[k] = low;
    }
    let hilbert = basis_monomials.iter().map(Vec::len).collect();
    Ok(GradedAlgebraBasis {
        f: f.clone(),
        socle_degree: d,
        hilbert,
        basis_monomials,
    })
}

/// Rewrites `f` in `dim A_1` variables by a linear change of coordinates that
/// kills `(Ann_f)_1`. Returns `f` unchanged when it is already essential.
///
/// The column space of `Cat_1` is the annihilator of `(Ann_f)_1`; with `L` its
/// reduced row echelon basis and `P` the pivot columns, `f(x) = g(Lx)` where
/// `g(y) = f` restricted to `x_P = y`, all other coordinates zero.
pub fn reduce_essential(f: &Poly) -> Result<Poly> {
    let d = socle_degree(f)?;
    let n = f.num_vars();
    let cat1 = catalecticant_unchecked(f, d, 1);
    let (red, pivots) = linalg::rref(&cat1.transpose());
    let m = pivots.len();
    if m == n {
        return Ok(f.clone());
    }
    // the pure coordinate case keeps the surviving names
    let coordinate = (0..m).all(|r| (0..n).all(|c| (c == pivots[r]) == !red[(r, c)].is_zero()));
    let names = if coordinate {
        var_names(
            &pivots
                .iter()
                .map(|&i| f.names()[i].as_str())
                .collect::<Vec<_>>(),
        )
    } else if m == 1 {
        var_names(&["z"])
    } else {
        var_names(&(1..=m).map(|i| format!("z{i}")).collect::<Vec<_>>())
    };
    Ok(f.restrict(&pivots, names))
}

/// `op` lies in `Ann_f`.
pub fn ann_membership(f: &Poly, op: &Poly) -> Result<bool> {
    Ok(crate::poly::contract(op, f)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(text: &str) -> Poly {
        parse_poly(text, None).unwrap()
    }

    fn pv(text: &str, vars: &[&str]) -> Poly {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        parse_poly(text, Some(&vars)).unwrap()
    }

    #[test]
    fn cubic_in_one_variable() {
        let cat = catalecticant_matrix(&p("x^3"), 1).unwrap();
        assert_eq!(cat, QMatrix::from_i64_rows(&[&[6]]));
        let b = graded_basis(&p("x^3")).unwrap();
        assert_eq!(b.hilbert(), &[1, 1, 1, 1]);
        assert_eq!(b.basis(2), &[Monomial::new(vec![2])]);
    }

    #[test]
    fn perazzo_hilbert() {
        let f = p("x*u^2 + y*u*v + z*v^2");
        let cat = catalecticant_matrix(&f, 1).unwrap();
        assert_eq!((cat.rows(), cat.cols()), (5, 15));
        assert_eq!(linalg::rank(&cat), 5);
        assert_eq!(graded_basis(&f).unwrap().hilbert(), &[1, 5, 5, 1]);
    }

    #[test]
    fn quintic_and_quartic_hilbert() {
        let f = p("x*u^3*v + y*u*v^3");
        assert_eq!(linalg::rank(&catalecticant_matrix(&f, 2).unwrap()), 7);
        assert_eq!(graded_basis(&f).unwrap().hilbert(), &[1, 4, 7, 7, 4, 1]);
        let g = p("x1*u^2*v + x2*u*v^2 + x3*u^3 + x4*u*w^2 + x5*u^2*w");
        assert_eq!(graded_basis(&g).unwrap().hilbert(), &[1, 8, 10, 8, 1]);
    }

    #[test]
    fn quintic_basis_matches_known_a2() {
        let f = pv("x*u*v^3 + y*u^3*v", &["x", "y", "u", "v"]);
        let b = graded_basis(&f).unwrap();
        let shown: Vec<String> = b
            .basis(2)
            .iter()
            .map(|m| {
                Poly::monomial(
                    f.names().clone(),
                    m.clone(),
                    Rational::from_integer(1.into()),
                )
                .to_string()
            })
            .collect();
        assert_eq!(shown, ["x*u", "x*v", "y*u", "y*v", "u^2", "u*v", "v^2"]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(graded_basis(&p("0")).unwrap_err(), Error::ZeroPolynomial);
        assert_eq!(
            graded_basis(&p("x^2 + y")).unwrap_err(),
            Error::NotHomogeneous
        );
        assert!(matches!(
            catalecticant_matrix(&p("x^2"), 3),
            Err(Error::DegreeOutOfRange { k: 3, d: 2 })
        ));
        let e = graded_basis(&pv("x^2", &["x", "y"])).unwrap_err();
        assert!(matches!(e, Error::DegenerateVariables { ref kernel } if kernel.len() == 1));
    }

    #[test]
    fn reduction() {
        let r = reduce_essential(&pv("x^2", &["x", "y"])).unwrap();
        assert_eq!(r, pv("x^2", &["x"]));
        let r = reduce_essential(&pv("x^2 + 2*x*y + y^2", &["x", "y"])).unwrap();
        assert_eq!(r, pv("z^2", &["z"]));
        let f = p("x*u^2 + y*u*v + z*v^2");
        assert_eq!(reduce_essential(&f).unwrap(), f);
        // (x+y)^3 + z^3 depends on two linear forms
        let g = reduce_essential(&p("x^3 + 3*x^2*y + 3*x*y^2 + y^3 + z^3")).unwrap();
        assert_eq!(graded_basis(&g).unwrap().hilbert(), &[1, 2, 2, 1]);
    }

    #[test]
    fn membership() {
        let f = pv("x*u^2", &["x", "u", "y"]);
        assert!(ann_membership(&f, &pv("y", &["x", "u", "y"])).unwrap());
        assert!(!ann_membership(&f, &pv("x*u^2", &["x", "u", "y"])).unwrap());
        let vars = ["x", "y", "u", "v"];
        let g = pv("x*u*v^3 + y*u^3*v", &vars);
        assert!(ann_membership(&g, &pv("x*y", &vars)).unwrap());
    }
}
