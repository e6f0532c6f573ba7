//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] lives in `Q[x_1, ..., x_n]` and the same type represents
//! differential operators in `Q[X_1, ..., X_n]`: [`contract`] lets `X_i` act
//! as the partial derivative in `x_i`. Terms are kept in a `BTreeMap` keyed by
//! [`Monomial`], so iteration order is graded-lex and printing is canonical.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

pub use monomial::{monomials_of_degree, Monomial};
pub use parse::{parse_operator, parse_poly};

use crate::error::{Error, Result};
use crate::linalg::Domain;
use crate::Rational;

/// Shared, immutable list of variable names.
pub type VarNames = Arc<[String]>;

pub fn var_names<S: AsRef<str>>(names: &[S]) -> VarNames {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    names: VarNames,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(names: VarNames) -> Self {
        Poly {
            names,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(names: VarNames, c: Rational) -> Self {
        let n = names.len();
        Poly::from_terms(names, [(Monomial::one(n), c)])
    }

    pub fn var(names: VarNames, i: usize) -> Self {
        let n = names.len();
        Poly::from_terms(names, [(Monomial::var(n, i), Rational::one())])
    }

    pub fn monomial(names: VarNames, m: Monomial, c: Rational) -> Self {
        Poly::from_terms(names, [(m, c)])
    }

    /// Sums the given terms; repeated monomials are combined and zeros dropped.
    pub fn from_terms(
        names: VarNames,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Poly::zero(names);
        for (m, c) in terms {
            assert_eq!(m.num_vars(), p.names.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &VarNames {
        &self.names
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Same polynomial viewed with different variable names.
    pub fn with_names(&self, names: VarNames) -> Poly {
        assert_eq!(names.len(), self.num_vars());
        Poly {
            names,
            terms: self.terms.clone(),
        }
    }

    /// Re-expresses the polynomial in a larger ring: variable `i` becomes
    /// variable `map[i]` of `names`.
    pub fn embed(&self, names: VarNames, map: &[usize]) -> Poly {
        let n = names.len();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial::new(e), c.clone())
        });
        Poly::from_terms(names.clone(), terms)
    }

    /// Sets every variable outside `keep` to zero and drops it.
    pub fn restrict(&self, keep: &[usize], names: VarNames) -> Poly {
        assert_eq!(keep.len(), names.len());
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents();
            let dropped: u32 = (0..e.len())
                .filter(|i| !keep.contains(i))
                .map(|i| e[i])
                .sum();
            (dropped == 0).then(|| {
                (
                    Monomial::new(keep.iter().map(|&i| e[i]).collect()),
                    c.clone(),
                )
            })
        });
        Poly::from_terms(names.clone(), terms)
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::VariableMismatch {
                left: self.num_vars(),
                right: other.num_vars(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.names.clone());
        }
        Poly {
            names: self.names.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(self.names.clone(), Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial(&self, i: usize) -> Poly {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents();
            (e[i] > 0).then(|| {
                let mut ne = e.to_vec();
                ne[i] -= 1;
                (Monomial::new(ne), c * Rational::from_integer(e[i].into()))
            })
        });
        Poly::from_terms(self.names.clone(), terms)
    }

    /// Applies the operator `X^op` to `self`.
    pub fn contract_monomial(&self, op: &Monomial) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| op.divides(m))
            .map(|(m, c)| {
                let w = Rational::from_integer(op.falling_weight(m));
                (op.quotient_of(m), c * w)
            });
        Poly::from_terms(self.names.clone(), terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.num_vars() {
            return Err(Error::ArityMismatch {
                expected: self.num_vars(),
                got: point.len(),
            });
        }
        Ok(self.evaluate_unchecked(point))
    }

    pub(crate) fn evaluate_unchecked(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Exact quotient `self / divisor` when it exists in the polynomial ring.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.names.clone());
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

/// `op(f)`: the differential operator `op` applied to `f`.
pub fn contract(op: &Poly, f: &Poly) -> Result<Poly> {
    op.check_vars(f)?;
    let mut out = Poly::zero(f.names.clone());
    for (om, oc) in &op.terms {
        for (fm, fc) in &f.terms {
            if om.divides(fm) {
                let w = Rational::from_integer(om.falling_weight(fm));
                out.add_term(om.quotient_of(fm), oc * fc * w);
            }
        }
    }
    Ok(out)
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_vars(rhs)
            .expect("adding polynomials over different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_vars(rhs)
            .expect("subtracting polynomials over different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_vars(rhs)
            .expect("multiplying polynomials over different rings");
        let mut out = Poly::zero(self.names.clone());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            names: self.names.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Domain for Poly {
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        Poly::div_exact(self, rhs).expect("inexact polynomial division")
    }
}

/// Canonical text: terms in descending graded-lex order, `*` between all
/// factors, `^` for exponents above one.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{}", self.names[i], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `l = a_1 X_1 + ... + a_n X_n`; its point `l^perp = (a_1, ..., a_n)` is where
/// Hessian entries are evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("linear form is zero".into()));
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        LinearForm::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Parses operator text such as `"X+2*Y"`; both `X` and `x` name the
    /// operator dual to variable `x` of `names`.
    pub fn parse(text: &str, names: &VarNames) -> Result<Self> {
        let p = parse_operator(text, names)?;
        if p.is_zero() {
            return Err(Error::InvalidArgument("linear form is zero".into()));
        }
        if p.homogeneous_degree() != Some(1) {
            return Err(Error::InvalidArgument(format!(
                "`{text}` is not a linear form"
            )));
        }
        let coeffs = (0..names.len())
            .map(|i| p.coefficient(&Monomial::var(names.len(), i)))
            .collect();
        LinearForm::new(coeffs)
    }

    pub fn num_vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn point(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self, names: VarNames) -> Poly {
        let n = names.len();
        Poly::from_terms(
            names,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }
}
