//! Exact matrices over integral domains.
//!
//! [`Matrix`] is generic over any [`Domain`]: a commutative ring without zero
//! divisors in which division known to be exact can be carried out. Rank and
//! determinant use fraction-free (Bareiss) elimination, so the same code runs
//! over the integers, the rationals and multivariate polynomials. Rational
//! matrices are cleared of denominators row by row before elimination, which
//! keeps intermediate entries as integer minors of the input.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Integral domain with exact division.
///
/// `div_exact` is only ever called when the quotient is known to exist in the
/// domain; implementations may panic otherwise.
pub trait Domain: Clone + PartialEq + fmt::Debug {
    fn is_nil(&self) -> bool;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn div_exact(&self, rhs: &Self) -> Self;
}

macro_rules! impl_domain_num {
    ($($t:ty),*) => {$(
        impl Domain for $t {
            fn is_nil(&self) -> bool {
                Zero::is_zero(self)
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
                self / rhs
            }
        }
    )*};
}

impl_domain_num!(BigInt, Rational);

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. Panics if rows have unequal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self[(rows[r], c)].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

/// Outcome of fraction-free elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct Echelon<T> {
    pub rank: usize,
    /// Columns holding a pivot, ascending. These are the greedy
    /// left-to-right independent columns of the input.
    pub pivot_cols: Vec<usize>,
    /// Determinant for square input (zero when singular).
    pub determinant: Option<T>,
}

/// Fraction-free Gaussian elimination (Bareiss).
///
/// Pivot search takes the first nonzero entry in the current column, scanning
/// rows top to bottom; columns without a pivot are skipped. Every division is
/// exact because each updated entry is a minor of the input.
pub fn bareiss<T: Domain>(m: &Matrix<T>) -> Echelon<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev: Option<T> = None;
    let mut k = 0;
    let mut negate = false;
    let mut pivot_cols = Vec::new();

    for c in 0..cols {
        if k == rows {
            break;
        }
        let Some(p) = (k..rows).find(|&r| !a[(r, c)].is_nil()) else {
            continue;
        };
        if p != k {
            a.swap_rows(p, k);
            negate = !negate;
        }
        let pivot = a[(k, c)].clone();
        for i in k + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let mut v = pivot.mul_ref(&a[(i, j)]);
                if !lead.is_nil() {
                    v = v.sub_ref(&lead.mul_ref(&a[(k, j)]));
                }
                if let Some(d) = &prev {
                    v = v.div_exact(d);
                }
                a[(i, j)] = v;
            }
            if !lead.is_nil() {
                a[(i, c)] = lead.sub_ref(&lead);
            }
        }
        prev = Some(pivot);
        pivot_cols.push(c);
        k += 1;
    }

    let determinant = if rows == cols && rows > 0 {
        if k == rows {
            let d = prev.expect("nonempty pivot chain");
            Some(if negate { d.neg_ref() } else { d })
        } else {
            Some(m[(0, 0)].sub_ref(&m[(0, 0)]))
        }
    } else {
        None
    };

    Echelon {
        rank: k,
        pivot_cols,
        determinant,
    }
}

/// Determinant of a square matrix over a domain; `None` for non-square or
/// empty input.
pub fn determinant<T: Domain>(m: &Matrix<T>) -> Option<T> {
    bareiss(m).determinant
}

pub type QMatrix = Matrix<Rational>;
pub type ZMatrix = Matrix<BigInt>;

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Row-wise denominator clearing: each row is scaled by the lcm of its
    /// denominators. Rank and pivot columns are preserved.
    pub fn to_integer_rows(&self) -> ZMatrix {
        let mut out = Vec::with_capacity(self.rows);
        for row in self.iter_rows() {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            out.push(
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect::<Vec<_>>(),
            );
        }
        if self.rows == 0 {
            return Matrix {
                rows: 0,
                cols: self.cols,
                data: Vec::new(),
            };
        }
        Matrix::from_rows(out)
    }

    /// Product that skips zero entries of the left factor; multiplication
    /// matrices are block-superdiagonal and mostly zero.
    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

/// Exact rank over the rationals via Bareiss elimination on the
/// denominator-cleared matrix.
pub fn rank(m: &QMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    bareiss(&m.to_integer_rows()).rank
}

/// Greedy independent columns, in order.
pub fn pivot_columns(m: &QMatrix) -> Vec<usize> {
    if m.rows == 0 || m.cols == 0 {
        return Vec::new();
    }
    bareiss(&m.to_integer_rows()).pivot_cols
}

/// Greedy independent rows, in order.
pub fn pivot_rows(m: &QMatrix) -> Vec<usize> {
    pivot_columns(&m.transpose())
}

/// Reduced row echelon form by ordinary rational Gauss-Jordan elimination.
/// Returns the reduced matrix and its pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut k = 0;
    for c in 0..a.cols {
        if k == a.rows {
            break;
        }
        let Some(p) = (k..a.rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, k);
        let inv = a[(k, c)].recip();
        for j in c..a.cols {
            let v = &a[(k, j)] * &inv;
            a[(k, j)] = v;
        }
        for i in 0..a.rows {
            if i == k || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..a.cols {
                let v = &a[(k, j)] * &factor;
                a[(i, j)] -= v;
            }
        }
        pivots.push(c);
        k += 1;
    }
    (a, pivots)
}

/// Rank by ordinary rational elimination. Kept alongside [`rank`] as an
/// independent route.
pub fn rank_naive(m: &QMatrix) -> usize {
    rref(m).1.len()
}

/// Basis of the right null space `{v : m v = 0}`; one vector per free column.
pub fn kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    let mut free = Vec::new();
    for c in 0..m.cols {
        if pivot_iter.peek() == Some(&&c) {
            pivot_iter.next();
        } else {
            free.push(c);
        }
    }
    for &fc in &free {
        let mut v = vec![Rational::zero(); m.cols];
        v[fc] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r[(row, fc)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square rational matrix, `None` when singular.
pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows;
    let aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
}

/// `[rank(m^0), rank(m^1), ..., rank(m^max_power)]` for square `m`.
pub fn matrix_power_ranks(m: &QMatrix, max_power: usize) -> Vec<usize> {
    assert!(m.is_square(), "matrix_power_ranks needs a square matrix");
    let mut ranks = vec![m.rows];
    let mut power = QMatrix::identity(m.rows);
    for _ in 0..max_power {
        if *ranks.last().unwrap() == 0 {
            ranks.push(0);
            continue;
        }
        power = power.mul(m);
        ranks.push(rank(&power));
    }
    ranks
}

/// Scale a rational vector to a primitive integer vector with positive
/// leading entry. Useful for printing kernel vectors.
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| {
            if x.is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            }
        });
    ints.into_iter().map(|x| x / &g * &sign).collect()
}
