use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

/// Exponent vector of a monomial; doubles as the exponent vector of a
/// differential operator `X^a`.
///
/// Ordered graded-lexicographically with the first variable heaviest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    /// `prod_i e_i!`, the constant `X^e (x^e)`.
    pub fn factorial(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, &e| acc * factorial(e))
    }

    /// Falling-factorial weight of `X^self` acting on `x^target`:
    /// `prod_i b_i! / (b_i - a_i)!`. Caller guarantees divisibility.
    pub fn falling_weight(&self, target: &Monomial) -> BigInt {
        let mut w = BigInt::one();
        for (&a, &b) in self.0.iter().zip(&target.0) {
            for k in (b - a + 1)..=b {
                w *= k;
            }
        }
        w
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// All monomials of total degree `k` in `num_vars` variables, in descending
/// graded-lex order (first variable heaviest).
pub fn monomials_of_degree(num_vars: usize, k: usize) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if pos == n - 1 {
            cur[pos] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if num_vars == 0 {
        return if k == 0 {
            vec![Monomial(Vec::new())]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(0, k as u32, &mut vec![0; num_vars], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_in_grlex_descending() {
        let m = |v: &[u32]| Monomial::new(v.to_vec());
        assert_eq!(monomials_of_degree(2, 1), vec![m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(
            monomials_of_degree(2, 2),
            vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        assert_eq!(monomials_of_degree(3, 0), vec![m(&[0, 0, 0])]);
        let all = monomials_of_degree(4, 3);
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn falling_weight_matches_derivative() {
        // X^2 acting on x^3 gives 3*2 x
        let a = Monomial::new(vec![2]);
        let b = Monomial::new(vec![3]);
        assert_eq!(a.falling_weight(&b), BigInt::from(6));
        assert_eq!(b.factorial(), BigInt::from(6));
    }
}
