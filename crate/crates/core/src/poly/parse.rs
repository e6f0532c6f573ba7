//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! poly   := ws term (ws ('+'|'-') ws term)* ws
//! term   := (coeff ('*')?)? factor (('*')? factor)*
//! factor := var ('^' nat)?
//! coeff  := nat ('/' nat)?
//! var    := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! A leading `-` binds to the first term. A bare coefficient is accepted as a
//! constant term so that `"0"` parses.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, Poly, VarNames};
use crate::error::{Error, Result};
use crate::Rational;

struct Term {
    coeff: Rational,
    factors: Vec<(String, u32)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a natural number");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.nat()?;
        u32::try_from(n).or_else(|_| {
            self.pos = at;
            self.err("exponent too large")
        })
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Some(
                std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .to_string(),
            )
        } else {
            None
        }
    }

    fn factor(&mut self) -> Result<Option<(String, u32)>> {
        let Some(name) = self.ident() else {
            return Ok(None);
        };
        let exp = if self.eat(b'^') { self.exponent()? } else { 1 };
        Ok(Some((name, exp)))
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let mut coeff = Rational::from_integer(1.into());
        let mut has_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.nat()?;
            let den = if self.eat(b'/') {
                let at = self.pos;
                let d = self.nat()?;
                if d.is_zero() {
                    self.pos = at;
                    return self.err("zero denominator");
                }
                d
            } else {
                BigInt::from(1)
            };
            coeff = Rational::new(num, den);
            has_coeff = true;
        }
        let mut factors = Vec::new();
        let star_after_coeff = has_coeff && self.eat(b'*');
        match self.factor()? {
            Some(f) => factors.push(f),
            None if star_after_coeff => return self.err("expected a variable after `*`"),
            None if has_coeff => {}
            None => return self.err("expected a term"),
        }
        if !factors.is_empty() {
            loop {
                let save = self.pos;
                let starred = self.eat(b'*');
                match self.factor()? {
                    Some(f) => factors.push(f),
                    None if starred => return self.err("expected a variable after `*`"),
                    None => {
                        self.pos = save;
                        break;
                    }
                }
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok(Term { coeff, factors })
    }

    fn poly(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        terms.push(self.term(negative)?);
        loop {
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term(false)?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(self.term(true)?);
                }
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
        }
        Ok(terms)
    }
}

type Resolved = Vec<(Rational, Vec<(usize, u32)>)>;

fn parse_terms(text: &str, mut resolve: impl FnMut(&str) -> Result<usize>) -> Result<Resolved> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let terms = parser.poly()?;
    let mut resolved = Vec::with_capacity(terms.len());
    for t in terms {
        let mut idx = Vec::with_capacity(t.factors.len());
        for (name, e) in &t.factors {
            idx.push((resolve(name)?, *e));
        }
        resolved.push((t.coeff, idx));
    }
    Ok(resolved)
}

fn build(resolved: Resolved, names: VarNames) -> Poly {
    let n = names.len();
    let monos = resolved.into_iter().map(|(c, idx)| {
        let mut e = vec![0u32; n];
        for (i, x) in idx {
            e[i] += x;
        }
        (Monomial::new(e), c)
    });
    Poly::from_terms(names, monos)
}

/// Parses polynomial text. Variables are indexed by `var_order` when given
/// (unknown names are an error), else by order of first appearance.
pub fn parse_poly(text: &str, var_order: Option<&[String]>) -> Result<Poly> {
    match var_order {
        Some(order) => {
            let resolved = parse_terms(text, |name| {
                order
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))
            })?;
            Ok(build(resolved, order.iter().cloned().collect()))
        }
        None => {
            let mut seen: Vec<String> = Vec::new();
            let resolved = parse_terms(text, |name| {
                Ok(seen.iter().position(|v| v == name).unwrap_or_else(|| {
                    seen.push(name.to_string());
                    seen.len() - 1
                }))
            })?;
            Ok(build(resolved, seen.into()))
        }
    }
}

/// Parses a differential operator in the ring dual to `names`. A name matches
/// variable `x` either verbatim or as its ASCII upper-case form `X`.
pub fn parse_operator(text: &str, names: &VarNames) -> Result<Poly> {
    let resolved = parse_terms(text, |name| {
        names
            .iter()
            .position(|v| v == name)
            .or_else(|| names.iter().position(|v| v.to_ascii_uppercase() == name))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    })?;
    Ok(build(resolved, names.clone()))
}
