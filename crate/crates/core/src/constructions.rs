//! Perazzo polynomials `f = x_1 g_1 + ... + x_n g_n` and the two gluing
//! operations: the coproduct `f ⨿ f'` (sum in disjoint variables) and the
//! concatenation `f # f'`, which shares one `x` and one `u` variable.
//!
//! When variables of the second operand collide with the first, they are
//! renamed with the smallest free numeric suffix (`v` becomes `v_2`).

use std::collections::HashSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{monomials_of_degree, var_names, Monomial, Poly, VarNames};
use crate::{QMatrix, Rational};

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Construction(msg.into()))
}

/// `Σ x_i g_i` with the `g_i` forms of degree `d - 1` in the `u` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedForm {
    x_vars: Vec<String>,
    u_vars: Vec<String>,
    g: Vec<Poly>,
}

impl BigradedForm {
    /// Checks equal degrees, `n > m` and linear independence of the `g_i`.
    pub fn new(x_vars: Vec<String>, g: Vec<Poly>) -> Result<Self> {
        let Some(first) = g.first() else {
            return err("need at least one summand");
        };
        if x_vars.len() != g.len() {
            return err(format!(
                "{} x-variables for {} summands",
                x_vars.len(),
                g.len()
            ));
        }
        let u_vars: Vec<String> = first.names().to_vec();
        let Some(deg) = first.homogeneous_degree() else {
            return err("summands must be nonzero homogeneous forms");
        };
        for gi in &g {
            if gi.names() != first.names() {
                return err("summands must share the same u-variables");
            }
            if gi.homogeneous_degree() != Some(deg) {
                return err("summands must be homogeneous of one degree");
            }
        }
        if x_vars.len() <= u_vars.len() {
            return err(format!(
                "need more x-variables than u-variables, got n = {}, m = {}",
                x_vars.len(),
                u_vars.len()
            ));
        }
        let all: HashSet<&String> = x_vars.iter().chain(&u_vars).collect();
        if all.len() != x_vars.len() + u_vars.len() {
            return err("variable names must be distinct");
        }
        let monos = monomials_of_degree(u_vars.len(), deg as usize);
        let coeffs = QMatrix::from_fn(g.len(), monos.len(), |r, c| g[r].coefficient(&monos[c]));
        if linalg::rank(&coeffs) < g.len() {
            return err("summands are linearly dependent");
        }
        Ok(BigradedForm { x_vars, u_vars, g })
    }

    /// Splits `f` along the given x-variables, or along the variables that
    /// occur at most linearly in every term when none are given.
    pub fn from_poly(f: &Poly, x_vars: Option<&[String]>) -> Result<Self> {
        let names = f.names();
        let xs: Vec<usize> = match x_vars {
            Some(list) => list
                .iter()
                .map(|x| {
                    names
                        .iter()
                        .position(|v| v == x)
                        .ok_or_else(|| Error::UnknownVariable(x.clone()))
                })
                .collect::<Result<_>>()?,
            None => (0..names.len())
                .filter(|&i| f.terms().all(|(m, _)| m.exponents()[i] <= 1))
                .collect(),
        };
        let us: Vec<usize> = (0..names.len()).filter(|i| !xs.contains(i)).collect();
        for (m, _) in f.terms() {
            if xs.iter().map(|&i| m.exponents()[i]).sum::<u32>() != 1 {
                return err(format!(
                    "every term must be linear in the x-variables {:?}; pass them explicitly",
                    xs.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>()
                ));
            }
        }
        let u_names = var_names(&us.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>());
        let g = xs
            .iter()
            .map(|&i| f.partial(i).restrict(&us, u_names.clone()))
            .collect();
        BigradedForm::new(xs.iter().map(|&i| names[i].clone()).collect(), g)
    }

    pub fn x_vars(&self) -> &[String] {
        &self.x_vars
    }

    pub fn u_vars(&self) -> &[String] {
        &self.u_vars
    }

    pub fn summands(&self) -> &[Poly] {
        &self.g
    }

    /// `d`, one more than the degree of the `g_i`.
    pub fn degree(&self) -> u32 {
        self.g[0].homogeneous_degree().unwrap() + 1
    }

    /// The form in the ring with variables `x_1..x_n, u_1..u_m`.
    pub fn to_poly(&self) -> Poly {
        let (n, m) = (self.x_vars.len(), self.u_vars.len());
        let names = var_names(&self.x_vars.iter().chain(&self.u_vars).collect::<Vec<_>>());
        let map: Vec<usize> = (n..n + m).collect();
        let mut f = Poly::zero(names.clone());
        for (i, g) in self.g.iter().enumerate() {
            f = f + Poly::var(names.clone(), i) * g.embed(names.clone(), &map);
        }
        f
    }
}

/// `Σ x_i g_i` over the x-variable names `names`.
pub fn perazzo(g: Vec<Poly>, names: &[String]) -> Result<Poly> {
    Ok(BigradedForm::new(names.to_vec(), g)?.to_poly())
}

fn strings(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The five-variable Perazzo form of degree `d >= 3`:
/// `x u^{2k} + y u^k v^k + z v^{2k}` for `d = 2k + 1` and
/// `x u^{2k-1} + y u v^{2k-2} + z u^k v^{k-1}` for `d = 2k`.
pub fn perazzo_example(d: u32) -> Result<BigradedForm> {
    if d < 3 {
        return err(format!("perazzo example needs degree at least 3, got {d}"));
    }
    let u = var_names(&["u", "v"]);
    let mono =
        |a: u32, b: u32| Poly::monomial(u.clone(), Monomial::new(vec![a, b]), Rational::one());
    let k = d / 2;
    let g = if d % 2 == 1 {
        vec![mono(2 * k, 0), mono(k, k), mono(0, 2 * k)]
    } else {
        vec![mono(2 * k - 1, 0), mono(1, 2 * k - 2), mono(k, k - 1)]
    };
    BigradedForm::new(strings(&["x", "y", "z"]), g)
}

/// Smallest-suffix renaming of `names` away from `taken`.
fn fresh_names(names: &[String], taken: &HashSet<String>) -> Vec<String> {
    let mut used: HashSet<String> = taken.iter().cloned().chain(names.iter().cloned()).collect();
    names
        .iter()
        .map(|v| {
            if !taken.contains(v) {
                return v.clone();
            }
            let fresh = (2..)
                .map(|k| format!("{v}_{k}"))
                .find(|c| !used.contains(c))
                .unwrap();
            used.insert(fresh.clone());
            fresh
        })
        .collect()
}

/// `f ⨿ f2`: the sum in disjoint variables.
pub fn coproduct(f: &Poly, f2: &Poly) -> Result<Poly> {
    let (d1, d2) = (f.homogeneous_degree(), f2.homogeneous_degree());
    if d1.is_none() || d1 != d2 {
        return err("coproduct needs nonzero forms of equal degree");
    }
    let taken: HashSet<String> = f.names().iter().cloned().collect();
    let second = fresh_names(f2.names(), &taken);
    let names: VarNames = f.names().iter().cloned().chain(second).collect();
    let n1 = f.num_vars();
    let left: Vec<usize> = (0..n1).collect();
    let right: Vec<usize> = (n1..names.len()).collect();
    Ok(f.embed(names.clone(), &left) + f2.embed(names, &right))
}

/// `f # f2 = f + f2 - x_n u_m^{d-1}` with `x'_1 = x_n` and `u'_1 = u_m`.
pub fn concat(f: &BigradedForm, f2: &BigradedForm) -> Result<BigradedForm> {
    let d = f.degree();
    if f2.degree() != d {
        return err("concatenation needs forms of equal degree");
    }
    let (n, m) = (f.x_vars.len(), f.u_vars.len());
    let last = Poly::monomial(
        f.g[n - 1].names().clone(),
        Monomial::new((0..m).map(|i| if i == m - 1 { d - 1 } else { 0 }).collect()),
        Rational::one(),
    );
    if f.g[n - 1] != last {
        return err(format!(
            "first form must end with {}*{}^{}",
            f.x_vars[n - 1],
            f.u_vars[m - 1],
            d - 1
        ));
    }
    let s = f2.u_vars.len();
    let first = Poly::monomial(
        f2.g[0].names().clone(),
        Monomial::new((0..s).map(|i| if i == 0 { d - 1 } else { 0 }).collect()),
        Rational::one(),
    );
    if f2.g[0] != first {
        return err(format!(
            "second form must start with {}*{}^{}",
            f2.x_vars[0],
            f2.u_vars[0],
            d - 1
        ));
    }

    let taken: HashSet<String> = f.x_vars.iter().chain(&f.u_vars).cloned().collect();
    let rest: Vec<String> = f2.x_vars[1..]
        .iter()
        .chain(&f2.u_vars[1..])
        .cloned()
        .collect();
    let fresh = fresh_names(&rest, &taken);
    let (fresh_x, fresh_u) = fresh.split_at(f2.x_vars.len() - 1);
    let x_vars: Vec<String> = f.x_vars.iter().chain(fresh_x).cloned().collect();
    let u_vars: Vec<String> = f.u_vars.iter().chain(fresh_u).cloned().collect();
    let u_names = var_names(&u_vars);
    let left: Vec<usize> = (0..m).collect();
    let right: Vec<usize> = std::iter::once(m - 1).chain(m..m + s - 1).collect();
    // the shared term x_n u_m^{d-1} appears once from each side; keep one
    let mut g: Vec<Poly> =
        f.g.iter()
            .map(|p| p.embed(u_names.clone(), &left))
            .collect();
    g.extend(f2.g[1..].iter().map(|p| p.embed(u_names.clone(), &right)));
    BigradedForm::new(x_vars, g)
}

/// `⨿` of `delta` copies of `perazzo_example(d)`: `5 delta` variables with
/// Hessian corank `delta`.
pub fn rank_drop_family(d: u32, delta: usize) -> Result<Poly> {
    if delta == 0 {
        return err("delta must be at least 1");
    }
    let base = perazzo_example(d)?.to_poly();
    let mut f = base.clone();
    for _ in 1..delta {
        f = coproduct(&f, &base)?;
    }
    Ok(f)
}
