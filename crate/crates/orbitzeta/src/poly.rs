//! Exact bivariate (Laurent-capable) polynomials over the integers.
//!
//! Terms live in a BTreeMap keyed by the exponent pair (lex order on
//! (x-exp, q-exp)), with nonzero BigInt coefficients only, so equality and
//! serialization are canonical. Negative exponents are permitted (they arise
//! from [`BivarPoly::substitute_inverse`]); [`BivarPoly::exact_divide`]
//! requires honest polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in two variables with arbitrary-precision integer
/// coefficients. The default display variables are x and q.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::monomial(0, 0, BigInt::one())
    }

    /// c * x^i * q^j (the zero coefficient gives the zero polynomial).
    pub fn monomial(i: i64, j: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((i, j), coeff);
        }
        BivarPoly { terms }
    }

    /// 1 - x^a q^b.
    pub fn one_minus(a: i64, b: i64) -> Self {
        &BivarPoly::one() - &BivarPoly::monomial(a, b, BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, i64), BigInt)>>(iter: I) -> Self {
        let mut p = BivarPoly::zero();
        for ((i, j), c) in iter {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    /// Adds c * x^i q^j in place, dropping the term if it cancels.
    pub fn add_term(&mut self, i: i64, j: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Largest x-exponent, or None for the zero polynomial.
    pub fn x_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Largest q-exponent, or None for the zero polynomial.
    pub fn q_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|&(i, j)| i < 0 || j < 0)
    }

    /// The coefficient of x^i, as a polynomial in q.
    pub fn coeff_of_x(&self, i: i64) -> BivarPoly {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .filter(|&(&(xi, _), _)| xi == i)
                .map(|(&(_, j), c)| ((0, j), c.clone()))
                .collect(),
        }
    }

    /// p(x^{-1}, q^{-1}): exponentwise negation. Involution.
    pub fn substitute_inverse(&self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((-i, -j), c.clone())).collect(),
        }
    }

    /// Applies an exponent map, merging any collisions additively.
    pub fn map_exponents<F: Fn(i64, i64) -> (i64, i64)>(&self, f: F) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i, j), c) in &self.terms {
            let (ni, nj) = f(i, j);
            out.add_term(ni, nj, c.clone());
        }
        out
    }

    /// Sets q = 1, merging terms with equal x-exponent.
    pub fn subst_q_one(&self) -> BivarPoly {
        self.map_exponents(|i, _| (i, 0))
    }

    /// Substitutes a concrete integer for q; needs q-exponents >= 0.
    pub fn specialize_q(&self, q: &BigInt) -> Result<BivarPoly> {
        let mut out = BivarPoly::zero();
        for (&(i, j), c) in &self.terms {
            let j = u32::try_from(j).map_err(|_| {
                Error::Domain("specialize_q needs nonnegative q-exponents".into())
            })?;
            out.add_term(i, 0, c * q.pow(j));
        }
        Ok(out)
    }

    /// Evaluates at concrete integers; needs nonnegative exponents.
    pub fn eval(&self, x: &BigInt, q: &BigInt) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            let (i, j) = (
                u32::try_from(i).map_err(|_| Error::Domain("eval needs nonnegative exponents".into()))?,
                u32::try_from(j).map_err(|_| Error::Domain("eval needs nonnegative exponents".into()))?,
            );
            acc += c * x.pow(i) * q.pow(j);
        }
        Ok(acc)
    }

    pub fn mul_monomial(&self, i: i64, j: i64, c: &BigInt) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(xi, qj), v)| ((xi + i, qj + j), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BivarPoly {
        let mut acc = BivarPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in `Z[x,q]`. Fails with a divisibility error when the
    /// divisor does not divide (this doubles as the "no unitary factor"
    /// signal). Both operands must be honest polynomials.
    pub fn exact_divide(&self, divisor: &BivarPoly) -> Result<BivarPoly> {
        if divisor.is_zero() {
            return Err(Error::Divisibility("division by the zero polynomial".into()));
        }
        if self.has_negative_exponents() || divisor.has_negative_exponents() {
            return Err(Error::Domain(
                "exact_divide is defined on honest polynomials only".into(),
            ));
        }
        let (&lead_exp, lead_coeff) = divisor.terms.last_key_value().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        while let Some((&(ri, rj), rc)) = rem.terms.last_key_value() {
            let (qi, qj) = (ri - lead_exp.0, rj - lead_exp.1);
            if qi < 0 || qj < 0 {
                return Err(Error::Divisibility(format!(
                    "leading monomial x^{ri}*q^{rj} not divisible by x^{}*q^{}",
                    lead_exp.0, lead_exp.1
                )));
            }
            let (qc, carry) = num_integer::Integer::div_rem(rc, lead_coeff);
            if !carry.is_zero() {
                return Err(Error::Divisibility(format!(
                    "leading coefficient {rc} not divisible by {lead_coeff}"
                )));
            }
            quot.add_term(qi, qj, qc.clone());
            let piece = divisor.mul_monomial(qi, qj, &qc);
            rem = &rem - &piece;
        }
        Ok(quot)
    }

    /// Canonical text form: terms sorted lex by (x-exp, q-exp), e.g.
    /// `1 + x*q + 2*x*q^2 + x*q^3 + x^2*q^4`.
    pub fn to_text(&self, xname: &str, qname: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (i, j) == (0, 0) {
                factors.push(abs.to_string());
            }
            for (name, e) in [(xname, i), (qname, j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// JSON form: a list of [i, j, coefficient-as-decimal-string].
    pub fn to_json_terms(&self) -> Vec<(i64, i64, String)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c.to_string())).collect()
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text("x", "q"))
    }
}
