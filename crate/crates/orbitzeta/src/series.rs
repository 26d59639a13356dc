//! Rational series with factored denominators and exact truncated expansion.
//!
//! A [`RationalSeries`] is a numerator polynomial over a product of factors
//! (1 - x^a q^b). Denominators are never expanded; x-adic expansion needs
//! every factor to have a >= 1.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::BivarPoly;

/// One denominator factor (1 - x^a q^b)^mult.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DenomFactor {
    pub x_exp: i64,
    pub q_exp: i64,
    pub mult: u32,
}

/// numerator / prod (1 - x^a q^b)^mult, kept in factored form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: BivarPoly,
    denominator: Vec<DenomFactor>,
}

impl RationalSeries {
    /// Factors are canonicalized: sorted by exponent pair, equal pairs
    /// merged, zero multiplicities dropped. The pair (0,0) is rejected.
    pub fn new(numerator: BivarPoly, factors: Vec<DenomFactor>) -> Result<Self> {
        let mut merged: Vec<DenomFactor> = Vec::new();
        let mut factors = factors;
        factors.sort_unstable();
        for f in factors {
            if (f.x_exp, f.q_exp) == (0, 0) {
                return Err(Error::Domain(
                    "denominator factor (1 - x^0 q^0) vanishes".into(),
                ));
            }
            if f.mult == 0 {
                continue;
            }
            match merged.last_mut() {
                Some(last) if (last.x_exp, last.q_exp) == (f.x_exp, f.q_exp) => {
                    last.mult += f.mult
                }
                _ => merged.push(f),
            }
        }
        Ok(RationalSeries { numerator, denominator: merged })
    }

    pub fn from_poly(numerator: BivarPoly) -> Self {
        RationalSeries { numerator, denominator: Vec::new() }
    }

    pub fn numerator(&self) -> &BivarPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[DenomFactor] {
        &self.denominator
    }

    /// The denominator expanded as a polynomial (fine at the sizes used here).
    pub fn denominator_expanded(&self) -> BivarPoly {
        let mut acc = BivarPoly::one();
        for f in &self.denominator {
            acc = &acc * &BivarPoly::one_minus(f.x_exp, f.q_exp).pow(f.mult);
        }
        acc
    }

    /// Exact x-adic expansion: coefficients of x^0..x^k, each a polynomial
    /// in q. Every denominator factor must have x-exponent >= 1, and the
    /// numerator must have no negative x-exponent.
    pub fn series_coeffs(&self, k: usize) -> Result<Vec<BivarPoly>> {
        let mut coeffs = vec![BivarPoly::zero(); k + 1];
        for (&(i, j), c) in self.numerator.terms() {
            if i < 0 {
                return Err(Error::Domain(
                    "numerator has a negative x-exponent; not x-adically expandable".into(),
                ));
            }
            if let Ok(i) = usize::try_from(i) {
                if i <= k {
                    coeffs[i].add_term(0, j, c.clone());
                }
            }
        }
        for f in &self.denominator {
            if f.x_exp < 1 {
                return Err(Error::Domain(format!(
                    "denominator factor (1 - x^{} q^{}) is not x-adically expandable",
                    f.x_exp, f.q_exp
                )));
            }
            let a = f.x_exp as usize;
            for _ in 0..f.mult {
                // Multiply by 1/(1 - x^a q^b): new[v] = old[v] + q^b * new[v-a].
                for v in a..=k {
                    let shifted = coeffs[v - a].mul_monomial(0, f.q_exp, &BigInt::one());
                    coeffs[v] = &coeffs[v] + &shifted;
                }
            }
        }
        Ok(coeffs)
    }
}

/// Coefficientwise (Hadamard) product of the truncated expansions.
pub fn hadamard_truncated(series: &[RationalSeries], k: usize) -> Result<Vec<BivarPoly>> {
    let mut acc = vec![BivarPoly::one(); k + 1];
    for s in series {
        let coeffs = s.series_coeffs(k)?;
        for (a, c) in acc.iter_mut().zip(&coeffs) {
            *a = &*a * c;
        }
    }
    Ok(acc)
}
