//! Gaussian (q-)binomial coefficients, as exact polynomials in q and as
//! integers at a concrete q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::BivarPoly;

/// The q-binomial coefficient binom(a,b)_q = prod_{i=1}^{b}
/// (q^{a-b+i}-1)/(q^i-1), as a polynomial in q (degree b(a-b), nonnegative
/// coefficients). Needs a >= b >= 0.
pub fn q_binomial(a: u32, b: u32) -> Result<BivarPoly> {
    if b > a {
        return Err(Error::Domain(format!("q_binomial needs a >= b, got ({a},{b})")));
    }
    // After j steps the running product is binom(a-b+j, j)_q, an honest
    // polynomial, so every intermediate division is exact.
    let mut acc = BivarPoly::one();
    for i in 1..=b as i64 {
        let num = &acc * &(&BivarPoly::monomial(0, a as i64 - b as i64 + i, BigInt::one())
            - &BivarPoly::one());
        let den = &BivarPoly::monomial(0, i, BigInt::one()) - &BivarPoly::one();
        acc = num
            .exact_divide(&den)
            .map_err(|e| Error::Internal(format!("q_binomial({a},{b}): {e}")))?;
    }
    Ok(acc)
}

/// binom(a,b)_q evaluated at an integer q >= 2, via one exact big-integer
/// division of the factored products.
pub fn q_binomial_eval(a: u32, b: u32, q: &BigInt) -> Result<BigInt> {
    if b > a {
        return Err(Error::Domain(format!("q_binomial needs a >= b, got ({a},{b})")));
    }
    let b = b.min(a - b); // symmetry keeps the products small
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=b {
        num *= q.pow(a - b + i) - 1;
        den *= q.pow(i) - 1;
    }
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!("q_binomial_eval({a},{b}) not integral")));
    }
    Ok(quot)
}
