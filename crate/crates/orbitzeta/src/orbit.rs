//! Orbit and periodic-point counting for products T_lambda of maps modelled
//! on subgroup growth of Z^r, and their Dirichlet-series data:
//!
//! - [`subgroup_count`] / [`fixed_points`] / [`orbit_count_prime_power`] /
//!   [`orbit_count`]: the arithmetic layer
//! - [`euler_factor`]: the local factor as a rational function in t = p^{-s},
//!   its series prefix verified against the direct counts
//! - [`shifted_euler_factor`]: the same for powers of shifted maps (integer
//!   shift)
//! - [`euler_funeq_check`]: the local functional equation under p -> p^{-1}
//! - [`dirichlet_coeffs`] / [`asymptotic_fit`]: global coefficients and the
//!   partial-sum growth fit

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::carlitz::cpoly_macmahon;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::BivarPoly;
use crate::qbinom::q_binomial_eval;
use crate::series::{DenomFactor, RationalSeries};

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(())
}

/// a_{p^k}(Z_p^r) = binom(r-1+k, k)_p, the number of subgroups of Z^r of
/// index p^k.
pub fn subgroup_count(r: u32, p: u64, k: u32) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::Domain("subgroup_count needs r >= 1".into()));
    }
    require_prime(p)?;
    q_binomial_eval(r - 1 + k, k, &BigInt::from(p))
}

/// F_{T_lambda}(p^k) = prod_i binom(lambda_i + k, k)_p, the number of points
/// of period p^k.
pub fn fixed_points(partition: &Partition, p: u64, k: u32) -> Result<BigInt> {
    require_prime(p)?;
    let p = BigInt::from(p);
    let mut acc = BigInt::one();
    for &part in partition.parts() {
        acc *= q_binomial_eval(part + k, k, &p)?;
    }
    Ok(acc)
}

/// F_{T_lambda}(n) for arbitrary n >= 1, by multiplicativity.
pub fn fixed_points_n(partition: &Partition, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("fixed_points_n needs n >= 1".into()));
    }
    let mut acc = BigInt::one();
    for (p, k) in factorize(n) {
        acc *= fixed_points(partition, p, k)?;
    }
    Ok(acc)
}

/// O_{T_lambda}(p^k) = (F(p^k) - F(p^{k-1})) / p^k for k > 0, and 1 for k = 0.
/// The division is exact by construction; a nonzero remainder is a bug.
pub fn orbit_count_prime_power(partition: &Partition, p: u64, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::one());
    }
    let diff = fixed_points(partition, p, k)? - fixed_points(partition, p, k - 1)?;
    let (quot, rem) = diff.div_rem(&BigInt::from(p).pow(k));
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "orbit count for ({partition}) at {p}^{k} is not integral"
        )));
    }
    if quot.is_negative() {
        return Err(Error::Internal(format!(
            "orbit count for ({partition}) at {p}^{k} is negative"
        )));
    }
    Ok(quot)
}

/// O_{T_lambda}(n), via multiplicativity over the prime powers of n.
pub fn orbit_count(partition: &Partition, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("orbit_count needs n >= 1".into()));
    }
    let mut acc = BigInt::one();
    for (p, k) in factorize(n) {
        acc *= orbit_count_prime_power(partition, p, k)?;
    }
    Ok(acc)
}

/// Prime factorization by trial division, smallest factor first.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The Euler factor d_{T_lambda,p}(s) as a rational function in t = p^{-s}:
/// numerator C_lambda(t/p, p) cleared of denominators, over
/// prod_{i=1}^{N} (1 - p^{i-1} t). `series_prefix[k]` is O(p^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactor {
    pub partition: Partition,
    pub prime: u64,
    /// Shift a of the underlying maps; 0 for plain T_lambda.
    pub shift: u32,
    /// Polynomial in t with integer coefficients.
    pub numerator: BivarPoly,
    /// Multipliers c_i of the denominator factors (1 - c_i t).
    pub denom_multipliers: Vec<BigInt>,
    pub series_prefix: Vec<BigInt>,
}

/// The Euler factor with the prime left symbolic: numerator
/// sum_w x^{des(w)} q^{maj(w)-des(w)} over prod_{i=1}^{N} (1 - x q^{i-1}),
/// where x stands for t and q for p.
pub fn euler_factor_symbolic(partition: &Partition) -> Result<RationalSeries> {
    let c = cpoly_macmahon(partition)?.poly;
    // x^{des} q^{maj} -> t^{des} p^{maj - des}; maj >= des keeps it integral.
    let numerator = c.map_exponents(|des, maj| (des, maj - des));
    let factors = (1..=partition.n() as i64)
        .map(|i| DenomFactor { x_exp: 1, q_exp: i - 1, mult: 1 })
        .collect();
    RationalSeries::new(numerator, factors)
}

/// The Euler factor at a concrete prime, with the series prefix through t^K
/// verified against [`orbit_count_prime_power`].
pub fn euler_factor(partition: &Partition, p: u64, series_k: usize) -> Result<EulerFactor> {
    require_prime(p)?;
    let symbolic = euler_factor_symbolic(partition)?;
    let big_p = BigInt::from(p);
    let numerator = symbolic.numerator().specialize_q(&big_p)?;
    let denom_multipliers: Vec<BigInt> =
        (0..partition.n()).map(|i| big_p.pow(i)).collect();
    let mut series_prefix = Vec::with_capacity(series_k + 1);
    for (k, coeff) in symbolic.series_coeffs(series_k)?.into_iter().enumerate() {
        let value = coeff.eval(&BigInt::one(), &big_p)?;
        let direct = orbit_count_prime_power(partition, p, k as u32)?;
        if value != direct {
            return Err(Error::Internal(format!(
                "Euler factor of ({partition}) at p={p}: t^{k} coefficient {value} \
                 disagrees with the direct count {direct}"
            )));
        }
        series_prefix.push(value);
    }
    Ok(EulerFactor {
        partition: partition.clone(),
        prime: p,
        shift: 0,
        numerator,
        denom_multipliers,
        series_prefix,
    })
}

/// Euler factor of the m-th power of a shifted map with O(p^k) = p^{ak}
/// (integer a >= 0): numerator C_m at (x,q) = (t/p, p^{a+1}) cleared of
/// denominators, over prod_{i=1}^{m} (1 - p^{(a+1)i-1} t). The series prefix
/// is verified against Moebius inversion of
/// F(p^k) = (sum_{j<=k} p^{(a+1)j})^m.
pub fn shifted_euler_factor(m: u32, a: u32, p: u64, series_k: usize) -> Result<EulerFactor> {
    if m == 0 {
        return Err(Error::Domain("shifted_euler_factor needs m >= 1".into()));
    }
    require_prime(p)?;
    let partition = Partition::rectangle(1, m)?;
    let c = cpoly_macmahon(&partition)?.poly;
    let shift = a as i64 + 1;
    // x^{des} q^{maj} -> t^{des} p^{(a+1) maj - des}.
    let symbolic_num = c.map_exponents(|des, maj| (des, shift * maj - des));
    let factors = (1..=m as i64)
        .map(|i| DenomFactor { x_exp: 1, q_exp: shift * i - 1, mult: 1 })
        .collect();
    let symbolic = RationalSeries::new(symbolic_num, factors)?;

    let big_p = BigInt::from(p);
    let fixed = |k: i64| -> BigInt {
        let mut s = BigInt::zero();
        for j in 0..=k {
            s += big_p.pow((shift * j) as u32);
        }
        s.pow(m)
    };
    let mut series_prefix = Vec::with_capacity(series_k + 1);
    for (k, coeff) in symbolic.series_coeffs(series_k)?.into_iter().enumerate() {
        let value = coeff.eval(&BigInt::one(), &big_p)?;
        let direct = if k == 0 {
            BigInt::one()
        } else {
            let diff = fixed(k as i64) - fixed(k as i64 - 1);
            let (quot, rem) = diff.div_rem(&big_p.pow(k as u32));
            if !rem.is_zero() {
                return Err(Error::Internal(format!(
                    "shifted orbit count (m={m}, a={a}) at {p}^{k} is not integral"
                )));
            }
            quot
        };
        if value != direct {
            return Err(Error::Internal(format!(
                "shifted Euler factor (m={m}, a={a}) at p={p}: t^{k} coefficient \
                 {value} disagrees with the direct count {direct}"
            )));
        }
        series_prefix.push(value);
    }
    Ok(EulerFactor {
        partition,
        prime: p,
        shift: a,
        numerator: symbolic.numerator().specialize_q(&big_p)?,
        denom_multipliers: (1..=m)
            .map(|i| big_p.pow(shift as u32 * i - 1))
            .collect(),
        series_prefix,
    })
}

/// Verifies the local functional equation
/// d_{T_r^{x m},p}(s)|_{p -> p^{-1}} = (-1)^{rm} p^{m binom(r+1,2) - r - rs}
/// d_{T_r^{x m},p}(s) as an identity of rational functions in the two
/// independent variables (p, t): the substitution inverts both p and
/// t = p^{-s}, and p^{-rs} reads as t^r. Checked symbolically, then once
/// more with the given prime substituted for p.
pub fn euler_funeq_check(r: u32, m: u32, p: u64) -> Result<bool> {
    if r == 0 || m == 0 {
        return Err(Error::Domain("euler_funeq_check needs r, m >= 1".into()));
    }
    require_prime(p)?;
    let partition = Partition::rectangle(r, m)?;
    let symbolic = euler_factor_symbolic(&partition)?;
    let numerator = symbolic.numerator().clone();
    let denominator = symbolic.denominator_expanded();

    // Cross-multiplied: W(1/p,1/t) B(p,t) = sign * p^d t^r * W(p,t) B(1/p,1/t).
    let (r, m) = (r as i64, m as i64);
    let sign = if (r * m) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let d = m * r * (r + 1) / 2 - r;
    let lhs = &numerator.substitute_inverse() * &denominator;
    let rhs = &numerator.mul_monomial(r, d, &sign) * &denominator.substitute_inverse();
    if lhs != rhs {
        return Ok(false);
    }

    // Numeric double check at q = p, after clearing negative exponents.
    let exps = || lhs.terms().chain(rhs.terms());
    let min_x = exps().map(|(&(i, _), _)| i).min();
    let min_q = exps().map(|(&(_, j), _)| j).min();
    if let (Some(min_x), Some(min_q)) = (min_x, min_q) {
        let big_p = BigInt::from(p);
        let shift = |poly: &BivarPoly| poly.mul_monomial(-min_x, -min_q, &BigInt::one());
        if shift(&lhs).specialize_q(&big_p)? != shift(&rhs).specialize_q(&big_p)? {
            return Err(Error::Internal(format!(
                "functional equation holds symbolically but not at p={p}"
            )));
        }
    }
    Ok(true)
}

/// Global Dirichlet coefficients O(1..n_max) with running partial sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitData {
    pub partition: Partition,
    /// `values[i]` = O(i+1).
    pub values: Vec<BigInt>,
    pub partial_sums: Vec<BigInt>,
}

impl OrbitData {
    pub fn n_max(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn value(&self, n: u64) -> &BigInt {
        &self.values[n as usize - 1]
    }

    pub fn partial_sum(&self, n: u64) -> &BigInt {
        &self.partial_sums[n as usize - 1]
    }
}

/// Trial division suffices at desk scale; a smallest-prime-factor sieve
/// takes over above this.
const SIEVE_THRESHOLD: u64 = 100_000;

/// O(1..n_max) via multiplicativity and the prime-power formula.
pub fn dirichlet_coeffs(partition: &Partition, n_max: u64) -> Result<OrbitData> {
    if n_max == 0 {
        return Err(Error::Domain("dirichlet_coeffs needs n_max >= 1".into()));
    }
    let spf = if n_max > SIEVE_THRESHOLD {
        Some(smallest_prime_factors(n_max))
    } else {
        None
    };
    let mut memo: HashMap<(u64, u32), BigInt> = HashMap::new();
    let mut values = Vec::with_capacity(n_max as usize);
    let mut partial_sums = Vec::with_capacity(n_max as usize);
    let mut running = BigInt::zero();
    for n in 1..=n_max {
        let factors = match &spf {
            Some(spf) => factorize_with_sieve(n, spf),
            None => factorize(n),
        };
        let mut v = BigInt::one();
        for (p, k) in factors {
            let entry = match memo.entry((p, k)) {
                std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(orbit_count_prime_power(partition, p, k)?)
                }
            };
            v *= &*entry;
        }
        running += &v;
        values.push(v);
        partial_sums.push(running.clone());
    }
    Ok(OrbitData { partition: partition.clone(), values, partial_sums })
}

fn smallest_prime_factors(n_max: u64) -> Vec<u32> {
    let mut spf: Vec<u32> = vec![0; n_max as usize + 1];
    for i in 2..=n_max as usize {
        if spf[i] == 0 {
            for j in (i..=n_max as usize).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    spf
}

fn factorize_with_sieve(mut n: u64, spf: &[u32]) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    while n > 1 {
        let p = spf[n as usize] as u64;
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        out.push((p, k));
    }
    out
}

/// Least-squares fit of the partial-sum growth against K n^N.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticFit {
    pub partition: Partition,
    pub n_max: u64,
    /// Log-log slope of partial_sum(n) against n over the top decade.
    pub fitted_exponent: f64,
    /// partial_sum(n_max) / n_max^N.
    pub k_estimate: f64,
    /// (n, partial_sum(n)/n^N) at n = 10, 100, ..., for convergence
    /// inspection.
    pub decade_ratios: Vec<(u64, f64)>,
}

/// Fits partial_sum(n) ~ K n^N over the top decade of 1..n_max.
pub fn asymptotic_fit(partition: &Partition, n_max: u64) -> Result<AsymptoticFit> {
    if n_max < 1000 {
        return Err(Error::Domain("asymptotic_fit needs n_max >= 1000".into()));
    }
    let data = dirichlet_coeffs(partition, n_max)?;
    let lo = n_max / 10;
    let points: Vec<(f64, f64)> = (lo..=n_max)
        .map(|n| {
            let y = data.partial_sum(n).to_f64().expect("partial sum in f64 range");
            ((n as f64).ln(), y.ln())
        })
        .collect();
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in &points {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    let fitted_exponent = num / den;

    let n_exp = partition.n();
    let ratio = |n: u64| {
        let y = data.partial_sum(n).to_f64().expect("partial sum in f64 range");
        y / (n as f64).powi(n_exp as i32)
    };
    let mut decade_ratios = Vec::new();
    let mut mark = 10u64;
    while mark <= n_max {
        decade_ratios.push((mark, ratio(mark)));
        mark *= 10;
    }
    Ok(AsymptoticFit {
        partition: partition.clone(),
        n_max,
        fitted_exponent,
        k_estimate: ratio(n_max),
        decade_ratios,
    })
}
