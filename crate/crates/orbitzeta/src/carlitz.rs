//! The joint (des, maj) generating polynomials C_lambda(x,q) and what the
//! rest of the crate needs from them:
//!
//! - [`cpoly_enum`] / [`cpoly_macmahon`]: two independent routes to C_lambda
//! - [`descent_poly`]: C_lambda(x,1), with the two-part closed form
//! - [`funeq_check`]: the (x,q) -> (x^{-1},q^{-1}) functional equation
//! - [`charney_davis`] / [`unitary_factor`]: C_lambda(-1,1) and the 1+xq^e factor
//! - [`conjecture_scan`]: nonvanishing scan for two-part partitions

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{binomial, Partition};
use crate::poly::BivarPoly;
use crate::qbinom::q_binomial;
use crate::series::{DenomFactor, RationalSeries};
use crate::words::{check_ceiling, descent_data, enumerate_words};

/// How a Carlitz polynomial was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpolyMethod {
    Enumeration,
    MacMahon,
    TwoPartClosedForm,
}

/// C_lambda(x,q) together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarlitzResult {
    pub partition: Partition,
    pub poly: BivarPoly,
    pub method: CpolyMethod,
}

/// C_lambda(x,q) = sum over S_lambda of x^des q^maj, by full enumeration.
/// Refuses partitions whose word count exceeds `ceiling`.
pub fn cpoly_enum(partition: &Partition, ceiling: u64) -> Result<CarlitzResult> {
    check_ceiling(partition, ceiling)?;
    let mut poly = BivarPoly::zero();
    for w in enumerate_words(partition) {
        let d = descent_data(&w);
        poly.add_term(d.des as i64, d.maj as i64, BigInt::one());
    }
    Ok(CarlitzResult {
        partition: partition.clone(),
        poly,
        method: CpolyMethod::Enumeration,
    })
}

/// The MacMahon-identity denominator prod_{i=0}^{N} (1 - x q^i).
pub fn macmahon_denominator(n: u32) -> Vec<DenomFactor> {
    (0..=n as i64)
        .map(|i| DenomFactor { x_exp: 1, q_exp: i, mult: 1 })
        .collect()
}

/// C_lambda(x,q) via the MacMahon identity: expand
/// sum_k (prod_i binom(lambda_i+k, k)_q) x^k to x-degree N, multiply back by
/// prod_{i=0}^{N}(1 - x q^i) and truncate. Polynomial-time in N.
pub fn cpoly_macmahon(partition: &Partition) -> Result<CarlitzResult> {
    let n = partition.n();
    let mut series = BivarPoly::zero();
    for k in 0..=n {
        let mut coeff = BivarPoly::one();
        for &p in partition.parts() {
            coeff = &coeff * &q_binomial(p + k, k)?;
        }
        series = &series + &coeff.mul_monomial(k as i64, 0, &BigInt::one());
    }
    let denominator = RationalSeries::new(BivarPoly::one(), macmahon_denominator(n))?
        .denominator_expanded();
    let product = &series * &denominator;
    let mut poly = BivarPoly::zero();
    for (&(i, j), c) in product.terms() {
        if i <= n as i64 {
            poly.add_term(i, j, c.clone());
        }
    }
    if poly.x_degree() >= Some(n as i64) {
        return Err(Error::Internal(format!(
            "MacMahon product for ({partition}) has x-degree >= N"
        )));
    }
    Ok(CarlitzResult {
        partition: partition.clone(),
        poly,
        method: CpolyMethod::MacMahon,
    })
}

/// The descent polynomial C_lambda(x,1). Two parts use MacMahon's closed
/// form sum_j binom(lambda_1,j) binom(lambda_2,j) x^j; everything else is the
/// q -> 1 specialization of [`cpoly_macmahon`].
pub fn descent_poly(partition: &Partition) -> Result<BivarPoly> {
    match partition.parts() {
        [_] => Ok(BivarPoly::one()),
        [l1, l2] => {
            let mut poly = BivarPoly::zero();
            for j in 0..=*l2 {
                poly.add_term(j as i64, 0, binomial(*l1, j) * binomial(*l2, j));
            }
            Ok(poly)
        }
        _ => Ok(cpoly_macmahon(partition)?.poly.subst_q_one()),
    }
}

/// Outcome of the functional-equation check for C_lambda.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuneqReport {
    pub partition: Partition,
    pub holds: bool,
    /// For rectangles (r^m): the verified exponents (r(m-1), r^2 binom(m,2)).
    pub exponents: Option<(u64, u64)>,
    /// For non-rectangles: the leading x-coefficient of C_lambda(x,1),
    /// necessarily > 1, which rules out any functional equation.
    pub monicity_witness: Option<BigInt>,
}

/// Checks C_lambda(x^{-1},q^{-1}) = x^{-r(m-1)} q^{-r^2 binom(m,2)}
/// C_lambda(x,q) for rectangles; refutes by the monicity criterion otherwise.
pub fn funeq_check(partition: &Partition) -> Result<FuneqReport> {
    if partition.is_rectangle() {
        let r = partition.parts()[0] as u64;
        let m = partition.m() as u64;
        let d1 = r * (m - 1);
        let d2 = r * r * m * (m - 1) / 2;
        let c = cpoly_macmahon(partition)?.poly;
        let lhs = c.substitute_inverse();
        let rhs = c.mul_monomial(-(d1 as i64), -(d2 as i64), &BigInt::one());
        if lhs != rhs {
            return Err(Error::Internal(format!(
                "rectangle functional equation failed for ({partition})"
            )));
        }
        return Ok(FuneqReport {
            partition: partition.clone(),
            holds: true,
            exponents: Some((d1, d2)),
            monicity_witness: None,
        });
    }
    let dp = descent_poly(partition)?;
    let lead = dp.coeff_of_x(dp.x_degree().expect("nonzero")).constant_term();
    if lead <= BigInt::one() {
        return Err(Error::Internal(format!(
            "non-rectangle ({partition}) has monic descent polynomial"
        )));
    }
    Ok(FuneqReport {
        partition: partition.clone(),
        holds: false,
        exponents: None,
        monicity_witness: Some(lead),
    })
}

/// C_lambda(-1, 1), computed from the descent polynomial. Its vanishing is
/// necessary for C_lambda to have a unitary factor.
pub fn charney_davis(partition: &Partition) -> Result<BigInt> {
    let dp = descent_poly(partition)?;
    let mut acc = BigInt::zero();
    for (&(i, _), c) in dp.terms() {
        if i % 2 == 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    Ok(acc)
}

/// What the unitary-factor probe found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitaryStatus {
    /// C_lambda(-1,1) != 0, so no unitary factor can exist.
    NonzeroCharneyDavis,
    /// The prescribed candidate 1 + x q^{rm/2} divides exactly.
    Factored,
    /// Charney-Davis vanishes but no candidate is prescribed for this shape;
    /// flagged for manual inspection.
    ZeroNoCandidate,
    /// The prescribed candidate exists but does not divide.
    CandidateFailed,
}

/// Report of [`unitary_factor`]. When `factor` is present,
/// factor * cofactor = C_lambda exactly and factor = 1 + x q^{rm/2}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryReport {
    pub partition: Partition,
    pub charney_davis: BigInt,
    pub status: UnitaryStatus,
    pub factor: Option<BivarPoly>,
    pub cofactor: Option<BivarPoly>,
}

/// Tests the prescribed unitary candidate 1 + x q^{rm/2} on rectangles with
/// r odd and m even; only reports (never raises) a failed division.
pub fn unitary_factor(partition: &Partition) -> Result<UnitaryReport> {
    let cd = charney_davis(partition)?;
    let mut report = UnitaryReport {
        partition: partition.clone(),
        charney_davis: cd.clone(),
        status: UnitaryStatus::NonzeroCharneyDavis,
        factor: None,
        cofactor: None,
    };
    if !cd.is_zero() {
        return Ok(report);
    }
    let r = partition.parts()[0] as u64;
    let m = partition.m() as u64;
    if !(partition.is_rectangle() && r % 2 == 1 && m.is_multiple_of(2)) {
        report.status = UnitaryStatus::ZeroNoCandidate;
        return Ok(report);
    }
    let e = (r * m / 2) as i64;
    let candidate = &BivarPoly::one() + &BivarPoly::monomial(1, e, BigInt::one());
    let c = cpoly_macmahon(partition)?.poly;
    match c.exact_divide(&candidate) {
        Ok(cofactor) => {
            report.status = UnitaryStatus::Factored;
            report.factor = Some(candidate);
            report.cofactor = Some(cofactor);
        }
        Err(Error::Divisibility(_)) => {
            report.status = UnitaryStatus::CandidateFailed;
            report.factor = Some(candidate);
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// One scanned pair of the nonvanishing conjecture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub lambda1: u32,
    pub lambda2: u32,
    /// C_{(lambda1,lambda2)}(-1,1) by the closed form
    /// sum_j (-1)^j binom(lambda1,j) binom(lambda2,j).
    pub value: BigInt,
    /// True when lambda1 > lambda2(lambda2+1) - 1, where the alternating
    /// summands have increasing absolute values and nonvanishing is proved.
    pub stanton_covered: bool,
}

/// Scans all lambda1 > lambda2 >= 1 with lambda1 + lambda2 <= max_n for
/// vanishing C(-1,1). The conjecture predicts no zeros.
pub fn conjecture_scan(max_n: u32) -> Result<Vec<ScanRow>> {
    if max_n < 3 {
        return Err(Error::Validation("conjecture scan needs max_N >= 3".into()));
    }
    let mut rows = Vec::new();
    for lambda1 in 2..max_n {
        for lambda2 in 1..lambda1 {
            if lambda1 + lambda2 > max_n {
                break;
            }
            let mut value = BigInt::zero();
            for j in 0..=lambda2 {
                let term = binomial(lambda1, j) * binomial(lambda2, j);
                if j % 2 == 0 {
                    value += term;
                } else {
                    value -= term;
                }
            }
            rows.push(ScanRow {
                lambda1,
                lambda2,
                value,
                stanton_covered: lambda1 > lambda2 * (lambda2 + 1) - 1,
            });
        }
    }
    Ok(rows)
}
