//! Natural-boundary data for the Euler products, Igusa-form coefficients,
//! and the reduced-series cross-checks:
//!
//! - [`w_poly`] / [`newton_data`] / [`ghost_factor`] / [`b_polynomials`]:
//!   the Newton-polygon data of W(X,Y) = C_lambda(X^{-1}Y, X)
//! - [`natural_boundary_report`]: type I / type II / conditional classification
//! - [`nu_coefficients`] / [`igusa_check`]: the Igusa form of the Euler factor
//! - [`reduced_series`] / [`hilbert_sd_simplex`]: the p = 1 specialization and
//!   the Hilbert series of the barycentric subdivision of the simplex

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::carlitz::{charney_davis, cpoly_macmahon, descent_poly};
use crate::error::{Error, Result};
use crate::orbit::euler_factor_symbolic;
use crate::partition::{binomial, Partition};
use crate::poly::BivarPoly;
use crate::series::{DenomFactor, RationalSeries};
use crate::words::{check_ceiling, descent_data, enumerate_words};

/// Exact rational for the Newton-polygon maxima.
pub type Rational = Ratio<i64>;

/// W(X,Y) = C_lambda(X^{-1}Y, X) = sum_w X^{maj(w)-des(w)} Y^{des(w)}.
/// All exponents are nonnegative since maj >= des.
pub fn w_poly(partition: &Partition) -> Result<BivarPoly> {
    let c = cpoly_macmahon(partition)?.poly;
    Ok(c.map_exponents(|des, maj| (maj - des, des)))
}

/// The maxima alpha = max (i+1)/k and beta = max i/k over the monomials
/// X^i Y^k, k >= 1, of [`w_poly`]. Both are attained at (i,k) = (N-2,1) and
/// equal N-1 resp. N-2; anything else is an internal error.
pub fn newton_data(partition: &Partition) -> Result<(Rational, Rational)> {
    if partition.m() < 2 {
        return Err(Error::Domain(
            "newton_data needs m >= 2 (no nonconstant terms otherwise)".into(),
        ));
    }
    let w = w_poly(partition)?;
    let mut alpha: Option<Rational> = None;
    let mut beta: Option<Rational> = None;
    for (&(i, k), _) in w.terms() {
        if k < 1 {
            continue;
        }
        let a = Rational::new(i + 1, k);
        let b = Rational::new(i, k);
        alpha = Some(alpha.map_or(a, |cur| cur.max(a)));
        beta = Some(beta.map_or(b, |cur| cur.max(b)));
    }
    let (alpha, beta) = (alpha.expect("m >= 2 has descents"), beta.expect("m >= 2"));
    let n = partition.n() as i64;
    if alpha != Rational::from_integer(n - 1)
        || beta != Rational::from_integer(n - 2)
        || w.coeff(n - 2, 1).is_zero()
    {
        return Err(Error::Internal(format!(
            "Newton maxima for ({partition}) not attained at (N-2, 1)"
        )));
    }
    Ok((alpha, beta))
}

/// The first ghost factor 1 + (m-1)U, where U = X^beta Y. Asserts that the
/// minimal-gradient line meets the support of W only at (0,0) and (beta,1)
/// and that the coefficient there is m-1.
pub fn ghost_factor(partition: &Partition) -> Result<BivarPoly> {
    let (_, beta) = newton_data(partition)?;
    let beta = *beta.numer(); // integral: beta = N-2
    let w = w_poly(partition)?;
    let m = partition.m() as i64;
    for (&(i, k), c) in w.terms() {
        if i != beta * k {
            continue;
        }
        let expected = match (i, k) {
            (0, 0) => BigInt::one(),
            _ if (i, k) == (beta, 1) => BigInt::from(m - 1),
            _ => {
                return Err(Error::Internal(format!(
                    "ghost line of ({partition}) contains unexpected monomial X^{i} Y^{k}"
                )))
            }
        };
        if *c != expected {
            return Err(Error::Internal(format!(
                "ghost coefficient at X^{i} Y^{k} of ({partition}) is {c}, expected {expected}"
            )));
        }
    }
    Ok(&BivarPoly::one() + &BivarPoly::monomial(1, 0, BigInt::from(m - 1)))
}

/// B_0..B_{n_max} with B_n(U) = sum over beta k - i = n of c_{i,k} U^k,
/// together with gamma = min n >= 1 with B_n(-1) != 0 (None if no such n
/// up to n_max). Defined for two-part partitions only.
pub fn b_polynomials(partition: &Partition, n_max: u32) -> Result<(Vec<BivarPoly>, Option<u32>)> {
    if partition.m() != 2 {
        return Err(Error::Domain("b_polynomials needs exactly two parts".into()));
    }
    let beta = partition.n() as i64 - 2;
    let w = w_poly(partition)?;
    let mut polys = vec![BivarPoly::zero(); n_max as usize + 1];
    for (&(i, k), c) in w.terms() {
        let n = beta * k - i;
        if (0..=n_max as i64).contains(&n) {
            polys[n as usize].add_term(k, 0, c.clone());
        }
    }
    let at_minus_one = |poly: &BivarPoly| {
        poly.terms().fold(BigInt::zero(), |acc, (&(k, _), c)| {
            if k % 2 == 0 { acc + c } else { acc - c }
        })
    };
    let gamma = (1..=n_max).find(|&n| !at_minus_one(&polys[n as usize]).is_zero());
    Ok((polys, gamma))
}

/// The Newton/ghost data of W assembled in one place. `omega` is the unique
/// root -1 of A(U) = B_0(U) = 1 + U in the two-part case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryData {
    pub partition: Partition,
    pub w_poly: BivarPoly,
    pub alpha: Rational,
    pub beta: Rational,
    pub ghost: BivarPoly,
    /// Present for two-part partitions other than (1,1).
    pub gamma: Option<u32>,
    /// B_0..B_gamma for two-part partitions; empty otherwise.
    pub b_polys: Vec<BivarPoly>,
    pub omega: i64,
}

/// Collects [`w_poly`], [`newton_data`], [`ghost_factor`] and, for two
/// parts, the B-polynomials up to gamma.
pub fn boundary_data(partition: &Partition) -> Result<BoundaryData> {
    let (alpha, beta) = newton_data(partition)?;
    let ghost = ghost_factor(partition)?;
    let (b_polys, gamma) = if partition.m() == 2 {
        let (all, gamma) = b_polynomials(partition, partition.n())?;
        let keep = gamma.map_or(1, |g| g as usize + 1);
        (all.into_iter().take(keep).collect(), gamma)
    } else {
        (Vec::new(), None)
    };
    Ok(BoundaryData {
        partition: partition.clone(),
        w_poly: w_poly(partition)?,
        alpha,
        beta,
        ghost,
        gamma,
        b_polys,
        omega: -1,
    })
}

/// How the natural boundary at Re(s) = N-2 is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryType {
    /// m > 2: the ghost 1 + (m-1)U is not cyclotomic.
    TypeI,
    /// m = 2 with equal parts: the B-polynomial criterion applies; for odd
    /// parts the unitary factor 1 + X^{lambda_1 - 1} Y is removed first.
    TypeII,
    /// m = 2 with unequal parts: type II subject to the nonvanishing
    /// conjecture for C_lambda(-1,1).
    ConditionalTypeII,
}

impl BoundaryType {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundaryType::TypeI => "I",
            BoundaryType::TypeII => "II",
            BoundaryType::ConditionalTypeII => "conditional-II",
        }
    }
}

/// Outcome of [`natural_boundary_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalBoundaryReport {
    pub data: BoundaryData,
    pub boundary_type: BoundaryType,
    pub charney_davis: BigInt,
    /// B_gamma(-1) for the two-part case; negative when the criterion holds.
    pub b_gamma_at_omega: Option<BigInt>,
    /// The unitary factor 1 + X^{lambda_1 - 1} Y removed in the equal-odd
    /// two-part case.
    pub unitary_factor_removed: Option<BivarPoly>,
    pub conjecture_dependency: bool,
}

/// Classifies W as type I (m > 2) or (conditional) type II (m = 2),
/// following the case analysis behind the natural-boundary argument.
/// Requires m >= 2 and lambda != (1,1).
pub fn natural_boundary_report(partition: &Partition) -> Result<NaturalBoundaryReport> {
    if partition.m() < 2 {
        return Err(Error::Domain("natural_boundary_report needs m >= 2".into()));
    }
    if partition.parts() == [1, 1] {
        return Err(Error::Domain(
            "(1,1) has meromorphic continuation everywhere; no natural boundary".into(),
        ));
    }
    let data = boundary_data(partition)?;
    let cd = charney_davis(partition)?;
    if partition.m() > 2 {
        return Ok(NaturalBoundaryReport {
            data,
            boundary_type: BoundaryType::TypeI,
            charney_davis: cd,
            b_gamma_at_omega: None,
            unitary_factor_removed: None,
            conjecture_dependency: false,
        });
    }

    let gamma = data.gamma.ok_or_else(|| {
        Error::Internal(format!("no gamma found for two-part partition ({partition})"))
    })?;
    let b_gamma = data.b_polys[gamma as usize]
        .terms()
        .fold(BigInt::zero(), |acc, (&(k, _), c)| {
            if k % 2 == 0 { acc + c } else { acc - c }
        });
    if !b_gamma.is_negative() {
        return Err(Error::Internal(format!(
            "B_gamma(-1) = {b_gamma} for ({partition}) is not negative"
        )));
    }
    let (l1, l2) = (partition.parts()[0], partition.parts()[1]);
    let mut report = NaturalBoundaryReport {
        data,
        boundary_type: BoundaryType::TypeII,
        charney_davis: cd.clone(),
        b_gamma_at_omega: Some(b_gamma),
        unitary_factor_removed: None,
        conjecture_dependency: false,
    };
    if l1 == l2 {
        if l1 % 2 == 1 {
            // Equal odd parts: C has the unitary factor 1 + x q^{l1}, which
            // becomes 1 + X^{l1-1} Y; the boundary argument removes it and
            // needs beta > l1 - 1.
            if report.data.beta <= Rational::from_integer(l1 as i64 - 1) {
                return Err(Error::Internal(format!(
                    "beta = {} not above the unitary line for ({partition})",
                    report.data.beta
                )));
            }
            report.unitary_factor_removed = Some(
                &BivarPoly::one()
                    + &BivarPoly::monomial(l1 as i64 - 1, 1, BigInt::one()),
            );
        } else if cd.is_zero() {
            // Equal even parts have nonzero Charney-Davis quantity.
            return Err(Error::Internal(format!(
                "C(-1,1) = 0 for equal even parts ({partition})"
            )));
        }
    } else {
        report.boundary_type = BoundaryType::ConditionalTypeII;
        report.conjecture_dependency = true;
    }
    Ok(report)
}

/// The table nu_I = |{w : Des(w) subset of I}| over all I subset of [N-1],
/// indexed by bitmask (bit i-1 <-> position i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgusaCoeffs {
    pub partition: Partition,
    nu: Vec<u64>,
}

impl IgusaCoeffs {
    pub fn value(&self, mask: u32) -> u64 {
        self.nu[mask as usize]
    }

    pub fn num_subsets(&self) -> usize {
        self.nu.len()
    }

    /// The positions of a subset mask, 1-based and sorted.
    pub fn positions(mask: u32) -> Vec<u32> {
        (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
    }
}

/// Computes the full nu table by one enumeration of S_lambda followed by a
/// subset-sum transform.
pub fn nu_coefficients(partition: &Partition, ceiling: u64) -> Result<IgusaCoeffs> {
    let n = partition.n();
    if n > 16 {
        return Err(Error::Domain(format!(
            "nu table has 2^{} subsets; N must stay <= 16",
            n - 1
        )));
    }
    check_ceiling(partition, ceiling)?;
    let bits = n as usize - 1;
    let mut nu = vec![0u64; 1 << bits];
    for w in enumerate_words(partition) {
        let mut mask = 0usize;
        for pos in descent_data(&w).descent_set {
            mask |= 1 << (pos - 1);
        }
        nu[mask] += 1;
    }
    // Subset-sum (zeta) transform: nu[I] = sum over Des-masks D subset I.
    for b in 0..bits {
        for mask in 0..nu.len() {
            if mask >> b & 1 == 1 {
                nu[mask] += nu[mask ^ (1 << b)];
            }
        }
    }
    Ok(IgusaCoeffs { partition: partition.clone(), nu })
}

/// Verifies the Igusa form of the Euler factor at a prime p: expands
/// 1/(1 - p^{N-1} t) * sum_I nu_I prod_{i in I} p^{i-1} t / (1 - p^{i-1} t)
/// as a series in t to degree `k` and compares with the Euler-factor series.
pub fn igusa_check(partition: &Partition, p: u64, k: usize, ceiling: u64) -> Result<bool> {
    let nu = nu_coefficients(partition, ceiling)?;
    let n = partition.n();
    let mut rhs = vec![BivarPoly::zero(); k + 1];
    for mask in 0..nu.num_subsets() as u32 {
        let positions = IgusaCoeffs::positions(mask);
        let mut factors = vec![DenomFactor { x_exp: 1, q_exp: n as i64 - 1, mult: 1 }];
        let mut x_exp = 0;
        let mut q_exp = 0;
        for &i in &positions {
            factors.push(DenomFactor { x_exp: 1, q_exp: i as i64 - 1, mult: 1 });
            x_exp += 1;
            q_exp += i as i64 - 1;
        }
        let numerator = BivarPoly::monomial(x_exp, q_exp, BigInt::from(nu.value(mask)));
        let series = RationalSeries::new(numerator, factors)?.series_coeffs(k)?;
        for (acc, c) in rhs.iter_mut().zip(series) {
            *acc = &*acc + &c;
        }
    }
    let lhs = euler_factor_symbolic(partition)?.series_coeffs(k)?;
    let big_p = BigInt::from(p);
    for (l, r) in lhs.iter().zip(&rhs) {
        if l.eval(&BigInt::one(), &big_p)? != r.eval(&BigInt::one(), &big_p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reduced series C_lambda(t,1) / (1-t)^N (the Euler factor at p = 1).
pub fn reduced_series(partition: &Partition) -> Result<RationalSeries> {
    RationalSeries::new(
        descent_poly(partition)?,
        vec![DenomFactor { x_exp: 1, q_exp: 0, mult: partition.n() }],
    )
}

/// Face counts of the barycentric subdivision of the (m-1)-simplex:
/// f[i-1] = number of chains of i nonempty subsets of [m], computed by the
/// surjection formula f_{i-1} = sum_k (-1)^k binom(i,k) (i+1-k)^m.
fn sd_face_counts(m: u32) -> Vec<BigInt> {
    (1..=m)
        .map(|i| {
            let mut acc = BigInt::zero();
            for k in 0..=i {
                let term = binomial(i, k) * BigInt::from(i + 1 - k).pow(m);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Hilbert series of the face ring of the barycentric subdivision of the
/// (m-1)-simplex: h(t)/(1-t)^m with h the h-polynomial of the f-vector.
/// Equals [`reduced_series`] of (1^m).
pub fn hilbert_sd_simplex(m: u32) -> Result<RationalSeries> {
    if m == 0 {
        return Err(Error::Domain("hilbert_sd_simplex needs m >= 1".into()));
    }
    if m > 20 {
        return Err(Error::Domain("hilbert_sd_simplex supports m <= 20".into()));
    }
    let f = sd_face_counts(m);
    // h(t) = sum_{i=0}^{m} f_{i-1} t^i (1-t)^{m-i}, with f_{-1} = 1.
    let mut h = BivarPoly::zero();
    let one_minus_t = BivarPoly::one_minus(1, 0);
    for i in 0..=m {
        let fi = if i == 0 { BigInt::one() } else { f[i as usize - 1].clone() };
        let term = one_minus_t.pow(m - i).mul_monomial(i as i64, 0, &fi);
        h = &h + &term;
    }
    RationalSeries::new(h, vec![DenomFactor { x_exp: 1, q_exp: 0, mult: m }])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    fn poly(terms: &[(i64, i64, i64)]) -> BivarPoly {
        BivarPoly::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), BigInt::from(c))))
    }

    #[test]
    fn w_poly_examples() {
        // (2,1): C = 1 + xq + xq^2 -> 1 + Y + XY
        assert_eq!(
            w_poly(&part(&[2, 1])).unwrap(),
            poly(&[(0, 0, 1), (0, 1, 1), (1, 1, 1)])
        );
        // (1,1): C = 1 + xq -> 1 + Y
        assert_eq!(w_poly(&part(&[1, 1])).unwrap(), poly(&[(0, 0, 1), (0, 1, 1)]));
    }

    #[test]
    fn w_poly_exponents_nonnegative() {
        for parts in [vec![3, 2], vec![2, 2, 1], vec![1, 1, 1, 1]] {
            let w = w_poly(&part(&parts)).unwrap();
            assert!(!w.has_negative_exponents(), "{parts:?}");
            assert!(w.constant_term().is_one());
        }
    }

    #[test]
    fn newton_data_examples() {
        let (a, b) = newton_data(&part(&[1, 1])).unwrap();
        assert_eq!((a, b), (Rational::from_integer(1), Rational::from_integer(0)));
        let (a, b) = newton_data(&part(&[2, 1])).unwrap();
        assert_eq!((a, b), (Rational::from_integer(2), Rational::from_integer(1)));
        assert!(newton_data(&part(&[4])).is_err());
    }

    #[test]
    fn newton_data_is_always_n_minus_one_and_two() {
        for parts in [vec![3, 3, 1], vec![2, 2, 2], vec![4, 2], vec![5, 1]] {
            let p = part(&parts);
            let (a, b) = newton_data(&p).unwrap();
            assert_eq!(a, Rational::from_integer(p.n() as i64 - 1));
            assert_eq!(b, Rational::from_integer(p.n() as i64 - 2));
        }
    }

    #[test]
    fn ghost_factor_examples() {
        // m = 3: 1 + 2U; m = 2: 1 + U.
        assert_eq!(
            ghost_factor(&part(&[1, 1, 1])).unwrap(),
            poly(&[(0, 0, 1), (1, 0, 2)])
        );
        assert_eq!(ghost_factor(&part(&[2, 1])).unwrap(), poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(ghost_factor(&part(&[3, 3])).unwrap(), poly(&[(0, 0, 1), (1, 0, 1)]));
    }

    #[test]
    fn b_polynomials_two_part_cases() {
        // lambda_2 > 1: B_1 = 2U; lambda_2 = 1: B_1 = U; B_0 = 1 + U always.
        let (b, gamma) = b_polynomials(&part(&[2, 2]), 3).unwrap();
        assert_eq!(b[0], poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(b[1], poly(&[(1, 0, 2)]));
        assert_eq!(gamma, Some(1));

        let (b, gamma) = b_polynomials(&part(&[3, 1]), 3).unwrap();
        assert_eq!(b[0], poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(b[1], poly(&[(1, 0, 1)]));
        assert_eq!(gamma, Some(1));

        assert!(b_polynomials(&part(&[1, 1, 1]), 3).is_err());
    }

    #[test]
    fn b_polynomials_of_one_one_find_no_gamma() {
        // (1,1) sits outside the natural-boundary argument: B_n = 0 for n >= 1.
        let (b, gamma) = b_polynomials(&part(&[1, 1]), 4).unwrap();
        assert_eq!(b[0], poly(&[(0, 0, 1), (1, 0, 1)]));
        assert!(b[1].is_zero());
        assert_eq!(gamma, None);
    }

    #[test]
    fn no_degree_one_b_terms_with_higher_y_degree() {
        // beta k - i = 1 forces k = 1 for two-part partitions.
        for l1 in 1..=6u32 {
            for l2 in 1..=l1 {
                if (l1, l2) == (1, 1) {
                    continue;
                }
                let (b, _) = b_polynomials(&part(&[l1, l2]), 1).unwrap();
                let expected = if l2 > 1 { 2 } else { 1 };
                assert_eq!(b[1], poly(&[(1, 0, expected)]), "({l1},{l2})");
            }
        }
    }

    #[test]
    fn boundary_report_type_one() {
        let r = natural_boundary_report(&part(&[1, 1, 1])).unwrap();
        assert_eq!(r.boundary_type, BoundaryType::TypeI);
        assert_eq!(r.data.beta, Rational::from_integer(1));
        assert_eq!(r.data.ghost, poly(&[(0, 0, 1), (1, 0, 2)]));
        assert!(!r.conjecture_dependency);
        assert!(r.data.gamma.is_none());
    }

    #[test]
    fn boundary_report_equal_even_parts() {
        let r = natural_boundary_report(&part(&[2, 2])).unwrap();
        assert_eq!(r.boundary_type, BoundaryType::TypeII);
        assert_eq!(r.charney_davis, BigInt::from(-2));
        assert!(r.unitary_factor_removed.is_none());
        assert_eq!(r.b_gamma_at_omega, Some(BigInt::from(-2)));
        assert_eq!(r.data.gamma, Some(1));
    }

    #[test]
    fn boundary_report_equal_odd_parts_removes_factor() {
        let r = natural_boundary_report(&part(&[3, 3])).unwrap();
        assert_eq!(r.boundary_type, BoundaryType::TypeII);
        // Factor 1 + X^2 Y, with beta = 4 > 2.
        assert_eq!(r.unitary_factor_removed, Some(poly(&[(0, 0, 1), (2, 1, 1)])));
        assert_eq!(r.data.beta, Rational::from_integer(4));
    }

    #[test]
    fn boundary_report_unequal_parts_is_conditional() {
        let r = natural_boundary_report(&part(&[2, 1])).unwrap();
        assert_eq!(r.boundary_type, BoundaryType::ConditionalTypeII);
        assert!(r.conjecture_dependency);
        assert_eq!(r.b_gamma_at_omega, Some(BigInt::from(-1)));
    }

    #[test]
    fn boundary_report_preconditions() {
        assert!(natural_boundary_report(&part(&[1, 1])).is_err());
        assert!(natural_boundary_report(&part(&[7])).is_err());
    }

    #[test]
    fn nu_table_small() {
        let nu = nu_coefficients(&part(&[2, 1]), 1000).unwrap();
        // Masks over [2]: bit 0 <-> position 1, bit 1 <-> position 2.
        assert_eq!(nu.value(0b00), 1);
        assert_eq!(nu.value(0b10), 2); // {112, 121}
        assert_eq!(nu.value(0b11), 3); // all of S
    }

    #[test]
    fn nu_table_of_permutations_is_multinomial() {
        // For (1^m), nu_I = binom(m, I) (compositions from the gaps of I).
        let m = 4u32;
        let nu = nu_coefficients(&Partition::rectangle(1, m).unwrap(), 1000).unwrap();
        for mask in 0..nu.num_subsets() as u32 {
            let mut cuts = IgusaCoeffs::positions(mask);
            cuts.push(m);
            let mut expected = BigInt::one();
            let mut prev = 0;
            let mut placed = 0;
            for c in cuts {
                expected *= binomial(placed + (c - prev), c - prev);
                placed += c - prev;
                prev = c;
            }
            assert_eq!(BigInt::from(nu.value(mask)), expected, "mask {mask:b}");
        }
    }

    #[test]
    fn nu_table_monotone_and_bounded() {
        let p = part(&[2, 2, 1]);
        let nu = nu_coefficients(&p, 1000).unwrap();
        let full = nu.num_subsets() as u32 - 1;
        assert_eq!(nu.value(0), 1);
        assert_eq!(BigInt::from(nu.value(full)), p.word_count());
        for mask in 0..=full {
            for b in 0..31 {
                if mask >> b & 1 == 1 {
                    assert!(nu.value(mask ^ (1 << b)) <= nu.value(mask));
                }
            }
        }
    }

    #[test]
    fn nu_inclusion_exclusion_recovers_descents() {
        // Moebius inversion of nu gives the exact descent-set counts, whose
        // size-generating polynomial is C_lambda(x,1).
        let p = part(&[2, 2]);
        let nu = nu_coefficients(&p, 1000).unwrap();
        let full = nu.num_subsets();
        let mut exact: Vec<i64> = (0..full).map(|m| nu.value(m as u32) as i64).collect();
        for b in 0..p.n() as usize - 1 {
            for mask in 0..full {
                if mask >> b & 1 == 1 {
                    exact[mask] -= exact[mask ^ (1 << b)];
                }
            }
        }
        let mut by_des = BivarPoly::zero();
        for (mask, count) in exact.iter().enumerate() {
            by_des.add_term(mask.count_ones() as i64, 0, BigInt::from(*count));
        }
        assert_eq!(by_des, descent_poly(&p).unwrap());
    }

    #[test]
    fn igusa_check_examples() {
        assert!(igusa_check(&part(&[1, 1]), 2, 10, 1000).unwrap());
        assert!(igusa_check(&part(&[2, 1]), 3, 10, 1000).unwrap());
        assert!(igusa_check(&part(&[1]), 5, 10, 1000).unwrap());
    }

    #[test]
    fn reduced_series_examples() {
        let s = reduced_series(&part(&[1, 1])).unwrap();
        assert_eq!(s.numerator(), &poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(s.denominator(), &[DenomFactor { x_exp: 1, q_exp: 0, mult: 2 }]);

        let s = reduced_series(&part(&[1, 1, 1])).unwrap();
        assert_eq!(s.numerator(), &poly(&[(0, 0, 1), (1, 0, 4), (2, 0, 1)]));

        let s = reduced_series(&part(&[1])).unwrap();
        assert_eq!(s.numerator(), &BivarPoly::one());
        assert_eq!(s.denominator(), &[DenomFactor { x_exp: 1, q_exp: 0, mult: 1 }]);
    }

    /// Chain counts of the subset order complex by direct DFS enumeration.
    fn chain_oracle(m: u32) -> Vec<BigInt> {
        let full = (1u32 << m) - 1;
        let mut counts = vec![0u64; m as usize + 1];
        fn extend(top: u32, len: usize, full: u32, counts: &mut [u64]) {
            counts[len] += 1;
            for s in 1..=full {
                if s & top == top && s != top {
                    extend(s, len + 1, full, counts);
                }
            }
        }
        for s in 1..=full {
            extend(s, 1, full, &mut counts);
        }
        counts[1..].iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn face_counts_match_chain_enumeration() {
        for m in 1..=5u32 {
            assert_eq!(sd_face_counts(m), chain_oracle(m), "m={m}");
        }
        // f-vector of sd(Delta_2) is (7, 12, 6).
        assert_eq!(
            sd_face_counts(3),
            [BigInt::from(7), BigInt::from(12), BigInt::from(6)]
        );
    }

    #[test]
    fn hilbert_series_examples() {
        let h = hilbert_sd_simplex(1).unwrap();
        assert_eq!(h.numerator(), &BivarPoly::one());

        let h = hilbert_sd_simplex(2).unwrap();
        assert_eq!(h.numerator(), &poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(h.denominator(), &[DenomFactor { x_exp: 1, q_exp: 0, mult: 2 }]);

        let h = hilbert_sd_simplex(3).unwrap();
        assert_eq!(h.numerator(), &poly(&[(0, 0, 1), (1, 0, 4), (2, 0, 1)]));
    }

    #[test]
    fn hilbert_series_equals_reduced_series() {
        for m in 1..=8u32 {
            assert_eq!(
                hilbert_sd_simplex(m).unwrap(),
                reduced_series(&Partition::rectangle(1, m).unwrap()).unwrap(),
                "m={m}"
            );
        }
    }
}
