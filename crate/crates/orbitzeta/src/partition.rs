//! Integer partitions with the conventions used throughout the crate:
//! weakly decreasing positive parts, `n` the sum, `m` the number of parts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition lambda = (lambda_1 >= ... >= lambda_m >= 1) of N.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts given in any order; they are sorted
    /// weakly decreasing. Empty input or a nonpositive part is rejected.
    pub fn new<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(Error::Validation("partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Validation("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The rectangle (r, r, ..., r) with m parts.
    pub fn rectangle(r: u32, m: u32) -> Result<Self> {
        if r == 0 || m == 0 {
            return Err(Error::Validation("rectangle needs r >= 1 and m >= 1".into()));
        }
        Ok(Partition { parts: vec![r; m as usize] })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// N, the sum of the parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// m, the number of parts.
    pub fn m(&self) -> u32 {
        self.parts.len() as u32
    }

    /// True iff all parts are equal (this includes every single-part partition).
    pub fn is_rectangle(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    /// The dual (conjugate) partition mu with mu_sigma = |{i : lambda_i >= sigma}|.
    pub fn dual(&self) -> Partition {
        let s = self.parts[0];
        let parts = (1..=s)
            .map(|sigma| self.parts.iter().filter(|&&p| p >= sigma).count() as u32)
            .collect();
        Partition { parts }
    }

    /// |S_lambda| = N! / (lambda_1! ... lambda_m!), exactly.
    pub fn word_count(&self) -> BigInt {
        // Product of binomial(n_1 + ... + n_i, n_i) over the parts.
        let mut count = BigInt::one();
        let mut placed = 0u32;
        for &p in &self.parts {
            placed += p;
            count *= binomial(placed, p);
        }
        count
    }
}

/// Binomial coefficient as a BigInt.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts comma-separated parts ("3,3,1") or the rectangle
    /// shorthand "r^m" ("2^3" for (2,2,2)).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((r, m)) = s.split_once('^') {
            let r: u32 = r
                .trim()
                .parse()
                .map_err(|_| Error::Validation(format!("bad rectangle base {r:?}")))?;
            let m: u32 = m
                .trim()
                .parse()
                .map_err(|_| Error::Validation(format!("bad rectangle exponent {m:?}")))?;
            return Partition::rectangle(r, m);
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Validation(format!("bad partition part {p:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}
