//! Multiset permutations and the statistics on them:
//!
//! - [`MultisetWord`]: a word over the letters 1..m with prescribed multiplicities
//! - [`descent_data`]: descent set, des, maj
//! - [`WordIter`] / [`enumerate_words`]: lexicographic streaming enumeration of S_lambda
//! - [`circ`]: the reverse-and-invert involution on rectangles
//! - [`max_des_word`]: the block word maximizing des, with its maximizer count

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default ceiling on |S_lambda| for operations that fully enumerate.
pub const DEFAULT_ENUMERATION_CEILING: u64 = 100_000_000;

/// A multiset permutation: a word whose letter multiplicities match a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultisetWord {
    letters: Vec<u8>,
}

impl MultisetWord {
    /// Validates that `letters` uses exactly the alphabet 1..m with the
    /// multiplicities of `partition` (parts sorted, so letter i must occur
    /// `parts[i-1]` times).
    pub fn new(letters: Vec<u8>, partition: &Partition) -> Result<Self> {
        let m = partition.m() as usize;
        let mut counts = vec![0u32; m];
        for &l in &letters {
            if l == 0 || l as usize > m {
                return Err(Error::Validation(format!("letter {l} outside 1..{m}")));
            }
            counts[l as usize - 1] += 1;
        }
        if counts != partition.parts() {
            return Err(Error::Validation(
                "letter multiplicities do not match the partition".into(),
            ));
        }
        Ok(MultisetWord { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The partition of letter multiplicities (letter i occurs parts[i-1] times).
    pub fn multiplicities(&self) -> Partition {
        let m = *self.letters.iter().max().expect("words are nonempty") as usize;
        let mut counts = vec![0u32; m];
        for &l in &self.letters {
            counts[l as usize - 1] += 1;
        }
        Partition::new(counts).expect("valid word has positive multiplicities")
    }
}

impl std::fmt::Display for MultisetWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // Single digits concatenate; wider alphabets need a separator.
        let dotted = self.letters.iter().any(|&x| x > 9);
        for (i, &l) in self.letters.iter().enumerate() {
            if dotted && i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Descent set (1-based positions), des and maj of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    pub descent_set: Vec<u32>,
    pub des: u32,
    pub maj: u64,
}

/// Computes Des(w) = {i in [N-1] : w_i > w_{i+1}}, des = |Des|, maj = sum of Des.
pub fn descent_data(w: &MultisetWord) -> DescentData {
    let mut descent_set = Vec::new();
    for i in 1..w.letters.len() {
        if w.letters[i - 1] > w.letters[i] {
            descent_set.push(i as u32);
        }
    }
    let des = descent_set.len() as u32;
    let maj = descent_set.iter().map(|&i| i as u64).sum();
    DescentData { descent_set, des, maj }
}

/// Streaming lexicographic enumeration of S_lambda. O(N) state; never
/// materializes the full set.
pub struct WordIter {
    current: Option<Vec<u8>>,
}

impl Iterator for WordIter {
    type Item = MultisetWord;

    fn next(&mut self) -> Option<MultisetWord> {
        let letters = self.current.take()?;
        let word = MultisetWord { letters: letters.clone() };
        self.current = next_word(letters);
        Some(word)
    }
}

/// Standard next-permutation sweep, correct in the presence of repeats.
fn next_word(mut w: Vec<u8>) -> Option<Vec<u8>> {
    let n = w.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    Some(w)
}

/// Yields every element of S_lambda exactly once, in lexicographic order,
/// starting from the trivial word 1^{lambda_1} 2^{lambda_2} ... m^{lambda_m}.
pub fn enumerate_words(partition: &Partition) -> WordIter {
    let mut letters = Vec::with_capacity(partition.n() as usize);
    for (i, &p) in partition.parts().iter().enumerate() {
        letters.extend(std::iter::repeat_n(i as u8 + 1, p as usize));
    }
    WordIter { current: Some(letters) }
}

/// Refuses full enumeration when |S_lambda| exceeds `ceiling`; returns the
/// exact count otherwise.
pub fn check_ceiling(partition: &Partition, ceiling: u64) -> Result<u64> {
    let count = partition.word_count();
    if count > BigInt::from(ceiling) {
        return Err(Error::Resource(format!(
            "|S_({partition})| = {count} exceeds the ceiling {ceiling}"
        )));
    }
    Ok(u64::try_from(&count).expect("count <= ceiling fits in u64"))
}

/// The involution w -> (m+1-w_N)...(m+1-w_1) on S_{r,m}. Only defined for
/// rectangles.
pub fn circ(w: &MultisetWord) -> Result<MultisetWord> {
    let mult = w.multiplicities();
    if !mult.is_rectangle() {
        return Err(Error::Domain(format!(
            "circ needs a rectangle partition, got ({mult})"
        )));
    }
    let m = mult.m() as u8;
    let letters = w.letters.iter().rev().map(|&l| m + 1 - l).collect();
    Ok(MultisetWord { letters })
}

/// The block word w_0 = (mu_1...21)(mu_2...21)...(mu_s...21) built from the
/// dual partition, which attains the maximal value of des, together with the
/// number of words attaining that maximum (the distinct block rearrangements).
pub fn max_des_word(partition: &Partition) -> (MultisetWord, BigInt) {
    let mu = partition.dual();
    let mut letters = Vec::with_capacity(partition.n() as usize);
    for &block in mu.parts() {
        letters.extend((1..=block as u8).rev());
    }
    // Blocks with equal length are identical, so the number of distinct
    // arrangements is the multinomial of the block-length multiplicities.
    let s = mu.m();
    let mut count = crate::partition::binomial(s, s); // 1
    let mut remaining = s;
    let mut run = 1u32;
    let parts = mu.parts();
    for i in 1..=parts.len() {
        if i < parts.len() && parts[i] == parts[i - 1] {
            run += 1;
        } else {
            count *= crate::partition::binomial(remaining, run);
            remaining -= run;
            run = 1;
        }
    }
    (MultisetWord { letters }, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn word(partition: &Partition, s: &str) -> MultisetWord {
        let letters = s.bytes().map(|b| b - b'0').collect();
        MultisetWord::new(letters, partition).unwrap()
    }

    #[test]
    fn enumeration_matches_paper_example() {
        let p = Partition::new([2, 1]).unwrap();
        let all: Vec<String> = enumerate_words(&p).map(|w| w.to_string()).collect();
        assert_eq!(all, ["112", "121", "211"]);
    }

    #[test]
    fn enumeration_counts() {
        let p = Partition::new([1, 1]).unwrap();
        assert_eq!(enumerate_words(&p).count(), 2);
        let p = Partition::new([2, 2]).unwrap();
        assert_eq!(enumerate_words(&p).count(), 6);
    }

    #[test]
    fn enumeration_count_equals_multinomial() {
        for parts in [vec![3, 2], vec![2, 2, 1], vec![1, 1, 1, 1], vec![4, 3]] {
            let p = Partition::new(parts).unwrap();
            let count = enumerate_words(&p).count();
            assert_eq!(BigInt::from(count), p.word_count(), "{p}");
        }
    }

    #[test]
    fn descent_data_paper_example() {
        // lambda = (3,3,1), w = 1212312: Des = {2,5}, des = 2, maj = 7
        let p = Partition::new([3, 3, 1]).unwrap();
        let d = descent_data(&word(&p, "1212312"));
        assert_eq!(d.descent_set, [2, 5]);
        assert_eq!(d.des, 2);
        assert_eq!(d.maj, 7);
    }

    #[test]
    fn trivial_word_has_no_descents() {
        let p = Partition::new([3, 2]).unwrap();
        let d = descent_data(&word(&p, "11122"));
        assert_eq!(d.descent_set, Vec::<u32>::new());
        assert_eq!((d.des, d.maj), (0, 0));
    }

    #[test]
    fn longest_rectangle_word_statistics() {
        // w_0 = (m...21)^r has des = r(m-1) and maj = r^2 m(m-1)/2.
        for (r, m) in [(2u64, 3u64), (3, 2), (1, 4), (2, 2)] {
            let p = Partition::rectangle(r as u32, m as u32).unwrap();
            let (w0, count) = max_des_word(&p);
            let d = descent_data(&w0);
            assert_eq!(d.des as u64, r * (m - 1));
            assert_eq!(d.maj, r * r * m * (m - 1) / 2);
            assert!(count.is_one());
        }
    }

    #[test]
    fn max_des_word_non_rectangle() {
        // (2,1): block word from mu=(2,1) is 211; max des attained by 211 and 121.
        let p = Partition::new([2, 1]).unwrap();
        let (w0, count) = max_des_word(&p);
        assert_eq!(w0.to_string(), "211");
        assert_eq!(count, BigInt::from(2));

        let (w0, count) = max_des_word(&Partition::new([1, 1]).unwrap());
        assert_eq!(w0.to_string(), "21");
        assert_eq!(count, BigInt::one());
    }

    #[test]
    fn max_des_count_matches_enumeration() {
        for parts in [vec![2, 1], vec![3, 1], vec![3, 2], vec![2, 2, 1], vec![2, 2]] {
            let p = Partition::new(parts).unwrap();
            let max = enumerate_words(&p).map(|w| descent_data(&w).des).max().unwrap();
            let attained = enumerate_words(&p)
                .filter(|w| descent_data(w).des == max)
                .count();
            let (w0, count) = max_des_word(&p);
            assert_eq!(descent_data(&w0).des, max, "{p}");
            assert_eq!(count, BigInt::from(attained), "{p}");
        }
    }

    #[test]
    fn max_des_equals_dual_formula() {
        // max des over S_lambda = sum_sigma (mu_sigma - 1).
        for parts in [vec![3, 2, 1], vec![4, 2], vec![2, 2], vec![5]] {
            let p = Partition::new(parts).unwrap();
            let expected: u32 = p.dual().parts().iter().map(|&x| x - 1).sum();
            let max = enumerate_words(&p).map(|w| descent_data(&w).des).max().unwrap();
            assert_eq!(max, expected, "{p}");
        }
    }

    #[test]
    fn circ_examples() {
        let p = Partition::new([2, 2]).unwrap();
        assert_eq!(circ(&word(&p, "1122")).unwrap().to_string(), "1122");
        let p = Partition::new([1, 1]).unwrap();
        assert_eq!(circ(&word(&p, "12")).unwrap().to_string(), "12");
        assert_eq!(circ(&word(&p, "21")).unwrap().to_string(), "21");
    }

    #[test]
    fn circ_rejects_non_rectangles() {
        let p = Partition::new([2, 1]).unwrap();
        assert!(matches!(circ(&word(&p, "112")), Err(Error::Domain(_))));
    }

    #[test]
    fn circ_involution_and_statistics() {
        // Involution plus Des(w°) = rm - Des(w), des(w°) = des(w),
        // maj(w°) = des(w)·rm - maj(w), pointwise over every rectangle
        // with rm <= 8.
        for r in 1..=8u32 {
            for m in 1..=8u32 {
                if r * m > 8 {
                    continue;
                }
                let p = Partition::rectangle(r, m).unwrap();
                let n = (r * m) as u64;
                for w in enumerate_words(&p) {
                    let wc = circ(&w).unwrap();
                    assert_eq!(circ(&wc).unwrap(), w);
                    let d = descent_data(&w);
                    let dc = descent_data(&wc);
                    assert_eq!(dc.des, d.des);
                    assert_eq!(dc.maj, d.des as u64 * n - d.maj);
                    let mut reflected: Vec<u32> =
                        d.descent_set.iter().map(|&i| n as u32 - i).collect();
                    reflected.sort_unstable();
                    assert_eq!(dc.descent_set, reflected);
                }
            }
        }
    }

    /// All partitions of exactly n.
    fn partitions_of(n: u32) -> Vec<Partition> {
        fn extend(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::new(prefix.iter().copied()).unwrap());
                return;
            }
            for next in (1..=rem.min(max)).rev() {
                prefix.push(next);
                extend(rem - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(n, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn only_the_trivial_word_has_no_descents() {
        // maj = 0 iff des = 0 iff the word is 1^l1 2^l2 ... m^lm.
        for n in 1..=7u32 {
            for p in partitions_of(n) {
                let mut zero_des = 0;
                for w in enumerate_words(&p) {
                    let d = descent_data(&w);
                    assert_eq!(d.des == 0, d.maj == 0, "{p} {w}");
                    if d.des == 0 {
                        zero_des += 1;
                        let sorted: Vec<u8> = {
                            let mut l = w.letters().to_vec();
                            l.sort_unstable();
                            l
                        };
                        assert_eq!(w.letters(), sorted, "{p}");
                    }
                }
                assert_eq!(zero_des, 1, "{p}");
            }
        }
    }

    #[test]
    fn extremal_statistics_across_all_small_partitions() {
        // max des = sum (mu_sigma - 1) over the dual, and the number of
        // words with Des = {N-1} is m - 1, for every partition of N <= 8.
        for n in 1..=8u32 {
            for p in partitions_of(n) {
                let expected_max: u32 = p.dual().parts().iter().map(|&x| x - 1).sum();
                let mut max_seen = 0;
                let mut last_only = 0u32;
                for w in enumerate_words(&p) {
                    let d = descent_data(&w);
                    max_seen = max_seen.max(d.des);
                    if d.descent_set == [n - 1] {
                        last_only += 1;
                    }
                }
                assert_eq!(max_seen, expected_max, "{p}");
                assert_eq!(last_only, p.m() - 1, "{p}");
            }
        }
    }

    #[test]
    fn words_with_descent_only_at_last_position() {
        // |{w : Des(w) = {N-1}}| = m - 1.
        for parts in [vec![2, 1], vec![3, 3, 1], vec![1, 1, 1, 1], vec![2, 2]] {
            let p = Partition::new(parts).unwrap();
            let n = p.n();
            let hits = enumerate_words(&p)
                .filter(|w| descent_data(w).descent_set == [n - 1])
                .count() as u32;
            assert_eq!(hits, p.m() - 1, "{p}");
        }
    }

    #[test]
    fn ceiling_guard() {
        let p = Partition::new([2, 2]).unwrap();
        assert_eq!(check_ceiling(&p, 10).unwrap(), 6);
        assert!(matches!(check_ceiling(&p, 5), Err(Error::Resource(_))));
    }
}
