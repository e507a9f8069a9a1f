use std::fmt;

use super::kernels::binomial;
use crate::error::{Error, Result};

/// Hamming weight distribution `A_0, A_1, ...`, exact through `complete_through`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    length: usize,
    counts: Vec<u64>,
    complete_through: usize,
}

impl WeightEnumerator {
    pub fn full(length: usize, mut counts: Vec<u64>) -> Self {
        counts.resize(length + 1, 0);
        Self { length, counts, complete_through: length }
    }

    /// Counts known only for weights `0..=complete_through`.
    pub fn partial(length: usize, mut counts: Vec<u64>, complete_through: usize) -> Self {
        let complete_through = complete_through.min(length);
        counts.resize(complete_through + 1, 0);
        Self { length, counts, complete_through }
    }

    pub fn from_pairs(length: usize, pairs: &[(usize, u64)]) -> Self {
        let mut counts = vec![0u64; length + 1];
        for &(w, c) in pairs {
            counts[w] += c;
        }
        Self::full(length, counts)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn complete_through(&self) -> usize {
        self.complete_through
    }

    pub fn is_complete(&self) -> bool {
        self.complete_through == self.length
    }

    /// Panics beyond the known range.
    pub fn count(&self, weight: usize) -> u64 {
        assert!(
            weight <= self.complete_through,
            "A_{weight} unknown: enumerator complete through {}",
            self.complete_through
        );
        self.counts[weight]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    /// Nonzero `(weight, count)` pairs in increasing weight.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c))
    }

    /// `A_w = A_{n-w}` for all w; only meaningful on complete enumerators.
    pub fn is_symmetric(&self) -> bool {
        self.is_complete() && (0..=self.length).all(|w| self.counts[w] == self.counts[self.length - w])
    }

    /// Prefix through `weight`, used as a bucket key.
    pub fn prefix(&self, weight: usize) -> Vec<u64> {
        self.counts[..=weight.min(self.complete_through)].to_vec()
    }

    /// Binary MacWilliams transform: weight enumerator of the dual of a code of
    /// the given dimension, `B_j = 2^-k sum_w A_w K_j(w)`.
    pub fn macwilliams_dual(&self, dimension: usize) -> Result<WeightEnumerator> {
        if !self.is_complete() {
            return Err(Error::OverBudget { what: "MacWilliams transform of a partial enumerator", needed: 0, limit: 0 });
        }
        let n = self.length;
        let size = 1i128 << dimension;
        let mut out = vec![0u64; n + 1];
        for (j, slot) in out.iter_mut().enumerate() {
            let mut acc: i128 = 0;
            for (w, &a) in self.counts.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                acc += a as i128 * krawtchouk(n, j, w);
            }
            assert_eq!(acc % size, 0, "MacWilliams transform not divisible by |C|");
            *slot = u64::try_from(acc / size).expect("dual counts are non-negative");
        }
        Ok(WeightEnumerator::full(n, out))
    }

    /// `weight,count` lines.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("weight,count\n");
        for (w, c) in self.terms() {
            s.push_str(&format!("{w},{c}\n"));
        }
        s
    }
}

fn krawtchouk(n: usize, j: usize, w: usize) -> i128 {
    (0..=j.min(w))
        .map(|s| {
            let term = binomial(w, s) as i128 * binomial(n - w, j - s) as i128;
            if s % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

impl fmt::Display for WeightEnumerator {
    /// `1 + 759y^8 + ...`, with a trailing `+ ...` for partial enumerators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match w {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}y")?,
                _ => write!(f, "{c}y^{w}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        if !self.is_complete() {
            f.write_str(" + ...")?;
        }
        Ok(())
    }
}
