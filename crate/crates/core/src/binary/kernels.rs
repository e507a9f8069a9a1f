//! Enumeration kernels over flat generator storage (`rows * limbs` words).

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[inline]
fn weight_of(word: &[u64]) -> usize {
    word.iter().map(|w| w.count_ones() as usize).sum()
}

/// Histogram of all `2^rows` codeword weights. Each chunk fixes the top message
/// bits and walks the rest in Gray-code order, so every step is one row XOR.
pub(crate) fn gray_code_histogram(gen: &[u64], limbs: usize, rows: usize, length: usize) -> Vec<u64> {
    let split = rows.saturating_sub(14).min(12);
    let low = rows - split;
    (0..1usize << split)
        .into_par_iter()
        .map(|chunk| {
            let mut hist = vec![0u64; length + 1];
            let mut acc = vec![0u64; limbs];
            for b in 0..split {
                if (chunk >> b) & 1 == 1 {
                    let r = low + b;
                    for l in 0..limbs {
                        acc[l] ^= gen[r * limbs + l];
                    }
                }
            }
            hist[weight_of(&acc)] += 1;
            for step in 1..1u64 << low {
                let r = step.trailing_zeros() as usize;
                for l in 0..limbs {
                    acc[l] ^= gen[r * limbs + l];
                }
                hist[weight_of(&acc)] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; length + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// Visits the XOR of every `weight`-subset of the generator rows, in parallel over
/// the first chosen row. `visit` returns `false` to stop all workers.
pub(crate) fn fold_combinations<T, I, V, M>(
    gen: &[u64],
    limbs: usize,
    rows: usize,
    weight: usize,
    identity: I,
    visit: V,
    merge: M,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &[u64]) -> bool + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    if weight == 0 {
        let mut state = identity();
        visit(&mut state, &vec![0u64; limbs]);
        return state;
    }
    if weight > rows {
        return identity();
    }
    let stop = AtomicBool::new(false);
    (0..=rows - weight)
        .into_par_iter()
        .map(|first| {
            let mut state = identity();
            if stop.load(Ordering::Relaxed) {
                return state;
            }
            let mut bufs = vec![0u64; (weight + 1) * limbs];
            bufs[limbs..2 * limbs].copy_from_slice(&gen[first * limbs..(first + 1) * limbs]);
            let mut inner = |word: &[u64]| {
                if !visit(&mut state, word) {
                    stop.store(true, Ordering::Relaxed);
                    return false;
                }
                true
            };
            recurse(gen, limbs, first + 1, rows, weight - 1, 1, &mut bufs, &mut inner, &stop);
            state
        })
        .reduce(&identity, &merge)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    gen: &[u64],
    limbs: usize,
    start: usize,
    end: usize,
    remaining: usize,
    level: usize,
    bufs: &mut [u64],
    visit: &mut dyn FnMut(&[u64]) -> bool,
    stop: &AtomicBool,
) -> bool {
    if remaining == 0 {
        return visit(&bufs[level * limbs..(level + 1) * limbs]);
    }
    if level == 1 && stop.load(Ordering::Relaxed) {
        return false;
    }
    for i in start..=end - remaining {
        let (prev, next) = bufs.split_at_mut((level + 1) * limbs);
        let prev = &prev[level * limbs..];
        for l in 0..limbs {
            next[l] = prev[l] ^ gen[i * limbs + l];
        }
        if !recurse(gen, limbs, i + 1, end, remaining - 1, level + 1, bufs, visit, stop) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(36, 6), 1_947_792);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn combination_counts_match_binomials() {
        let rows = 9;
        let gen: Vec<u64> = (0..rows).map(|i| 1u64 << i).collect();
        for w in 0..=rows {
            let n = fold_combinations(&gen, 1, rows, w, || 0u64, |c, word| {
                assert_eq!(weight_of(word), w);
                *c += 1;
                true
            }, |a, b| a + b);
            assert_eq!(n as u128, binomial(rows, w));
        }
    }

    #[test]
    fn gray_histogram_of_identity_is_binomial() {
        for rows in [1usize, 5, 15, 17] {
            let gen: Vec<u64> = (0..rows).map(|i| 1u64 << i).collect();
            let hist = gray_code_histogram(&gen, 1, rows, rows);
            for (w, &c) in hist.iter().enumerate() {
                assert_eq!(c as u128, binomial(rows, w));
            }
        }
    }
}
