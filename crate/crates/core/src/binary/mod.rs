//! Binary linear codes: row reduction, duals, weight enumerators and minimum
//! distance by exhaustive or information-set enumeration.

mod enumerator;
pub(crate) mod kernels;
mod profile;

pub use enumerator::WeightEnumerator;
pub use profile::{extract_parameters, extremal_bound, Family, SelfDualProfile, SelfDualType};

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::bits::{limbs_for, BinaryWord};
use crate::error::{Error, Result};
use kernels::{binomial, fold_combinations, gray_code_histogram};

/// Full enumeration is refused above this dimension.
pub const EXHAUSTIVE_MAX_DIMENSION: usize = 30;
/// Information-set enumeration is refused above this dimension.
pub const INFORMATION_SET_MAX_DIMENSION: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceAlgorithm {
    Exhaustive,
    InformationSet,
}

/// Outcome of an information-set run. `lower == upper` once the distance is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceBounds {
    pub lower: usize,
    pub upper: usize,
    /// Largest message weight fully enumerated in every information set.
    pub rounds: usize,
}

impl DistanceBounds {
    pub fn is_exact(&self) -> bool {
        self.lower >= self.upper
    }
}

/// Columns forming an information set plus a generator that is the identity on them.
#[derive(Debug, Clone)]
pub struct InformationSet {
    pub columns: Vec<usize>,
    mask: Vec<u64>,
    generator: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    /// Reduced row echelon basis.
    basis: Vec<BinaryWord>,
    pivots: Vec<usize>,
}

impl BinaryCode {
    /// Row-reduces the given generators; dependent rows are dropped.
    pub fn from_rows(length: usize, rows: impl IntoIterator<Item = BinaryWord>) -> Result<Self> {
        let mut rows: Vec<BinaryWord> = rows.into_iter().collect();
        for r in &rows {
            if r.len() != length {
                return Err(Error::LengthMismatch { left: length, right: r.len() });
            }
        }
        let order: Vec<usize> = (0..length).collect();
        let pivots = rref(&mut rows, &order, |_| true);
        rows.truncate(pivots.len());
        Ok(Self { length, basis: rows, pivots })
    }

    pub fn zero(length: usize) -> Self {
        Self { length, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(length: usize) -> Self {
        let rows = (0..length).map(|i| {
            let mut w = BinaryWord::zeros(length);
            w.set(i, true);
            w
        });
        Self::from_rows(length, rows).expect("lengths agree")
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BinaryWord] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, word: &BinaryWord) -> bool {
        if word.len() != self.length {
            return false;
        }
        let mut w = word.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        w.is_zero()
    }

    /// Nullspace basis read off the reduced echelon form.
    pub fn dual(&self) -> BinaryCode {
        let mut is_pivot = vec![false; self.length];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.length).filter(|&c| !is_pivot[c]).map(|free| {
            let mut w = BinaryWord::zeros(self.length);
            w.set(free, true);
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                if row.get(free) {
                    w.set(p, true);
                }
            }
            w
        });
        BinaryCode::from_rows(self.length, rows).expect("lengths agree")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| self.basis[i..].iter().all(|b| !a.dot(b)))
    }

    /// `G G^t = 0` and `2 dim = n`.
    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.length && self.is_self_orthogonal()
    }

    /// For a self-dual code, Type II iff every basis row has weight divisible by 4.
    pub fn is_type_ii(&self) -> Result<bool> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        Ok(self.basis.iter().all(|r| r.weight() % 4 == 0))
    }

    pub fn self_dual_type(&self) -> SelfDualType {
        match self.is_type_ii() {
            Ok(true) => SelfDualType::II,
            Ok(false) => SelfDualType::I,
            Err(_) => SelfDualType::NotSelfDual,
        }
    }

    fn flat_basis(&self) -> (Vec<u64>, usize) {
        let limbs = limbs_for(self.length);
        let mut flat = Vec::with_capacity(self.basis.len() * limbs);
        for r in &self.basis {
            flat.extend_from_slice(r.limbs());
        }
        (flat, limbs)
    }

    /// All codewords, for small codes.
    pub fn codewords(&self, budget: u64) -> Result<Vec<BinaryWord>> {
        let dim = self.dimension();
        if dim >= 64 || (1u64 << dim) > budget {
            return Err(Error::OverBudget { what: "binary codeword list", needed: 1u128 << dim.min(127), limit: budget as u128 });
        }
        let mut out = Vec::with_capacity(1 << dim);
        let mut acc = BinaryWord::zeros(self.length);
        out.push(acc.clone());
        for step in 1..1u64 << dim {
            acc.xor_assign(&self.basis[step.trailing_zeros() as usize]);
            out.push(acc.clone());
        }
        Ok(out)
    }

    /// Exact Hamming weight enumerator by Gray-code enumeration of the message space.
    pub fn weight_enumerator(&self, max_dimension: usize) -> Result<WeightEnumerator> {
        let limit = max_dimension.min(EXHAUSTIVE_MAX_DIMENSION);
        if self.dimension() > limit {
            return Err(Error::DimensionLimit { algorithm: "full enumeration", dimension: self.dimension(), limit });
        }
        let (flat, limbs) = self.flat_basis();
        let hist = gray_code_histogram(&flat, limbs, self.dimension(), self.length);
        Ok(WeightEnumerator::full(self.length, hist))
    }

    pub fn min_distance(&self, algorithm: DistanceAlgorithm) -> Result<usize> {
        if self.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        match algorithm {
            DistanceAlgorithm::Exhaustive => {
                let we = self.weight_enumerator(EXHAUSTIVE_MAX_DIMENSION)?;
                Ok(we.min_nonzero_weight().expect("nonzero code has a nonzero word"))
            }
            DistanceAlgorithm::InformationSet => {
                let b = self.distance_bounds(None)?;
                debug_assert!(b.is_exact());
                Ok(b.upper)
            }
        }
    }

    /// Disjoint information sets found greedily (leftmost pivots first) along a
    /// column order; the loop stops once the unused columns lose full rank.
    /// Several deterministic orders are tried (natural, reversed and the
    /// transposes of every block layout) and the one giving most sets wins, so
    /// block-structured codes such as Gray images still split into halves.
    pub fn information_sets(&self) -> Vec<InformationSet> {
        let n = self.length;
        if self.dimension() == 0 {
            return Vec::new();
        }
        let max_sets = n / self.dimension();
        let mut best = self.greedy_sets(&(0..n).collect::<Vec<_>>());
        let mut orders: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
        for block in 2..n {
            if n % block == 0 {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by_key(|&c| (c % block, c / block));
                orders.push(order);
            }
        }
        for order in orders {
            if best.len() >= max_sets {
                break;
            }
            let sets = self.greedy_sets(&order);
            if sets.len() > best.len() {
                best = sets;
            }
        }
        best
    }

    fn greedy_sets(&self, order: &[usize]) -> Vec<InformationSet> {
        let k = self.dimension();
        let limbs = limbs_for(self.length);
        let mut used = vec![false; self.length];
        let mut sets = Vec::new();
        loop {
            let mut rows = self.basis.clone();
            let pivots = rref(&mut rows, order, |c| !used[c]);
            if pivots.len() < k {
                break;
            }
            // reduced rows are the identity on their pivots: a systematic generator
            let mut mask = vec![0u64; limbs];
            for &p in &pivots {
                used[p] = true;
                mask[p / 64] |= 1u64 << (p % 64);
            }
            let mut generator = Vec::with_capacity(k * limbs);
            for r in &rows[..k] {
                generator.extend_from_slice(r.limbs());
            }
            sets.push(InformationSet { columns: pivots, mask, generator });
        }
        sets
    }

    /// Brouwer-Zimmermann style bounds: enumerate messages of rising weight in each
    /// disjoint information set until the lower bound meets the best word found.
    /// With `stop_below`, returns as soon as a word lighter than that is found.
    pub fn distance_bounds(&self, stop_below: Option<usize>) -> Result<DistanceBounds> {
        let k = self.dimension();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        if k > INFORMATION_SET_MAX_DIMENSION {
            return Err(Error::DimensionLimit {
                algorithm: "information-set",
                dimension: k,
                limit: INFORMATION_SET_MAX_DIMENSION,
            });
        }
        let sets = self.information_sets();
        let g = sets.len();
        let limbs = limbs_for(self.length);
        let upper = AtomicUsize::new(self.basis.iter().map(|r| r.weight()).min().unwrap_or(usize::MAX));
        let mut lower = 1usize;
        for w in 1..=k {
            for (i, set) in sets.iter().enumerate() {
                let target = stop_below.unwrap_or(0);
                fold_combinations(
                    &set.generator,
                    limbs,
                    k,
                    w,
                    || (),
                    |_, word| {
                        let wt: usize = word.iter().map(|x| x.count_ones() as usize).sum();
                        let prev = upper.fetch_min(wt, Ordering::Relaxed);
                        wt.min(prev) >= target
                    },
                    |_, _| (),
                );
                let up = upper.load(Ordering::Relaxed);
                lower = lower.max((i + 1) * (w + 1) + (g - 1 - i) * w);
                if w == k {
                    lower = lower.max(up);
                }
                if lower >= up || stop_below.is_some_and(|t| up < t) {
                    let rounds = if i + 1 == g { w } else { w - 1 };
                    return Ok(DistanceBounds { lower: lower.min(up), upper: up, rounds });
                }
            }
        }
        unreachable!("all messages enumerated")
    }

    /// Number of enumeration steps `low_weight_distribution` would take.
    pub fn low_weight_cost(&self, max_weight: usize) -> u128 {
        let g = self.information_sets().len().max(1);
        let t = max_weight / g;
        let per_set: u128 = (0..=t).map(|w| binomial(self.dimension(), w)).sum();
        per_set * g as u128
    }

    /// Exact counts `A_0 ..= A_max_weight`. A word of weight at most `max_weight`
    /// has weight at most `t = max_weight / g` on some information set; it is
    /// counted only for the first such set.
    pub fn low_weight_distribution(&self, max_weight: usize, budget: u128) -> Result<WeightEnumerator> {
        let max_weight = max_weight.min(self.length);
        let k = self.dimension();
        if k == 0 {
            let mut counts = vec![0u64; max_weight + 1];
            counts[0] = 1;
            return Ok(WeightEnumerator::partial(self.length, counts, max_weight));
        }
        let cost = self.low_weight_cost(max_weight);
        if cost > budget {
            return Err(Error::OverBudget { what: "low-weight census", needed: cost, limit: budget });
        }
        let sets = self.information_sets();
        let g = sets.len();
        let t = max_weight / g;
        let limbs = limbs_for(self.length);
        let mut counts = vec![0u64; max_weight + 1];
        for (i, set) in sets.iter().enumerate() {
            let earlier = &sets[..i];
            for w in 0..=t.min(k) {
                let hist = fold_combinations(
                    &set.generator,
                    limbs,
                    k,
                    w,
                    || vec![0u64; max_weight + 1],
                    |hist, word| {
                        let wt: usize = word.iter().map(|x| x.count_ones() as usize).sum();
                        if wt <= max_weight
                            && earlier.iter().all(|e| {
                                let on: usize = word.iter().zip(&e.mask).map(|(a, b)| (a & b).count_ones() as usize).sum();
                                on > t
                            })
                        {
                            hist[wt] += 1;
                        }
                        true
                    },
                    |mut a, b| {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                        a
                    },
                );
                for (c, h) in counts.iter_mut().zip(hist) {
                    *c += h;
                }
            }
        }
        Ok(WeightEnumerator::partial(self.length, counts, max_weight))
    }
}

/// In-place reduced row echelon form using only columns accepted by `allowed`,
/// visited in `order`. Returns the pivot columns; the first `pivots.len()` rows
/// are the nonzero reduced rows.
fn rref(rows: &mut [BinaryWord], order: &[usize], allowed: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for &col in order {
        if r == rows.len() {
            break;
        }
        if !allowed(col) {
            continue;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}
