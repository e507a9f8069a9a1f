//! The generating character of `R(k,m)`, complete/Hamming/Lee weight
//! enumerators and brute-force checks of the three MacWilliams identities.
//!
//! All arithmetic is exact: transforms are carried out on integers and every
//! division by `|C|` is checked for a zero remainder.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{dual_codewords, RingCode, RingVector, BRUTE_FORCE_MAX_BITS};
use crate::error::{Error, Result};
use crate::gray::lee_weight_vector;
use crate::matrix::RingMatrix;
use crate::ring::{RingElement, RingParams};

/// Complete weight enumerators index symbols densely; refused above this ring size.
pub const CWE_MAX_RING_SIZE: u64 = 64;
/// Character tables are built for rings up to this size.
pub const TABLE_MAX_RING_SIZE: u64 = 256;
/// Verifications need `km n` at most this.
pub const VERIFY_MAX_BITS: u32 = 16;

/// `(-1)^(number of nonzero coefficients)`.
pub fn character(a: RingElement) -> i8 {
    if a.coefficient_weight() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    params: RingParams,
    size: usize,
    /// Row-major, `t[i * size + j] = character(g_i g_j)`.
    t: Vec<i8>,
}

impl CharacterTable {
    pub fn new(params: RingParams) -> Result<Self> {
        if params.size() > TABLE_MAX_RING_SIZE {
            return Err(Error::OverBudget { what: "ring size for character tables", needed: params.size() as u128, limit: TABLE_MAX_RING_SIZE as u128 });
        }
        let size = params.size() as usize;
        let elems: Vec<RingElement> = params.elements().collect();
        let mut t = Vec::with_capacity(size * size);
        for &a in &elems {
            for &b in &elems {
                t.push(character(a * b));
            }
        }
        Ok(Self { params, size, t })
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.t[i * self.size + j]
    }

    /// `T T == |R| I`.
    pub fn is_orthogonal(&self) -> bool {
        let n = self.size;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s: i64 = (0..n).map(|l| self.get(i, l) as i64 * self.get(l, j) as i64).sum();
                s == if i == j { n as i64 } else { 0 }
            })
        })
    }
}

fn check_ring_size(params: RingParams) -> Result<()> {
    if params.size() > CWE_MAX_RING_SIZE {
        return Err(Error::OverBudget { what: "ring size for complete enumerators", needed: params.size() as u128, limit: CWE_MAX_RING_SIZE as u128 });
    }
    Ok(())
}

fn check_verify_size(code: &RingCode) -> Result<()> {
    let bits = code.params().bits() as u128 * code.length() as u128;
    if bits > VERIFY_MAX_BITS as u128 {
        return Err(Error::OverBudget { what: "MacWilliams verification (bits of R^n)", needed: bits, limit: VERIFY_MAX_BITS as u128 });
    }
    Ok(())
}

/// Terms keyed by composition: entry `i` counts coordinates equal to `decode(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteWeightEnumerator {
    params: RingParams,
    length: usize,
    terms: BTreeMap<Vec<u32>, u128>,
}

impl CompleteWeightEnumerator {
    pub fn from_words<'a>(params: RingParams, length: usize, words: impl IntoIterator<Item = &'a RingVector>) -> Result<Self> {
        check_ring_size(params)?;
        let mut terms = BTreeMap::new();
        for w in words {
            if w.len() != length {
                return Err(Error::LengthMismatch { left: length, right: w.len() });
            }
            *terms.entry(composition(params, w)).or_insert(0) += 1;
        }
        Ok(Self { params, length, terms })
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u128> {
        &self.terms
    }

    pub fn total(&self) -> u128 {
        self.terms.values().sum()
    }

    /// `X_0 = x`, every other `X_i = y`: counts by number of nonzero coordinates.
    pub fn hamming(&self) -> Vec<u128> {
        let mut out = vec![0u128; self.length + 1];
        for (comp, &c) in &self.terms {
            out[self.length - comp[0] as usize] += c;
        }
        out
    }
}

impl fmt::Display for CompleteWeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (comp, count) in &self.terms {
            let mono: Vec<String> = comp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("X{i}") } else { format!("X{i}^{e}") })
                .collect();
            writeln!(f, "{count} {}", mono.join(" "))?;
        }
        Ok(())
    }
}

fn composition(params: RingParams, w: &[RingElement]) -> Vec<u32> {
    let mut comp = vec![0u32; params.size() as usize];
    for e in w {
        comp[e.encode() as usize] += 1;
    }
    comp
}

/// Exact composition census of every codeword.
pub fn cwe(code: &RingCode, budget: u64) -> Result<CompleteWeightEnumerator> {
    let words = code.enumerate_codewords(budget)?;
    CompleteWeightEnumerator::from_words(code.params(), code.length(), &words)
}

/// `(1/|C|) cwe_C(T X)`: every `X_i` becomes `sum_j T[i][j] X_j` and the product
/// is expanded. The expansion is carried out on the tensor of ordered symbol
/// tuples, where substitution in one factor is multiplication by `T` along one
/// axis; tuples are then collected by composition.
pub fn transform_cwe(enumerator: &CompleteWeightEnumerator, code_size: u128) -> Result<CompleteWeightEnumerator> {
    let params = enumerator.params;
    let n = enumerator.length;
    check_ring_size(params)?;
    let table = CharacterTable::new(params)?;
    let q = table.size();
    let cells = q.checked_pow(n as u32).filter(|&c| c <= 1 << VERIFY_MAX_BITS).ok_or(Error::OverBudget {
        what: "complete enumerator transform (tuples)",
        needed: (q as u128).saturating_pow(n as u32),
        limit: 1 << VERIFY_MAX_BITS,
    })?;
    // one representative ordered tuple per composition
    let mut tensor = vec![0i128; cells];
    for (comp, &count) in &enumerator.terms {
        let mut idx = 0usize;
        for (sym, &e) in comp.iter().enumerate() {
            for _ in 0..e {
                idx = idx * q + sym;
            }
        }
        tensor[idx] += count as i128;
    }
    let mut scratch = vec![0i128; q];
    let mut stride = 1usize;
    for _ in 0..n {
        for base in 0..cells {
            if (base / stride) % q != 0 {
                continue;
            }
            for (j, s) in scratch.iter_mut().enumerate() {
                *s = (0..q).map(|i| table.get(i, j) as i128 * tensor[base + i * stride]).sum();
            }
            for (j, &s) in scratch.iter().enumerate() {
                tensor[base + j * stride] = s;
            }
        }
        stride *= q;
    }
    let mut collected: BTreeMap<Vec<u32>, i128> = BTreeMap::new();
    for (idx, &value) in tensor.iter().enumerate() {
        if value == 0 {
            continue;
        }
        let mut comp = vec![0u32; q];
        let mut rest = idx;
        for _ in 0..n {
            comp[rest % q] += 1;
            rest /= q;
        }
        *collected.entry(comp).or_insert(0) += value;
    }
    let mut terms = BTreeMap::new();
    for (comp, value) in collected {
        if value == 0 {
            continue;
        }
        if value < 0 || value % code_size as i128 != 0 {
            return Err(Error::NotDivisible { what: "complete enumerator coefficient", value, divisor: code_size });
        }
        terms.insert(comp, (value / code_size as i128) as u128);
    }
    Ok(CompleteWeightEnumerator { params, length: n, terms })
}

fn binomial_poly(n: usize, sign: i128, scale: i128) -> Vec<i128> {
    // (1 + sign*scale*y)^n as coefficients of y^i
    let mut p = vec![1i128];
    for _ in 0..n {
        let mut next = vec![0i128; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * sign * scale;
        }
        p = next;
    }
    p
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn divide_exact(poly: Vec<i128>, divisor: u128, what: &'static str) -> Result<Vec<u128>> {
    poly.into_iter()
        .map(|c| {
            if c < 0 || c % divisor as i128 != 0 {
                Err(Error::NotDivisible { what, value: c, divisor })
            } else {
                Ok((c / divisor as i128) as u128)
            }
        })
        .collect()
}

/// `(1/|C|) sum_w A_w (x + (q-1)y)^(n-w) (x - y)^w`, as coefficients of `x^(n-i) y^i`.
pub fn hamming_transform(counts: &[u128], q: u64, code_size: u128) -> Result<Vec<u128>> {
    let n = counts.len() - 1;
    let mut acc = vec![0i128; n + 1];
    for (w, &a) in counts.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let term = poly_mul(&binomial_poly(n - w, 1, q as i128 - 1), &binomial_poly(w, -1, 1));
        for (i, c) in term.into_iter().enumerate() {
            acc[i] += a as i128 * c;
        }
    }
    divide_exact(acc, code_size, "Hamming enumerator coefficient")
}

/// `(1/|C|) sum_w L_w (1 - z)^w (1 + z)^(N-w)`, as coefficients of `z^i`.
pub fn lee_transform(counts: &[u128], code_size: u128) -> Result<Vec<u128>> {
    let total = counts.len() - 1;
    let mut acc = vec![0i128; total + 1];
    for (w, &a) in counts.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let term = poly_mul(&binomial_poly(w, -1, 1), &binomial_poly(total - w, 1, 1));
        for (i, c) in term.into_iter().enumerate() {
            acc[i] += a as i128 * c;
        }
    }
    divide_exact(acc, code_size, "Lee enumerator coefficient")
}

/// Lee weight distribution, indexed `0..=kmn`.
pub fn lee_distribution<'a>(params: RingParams, length: usize, words: impl IntoIterator<Item = &'a RingVector>) -> Vec<u128> {
    let mut out = vec![0u128; params.bits() as usize * length + 1];
    for w in words {
        out[lee_weight_vector(w)] += 1;
    }
    out
}

fn hamming_distribution(length: usize, words: &[RingVector]) -> Vec<u128> {
    let mut out = vec![0u128; length + 1];
    for w in words {
        out[w.iter().filter(|e| !e.is_zero()).count()] += 1;
    }
    out
}

struct BothSides {
    code: Vec<RingVector>,
    dual: Vec<RingVector>,
}

fn both_sides(code: &RingCode) -> Result<BothSides> {
    check_verify_size(code)?;
    let code_words = code.enumerate_codewords(1u64 << BRUTE_FORCE_MAX_BITS)?;
    let dual = dual_codewords(code)?;
    Ok(BothSides { code: code_words, dual })
}

pub fn verify_macwilliams_cwe(code: &RingCode) -> Result<bool> {
    let sides = both_sides(code)?;
    let (params, n) = (code.params(), code.length());
    let ours = CompleteWeightEnumerator::from_words(params, n, &sides.code)?;
    let theirs = CompleteWeightEnumerator::from_words(params, n, &sides.dual)?;
    Ok(transform_cwe(&ours, sides.code.len() as u128)? == theirs)
}

pub fn verify_macwilliams_hamming(code: &RingCode) -> Result<bool> {
    let sides = both_sides(code)?;
    let n = code.length();
    let predicted = hamming_transform(&hamming_distribution(n, &sides.code), code.params().size(), sides.code.len() as u128)?;
    Ok(predicted == hamming_distribution(n, &sides.dual))
}

pub fn verify_macwilliams_lee(code: &RingCode) -> Result<bool> {
    let sides = both_sides(code)?;
    let (params, n) = (code.params(), code.length());
    let predicted = lee_transform(&lee_distribution(params, n, &sides.code), sides.code.len() as u128)?;
    Ok(predicted == lee_distribution(params, n, &sides.dual))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub codes: usize,
    pub cwe_failures: Vec<String>,
    pub hamming_failures: Vec<String>,
    pub lee_failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cwe_failures.is_empty() && self.hamming_failures.is_empty() && self.lee_failures.is_empty()
    }
}

/// Random codes over `R(2,1)`, `R(2,2)`, `R(3,1)`, `R(3,2)` of length 1 or 2 with
/// one or two generators; reproducible from `seed`.
pub fn random_codes(count: usize, seed: u64) -> Vec<RingCode> {
    let rings = [(2, 1), (2, 2), (3, 1), (3, 2)].map(|(k, m)| RingParams::new(k, m).expect("valid"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let params = rings[i % rings.len()];
            let n = rng.gen_range(1..=2usize);
            let gens = rng.gen_range(1..=2usize);
            let rows: Vec<Vec<u64>> =
                (0..gens).map(|_| (0..n).map(|_| rng.gen_range(0..params.size())).collect()).collect();
            RingCode::new(RingMatrix::from_encoded(params, &rows).expect("in range"))
        })
        .collect()
}

/// Runs all three identities on `random_codes(count, seed)`.
pub fn random_suite(count: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for code in random_codes(count, seed) {
        let label = format!("{} | {:?}", code.params(), code.generators().encoded_rows());
        report.codes += 1;
        if !verify_macwilliams_cwe(&code)? {
            report.cwe_failures.push(label.clone());
        }
        if !verify_macwilliams_hamming(&code)? {
            report.hamming_failures.push(label.clone());
        }
        if !verify_macwilliams_lee(&code)? {
            report.lee_failures.push(label);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::gray_image;

    fn p(k: u32, m: u32) -> RingParams {
        RingParams::new(k, m).unwrap()
    }

    fn code(params: RingParams, rows: &[Vec<u64>]) -> RingCode {
        RingCode::new(RingMatrix::from_encoded(params, rows).unwrap())
    }

    #[test]
    fn character_values() {
        for (k, m) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (5, 3)] {
            let r = p(k, m);
            assert_eq!(character(r.zero()), 1);
            assert_eq!(character(r.monomial(k - 1, m - 1)), -1);
        }
        assert_eq!(character(p(2, 1).parse_element("1+u").unwrap()), 1);
    }

    /// The minimal ideal is spanned by `u^(k-1) v^(m-1)`; a generating character
    /// must be nontrivial on every nonzero ideal, hence on every nonzero `aR`.
    #[test]
    fn character_is_generating() {
        for (k, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)] {
            let r = p(k, m);
            for a in r.elements().filter(|a| !a.is_zero()) {
                assert!(r.elements().any(|b| character(a * b) == -1), "{a} in {r}");
            }
        }
    }

    #[test]
    fn character_tables_orthogonal() {
        for (k, m) in [(1, 1), (2, 1), (2, 2), (3, 1), (4, 1), (3, 2), (4, 2), (8, 1)] {
            let t = CharacterTable::new(p(k, m)).unwrap();
            assert!(t.is_orthogonal(), "{k},{m}");
            for i in 0..t.size() {
                assert_eq!(t.get(0, i), 1);
                for j in 0..t.size() {
                    assert_eq!(t.get(i, j), t.get(j, i));
                }
            }
        }
        assert!(CharacterTable::new(p(5, 2)).is_err());
    }

    #[test]
    fn cwe_examples() {
        let r = p(2, 1);
        let zero = RingCode::zero(r, 2);
        let e = cwe(&zero, 16).unwrap();
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.terms()[&vec![2, 0, 0, 0]], 1);
        let c = code(r, &[vec![2]]);
        let e = cwe(&c, 16).unwrap();
        assert_eq!(e.terms().len(), 2);
        assert!(e.terms().values().all(|&v| v == 1));
        assert_eq!(e.to_string(), "1 X2\n1 X0\n");
        assert_eq!(e.hamming(), vec![1, 1]);
    }

    #[test]
    fn identity_examples() {
        let r21 = p(2, 1);
        let cases = [
            RingCode::zero(r21, 1),
            RingCode::full(r21, 1),
            code(r21, &[vec![3]]),
            code(r21, &[vec![2]]),
            code(p(3, 1), &[vec![1, 1]]),
            code(p(2, 2), &[vec![6, 9]]),
        ];
        for c in &cases {
            assert!(verify_macwilliams_cwe(c).unwrap());
            assert!(verify_macwilliams_hamming(c).unwrap());
            assert!(verify_macwilliams_lee(c).unwrap());
        }
        // a self-dual code has a transform-fixed Lee enumerator
        let sd = code(p(3, 1), &[vec![1, 1]]);
        let words = sd.enumerate_codewords(1 << 12).unwrap();
        let lee = lee_distribution(sd.params(), 2, &words);
        assert_eq!(lee_transform(&lee, words.len() as u128).unwrap(), lee);
        assert!(verify_macwilliams_cwe(&RingCode::full(p(2, 2), 5)).is_err());
    }

    #[test]
    fn zero_code_lee_dual_is_full_space() {
        let r = p(2, 2);
        let zero = RingCode::zero(r, 2);
        let predicted = lee_transform(&lee_distribution(r, 2, &zero.enumerate_codewords(1).unwrap()), 1).unwrap();
        let full = RingCode::full(r, 2).enumerate_codewords(1 << 8).unwrap();
        assert_eq!(predicted, lee_distribution(r, 2, &full));
    }

    #[test]
    fn specialization_chain() {
        for c in random_codes(24, 5) {
            let words = c.enumerate_codewords(1 << 16).unwrap();
            let e = CompleteWeightEnumerator::from_words(c.params(), c.length(), &words).unwrap();
            assert_eq!(e.total(), words.len() as u128);
            assert_eq!(e.hamming(), hamming_distribution(c.length(), &words));
            let lee = lee_distribution(c.params(), c.length(), &words);
            let image = gray_image(&c).weight_enumerator(30).unwrap();
            let image: Vec<u128> = image.terms().fold(vec![0u128; lee.len()], |mut v, (w, a)| {
                v[w] = a as u128;
                v
            });
            assert_eq!(lee, image);
        }
    }

    #[test]
    fn binary_specialization_matches_krawtchouk() {
        let hamming = code(p(1, 1), &[vec![1, 0, 0, 0, 0, 1, 1, 1], vec![0, 1, 0, 0, 1, 0, 1, 1]]);
        let words = hamming.enumerate_codewords(16).unwrap();
        let counts = hamming_distribution(8, &words);
        let dual = hamming_transform(&counts, 2, words.len() as u128).unwrap();
        let we = hamming.coefficient_code().weight_enumerator(30).unwrap().macwilliams_dual(2).unwrap();
        let expected: Vec<u128> = (0..=8).map(|w| we.count(w) as u128).collect();
        assert_eq!(dual, expected);
    }

    #[test]
    fn random_suite_passes() {
        let report = random_suite(120, 2024).unwrap();
        assert_eq!(report.codes, 120);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn indivisible_input_is_reported() {
        assert!(matches!(hamming_transform(&[1, 1], 4, 3), Err(Error::NotDivisible { .. })));
    }
}
