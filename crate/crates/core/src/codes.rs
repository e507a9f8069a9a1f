//! Linear codes over `R(k,m)`: inner products, algebraic self-duality of
//! standard-form generators, and small-scale brute-force duals.

use crate::binary::BinaryCode;
use crate::bits::BinaryWord;
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{RingElement, RingParams};

pub type RingVector = Vec<RingElement>;

/// Brute-force duals scan `2^(km n)` vectors; refused above this exponent.
pub const BRUTE_FORCE_MAX_BITS: u32 = 24;

pub fn inner_product(a: &[RingElement], b: &[RingElement]) -> Result<RingElement> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let Some(first) = a.first() else {
        return Err(Error::LengthMismatch { left: 0, right: 0 });
    };
    let mut acc = first.params().zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.try_add(&x.try_mul(y)?)?;
    }
    Ok(acc)
}

/// A code generated (as an `R`-module) by the rows of `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCode {
    generators: RingMatrix,
    free: bool,
}

impl RingCode {
    /// `free` is set when the generator is `[I_g | A]`.
    pub fn new(generators: RingMatrix) -> Self {
        let free = generators.rows() > 0 && generators.standard_form_block().is_some();
        Self { generators, free }
    }

    /// The zero code of the given length.
    pub fn zero(params: RingParams, length: usize) -> Self {
        Self::new(RingMatrix::zeros(params, 0, length))
    }

    /// The whole space `R^n`.
    pub fn full(params: RingParams, length: usize) -> Self {
        Self::new(RingMatrix::identity(params, length))
    }

    pub fn params(&self) -> RingParams {
        self.generators.params()
    }

    pub fn length(&self) -> usize {
        self.generators.cols()
    }

    pub fn generators(&self) -> &RingMatrix {
        &self.generators
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    /// `u^i v^j g` over every generator `g`: spans the code over F2.
    pub fn f2_spanning_set(&self) -> Vec<RingVector> {
        let params = self.params();
        let mut out = Vec::with_capacity(self.generators.rows() * params.bits() as usize);
        for g in self.generators.row_iter() {
            for j in 0..params.m() {
                for i in 0..params.k() {
                    let mono = params.monomial(i, j);
                    out.push(g.iter().map(|&x| mono * x).collect());
                }
            }
        }
        out
    }

    /// The code as a binary subspace of the coefficient space (see [`coefficient_word`]).
    pub fn coefficient_code(&self) -> BinaryCode {
        let len = self.params().bits() as usize * self.length();
        BinaryCode::from_rows(len, self.f2_spanning_set().iter().map(|v| coefficient_word(v))).expect("lengths agree")
    }

    /// `log2 |C|`.
    pub fn log2_size(&self) -> usize {
        self.coefficient_code().dimension()
    }

    /// Every codeword exactly once, in lexicographic order of encodings.
    pub fn enumerate_codewords(&self, budget: u64) -> Result<Vec<RingVector>> {
        let basis = self.coefficient_code();
        let words = basis.codewords(budget)?;
        let mut out: Vec<RingVector> =
            words.iter().map(|w| ring_vector_from_coefficients(self.params(), self.length(), w)).collect();
        out.sort_by(|a, b| encodings(a).cmp(&encodings(b)));
        Ok(out)
    }

    pub fn contains(&self, v: &[RingElement]) -> bool {
        v.len() == self.length() && self.coefficient_code().contains(&coefficient_word(v))
    }
}

fn encodings(v: &[RingElement]) -> Vec<u64> {
    v.iter().map(|e| e.encode()).collect()
}

/// F2-linear identification of `R^n` with `F2^(km n)`: coordinate `c` occupies
/// bits `c*km .. (c+1)*km` holding its canonical encoding.
pub fn coefficient_word(v: &[RingElement]) -> BinaryWord {
    let Some(first) = v.first() else {
        return BinaryWord::zeros(0);
    };
    let b = first.params().bits() as usize;
    let mut w = BinaryWord::zeros(b * v.len());
    for (c, e) in v.iter().enumerate() {
        let raw = e.raw();
        for bit in 0..b {
            if (raw >> bit) & 1 == 1 {
                w.set(c * b + bit, true);
            }
        }
    }
    w
}

pub fn ring_vector_from_coefficients(params: RingParams, length: usize, w: &BinaryWord) -> RingVector {
    let b = params.bits() as usize;
    (0..length)
        .map(|c| {
            let x = (0..b).fold(0u64, |acc, bit| acc | ((w.get(c * b + bit) as u64) << bit));
            params.decode(x).expect("in range")
        })
        .collect()
}

/// For `G = [I_n | A]`: self-dual iff `A A^t = I_n`.
pub fn is_self_dual_free(generator: &RingMatrix) -> Result<bool> {
    let a = generator.standard_form_block().ok_or(Error::NotStandardForm)?;
    if a.cols() != a.rows() {
        return Err(Error::NotStandardForm);
    }
    Ok(a.mul(&a.transpose())?.is_identity())
}

/// All of `C^perp` by scanning every vector of `R^n`, sorted by encoding.
pub fn dual_codewords(code: &RingCode) -> Result<Vec<RingVector>> {
    let params = code.params();
    let n = code.length();
    let exponent = params.bits() as u128 * n as u128;
    if exponent > BRUTE_FORCE_MAX_BITS as u128 {
        return Err(Error::OverBudget { what: "brute-force dual (bits of R^n)", needed: exponent, limit: BRUTE_FORCE_MAX_BITS as u128 });
    }
    let q = params.size();
    let gens: Vec<&[RingElement]> = code.generators().row_iter().collect();
    let mut out = Vec::new();
    let mut digits = vec![0u64; n];
    loop {
        let v: RingVector = digits.iter().map(|&x| params.decode(x).expect("in range")).collect();
        if gens.iter().all(|g| inner_product(&v, g).map(|p| p.is_zero()).unwrap_or(false)) {
            out.push(v);
        }
        // odometer, last coordinate fastest, keeps the output sorted
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// `C^perp` as a code: dual words are taken in order and kept as generators
/// whenever they are not already in the span of those before them.
pub fn brute_force_dual(code: &RingCode) -> Result<RingCode> {
    let params = code.params();
    let n = code.length();
    let words = dual_codewords(code)?;
    let mut gens: Vec<RingVector> = Vec::new();
    let mut span = BinaryCode::zero(params.bits() as usize * n);
    for w in words {
        if span.contains(&coefficient_word(&w)) {
            continue;
        }
        gens.push(w);
        let candidate = RingCode::new(RingMatrix::from_rows(params, gens.clone())?);
        span = candidate.coefficient_code();
    }
    let matrix = if gens.is_empty() { RingMatrix::zeros(params, 0, n) } else { RingMatrix::from_rows(params, gens)? };
    Ok(RingCode::new(matrix))
}

/// Oracle: `C == C^perp` as sets.
pub fn is_self_dual_brute(code: &RingCode) -> Result<bool> {
    let dual = dual_codewords(code)?;
    let budget = 1u64 << BRUTE_FORCE_MAX_BITS;
    Ok(code.enumerate_codewords(budget)? == dual)
}
