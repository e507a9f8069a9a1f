//! Arithmetic in `R(k,m) = F2[u,v] / <u^k, v^m, uv - vu>`.
//!
//! An element is stored as its `k x m` coefficient bit-matrix packed into one
//! `u32`: the coefficient of `u^i v^j` lives at bit `i + j*k`. That packing is
//! also the canonical integer encoding, so for `R(3,2)` the bits read (from
//! high to low) `u^2v, uv, v, u^2, u, 1` and `uv + v + u^2 + 1` encodes as 29.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported `k*m`; one element must fit in a `u32`.
pub const MAX_BITS: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingParams {
    k: u8,
    m: u8,
}

impl RingParams {
    /// Requires `k >= m >= 1` and `k*m <= 32`.
    pub fn new(k: u32, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams { k, m, reason: "m must be at least 1" });
        }
        if k < m {
            return Err(Error::InvalidParams { k, m, reason: "k must be at least m" });
        }
        if k.saturating_mul(m) > MAX_BITS {
            return Err(Error::InvalidParams { k, m, reason: "k*m must not exceed 32" });
        }
        Ok(Self { k: k as u8, m: m as u8 })
    }

    /// The binary field `R(1,1)`.
    pub fn binary() -> Self {
        Self { k: 1, m: 1 }
    }

    pub fn k(&self) -> u32 {
        self.k as u32
    }

    pub fn m(&self) -> u32 {
        self.m as u32
    }

    /// Number of coefficient bits, `k*m`.
    pub fn bits(&self) -> u32 {
        self.k() * self.m()
    }

    /// `|R| = 2^(km)`.
    pub fn size(&self) -> u64 {
        1u64 << self.bits()
    }

    pub fn unit_count(&self) -> u64 {
        self.size() / 2
    }

    fn full_mask(&self) -> u32 {
        if self.bits() == 32 {
            u32::MAX
        } else {
            (1u32 << self.bits()) - 1
        }
    }

    /// Bits whose u-exponent `i` satisfies `i < k - s`, i.e. the ones that
    /// survive multiplication by `u^s`.
    fn u_survivor_mask(&self, s: u32) -> u32 {
        let k = self.k();
        if s >= k {
            return 0;
        }
        let row = ((1u64 << (k - s)) - 1) as u32;
        (0..self.m()).fold(0, |acc, j| acc | (row << (j * k)))
    }

    pub fn zero(&self) -> RingElement {
        RingElement { params: *self, bits: 0 }
    }

    pub fn one(&self) -> RingElement {
        RingElement { params: *self, bits: 1 }
    }

    /// The monomial `u^i v^j`, or zero once an exponent reaches its nilpotency order.
    pub fn monomial(&self, i: u32, j: u32) -> RingElement {
        if i >= self.k() || j >= self.m() {
            return self.zero();
        }
        RingElement { params: *self, bits: 1 << (i + j * self.k()) }
    }

    pub fn u(&self) -> RingElement {
        self.monomial(1, 0)
    }

    pub fn v(&self) -> RingElement {
        self.monomial(0, 1)
    }

    /// All `2^(km)` elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let params = *self;
        (0..self.size()).map(move |x| RingElement { params, bits: x as u32 })
    }

    pub fn units(&self) -> impl Iterator<Item = RingElement> + '_ {
        self.elements().filter(|a| a.is_unit())
    }

    pub fn non_units(&self) -> impl Iterator<Item = RingElement> + '_ {
        self.elements().filter(|a| !a.is_unit())
    }

    pub fn decode(&self, value: u64) -> Result<RingElement> {
        if value >= self.size() {
            return Err(Error::EncodingOutOfRange { value, params: *self, limit: self.size() });
        }
        Ok(RingElement { params: *self, bits: value as u32 })
    }

    /// Parses either a canonical integer or a polynomial string such as `u^2v + 1`.
    pub fn parse_element(&self, input: &str) -> Result<RingElement> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(parse_err(input, "empty input"));
        }
        if compact.bytes().all(|b| b.is_ascii_digit()) {
            let value: u64 = compact.parse().map_err(|_| parse_err(input, "integer too large"))?;
            return self.decode(value);
        }
        let mut bits = 0u32;
        for term in compact.split('+') {
            let (i, j) = parse_term(term).map_err(|reason| parse_err(input, reason))?;
            match (i, j) {
                (None, None) => continue,
                (Some(i), Some(j)) => {
                    if i >= self.k() || j >= self.m() {
                        return Err(parse_err(
                            input,
                            format!("term {term:?} exceeds u^{} v^{}", self.k() - 1, self.m() - 1),
                        ));
                    }
                    bits ^= 1 << (i + j * self.k());
                }
                _ => unreachable!(),
            }
        }
        Ok(RingElement { params: *self, bits })
    }
}

fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::ParseElement { input: input.to_string(), reason: reason.into() }
}

/// Returns `(None, None)` for the zero term `0`, otherwise the exponents of `u` and `v`.
fn parse_term(term: &str) -> std::result::Result<(Option<u32>, Option<u32>), String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    if term == "0" {
        return Ok((None, None));
    }
    if term == "1" {
        return Ok((Some(0), Some(0)));
    }
    let bytes = term.as_bytes();
    let (mut i, mut j) = (0u32, 0u32);
    let (mut seen_u, mut seen_v) = (false, false);
    let mut pos = 0;
    while pos < bytes.len() {
        let var = bytes[pos];
        if var == b'*' {
            pos += 1;
            continue;
        }
        if var != b'u' && var != b'v' {
            return Err(format!("unexpected character {:?} in term {term:?}", var as char));
        }
        pos += 1;
        let mut exp = 1u32;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(format!("missing exponent in term {term:?}"));
            }
            exp = term[start..pos].parse().map_err(|_| format!("bad exponent in {term:?}"))?;
        }
        let (seen, slot) = if var == b'u' { (&mut seen_u, &mut i) } else { (&mut seen_v, &mut j) };
        if *seen {
            return Err(format!("variable repeated in term {term:?}"));
        }
        *seen = true;
        *slot = exp;
    }
    Ok((Some(i), Some(j)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    params: RingParams,
    bits: u32,
}

impl RingElement {
    pub fn params(&self) -> RingParams {
        self.params
    }

    /// Canonical integer encoding `sum c_ij 2^(i + j*k)`.
    pub fn encode(&self) -> u64 {
        self.bits as u64
    }

    pub(crate) fn raw(&self) -> u32 {
        self.bits
    }

    pub fn coeff(&self, i: u32, j: u32) -> bool {
        i < self.params.k() && j < self.params.m() && (self.bits >> (i + j * self.params.k())) & 1 == 1
    }

    /// The `j`-th v-row as an element of `R(k,1)` packed in the low `k` bits.
    pub(crate) fn v_row(&self, j: u32) -> u32 {
        let k = self.params.k();
        ((self.bits as u64 >> (j * k)) & ((1u64 << k) - 1)) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Units are exactly the elements with constant coefficient 1.
    pub fn is_unit(&self) -> bool {
        self.bits & 1 == 1
    }

    pub fn coefficient_weight(&self) -> u32 {
        self.bits.count_ones()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch { left: self.params, right: other.params });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { params: self.params, bits: self.bits ^ other.bits })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { params: self.params, bits: mul_bits(self.params, self.bits, other.bits) })
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = *self;
        let mut acc = self.params.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// `a^(2^n - 1)` for the least `n` with `2^n >= max(k, m)`; then `a^(2^n)` is
    /// the constant coefficient, so this is the inverse of any unit.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit);
        }
        let bound = self.params.k().max(self.params.m());
        let mut n = 0u32;
        while (1u32 << n) < bound {
            n += 1;
        }
        Ok(self.pow((1u64 << n) - 1))
    }

    /// Constant coefficient; the natural projection onto F2.
    pub fn project(&self) -> bool {
        self.bits & 1 == 1
    }
}

/// Truncated 2-D convolution: `u^k` and `v^m` vanish.
fn mul_bits(params: RingParams, a: u32, b: u32) -> u32 {
    let k = params.k();
    let full = params.full_mask();
    let mut acc = 0u32;
    let mut rest = a;
    while rest != 0 {
        let pos = rest.trailing_zeros();
        rest &= rest - 1;
        let (i, j) = (pos % k, pos / k);
        let shifted_u = (b & params.u_survivor_mask(i)) << i;
        let shift_v = j * k;
        let shifted = if shift_v >= 32 { 0 } else { (shifted_u << shift_v) & full };
        acc ^= shifted;
    }
    acc
}

impl Add for RingElement {
    type Output = RingElement;

    /// Panics on mismatched parameters; use [`RingElement::try_add`] to handle that case.
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("ring parameter mismatch")
    }
}

impl Mul for RingElement {
    type Output = RingElement;

    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("ring parameter mismatch")
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({},{})", self.k, self.m)
    }
}

/// Terms in decreasing encoding order, e.g. `uv+v+u^2+1`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("0");
        }
        let k = self.params.k();
        let mut first = true;
        for pos in (0..self.params.bits()).rev() {
            if (self.bits >> pos) & 1 == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let (i, j) = (pos % k, pos / k);
            if i == 0 && j == 0 {
                f.write_str("1")?;
                continue;
            }
            match i {
                0 => {}
                1 => f.write_str("u")?,
                _ => write!(f, "u^{i}")?,
            }
            match j {
                0 => {}
                1 => f.write_str("v")?,
                _ => write!(f, "v^{j}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for RingParams {
    type Err = Error;

    /// Accepts `k,m` or `k m`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
        let bad = || Error::InvalidParams { k: 0, m: 0, reason: "expected two integers k,m" };
        if parts.len() != 2 {
            return Err(bad());
        }
        let k = parts[0].parse().map_err(|_| bad())?;
        let m = parts[1].parse().map_err(|_| bad())?;
        RingParams::new(k, m)
    }
}
