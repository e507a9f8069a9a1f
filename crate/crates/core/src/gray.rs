//! The Gray map `R(k,m)^n -> F2^(kmn)` and the Lee weight.
//!
//! Write an element as `a_0 + a_1 u + ... + a_{k-1} u^{k-1}`. Output block `t`
//! (for `t = 1..k`) is the sum `a_l + ... + a_r` over the interval
//! `l = floor(t/2)`, `r = k - 1 - floor((t-1)/2)`; for `k = 3` that is
//! `(a0+a1+a2, a1+a2, a1)`. The same schedule of order `m` applied to the
//! v-components (each an element of `R(k,1)`) extends the map to `R(k,m)`.
//!
//! On vectors, block `t` holds the interval sums for every coordinate, so bit
//! `(t_v * k + t_u) * n + c` of the image belongs to coordinate `c`.

use crate::binary::BinaryCode;
use crate::bits::BinaryWord;
use crate::codes::{dual_codewords, RingCode, BRUTE_FORCE_MAX_BITS};
use crate::error::{Error, Result};
use crate::ring::{RingElement, RingParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayIntervalSchedule {
    order: u32,
    /// Inclusive `(l_t, r_t)` for `t = 1..=order`.
    intervals: Vec<(u32, u32)>,
}

impl GrayIntervalSchedule {
    pub fn new(order: u32) -> Self {
        let intervals = (1..=order).map(|t| (t / 2, order - 1 - (t - 1) / 2)).collect();
        Self { order, intervals }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.intervals
    }

    /// Applies the schedule to `order` packed components; interval `t` lands in bit `t-1`.
    fn apply_bits(&self, components: u32) -> u32 {
        self.intervals.iter().enumerate().fold(0, |acc, (t, &(l, r))| {
            let span = ((1u64 << (r - l + 1)) - 1) << l;
            let parity = (components as u64 & span).count_ones() & 1;
            acc | (parity << t)
        })
    }
}

/// Gray image of one element: `km` bits, bit `t_v * k + t_u`.
pub fn element_image(a: RingElement) -> u64 {
    let params = a.params();
    let (k, m) = (params.k(), params.m());
    let inner = GrayIntervalSchedule::new(k);
    let outer = GrayIntervalSchedule::new(m);
    let mut out = 0u64;
    for (tv, &(l, r)) in outer.intervals().iter().enumerate() {
        let sum = (l..=r).fold(0u32, |acc, j| acc ^ a.v_row(j));
        out |= (inner.apply_bits(sum) as u64) << (tv as u32 * k);
    }
    out
}

pub fn lee_weight(a: RingElement) -> usize {
    element_image(a).count_ones() as usize
}

/// Lee weight of a vector: Hamming weight of its Gray image.
pub fn lee_weight_vector(v: &[RingElement]) -> usize {
    v.iter().map(|&a| lee_weight(a)).sum()
}

fn check_uniform(v: &[RingElement]) -> Result<Option<RingParams>> {
    let Some(first) = v.first() else {
        return Ok(None);
    };
    let params = first.params();
    for e in v {
        if e.params() != params {
            return Err(Error::ParamsMismatch { left: params, right: e.params() });
        }
    }
    Ok(Some(params))
}

/// The Gray map on `R(k,m)^n`, block-major layout (see module docs).
pub fn phi_km(v: &[RingElement]) -> Result<BinaryWord> {
    let Some(params) = check_uniform(v)? else {
        return Ok(BinaryWord::zeros(0));
    };
    let n = v.len();
    let blocks = params.bits() as usize;
    let mut out = BinaryWord::zeros(blocks * n);
    for (c, &a) in v.iter().enumerate() {
        let mut img = element_image(a);
        while img != 0 {
            let b = img.trailing_zeros() as usize;
            img &= img - 1;
            out.set(b * n + c, true);
        }
    }
    Ok(out)
}

/// The Gray map on `R(k,1)^n`.
pub fn phi_k1(v: &[RingElement]) -> Result<BinaryWord> {
    if let Some(params) = check_uniform(v)? {
        if params.m() != 1 {
            return Err(Error::GrayRequiresChainRing { params });
        }
    }
    phi_km(v)
}

/// The binary code `phi(C)`, spanned by the images of `u^i v^j g`.
pub fn gray_image(code: &RingCode) -> BinaryCode {
    let len = code.params().bits() as usize * code.length();
    let rows = code.f2_spanning_set().into_iter().map(|v| phi_km(&v).expect("uniform params"));
    BinaryCode::from_rows(len, rows).expect("lengths agree")
}

/// Gray images of the generator rows multiplied by each `u^i v^j`, in order
/// `(generator, j, i)`; for a free code of rank `g` this is a `kmg x kmn`
/// binary generator matrix.
pub fn gray_generator_rows(code: &RingCode) -> Vec<BinaryWord> {
    code.f2_spanning_set().iter().map(|v| phi_km(v).expect("uniform params")).collect()
}

/// Checks `phi(C^perp) = phi(C)^perp`: the brute-force dual is mapped word by
/// word and compared against the binary dual of `phi(C)` (containment plus
/// equal size gives set equality).
pub fn check_gray_duality(code: &RingCode, max_bits: u32) -> Result<bool> {
    let exponent = code.params().bits() * code.length() as u32;
    let limit = max_bits.min(BRUTE_FORCE_MAX_BITS);
    if exponent > limit {
        return Err(Error::OverBudget { what: "Gray duality check (bits of R^n)", needed: exponent as u128, limit: limit as u128 });
    }
    let dual_words = dual_codewords(code)?;
    let image_dual = gray_image(code).dual();
    if (1u128 << image_dual.dimension()) != dual_words.len() as u128 {
        return Ok(false);
    }
    for w in &dual_words {
        if !image_dual.contains(&phi_km(w)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
