//! The projection `mu: R(k,m) -> F2`, lifts of binary circulant seeds and the
//! filtered search for self-dual lifts with good Gray images.
//!
//! A lift replaces every 1 of the seed by a unit and every 0 by a non-unit, so
//! each entry has `2^(km-1)` choices. Choice `d` of an entry is the element with
//! encoding `2d + 1` (seed 1) or `2d` (seed 0); candidate `i` of an exhaustive
//! run reads those choices as mixed-radix digits of `i`, first entry lowest.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::binary::{extract_parameters, BinaryCode, DistanceAlgorithm, SelfDualProfile, SelfDualType};
use crate::codes::{is_self_dual_free, RingCode};
use crate::constructions::ConstructionSpec;
use crate::error::{Error, Result};
use crate::gray::gray_image;
use crate::matrix::RingMatrix;
use crate::ring::RingParams;

/// Exhaustive runs are refused above this many candidates.
pub const EXHAUSTIVE_MAX_CANDIDATES: u64 = 1 << 24;
/// Weight-enumerator prefix used for bucketing.
pub const PREFIX_WEIGHT: usize = 16;
/// Gray images up to this dimension get a full weight enumerator.
const FULL_ENUMERATOR_DIMENSION: usize = 20;
const CENSUS_BUDGET: u128 = 1 << 34;

/// Entrywise projection; the result lives over `R(1,1)`.
pub fn project(matrix: &RingMatrix) -> RingMatrix {
    let f2 = RingParams::binary();
    let rows: Vec<Vec<u64>> = matrix.row_iter().map(|r| r.iter().map(|e| e.project() as u64).collect()).collect();
    RingMatrix::from_encoded(f2, &rows).expect("bits are in range")
}

/// `mu(C)`, spanned by the projected generators.
pub fn projected_code(code: &RingCode) -> BinaryCode {
    BinaryCode::from_rows(code.length(), code.generators().project()).expect("lengths agree")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub lee_distance: usize,
    pub projected_distance: usize,
    pub m: u32,
    pub holds: bool,
}

/// Checks `d_L(C) <= 2m d(mu(C))`. `None` when `mu(C) = {0}`.
pub fn check_distance_bound(code: &RingCode) -> Result<Option<BoundCheck>> {
    let projected = projected_code(code);
    if projected.dimension() == 0 {
        return Ok(None);
    }
    let projected_distance = projected.min_distance(pick_algorithm(&projected))?;
    let image = gray_image(code);
    let lee_distance = image.min_distance(pick_algorithm(&image))?;
    let m = code.params().m();
    Ok(Some(BoundCheck { lee_distance, projected_distance, m, holds: lee_distance <= 2 * m as usize * projected_distance }))
}

fn pick_algorithm(code: &BinaryCode) -> DistanceAlgorithm {
    if code.dimension() <= FULL_ENUMERATOR_DIMENSION {
        DistanceAlgorithm::Exhaustive
    } else {
        DistanceAlgorithm::InformationSet
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftSearchSpec {
    /// Binary seed, a construction over `R(1,1)`.
    pub seed: ConstructionSpec,
    pub params: RingParams,
    pub strategy: Strategy,
    /// Minimum distance the Gray image must reach.
    pub target: usize,
    /// Maximum number of candidates examined.
    pub budget: u64,
}

impl LiftSearchSpec {
    /// Parses `key value` lines: `seed <spec>`, `ring k m`,
    /// `strategy exhaustive` or `strategy sampled COUNT SEED`, `target D`, `budget N`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut seed = None;
        let mut params = None;
        let mut strategy = Strategy::Exhaustive;
        let mut target = None;
        let mut budget = EXHAUSTIVE_MAX_CANDIDATES;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Syntax { line: line_no, message };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let words: Vec<&str> = rest.split_whitespace().collect();
            let num = |s: &str| s.parse::<u64>().map_err(|_| err(format!("expected a number, got {s:?}")));
            match key {
                "seed" => {
                    let spec = ConstructionSpec::parse_line(rest, line_no)?;
                    if spec.params() != RingParams::binary() {
                        return Err(err("seed must be binary (k = m = 1)".into()));
                    }
                    seed = Some(spec);
                }
                "ring" => {
                    let [k, m] = words[..] else {
                        return Err(err("expected `ring k m`".into()));
                    };
                    params = Some(RingParams::new(num(k)? as u32, num(m)? as u32).map_err(|e| err(e.to_string()))?);
                }
                "strategy" => {
                    strategy = match words[..] {
                        ["exhaustive"] => Strategy::Exhaustive,
                        ["sampled", count, seed] => Strategy::Sampled { count: num(count)?, seed: num(seed)? },
                        _ => return Err(err(format!("expected `exhaustive` or `sampled COUNT SEED`, got {rest:?}"))),
                    }
                }
                "target" => target = Some(num(rest)? as usize),
                "budget" => budget = num(rest)?,
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        let last = text.lines().count().max(1);
        let missing = |what: &str| Error::Syntax { line: last, message: format!("missing `{what}` line") };
        Ok(Self {
            seed: seed.ok_or_else(|| missing("seed"))?,
            params: params.ok_or_else(|| missing("ring"))?,
            strategy,
            target: target.ok_or_else(|| missing("target"))?,
            budget,
        })
    }
}

impl FromStr for LiftSearchSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// The candidate list of a search, addressable by index.
#[derive(Debug, Clone)]
pub struct Lifts {
    seed: ConstructionSpec,
    seed_bits: Vec<bool>,
    params: RingParams,
    strategy: Strategy,
    count: u64,
}

impl Lifts {
    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    fn digits(&self, index: u64) -> Vec<u64> {
        let choice_bits = self.params.bits() - 1;
        let radix = 1u64 << choice_bits;
        match self.strategy {
            Strategy::Exhaustive => {
                let mut rest = index as u128;
                self.seed_bits
                    .iter()
                    .map(|_| {
                        let d = (rest % radix as u128) as u64;
                        rest /= radix as u128;
                        d
                    })
                    .collect()
            }
            Strategy::Sampled { seed, .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(index);
                self.seed_bits.iter().map(|_| rng.gen_range(0..radix)).collect()
            }
        }
    }

    /// Candidate `index` as a construction over the target ring.
    pub fn get(&self, index: u64) -> ConstructionSpec {
        let entries: Vec<_> = self
            .digits(index)
            .iter()
            .zip(&self.seed_bits)
            .map(|(&d, &one)| self.params.decode(2 * d + one as u64).expect("digit in range"))
            .collect();
        self.seed.with_entries(self.params, &entries).expect("same shape")
    }

    pub fn iter(&self) -> impl Iterator<Item = ConstructionSpec> + '_ {
        (0..self.count).map(|i| self.get(i))
    }
}

pub fn enumerate_lifts(spec: &LiftSearchSpec) -> Result<Lifts> {
    if spec.seed.params() != RingParams::binary() {
        return Err(Error::ParamsMismatch { left: RingParams::binary(), right: spec.seed.params() });
    }
    let seed_bits: Vec<bool> = spec.seed.entries().iter().map(|e| e.project()).collect();
    let count = match spec.strategy {
        Strategy::Exhaustive => {
            let exponent = (spec.params.bits() as u128 - 1) * seed_bits.len() as u128;
            let limit = EXHAUSTIVE_MAX_CANDIDATES.min(spec.budget);
            if exponent >= 64 || (1u64 << exponent) > limit {
                let needed = if exponent >= 127 { u128::MAX } else { 1u128 << exponent };
                return Err(Error::OverBudget { what: "exhaustive lift candidates", needed, limit: limit as u128 });
            }
            1u64 << exponent
        }
        Strategy::Sampled { count, .. } => {
            if count > spec.budget {
                return Err(Error::OverBudget { what: "sampled lift candidates", needed: count as u128, limit: spec.budget as u128 });
            }
            count
        }
    };
    Ok(Lifts { seed: spec.seed.clone(), seed_bits, params: spec.params, strategy: spec.strategy, count })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftHit {
    pub index: u64,
    pub spec: ConstructionSpec,
    pub profile: SelfDualProfile,
    /// `A_0 ..= A_16` of the Gray image.
    pub prefix: Vec<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub candidates: u64,
    pub self_dual: u64,
    pub hits: Vec<LiftHit>,
    /// Set when the seed distance alone rules out the target.
    pub pruned: bool,
}

impl SearchReport {
    /// Hits grouped by `(d, weight-enumerator prefix)`, as indices into `hits`.
    pub fn buckets(&self) -> BTreeMap<(usize, Vec<u64>), Vec<usize>> {
        let mut out: BTreeMap<(usize, Vec<u64>), Vec<usize>> = BTreeMap::new();
        for (i, h) in self.hits.iter().enumerate() {
            out.entry((h.profile.d.unwrap_or(0), h.prefix.clone())).or_default().push(i);
        }
        out
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "candidates: {}", self.candidates)?;
        writeln!(f, "self-dual: {}", self.self_dual)?;
        if self.pruned {
            writeln!(f, "pruned: seed distance too small for the target")?;
        }
        writeln!(f, "hits: {}", self.hits.len())?;
        writeln!(f, "buckets: {}", self.buckets().len())?;
        for ((d, _), members) in self.buckets() {
            let h = &self.hits[members[0]];
            let p = &h.profile;
            let opt = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
            writeln!(
                f,
                "d={d} type={:?} family={} beta={} gamma={} alpha={} count={} first={} | {}",
                p.code_type,
                p.family,
                opt(p.beta),
                opt(p.gamma),
                opt(p.alpha),
                members.len(),
                h.index,
                h.spec
            )?;
        }
        Ok(())
    }
}

enum Outcome {
    NotSelfDual,
    BelowTarget,
    Hit(SelfDualProfile, Vec<u64>),
}

/// Runs one lift through the filters; a hit carries profile and enumerator prefix.
fn evaluate(spec: &ConstructionSpec, target: usize) -> Result<Outcome> {
    let matrix = spec.build()?;
    if !is_self_dual_free(&matrix)? {
        return Ok(Outcome::NotSelfDual);
    }
    let image = gray_image(&RingCode::new(matrix));
    let bounds = image.distance_bounds(Some(target))?;
    if bounds.upper < target {
        return Ok(Outcome::BelowTarget);
    }
    let d = bounds.upper;
    let code_type = image.self_dual_type();
    let we = if image.dimension() <= FULL_ENUMERATOR_DIMENSION {
        image.weight_enumerator(FULL_ENUMERATOR_DIMENSION)?
    } else {
        image.low_weight_distribution(PREFIX_WEIGHT, CENSUS_BUDGET)?
    };
    let profile = extract_parameters(&we, code_type).unwrap_or_else(|_| SelfDualProfile::new(code_type, Some(d)));
    Ok(Outcome::Hit(SelfDualProfile { d: Some(d), ..profile }, we.prefix(PREFIX_WEIGHT)))
}

/// Runs the pipeline over every candidate: self-duality, Gray image, distance
/// filter, profile. Hits are returned in candidate order.
pub fn search(spec: &LiftSearchSpec) -> Result<SearchReport> {
    let seed_code = BinaryCode::from_rows(spec.seed.length(), spec.seed.build()?.project())?;
    if seed_code.dimension() > 0 {
        let d_seed = seed_code.min_distance(pick_algorithm(&seed_code))?;
        if 2 * spec.params.m() as usize * d_seed < spec.target {
            return Ok(SearchReport { pruned: true, ..SearchReport::default() });
        }
    }
    let n = spec.seed.length() * spec.params.bits() as usize;
    if spec.target > extremal_ceiling(n) {
        let lifts = enumerate_lifts(spec)?;
        return Ok(SearchReport { candidates: lifts.len(), ..SearchReport::default() });
    }
    let lifts = enumerate_lifts(spec)?;
    let self_dual = AtomicU64::new(0);
    let results: Vec<Result<Option<LiftHit>>> = (0..lifts.len())
        .into_par_iter()
        .map(|index| {
            let candidate = lifts.get(index);
            match evaluate(&candidate, spec.target)? {
                Outcome::NotSelfDual => Ok(None),
                Outcome::BelowTarget => {
                    self_dual.fetch_add(1, Ordering::Relaxed);
                    Ok(None)
                }
                Outcome::Hit(profile, prefix) => {
                    self_dual.fetch_add(1, Ordering::Relaxed);
                    Ok(Some(LiftHit { index, spec: candidate, profile, prefix }))
                }
            }
        })
        .collect();
    let mut hits = Vec::new();
    for r in results {
        if let Some(h) = r? {
            hits.push(h);
        }
    }
    Ok(SearchReport { candidates: lifts.len(), self_dual: self_dual.into_inner(), hits, pruned: false })
}

/// Largest distance any self-dual binary code of length `n` can have.
fn extremal_ceiling(n: usize) -> usize {
    crate::binary::extremal_bound(n, SelfDualType::I).max(crate::binary::extremal_bound(n, SelfDualType::II))
}
