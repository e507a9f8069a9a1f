//! Published constructions as fixture rows, and the checks run against them.
//!
//! A fixture line is `ID: <construction spec> => key=value ...` with keys
//! `d`, `type`, `family`, `alpha`, `beta`, `gamma`. The id and the expectations
//! are optional, so a bare construction spec is a valid line too. Blank lines
//! and `#` comments are skipped.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::binary::{extract_parameters, BinaryCode, DistanceAlgorithm, Family, SelfDualProfile, SelfDualType, WeightEnumerator};
use crate::codes::{is_self_dual_free, RingCode};
use crate::constructions::ConstructionSpec;
use crate::error::{Error, Result};
use crate::gray::gray_image;
use crate::lift::projected_code;

/// Embedded tables: id, description, contents.
pub const TABLES: &[(&str, &str, &str)] = &[
    ("golay", "extended Golay code lifts over R(3,1) and R(3,2)", include_str!("../fixtures/golay.txt")),
    ("t1", "[36,18,8] double circulant", include_str!("../fixtures/t1.txt")),
    ("t2", "[36,18,8] bordered double circulant over R(3,1)", include_str!("../fixtures/t2.txt")),
    ("t3", "[36,18,8] four circulant over R(3,1)", include_str!("../fixtures/t3.txt")),
    ("t4", "[66,33,12] double circulant over R(3,1)", include_str!("../fixtures/t4.txt")),
    ("t5", "Type II [72,36,12] double circulant over R(3,1)", include_str!("../fixtures/t5.txt")),
    ("t6", "Type II [72,36,12] bordered double circulant over R(3,1)", include_str!("../fixtures/t6.txt")),
    ("t8", "Type II [72,36,12] bordered double circulant over R(3,2)", include_str!("../fixtures/t8.txt")),
];

/// Alternative names accepted by [`table`].
const ALIASES: &[(&str, &str)] = &[("t7", "t8")];

/// Gray images up to this dimension get a full weight enumerator.
pub const FULL_ENUMERATOR_DIMENSION: usize = 20;
const CENSUS_BUDGET: u128 = 1 << 36;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expected {
    pub d: Option<usize>,
    pub code_type: Option<SelfDualType>,
    pub family: Option<Family>,
    pub alpha: Option<i64>,
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
}

impl Expected {
    pub fn is_empty(&self) -> bool {
        *self == Expected::default()
    }

    /// Whether the expectations need weight counts beyond the minimum distance.
    fn needs_enumerator(&self) -> bool {
        self.family.is_some() || self.alpha.is_some() || self.beta.is_some() || self.gamma.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureRow {
    pub id: Option<String>,
    pub spec: ConstructionSpec,
    pub expected: Expected,
}

impl FixtureRow {
    pub fn parse_line(line: &str, line_no: usize) -> Result<Self> {
        let err = |message: String| Error::Syntax { line: line_no, message };
        let (head, tail) = match line.split_once("=>") {
            Some((h, t)) => (h, Some(t)),
            None => (line, None),
        };
        let (id, spec_text) = match head.split_once(':') {
            Some((id, rest)) => {
                let id = id.trim();
                if id.is_empty() || id.contains(char::is_whitespace) {
                    return Err(err(format!("bad row id {id:?}")));
                }
                (Some(id.to_string()), rest)
            }
            None => (None, head),
        };
        let spec = ConstructionSpec::parse_line(spec_text.trim(), line_no)?;
        let mut expected = Expected::default();
        for pair in tail.unwrap_or("").split_whitespace() {
            let (key, value) = pair.split_once('=').ok_or_else(|| err(format!("expected key=value, got {pair:?}")))?;
            let int = |v: &str| v.parse::<i64>().map_err(|_| err(format!("{key}: expected an integer, got {v:?}")));
            match key {
                "d" => expected.d = Some(int(value)?.try_into().map_err(|_| err("d must be non-negative".into()))?),
                "type" => expected.code_type = Some(value.parse().map_err(err)?),
                "family" => expected.family = Some(value.parse().map_err(err)?),
                "alpha" => expected.alpha = Some(int(value)?),
                "beta" => expected.beta = Some(int(value)?),
                "gamma" => expected.gamma = Some(int(value)?),
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        Ok(Self { id, spec, expected })
    }

    pub fn label(&self) -> String {
        self.id.clone().unwrap_or_else(|| self.spec.to_string())
    }
}

impl fmt::Display for FixtureRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(id) = &self.id {
            write!(f, "{id}: ")?;
        }
        write!(f, "{}", self.spec)?;
        let e = &self.expected;
        if e.is_empty() {
            return Ok(());
        }
        f.write_str(" =>")?;
        if let Some(d) = e.d {
            write!(f, " d={d}")?;
        }
        if let Some(t) = e.code_type {
            write!(f, " type={t}")?;
        }
        if let Some(fam) = e.family {
            write!(f, " family={fam}")?;
        }
        for (key, value) in [("alpha", e.alpha), ("beta", e.beta), ("gamma", e.gamma)] {
            if let Some(v) = value {
                write!(f, " {key}={v}")?;
            }
        }
        Ok(())
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureRow>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then(|| FixtureRow::parse_line(line, i + 1))
        })
        .collect()
}

/// Canonical text of a list of rows, one per line.
pub fn serialize_fixtures(rows: &[FixtureRow]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

/// Table ids in display order.
pub fn table_ids() -> Vec<&'static str> {
    TABLES.iter().map(|(id, _, _)| *id).collect()
}

pub fn table(id: &str) -> Result<Vec<FixtureRow>> {
    let lower = id.to_ascii_lowercase();
    let resolved = ALIASES.iter().find(|(a, _)| *a == lower).map_or(lower.as_str(), |(_, t)| *t);
    let (_, _, text) = TABLES.iter().find(|(t, _, _)| *t == resolved).ok_or_else(|| Error::UnknownTable {
        id: id.to_string(),
        known: format!("{}, all (t7 is an alias of t8)", table_ids().join(", ")),
    })?;
    parse_fixtures(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Also run the low-weight census on codes too large to enumerate fully.
    pub extended: bool,
    /// Forces the minimum-distance algorithm.
    pub algorithm: Option<DistanceAlgorithm>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self { extended: false, algorithm: None }
    }
}

/// Everything `check` and `reproduce` report about one construction.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub spec: ConstructionSpec,
    pub length: usize,
    pub dimension: usize,
    /// `A A^t = I` on the standard-form block.
    pub algebraic_self_dual: bool,
    pub image_self_dual: bool,
    pub projection_self_dual: bool,
    pub code_type: SelfDualType,
    pub distance: Option<usize>,
    pub distance_lower: usize,
    pub algorithm: DistanceAlgorithm,
    /// Full enumerator for small images; low-weight counts with `extended`.
    pub enumerator: Option<WeightEnumerator>,
    pub profile: Option<SelfDualProfile>,
    pub profile_error: Option<String>,
    /// `(lee distance, projected distance, m)` for the bound `d <= 2 m d'`.
    pub bound: Option<(usize, usize, u32)>,
    pub elapsed: Duration,
}

/// Census depth needed by the weight-enumerator families of length `n`.
fn census_weight(n: usize) -> usize {
    match n {
        36 => 10,
        66 => 14,
        _ => 16,
    }
}

pub fn analyze(spec: &ConstructionSpec, options: AnalysisOptions) -> Result<Analysis> {
    let start = Instant::now();
    let matrix = spec.build()?;
    let algebraic_self_dual = is_self_dual_free(&matrix)?;
    let code = RingCode::new(matrix);
    let image = gray_image(&code);
    let projected = projected_code(&code);
    let projection_self_dual = projected.is_self_dual();
    let image_self_dual = image.is_self_dual();
    let code_type = image.self_dual_type();
    let (length, dimension) = (image.length(), image.dimension());
    let small = dimension <= FULL_ENUMERATOR_DIMENSION;
    let algorithm = options.algorithm.unwrap_or(if small { DistanceAlgorithm::Exhaustive } else { DistanceAlgorithm::InformationSet });

    let mut enumerator = None;
    let (distance, distance_lower) = if dimension == 0 {
        (None, 0)
    } else {
        match algorithm {
            DistanceAlgorithm::Exhaustive => {
                let we = image.weight_enumerator(FULL_ENUMERATOR_DIMENSION.max(dimension))?;
                let d = we.min_nonzero_weight().expect("nonzero code");
                enumerator = Some(we);
                (Some(d), d)
            }
            DistanceAlgorithm::InformationSet => {
                let b = image.distance_bounds(None)?;
                (b.is_exact().then_some(b.upper), b.lower)
            }
        }
    };
    if enumerator.is_none() && dimension > 0 {
        enumerator = if small {
            Some(image.weight_enumerator(FULL_ENUMERATOR_DIMENSION)?)
        } else if options.extended {
            Some(image.low_weight_distribution(census_weight(length), CENSUS_BUDGET)?)
        } else {
            None
        };
    }
    let (mut profile, mut profile_error) = (None, None);
    if code_type != SelfDualType::NotSelfDual {
        if let Some(we) = &enumerator {
            match extract_parameters(we, code_type) {
                Ok(p) => profile = Some(p),
                Err(e) => profile_error = Some(e.to_string()),
            }
        }
    }
    let bound = match (distance, projected.dimension()) {
        (Some(d), k) if k > 0 => {
            let d_proj = projected.min_distance(if k <= FULL_ENUMERATOR_DIMENSION {
                DistanceAlgorithm::Exhaustive
            } else {
                DistanceAlgorithm::InformationSet
            })?;
            Some((d, d_proj, spec.params().m()))
        }
        _ => None,
    };
    Ok(Analysis {
        spec: spec.clone(),
        length,
        dimension,
        algebraic_self_dual,
        image_self_dual,
        projection_self_dual,
        code_type,
        distance,
        distance_lower,
        algorithm,
        enumerator,
        profile,
        profile_error,
        bound,
        elapsed: start.elapsed(),
    })
}

impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "spec: {}", self.spec)?;
        writeln!(f, "gray image: [{}, {}]", self.length, self.dimension)?;
        writeln!(f, "self-dual over ring (A A^t = I): {}", self.algebraic_self_dual)?;
        writeln!(f, "gray image self-dual: {}", self.image_self_dual)?;
        writeln!(f, "projection self-dual: {}", self.projection_self_dual)?;
        writeln!(f, "type: {}", self.code_type)?;
        match self.distance {
            Some(d) => writeln!(f, "minimum distance: {d} ({:?})", self.algorithm)?,
            None => writeln!(f, "minimum distance: >= {} ({:?})", self.distance_lower, self.algorithm)?,
        }
        if let Some((d, dp, m)) = self.bound {
            writeln!(f, "bound d <= 2m d': {d} <= 2*{m}*{dp} {}", if d <= 2 * m as usize * dp { "holds" } else { "FAILS" })?;
        }
        if let Some(we) = &self.enumerator {
            writeln!(f, "weight enumerator: {we}")?;
        }
        if let Some(p) = &self.profile {
            write!(f, "{p}")?;
        }
        if let Some(e) = &self.profile_error {
            writeln!(f, "profile: {e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct RowReport {
    pub label: String,
    pub checks: Vec<CheckLine>,
    /// Expectations that were not checked in this mode.
    pub skipped: Vec<&'static str>,
    pub elapsed: Duration,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<String> =
            self.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
        let summary: Vec<String> = self.checks.iter().filter(|c| c.passed).map(|c| c.detail.clone()).collect();
        write!(f, "{} {:<6} {}", if self.passed() { "PASS" } else { "FAIL" }, self.label, summary.join(", "))?;
        if !failed.is_empty() {
            write!(f, " | failed: {}", failed.join("; "))?;
        }
        if !self.skipped.is_empty() {
            write!(f, " | not checked without --extended: {}", self.skipped.join(", "))?;
        }
        write!(f, " ({:.2}s)", self.elapsed.as_secs_f64())
    }
}

/// Checks one row against its expectations.
pub fn verify_row(row: &FixtureRow, options: AnalysisOptions) -> Result<RowReport> {
    let a = analyze(&row.spec, options)?;
    let e = &row.expected;
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(CheckLine { name, passed, detail });
    push("ring self-dual", a.algebraic_self_dual, "AA^t=I".into());
    push("projection self-dual", a.projection_self_dual, "mu(C) self-dual".into());
    push("image self-dual", a.image_self_dual, format!("[{},{}] self-dual", a.length, a.dimension));
    let actual_type = a.code_type;
    match e.code_type {
        Some(t) => push("type", t == actual_type, format!("Type {actual_type}")),
        None => push("type", actual_type != SelfDualType::NotSelfDual, format!("Type {actual_type}")),
    }
    if let Some(d) = e.d {
        match a.distance {
            Some(actual) => push("distance", actual == d, format!("d={actual}")),
            None => push("distance", a.distance_lower >= d, format!("d>={}", a.distance_lower)),
        }
    }
    if let Some((d, dp, m)) = a.bound {
        push("bound", d <= 2 * m as usize * dp, format!("{d}<=2*{m}*{dp}"));
    }
    if e.needs_enumerator() {
        match (&a.profile, &a.enumerator) {
            (Some(p), _) => {
                if let Some(fam) = e.family {
                    push("family", p.family == fam, format!("{}", p.family));
                }
                for (key, want, got) in [("alpha", e.alpha, p.alpha), ("beta", e.beta, p.beta), ("gamma", e.gamma, p.gamma)] {
                    if let Some(w) = want {
                        let shown = got.map_or("none".to_string(), |g| g.to_string());
                        push(key, got == Some(w), format!("{key}={shown}"));
                    }
                }
                if let Some(we) = &a.enumerator {
                    let w = a.distance.unwrap_or(0);
                    if w > 0 && w <= we.complete_through() {
                        push("enumerator", true, format!("A_{w}={}", we.count(w)));
                    }
                }
            }
            (None, Some(_)) => push("family", false, a.profile_error.clone().unwrap_or_else(|| "no profile".into())),
            (None, None) => skipped.extend(["family", "alpha", "beta", "gamma"].into_iter().filter(|k| match *k {
                "family" => e.family.is_some(),
                "alpha" => e.alpha.is_some(),
                "beta" => e.beta.is_some(),
                _ => e.gamma.is_some(),
            })),
        }
    }
    Ok(RowReport { label: row.label(), checks, skipped, elapsed: a.elapsed })
}

/// Verifies every row of a table (or of all tables for `"all"`), rows in parallel.
pub fn reproduce(id: &str, options: AnalysisOptions) -> Result<Vec<RowReport>> {
    let rows: Vec<FixtureRow> = if id.eq_ignore_ascii_case("all") {
        let mut all = Vec::new();
        for t in table_ids() {
            all.extend(table(t)?);
        }
        all
    } else {
        table(id)?
    };
    rows.par_iter().map(|r| verify_row(r, options)).collect()
}

/// Projected binary code of a fixture, for bound checks.
pub fn projected(row: &FixtureRow) -> Result<BinaryCode> {
    Ok(projected_code(&RingCode::new(row.spec.build()?)))
}
