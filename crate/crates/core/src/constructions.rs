//! Double circulant, bordered double circulant and four circulant generators.
//!
//! Circulant row `i` is the first row rotated right by `i`. Constructions are
//! described by one-line specs with entries in canonical integer encoding
//! (polynomial strings such as `u^2+1` are accepted as well):
//!
//! ```text
//! dc  k m | r1 r2 ... rn
//! bdc k m | x y z | r1 ... r(n-1)
//! fc  k m | a1 ... an | b1 ... bn
//! ```

use std::fmt;
use std::str::FromStr;

use crate::codes::is_self_dual_free;
use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{RingElement, RingParams};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    pub first_row: Vec<RingElement>,
}

impl CirculantSpec {
    pub fn new(first_row: Vec<RingElement>) -> Self {
        Self { first_row }
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    pub fn matrix(&self) -> Result<RingMatrix> {
        let n = self.order();
        let Some(first) = self.first_row.first() else {
            return Err(Error::EmptyCirculant);
        };
        let mut m = RingMatrix::zeros(first.params(), n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.first_row[(j + n - i) % n]);
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderSpec {
    pub x: RingElement,
    pub y: RingElement,
    pub z: RingElement,
    pub core: CirculantSpec,
}

/// `[I_n | M]` for the circulant `M`.
pub fn double_circulant(spec: &CirculantSpec) -> Result<RingMatrix> {
    let m = spec.matrix()?;
    RingMatrix::identity(m.params(), m.rows()).hconcat(&m)
}

/// `[I_n | B]` where `B` has `x` top-left, `y` along the rest of the top row,
/// `z` down the rest of the first column and the circulant core below-right.
pub fn bordered_double_circulant(spec: &BorderSpec) -> Result<RingMatrix> {
    let core = spec.core.matrix()?;
    let params = core.params();
    for e in [spec.x, spec.y, spec.z] {
        if e.params() != params {
            return Err(Error::ParamsMismatch { left: params, right: e.params() });
        }
    }
    let n = core.rows() + 1;
    let mut b = RingMatrix::zeros(params, n, n);
    b.set(0, 0, spec.x);
    for j in 1..n {
        b.set(0, j, spec.y);
        b.set(j, 0, spec.z);
    }
    for i in 1..n {
        for j in 1..n {
            b.set(i, j, core.get(i - 1, j - 1));
        }
    }
    RingMatrix::identity(params, n).hconcat(&b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCirculant {
    pub matrix: RingMatrix,
    /// Whether `A A^t + B B^t = I_n`; when it holds the code is self-dual.
    pub condition_holds: bool,
}

/// `[I_2n | [[A, B], [B^t, A^t]]]`.
pub fn four_circulant(a: &CirculantSpec, b: &CirculantSpec) -> Result<FourCirculant> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch { left: a.order(), right: b.order() });
    }
    let am = a.matrix()?;
    let bm = b.matrix()?;
    let (at, bt) = (am.transpose(), bm.transpose());
    let sum = am.mul(&at)?.add(&bm.mul(&bt)?)?;
    let condition_holds = sum.is_identity();
    let block = RingMatrix::block2x2(&am, &bm, &bt, &at)?;
    let matrix = RingMatrix::identity(am.params(), 2 * a.order()).hconcat(&block)?;
    if condition_holds {
        debug_assert!(is_self_dual_free(&matrix).unwrap_or(false));
    }
    Ok(FourCirculant { matrix, condition_holds })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    DoubleCirculant { params: RingParams, first_row: Vec<RingElement> },
    Bordered { params: RingParams, x: RingElement, y: RingElement, z: RingElement, core: Vec<RingElement> },
    FourCirculant { params: RingParams, a: Vec<RingElement>, b: Vec<RingElement> },
}

impl ConstructionSpec {
    pub fn params(&self) -> RingParams {
        match self {
            ConstructionSpec::DoubleCirculant { params, .. }
            | ConstructionSpec::Bordered { params, .. }
            | ConstructionSpec::FourCirculant { params, .. } => *params,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ConstructionSpec::DoubleCirculant { .. } => "dc",
            ConstructionSpec::Bordered { .. } => "bdc",
            ConstructionSpec::FourCirculant { .. } => "fc",
        }
    }

    /// Length over the ring of the generated code.
    pub fn length(&self) -> usize {
        match self {
            ConstructionSpec::DoubleCirculant { first_row, .. } => 2 * first_row.len(),
            ConstructionSpec::Bordered { core, .. } => 2 * (core.len() + 1),
            ConstructionSpec::FourCirculant { a, .. } => 4 * a.len(),
        }
    }

    pub fn build(&self) -> Result<RingMatrix> {
        match self {
            ConstructionSpec::DoubleCirculant { first_row, .. } => double_circulant(&CirculantSpec::new(first_row.clone())),
            ConstructionSpec::Bordered { x, y, z, core, .. } => bordered_double_circulant(&BorderSpec {
                x: *x,
                y: *y,
                z: *z,
                core: CirculantSpec::new(core.clone()),
            }),
            ConstructionSpec::FourCirculant { a, b, .. } => {
                Ok(four_circulant(&CirculantSpec::new(a.clone()), &CirculantSpec::new(b.clone()))?.matrix)
            }
        }
    }

    /// Free entries in a fixed order: first row; `x y z` then core; `a` then `b`.
    pub fn entries(&self) -> Vec<RingElement> {
        match self {
            ConstructionSpec::DoubleCirculant { first_row, .. } => first_row.clone(),
            ConstructionSpec::Bordered { x, y, z, core, .. } => {
                let mut v = vec![*x, *y, *z];
                v.extend_from_slice(core);
                v
            }
            ConstructionSpec::FourCirculant { a, b, .. } => a.iter().chain(b).copied().collect(),
        }
    }

    /// Same shape with new entries (which may live in another ring).
    pub fn with_entries(&self, params: RingParams, entries: &[RingElement]) -> Result<Self> {
        let expected = self.entries().len();
        if entries.len() != expected {
            return Err(Error::LengthMismatch { left: expected, right: entries.len() });
        }
        for e in entries {
            if e.params() != params {
                return Err(Error::ParamsMismatch { left: params, right: e.params() });
            }
        }
        Ok(match self {
            ConstructionSpec::DoubleCirculant { .. } => ConstructionSpec::DoubleCirculant { params, first_row: entries.to_vec() },
            ConstructionSpec::Bordered { .. } => ConstructionSpec::Bordered {
                params,
                x: entries[0],
                y: entries[1],
                z: entries[2],
                core: entries[3..].to_vec(),
            },
            ConstructionSpec::FourCirculant { a, .. } => {
                let n = a.len();
                ConstructionSpec::FourCirculant { params, a: entries[..n].to_vec(), b: entries[n..].to_vec() }
            }
        })
    }

    /// Entrywise projection onto F2, as a spec over `R(1,1)`.
    pub fn project(&self) -> Self {
        let f2 = RingParams::binary();
        let entries: Vec<RingElement> = self.entries().iter().map(|e| f2.decode(e.project() as u64).expect("bit")).collect();
        self.with_entries(f2, &entries).expect("same shape")
    }

    /// Parses one spec line; `line_no` is used in error messages.
    pub fn parse_line(line: &str, line_no: usize) -> Result<Self> {
        let err = |message: String| Error::Syntax { line: line_no, message };
        let mut fields = line.split('|').map(str::trim);
        let head = fields.next().unwrap_or("");
        let head_parts: Vec<&str> = head.split_whitespace().collect();
        if head_parts.len() != 3 {
            return Err(err(format!("expected `<dc|bdc|fc> k m`, got {head:?}")));
        }
        let k: u32 = head_parts[1].parse().map_err(|_| err(format!("bad k {:?}", head_parts[1])))?;
        let m: u32 = head_parts[2].parse().map_err(|_| err(format!("bad m {:?}", head_parts[2])))?;
        let params = RingParams::new(k, m).map_err(|e| err(e.to_string()))?;
        let groups: Vec<Vec<RingElement>> = fields
            .map(|f| {
                f.split_whitespace()
                    .map(|tok| params.parse_element(tok).map_err(|e| err(e.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let nonempty = |g: &Vec<RingElement>, what: &str| -> Result<()> {
            if g.is_empty() {
                return Err(err(format!("empty {what}")));
            }
            Ok(())
        };
        match head_parts[0] {
            "dc" => {
                let [row] = <[Vec<RingElement>; 1]>::try_from(groups).map_err(|_| err("dc takes one row group".into()))?;
                nonempty(&row, "first row")?;
                Ok(ConstructionSpec::DoubleCirculant { params, first_row: row })
            }
            "bdc" => {
                let [xyz, core] =
                    <[Vec<RingElement>; 2]>::try_from(groups).map_err(|_| err("bdc takes `x y z | core row`".into()))?;
                if xyz.len() != 3 {
                    return Err(err(format!("bdc border needs exactly 3 entries, got {}", xyz.len())));
                }
                nonempty(&core, "core row")?;
                Ok(ConstructionSpec::Bordered { params, x: xyz[0], y: xyz[1], z: xyz[2], core })
            }
            "fc" => {
                let [a, b] = <[Vec<RingElement>; 2]>::try_from(groups).map_err(|_| err("fc takes `a row | b row`".into()))?;
                nonempty(&a, "a row")?;
                if a.len() != b.len() {
                    return Err(err(format!("fc rows differ in length: {} vs {}", a.len(), b.len())));
                }
                Ok(ConstructionSpec::FourCirculant { params, a, b })
            }
            other => Err(err(format!("unknown construction {other:?}"))),
        }
    }
}

fn join(v: &[RingElement]) -> String {
    v.iter().map(|e| e.encode().to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params();
        write!(f, "{} {} {} | ", self.kind(), p.k(), p.m())?;
        match self {
            ConstructionSpec::DoubleCirculant { first_row, .. } => write!(f, "{}", join(first_row)),
            ConstructionSpec::Bordered { x, y, z, core, .. } => {
                write!(f, "{} {} {} | {}", x.encode(), y.encode(), z.encode(), join(core))
            }
            ConstructionSpec::FourCirculant { a, b, .. } => write!(f, "{} | {}", join(a), join(b)),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_line(s, 1)
    }
}
