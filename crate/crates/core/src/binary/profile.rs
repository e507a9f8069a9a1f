//! Placement of a self-dual code inside the known weight-enumerator families of
//! lengths 36, 66 and 72.

use std::fmt;

use super::WeightEnumerator;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelfDualType {
    I,
    II,
    NotSelfDual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    W36_1,
    W36_2,
    W66_1,
    W66_2,
    W66_3,
    W72_1,
    W72_2,
    W72II,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfDualProfile {
    pub code_type: SelfDualType,
    pub d: Option<usize>,
    pub family: Family,
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
    pub alpha: Option<i64>,
}

impl SelfDualProfile {
    pub fn new(code_type: SelfDualType, d: Option<usize>) -> Self {
        Self { code_type, d, family: Family::Other, beta: None, gamma: None, alpha: None }
    }
}

/// Upper bound on the minimum distance of a self-dual binary code of length `n`.
pub fn extremal_bound(n: usize, code_type: SelfDualType) -> usize {
    let base = 4 * (n / 24) + 4;
    match code_type {
        SelfDualType::I if n % 24 == 22 => base + 2,
        _ => base,
    }
}

fn need(we: &WeightEnumerator, weight: usize) -> Result<()> {
    if we.complete_through() < weight {
        return Err(Error::NoConsistentFamily {
            length: we.length(),
            detail: format!("enumerator complete only through weight {}, need {weight}", we.complete_through()),
        });
    }
    Ok(())
}

/// Reads the family parameters off a weight enumerator:
///
/// * length 36: `A_8` is 225 (`W36_1`) or 289 (`W36_2`);
/// * length 66: `A_12 = 858 + 8 beta`, with `A_14` telling `W66_1`
///   (`18678 - 24 beta`) from `W66_3` (`18166 - 24 beta`); `W66_2` has 1690, 7990;
/// * length 72, Type II: `alpha = A_12 - 4398`, checked against `A_16 = 197073 - 12 alpha`;
/// * length 72, Type I: `beta = A_12 / 2` and `gamma` from `A_14`, with the `A_16`
///   expression of each of `W72_1`, `W72_2` deciding which one applies.
///
/// Any other length yields `Family::Other`. Inconsistent data is an error, never a guess.
pub fn extract_parameters(we: &WeightEnumerator, code_type: SelfDualType) -> Result<SelfDualProfile> {
    let n = we.length();
    let d = we.min_nonzero_weight().filter(|&w| w <= we.complete_through());
    let mut profile = SelfDualProfile::new(code_type, d);
    let fail = |detail: String| Error::NoConsistentFamily { length: n, detail };
    let a = |w: usize| we.count(w) as i64;
    match (n, code_type) {
        (36, _) => {
            need(we, 8)?;
            profile.family = match a(8) {
                225 => Family::W36_1,
                289 => Family::W36_2,
                other => return Err(fail(format!("A_8 = {other}, expected 225 or 289"))),
            };
            if we.complete_through() >= 10 {
                let expected = if profile.family == Family::W36_1 { 2016 } else { 1632 };
                if a(10) != expected {
                    return Err(fail(format!("A_10 = {}, expected {expected}", a(10))));
                }
            }
        }
        (66, _) => {
            need(we, 14)?;
            let (a12, a14) = (a(12), a(14));
            if a12 == 1690 && a14 == 7990 {
                profile.family = Family::W66_2;
            } else {
                if (a12 - 858) % 8 != 0 {
                    return Err(fail(format!("A_12 = {a12} is not 858 + 8 beta")));
                }
                let beta = (a12 - 858) / 8;
                if a14 == 18678 - 24 * beta && (0..=778).contains(&beta) {
                    profile.family = Family::W66_1;
                } else if a14 == 18166 - 24 * beta && (14..=756).contains(&beta) {
                    profile.family = Family::W66_3;
                } else {
                    return Err(fail(format!("A_12 = {a12}, A_14 = {a14} fit neither W66_1 nor W66_3")));
                }
                profile.beta = Some(beta);
            }
        }
        (72, SelfDualType::II) => {
            need(we, 16)?;
            let alpha = a(12) - 4398;
            if a(14) != 0 || a(16) != 197073 - 12 * alpha {
                return Err(fail(format!("A_14 = {}, A_16 = {} inconsistent with alpha = {alpha}", a(14), a(16))));
            }
            profile.family = Family::W72II;
            profile.alpha = Some(alpha);
        }
        (72, SelfDualType::I) => {
            need(we, 16)?;
            let (a12, a14, a16) = (a(12), a(14), a(16));
            if a12 % 2 != 0 {
                return Err(fail(format!("A_12 = {a12} is odd")));
            }
            let beta = a12 / 2;
            let fits = |c14: i64, c16: i64| -> Option<i64> {
                let diff = c14 - a14;
                (diff % 64 == 0 && a16 == c16 - 24 * beta + 384 * (diff / 64)).then_some(diff / 64)
            };
            match (fits(8640, 124281), fits(7616, 134521)) {
                (Some(gamma), None) => {
                    profile.family = Family::W72_1;
                    profile.gamma = Some(gamma);
                }
                (None, Some(gamma)) => {
                    profile.family = Family::W72_2;
                    profile.gamma = Some(gamma);
                }
                (None, None) => return Err(fail(format!("A_12..A_16 = {a12}, {a14}, {a16} fit neither W72_1 nor W72_2"))),
                (Some(_), Some(_)) => return Err(fail("both W72_1 and W72_2 fit".into())),
            }
            profile.beta = Some(beta);
        }
        _ => {}
    }
    Ok(profile)
}

impl fmt::Display for SelfDualType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfDualType::I => "I",
            SelfDualType::II => "II",
            SelfDualType::NotSelfDual => "not-self-dual",
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::W36_1 => "W36_1",
            Family::W36_2 => "W36_2",
            Family::W66_1 => "W66_1",
            Family::W66_2 => "W66_2",
            Family::W66_3 => "W66_3",
            Family::W72_1 => "W72_1",
            Family::W72_2 => "W72_2",
            Family::W72II => "W72",
            Family::Other => "other",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "W36_1" => Family::W36_1,
            "W36_2" => Family::W36_2,
            "W66_1" => Family::W66_1,
            "W66_2" => Family::W66_2,
            "W66_3" => Family::W66_3,
            "W72_1" => Family::W72_1,
            "W72_2" => Family::W72_2,
            "W72" | "W72II" => Family::W72II,
            "other" => Family::Other,
            _ => return Err(format!("unknown family {s:?}")),
        })
    }
}

impl std::str::FromStr for SelfDualType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I" => Ok(SelfDualType::I),
            "II" => Ok(SelfDualType::II),
            "not-self-dual" => Ok(SelfDualType::NotSelfDual),
            _ => Err(format!("unknown type {s:?}")),
        }
    }
}

/// `key: value` lines.
impl fmt::Display for SelfDualProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "type: {}", self.code_type)?;
        match self.d {
            Some(d) => writeln!(f, "d: {d}")?,
            None => writeln!(f, "d: unknown")?,
        }
        writeln!(f, "family: {}", self.family)?;
        for (name, value) in [("beta", self.beta), ("gamma", self.gamma), ("alpha", self.alpha)] {
            if let Some(v) = value {
                writeln!(f, "{name}: {v}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partial(n: usize, pairs: &[(usize, u64)], through: usize) -> WeightEnumerator {
        let mut counts = vec![0u64; through + 1];
        counts[0] = 1;
        for &(w, c) in pairs {
            counts[w] = c;
        }
        WeightEnumerator::partial(n, counts, through)
    }

    #[test]
    fn type_ii_72() {
        let we = partial(72, &[(12, 4398), (16, 197073)], 16);
        let p = extract_parameters(&we, SelfDualType::II).unwrap();
        assert_eq!(p.alpha, Some(0));
        assert_eq!(p.family, Family::W72II);
        let alpha = -3996i64;
        let we = partial(72, &[(12, (4398 + alpha) as u64), (16, (197073 - 12 * alpha) as u64)], 16);
        assert_eq!(extract_parameters(&we, SelfDualType::II).unwrap().alpha, Some(-3996));
        let bad = partial(72, &[(12, 402), (16, 5)], 16);
        assert!(extract_parameters(&bad, SelfDualType::II).is_err());
    }

    #[test]
    fn type_i_72_hypotheses() {
        let (beta, gamma) = (185i64, 0i64);
        let we = partial(
            72,
            &[(12, (2 * beta) as u64), (14, (8640 - 64 * gamma) as u64), (16, (124281 - 24 * beta + 384 * gamma) as u64)],
            16,
        );
        let p = extract_parameters(&we, SelfDualType::I).unwrap();
        assert_eq!((p.family, p.beta, p.gamma), (Family::W72_1, Some(185), Some(0)));

        let (beta, gamma) = (88i64, 0i64);
        let we = partial(
            72,
            &[(12, (2 * beta) as u64), (14, (7616 - 64 * gamma) as u64), (16, (134521 - 24 * beta + 384 * gamma) as u64)],
            16,
        );
        let p = extract_parameters(&we, SelfDualType::I).unwrap();
        assert_eq!((p.family, p.beta, p.gamma), (Family::W72_2, Some(88), Some(0)));

        let we = partial(72, &[(12, 370), (14, 8640), (16, 1)], 16);
        assert!(extract_parameters(&we, SelfDualType::I).is_err());
    }

    #[test]
    fn length_66() {
        let beta = 22i64;
        let we = partial(66, &[(12, (858 + 8 * beta) as u64), (14, (18678 - 24 * beta) as u64)], 14);
        let p = extract_parameters(&we, SelfDualType::I).unwrap();
        assert_eq!((p.family, p.beta), (Family::W66_1, Some(22)));
        let we = partial(66, &[(12, 858 + 8 * 20), (14, 18166 - 24 * 20)], 14);
        assert_eq!(extract_parameters(&we, SelfDualType::I).unwrap().family, Family::W66_3);
        let we = partial(66, &[(12, 1690), (14, 7990)], 14);
        assert_eq!(extract_parameters(&we, SelfDualType::I).unwrap().family, Family::W66_2);
        let we = partial(66, &[(12, 859), (14, 1)], 14);
        assert!(extract_parameters(&we, SelfDualType::I).is_err());
    }

    #[test]
    fn length_36_and_incomplete() {
        let we = partial(36, &[(8, 289), (10, 1632)], 10);
        assert_eq!(extract_parameters(&we, SelfDualType::I).unwrap().family, Family::W36_2);
        let we = partial(36, &[(8, 225), (10, 2016)], 10);
        assert_eq!(extract_parameters(&we, SelfDualType::I).unwrap().family, Family::W36_1);
        let we = partial(36, &[(8, 1)], 8);
        assert!(extract_parameters(&we, SelfDualType::I).is_err());
        let we = partial(72, &[(12, 1)], 12);
        assert!(extract_parameters(&we, SelfDualType::II).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(extremal_bound(24, SelfDualType::II), 8);
        assert_eq!(extremal_bound(36, SelfDualType::I), 8);
        assert_eq!(extremal_bound(66, SelfDualType::I), 12);
        assert_eq!(extremal_bound(70, SelfDualType::I), 14);
        assert_eq!(extremal_bound(72, SelfDualType::II), 16);
    }
}
