use std::fmt;

use crate::bits::BinaryWord;
use crate::error::{Error, Result};
use crate::ring::{RingElement, RingParams};

/// Dense row-major matrix over `R(k,m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    params: RingParams,
    rows: usize,
    cols: usize,
    data: Vec<RingElement>,
}

impl RingMatrix {
    pub fn zeros(params: RingParams, rows: usize, cols: usize) -> Self {
        Self { params, rows, cols, data: vec![params.zero(); rows * cols] }
    }

    pub fn identity(params: RingParams, n: usize) -> Self {
        let mut m = Self::zeros(params, n, n);
        for i in 0..n {
            m.set(i, i, params.one());
        }
        m
    }

    pub fn from_rows(params: RingParams, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { left: cols, right: r.len() });
            }
            for e in r {
                if e.params() != params {
                    return Err(Error::ParamsMismatch { left: params, right: e.params() });
                }
            }
            data.extend_from_slice(r);
        }
        Ok(Self { params, rows: rows.len(), cols, data })
    }

    /// Rows of canonical integer encodings.
    pub fn from_encoded(params: RingParams, rows: &[Vec<u64>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| params.decode(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(params, rows)
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> RingElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: RingElement) {
        assert_eq!(value.params(), self.params, "ring parameter mismatch");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[RingElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[RingElement]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.params, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch { left: self.params, right: other.params });
        }
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { left: self.cols, right: other.rows });
        }
        let mut out = Self::zeros(self.params, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.params.zero();
                for i in 0..self.cols {
                    acc = acc + self.get(r, i) * other.get(i, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch { left: self.params, right: other.params });
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::LengthMismatch { left: self.rows * self.cols, right: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Ok(Self { params: self.params, rows: self.rows, cols: self.cols, data })
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == if r == c { self.params.one() } else { self.params.zero() }))
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch { left: self.params, right: other.params });
        }
        if self.rows != other.rows {
            return Err(Error::LengthMismatch { left: self.rows, right: other.rows });
        }
        let mut out = Self::zeros(self.params, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// `[[a, b], [c, d]]` from four blocks of matching shapes.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        let top = a.hconcat(b)?;
        let bottom = c.hconcat(d)?;
        if top.cols != bottom.cols {
            return Err(Error::LengthMismatch { left: top.cols, right: bottom.cols });
        }
        let mut data = top.data;
        data.extend(bottom.data);
        Ok(Self { params: a.params, rows: top.rows + bottom.rows, cols: top.cols, data })
    }

    pub fn submatrix(&self, row0: usize, rows: usize, col0: usize, cols: usize) -> Self {
        let mut out = Self::zeros(self.params, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(row0 + r, col0 + c));
            }
        }
        out
    }

    /// For `[I_n | A]` returns `A`.
    pub fn standard_form_block(&self) -> Option<Self> {
        if self.cols < self.rows {
            return None;
        }
        let left = self.submatrix(0, self.rows, 0, self.rows);
        left.is_identity().then(|| self.submatrix(0, self.rows, self.rows, self.cols - self.rows))
    }

    /// Entrywise projection onto F2, one binary word per row.
    pub fn project(&self) -> Vec<BinaryWord> {
        self.row_iter().map(|r| BinaryWord::from_bits(&r.iter().map(|e| e.project()).collect::<Vec<_>>())).collect()
    }

    pub fn encoded_rows(&self) -> Vec<Vec<u64>> {
        self.row_iter().map(|r| r.iter().map(|e| e.encode()).collect()).collect()
    }
}

/// One line per row, entries in canonical integer encoding.
impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|e| e.encode().to_string().len()).max().unwrap_or(1);
        for r in self.row_iter() {
            let line: Vec<String> = r.iter().map(|e| format!("{:>width$}", e.encode())).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_blocks() {
        let r = RingParams::new(2, 1).unwrap();
        let a = RingMatrix::from_encoded(r, &[vec![1, 2], vec![3, 1]]).unwrap();
        let i = RingMatrix::identity(r, 2);
        assert_eq!(a.mul(&i).unwrap(), a);
        assert_eq!(i.mul(&a).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        let g = i.hconcat(&a).unwrap();
        assert_eq!(g.standard_form_block().unwrap(), a);
        assert!(a.standard_form_block().is_none());
        let b = RingMatrix::block2x2(&a, &i, &i, &a).unwrap();
        assert_eq!((b.rows(), b.cols()), (4, 4));
        assert_eq!(b.get(2, 2), r.one());
        assert_eq!(b.get(3, 2), r.decode(3).unwrap());
        assert!(RingMatrix::from_encoded(r, &[vec![1, 2], vec![3]]).is_err());
        assert!(RingMatrix::from_encoded(r, &[vec![4]]).is_err());
        assert_eq!(a.project()[1].to_string(), "11");
    }
}
