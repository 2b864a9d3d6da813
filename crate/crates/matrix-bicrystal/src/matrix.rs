use std::fmt;
use std::str::FromStr;

use crystal_core::{tensor_eps, tensor_lower, tensor_phi, tensor_raise, Element, Weight};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("bad matrix literal: {0}")]
    Parse(String),
    #[error("interval {0}..{1} is empty or wider than 64")]
    Interval(i64, i64),
}

/// A 0/1 row indexed by the column interval `[lo, lo + len)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowVec {
    pub lo: i64,
    pub len: u32,
    pub bits: u64,
}

impl RowVec {
    pub fn zeros(lo: i64, len: u32) -> Self {
        RowVec { lo, len, bits: 0 }
    }

    pub fn get(&self, j: i64) -> u8 {
        if j < self.lo || j >= self.lo + self.len as i64 {
            return 0;
        }
        ((self.bits >> (j - self.lo)) & 1) as u8
    }

    pub fn set(&mut self, j: i64, x: u8) {
        let b = 1u64 << (j - self.lo);
        if x == 1 {
            self.bits |= b;
        } else {
            self.bits &= !b;
        }
    }

    fn has(&self, k: i64) -> bool {
        k >= self.lo && k + 1 < self.lo + self.len as i64
    }

    /// `(a_k, a_{k+1})`, if both columns exist.
    fn pair(&self, k: i64) -> Option<(u8, u8)> {
        self.has(k).then(|| (self.get(k), self.get(k + 1)))
    }

    pub fn ones(&self) -> Vec<i64> {
        (0..self.len as i64).filter(|&d| (self.bits >> d) & 1 == 1).map(|d| self.lo + d).collect()
    }

    pub fn complement(&self) -> Self {
        let mask = if self.len == 64 { u64::MAX } else { (1u64 << self.len) - 1 };
        RowVec { bits: !self.bits & mask, ..*self }
    }
}

impl Element for RowVec {
    fn raise(&self, k: i64) -> Option<Self> {
        (self.pair(k)? == (0, 1)).then(|| {
            let mut r = *self;
            r.set(k, 1);
            r.set(k + 1, 0);
            r
        })
    }

    fn lower(&self, k: i64) -> Option<Self> {
        (self.pair(k)? == (1, 0)).then(|| {
            let mut r = *self;
            r.set(k, 0);
            r.set(k + 1, 1);
            r
        })
    }

    fn eps(&self, k: i64) -> usize {
        (self.pair(k) == Some((0, 1))) as usize
    }

    fn phi(&self, k: i64) -> usize {
        (self.pair(k) == Some((1, 0))) as usize
    }

    fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for j in self.ones() {
            w.add_eps(j, 1);
        }
        w
    }
}

/// A binary matrix on `I x J` with explicit row interval `I` and column interval `J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryMatrix {
    pub row_lo: i64,
    pub rows: Vec<RowVec>,
}

impl BinaryMatrix {
    pub fn zeros(rows: (i64, i64), cols: (i64, i64)) -> Result<Self, MatrixError> {
        let (ilo, ihi) = rows;
        let (jlo, jhi) = cols;
        if ihi < ilo || jhi < jlo || jhi - jlo + 1 > 64 {
            return Err(MatrixError::Interval(jlo, jhi));
        }
        let len = (jhi - jlo + 1) as u32;
        Ok(BinaryMatrix {
            row_lo: ilo,
            rows: vec![RowVec::zeros(jlo, len); (ihi - ilo + 1) as usize],
        })
    }

    pub fn from_rows(row_lo: i64, col_lo: i64, data: &[Vec<u8>]) -> Result<Self, MatrixError> {
        let width = data.first().map_or(0, |r| r.len());
        if width == 0 || width > 64 || data.iter().any(|r| r.len() != width) {
            return Err(MatrixError::Parse("ragged or empty rows".into()));
        }
        let rows = data
            .iter()
            .map(|r| {
                let mut v = RowVec::zeros(col_lo, width as u32);
                for (d, &x) in r.iter().enumerate() {
                    v.set(col_lo + d as i64, x);
                }
                v
            })
            .collect();
        Ok(BinaryMatrix { row_lo, rows })
    }

    pub fn row_range(&self) -> (i64, i64) {
        (self.row_lo, self.row_lo + self.rows.len() as i64 - 1)
    }

    pub fn col_range(&self) -> (i64, i64) {
        let r = self.rows[0];
        (r.lo, r.lo + r.len as i64 - 1)
    }

    pub fn get(&self, i: i64, j: i64) -> u8 {
        self.rows[(i - self.row_lo) as usize].get(j)
    }

    pub fn set(&mut self, i: i64, j: i64, x: u8) {
        self.rows[(i - self.row_lo) as usize].set(j, x);
    }

    /// Always true: the row interval is finite.
    pub fn is_k_admissible(&self, _k: i64) -> bool {
        true
    }

    pub fn matrix_raise(&self, k: i64) -> Option<Self> {
        tensor_raise(&self.rows, k).map(|rows| BinaryMatrix { rows, ..*self })
    }

    pub fn matrix_lower(&self, k: i64) -> Option<Self> {
        tensor_lower(&self.rows, k).map(|rows| BinaryMatrix { rows, ..*self })
    }

    pub fn matrix_eps(&self, k: i64) -> usize {
        tensor_eps(&self.rows, k)
    }

    pub fn matrix_phi(&self, k: i64) -> usize {
        tensor_phi(&self.rows, k)
    }

    /// `rho(A)_{r,c} = a_{c,-r}` on `(-J) x I`.
    pub fn rho(&self) -> Self {
        let (ilo, ihi) = self.row_range();
        let (jlo, jhi) = self.col_range();
        let mut out = BinaryMatrix::zeros((-jhi, -jlo), (ilo, ihi)).unwrap();
        for r in -jhi..=-jlo {
            for c in ilo..=ihi {
                out.set(r, c, self.get(c, -r));
            }
        }
        out
    }

    /// Inverse of [`BinaryMatrix::rho`]: `A_{i,j} = B_{-j,i}`.
    pub fn rho_inv(&self) -> Self {
        let (rlo, rhi) = self.row_range();
        let (clo, chi) = self.col_range();
        let mut out = BinaryMatrix::zeros((clo, chi), (-rhi, -rlo)).unwrap();
        for i in clo..=chi {
            for j in -rhi..=-rlo {
                out.set(i, j, self.get(-j, i));
            }
        }
        out
    }

    /// `E_l = rho^-1 e_l rho`: moves a 1 from row `l+1` up to row `l`.
    pub fn cap_raise(&self, l: i64) -> Option<Self> {
        self.rho().matrix_raise(l).map(|b| b.rho_inv())
    }

    /// `F_l = rho^-1 f_l rho`: moves a 1 from row `l` down to row `l+1`.
    pub fn cap_lower(&self, l: i64) -> Option<Self> {
        self.rho().matrix_lower(l).map(|b| b.rho_inv())
    }

    pub fn cap_eps(&self, l: i64) -> usize {
        self.rho().matrix_eps(l)
    }

    pub fn cap_phi(&self, l: i64) -> usize {
        self.rho().matrix_phi(l)
    }

    /// `A^dual = (1 - a_ij)`.
    pub fn dual(&self) -> Self {
        BinaryMatrix {
            rows: self.rows.iter().map(|r| r.complement()).collect(),
            ..*self
        }
    }

    /// `1 - A` with the row order reversed; the dual of a tensor product reverses its factors.
    pub fn dual_reversed(&self) -> Self {
        BinaryMatrix {
            rows: self.rows.iter().rev().map(|r| r.complement()).collect(),
            ..*self
        }
    }

    /// Column weight `sum a_ij epsilon_j`.
    pub fn col_weight(&self) -> Weight {
        self.rows.iter().fold(Weight::zero(), |acc, r| &acc + &r.weight())
    }

    /// Row sums, in increasing row order.
    pub fn row_sums(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.bits.count_ones() as usize).collect()
    }

    /// Every matrix on `I x J`.
    pub fn all(rows: (i64, i64), cols: (i64, i64)) -> Vec<Self> {
        let base = BinaryMatrix::zeros(rows, cols).unwrap();
        let n = base.rows.len();
        let w = base.rows[0].len;
        let total = 1u64 << (n as u32 * w);
        let mask = (1u64 << w) - 1;
        (0..total)
            .map(|code| {
                let mut m = base.clone();
                for (k, r) in m.rows.iter_mut().enumerate() {
                    r.bits = (code >> (k as u32 * w)) & mask;
                }
                m
            })
            .collect()
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ilo, ihi) = self.row_range();
        let (jlo, jhi) = self.col_range();
        write!(f, "rows={ilo}..{ihi} cols={jlo}..{jhi}")?;
        for i in ilo..=ihi {
            writeln!(f)?;
            for j in jlo..=jhi {
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

fn parse_range(s: &str, key: &str) -> Result<(i64, i64), MatrixError> {
    let body = s
        .strip_prefix(key)
        .and_then(|x| x.strip_prefix('='))
        .ok_or_else(|| MatrixError::Parse(s.to_string()))?;
    let (a, b) = body.split_once("..").ok_or_else(|| MatrixError::Parse(s.to_string()))?;
    let a = a.parse().map_err(|_| MatrixError::Parse(s.to_string()))?;
    let b = b.parse().map_err(|_| MatrixError::Parse(s.to_string()))?;
    Ok((a, b))
}

impl FromStr for BinaryMatrix {
    type Err = MatrixError;

    /// Header `rows=a..b cols=c..d` followed by one line of 0/1 characters per row.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| MatrixError::Parse("empty".into()))?;
        let mut it = header.split_whitespace();
        let rows = parse_range(it.next().unwrap_or(""), "rows")?;
        let cols = parse_range(it.next().unwrap_or(""), "cols")?;
        let data: Vec<Vec<u8>> = lines
            .map(|l| {
                l.chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(MatrixError::Parse(l.to_string())),
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        if data.len() as i64 != rows.1 - rows.0 + 1
            || data.iter().any(|r| r.len() as i64 != cols.1 - cols.0 + 1)
        {
            return Err(MatrixError::Parse("dimensions do not match header".into()));
        }
        BinaryMatrix::from_rows(rows.0, cols.0, &data)
    }
}
