use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ShapeError;
use crate::partition::Partition;

/// A weakly decreasing integer sequence of fixed length; entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenPartition(Vec<i64>);

impl GenPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotDecreasing(parts));
        }
        Ok(GenPartition(parts))
    }

    pub fn constant(n: usize, c: i64) -> Self {
        GenPartition(vec![c; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn first(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn shift(&self, p: i64) -> GenPartition {
        GenPartition(self.0.iter().map(|x| x + p).collect())
    }

    /// `lambda* = (-lambda_n, ..., -lambda_1)`.
    pub fn star(&self) -> GenPartition {
        GenPartition(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) {
            None
        } else {
            Some(Partition::new(self.0.iter().map(|&x| x as usize).collect()).unwrap())
        }
    }

    /// Concatenation, if the result is still weakly decreasing.
    pub fn concat(&self, other: &GenPartition) -> Option<GenPartition> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GenPartition::new(v).ok()
    }

    /// All generalized partitions of length `n` with entries in `[lo, hi]`.
    pub fn all_in_box(n: usize, lo: i64, hi: i64) -> Vec<GenPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, lo: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<GenPartition>) {
            if cur.len() == n {
                out.push(GenPartition(cur.clone()));
                return;
            }
            for x in lo..=cap {
                cur.push(x);
                rec(n, lo, x, cur, out);
                cur.pop();
            }
        }
        if lo <= hi {
            rec(n, lo, hi, &mut cur, &mut out);
        }
        out.sort();
        out
    }

    /// Same as [`GenPartition::all_in_box`], restricted to a given size.
    pub fn all_with_size(n: usize, size: i64, lo: i64, hi: i64) -> Vec<GenPartition> {
        GenPartition::all_in_box(n, lo, hi)
            .into_iter()
            .filter(|g| g.size() == size)
            .collect()
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for GenPartition {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Ok(GenPartition(Vec::new()));
        }
        let parts: Result<Vec<i64>, _> = t.split(',').map(|x| x.trim().parse::<i64>()).collect();
        let parts = parts.map_err(|_| ShapeError::Parse(s.to_string()))?;
        GenPartition::new(parts)
    }
}

impl Serialize for GenPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        GenPartition::new(v).map_err(serde::de::Error::custom)
    }
}
