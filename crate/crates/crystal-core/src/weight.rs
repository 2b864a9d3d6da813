use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use shapes::GenPartition;

/// `level * Lambda_0 + sum eps[i] * epsilon_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Weight {
    pub level: i64,
    pub eps: BTreeMap<i64, i64>,
}

impl Weight {
    pub fn zero() -> Self {
        Weight::default()
    }

    pub fn epsilon(i: i64) -> Self {
        let mut w = Weight::zero();
        w.add_eps(i, 1);
        w
    }

    pub fn add_eps(&mut self, i: i64, c: i64) {
        let e = self.eps.entry(i).or_insert(0);
        *e += c;
        if *e == 0 {
            self.eps.remove(&i);
        }
    }

    pub fn coeff(&self, i: i64) -> i64 {
        self.eps.get(&i).copied().unwrap_or(0)
    }

    /// `<wt, h_i> = eps(i) - eps(i+1)`.
    pub fn pair(&self, i: i64) -> i64 {
        self.coeff(i) - self.coeff(i + 1)
    }

    /// `alpha_i = epsilon_i - epsilon_{i+1}`.
    pub fn alpha(i: i64) -> Self {
        let mut w = Weight::epsilon(i);
        w.add_eps(i + 1, -1);
        w
    }

    /// Fundamental weight `Lambda_i`.
    pub fn fundamental(i: i64) -> Self {
        let mut w = Weight { level: 1, eps: BTreeMap::new() };
        if i > 0 {
            for k in 1..=i {
                w.add_eps(k, 1);
            }
        } else {
            for k in (i + 1)..=0 {
                w.add_eps(k, -1);
            }
        }
        w
    }

    /// `Lambda_lambda = sum_i Lambda_{lambda_i}`.
    pub fn lambda(lambda: &GenPartition) -> Self {
        lambda
            .parts()
            .iter()
            .fold(Weight::zero(), |acc, &l| &acc + &Weight::fundamental(l))
    }

    /// Simple reflection `r_i`: swap the coefficients of `epsilon_i` and `epsilon_{i+1}`.
    pub fn reflect(&self, i: i64) -> Self {
        let mut w = self.clone();
        let (a, b) = (self.coeff(i), self.coeff(i + 1));
        w.add_eps(i, b - a);
        w.add_eps(i + 1, a - b);
        w
    }

    pub fn is_dominant_on(&self, colors: &[i64]) -> bool {
        colors.iter().all(|&i| self.pair(i) >= 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        let mut w = self.clone();
        w.level += o.level;
        for (&i, &c) in &o.eps {
            w.add_eps(i, c);
        }
        w
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            level: -self.level,
            eps: self.eps.iter().map(|(&i, &c)| (i, -c)).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        self + &(-o)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.level != 0 {
            parts.push(format!("{}*L0", self.level));
        }
        for (i, c) in &self.eps {
            parts.push(format!("{c}*e{i}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
