use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Integer polynomial in `t`; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct TPoly(BTreeMap<u32, i64>);

impl TPoly {
    pub fn zero() -> Self {
        TPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        TPoly::monomial(0, 1)
    }

    pub fn constant(c: i64) -> Self {
        TPoly::monomial(0, c)
    }

    pub fn monomial(exp: u32, coef: i64) -> Self {
        let mut m = BTreeMap::new();
        if coef != 0 {
            m.insert(exp, coef);
        }
        TPoly(m)
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = TPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, coef: i64) {
        if coef == 0 {
            return;
        }
        let e = self.0.entry(exp).or_insert(0);
        *e += coef;
        if *e == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    /// Drop all terms of degree above `t`.
    pub fn truncate(&self, t: u32) -> TPoly {
        TPoly(self.0.range(..=t).map(|(&e, &c)| (e, c)).collect())
    }

    pub fn scale(&self, c: i64) -> TPoly {
        TPoly::from_terms(self.terms().map(|(e, x)| (e, x * c)))
    }

    pub fn shift(&self, k: u32) -> TPoly {
        TPoly(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().map(|(&e, &c)| c * t.pow(e)).sum()
    }

    /// Exact division by a polynomial with constant term `1` or `-1`.
    pub fn div_exact(&self, d: &TPoly) -> Option<TPoly> {
        let d0 = d.coeff(0);
        if d0.abs() != 1 {
            return None;
        }
        let mut rem = self.clone();
        let mut q = TPoly::zero();
        let dd = d.degree().unwrap_or(0);
        while let Some((&e, &c)) = rem.0.iter().next() {
            let qc = c * d0;
            q.add_term(e, qc);
            rem = &rem - &TPoly::monomial(e, qc).mul_ref(d);
            if rem.degree().is_some_and(|x| x > self.degree().unwrap_or(0) + dd) {
                return None;
            }
            if q.degree().is_some_and(|x| x > self.degree().unwrap_or(0)) {
                return None;
            }
        }
        Some(q)
    }

    pub fn mul_ref(&self, o: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_trunc(&self, o: &TPoly, t: u32) -> TPoly {
        let mut out = TPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                if e1 + e2 <= t {
                    out.add_term(e1 + e2, c1 * c2);
                }
            }
        }
        out
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, o: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, o: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, o: &TPoly) -> TPoly {
        self.mul_ref(o)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(-1)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let s: Vec<String> = self
            .terms()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{e}"),
            })
            .collect();
        write!(f, "{}", s.join(" + "))
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, i64)> = self.terms().collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<(u32, i64)>::deserialize(d)?;
        Ok(TPoly::from_terms(v))
    }
}
