use std::collections::BTreeMap;
use std::fmt;

use grothendieck_ring::{expand_in_z_schur, RElem};
use serde::Serialize;
use shapes::{GenPartition, TPoly};

use crate::error::HlError;

/// An element of `R[t] / t^{T+1}`, stored by powers of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TRElem {
    coeffs: Vec<RElem>,
}

/// One term of a z-Schur expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurTerm {
    pub lambda: GenPartition,
    pub tpoly: TPoly,
}

impl TRElem {
    pub fn zero(t: u32) -> Self {
        TRElem { coeffs: vec![RElem::zero(); t as usize + 1] }
    }

    pub fn one(t: u32) -> Self {
        TRElem::from_r(&RElem::one(), t)
    }

    pub fn from_r(f: &RElem, t: u32) -> Self {
        let mut e = TRElem::zero(t);
        e.coeffs[0] = f.clone();
        e
    }

    /// The truncation order `T`.
    pub fn truncation(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    /// Coefficient of `t^j`.
    pub fn coeff(&self, j: u32) -> &RElem {
        &self.coeffs[j as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RElem::is_zero)
    }

    /// Add `c t^j f`, dropping it when `j > T`.
    pub fn add_scaled(&mut self, j: u32, c: i64, f: &RElem) {
        if let Some(slot) = self.coeffs.get_mut(j as usize) {
            for (key, &v) in f.terms() {
                slot.add_term(key.clone(), c * v);
            }
        }
    }

    pub fn add(&self, o: &TRElem) -> Result<TRElem, HlError> {
        if self.truncation() != o.truncation() {
            return Err(HlError::TruncationMismatch(self.truncation(), o.truncation()));
        }
        let mut out = self.clone();
        for (j, f) in o.coeffs.iter().enumerate() {
            out.add_scaled(j as u32, 1, f);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &TRElem) -> Result<TRElem, HlError> {
        self.add(&o.scale_t(0, -1))
    }

    /// Multiply by `c t^j`.
    pub fn scale_t(&self, j: u32, c: i64) -> TRElem {
        let mut e = TRElem::zero(self.truncation());
        for (k, f) in self.coeffs.iter().enumerate() {
            e.add_scaled(k as u32 + j, c, f);
        }
        e
    }

    /// Multiply by a `t`-polynomial, truncating.
    pub fn scale_poly(&self, p: &TPoly) -> TRElem {
        let mut e = TRElem::zero(self.truncation());
        for (j, c) in p.terms() {
            for (k, f) in self.coeffs.iter().enumerate() {
                e.add_scaled(k as u32 + j, c, f);
            }
        }
        e
    }

    /// Apply a `Z[t]`-linear map given on `R`.
    pub fn map(&self, op: impl Fn(&RElem) -> RElem) -> TRElem {
        TRElem { coeffs: self.coeffs.iter().map(op).collect() }
    }

    /// Specialize `t` to an integer.
    pub fn eval(&self, t: i64) -> RElem {
        let mut out = RElem::zero();
        let mut p = 1;
        for f in &self.coeffs {
            out = out.add(&f.scale(p));
            p *= t;
        }
        out
    }

    /// Expansion in the basis `z_{lambda}`, `lambda` of length `n`.
    pub fn expand(&self, n: usize) -> Result<BTreeMap<GenPartition, TPoly>, HlError> {
        let mut out: BTreeMap<GenPartition, TPoly> = BTreeMap::new();
        for (j, f) in self.coeffs.iter().enumerate() {
            for (lambda, c) in expand_in_z_schur(f, n)? {
                let e = out.entry(lambda).or_insert_with(TPoly::zero);
                *e = &*e + &TPoly::monomial(j as u32, c);
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn schur_terms(&self, n: usize) -> Result<Vec<SchurTerm>, HlError> {
        Ok(self.expand(n)?.into_iter().map(|(lambda, tpoly)| SchurTerm { lambda, tpoly }).collect())
    }
}

impl fmt::Display for TRElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("t^{j} ({c})"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
