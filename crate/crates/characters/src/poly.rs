use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::{Deserialize, Serialize};
use shapes::TPoly;

/// Coefficient ring of a Laurent polynomial.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_int(c: i64) -> Self;
}

impl Coeff for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_int(c: i64) -> Self {
        c
    }
}

impl Coeff for TPoly {
    fn zero() -> Self {
        TPoly::zero()
    }
    fn one() -> Self {
        TPoly::one()
    }
    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn from_int(c: i64) -> Self {
        TPoly::constant(c)
    }
}

/// A Laurent polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PolyRepr<C>", from = "PolyRepr<C>")]
#[serde(bound(serialize = "C: Coeff + Serialize", deserialize = "C: Coeff + Deserialize<'de>"))]
pub struct Poly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, C>,
}

pub type LaurentPoly = Poly<i64>;
pub type TLaurentPoly = Poly<TPoly>;

#[derive(Serialize, Deserialize)]
struct PolyRepr<C> {
    nvars: usize,
    terms: Vec<(Vec<i64>, C)>,
}

impl<C: Coeff> From<Poly<C>> for PolyRepr<C> {
    fn from(p: Poly<C>) -> Self {
        PolyRepr { nvars: p.nvars, terms: p.terms.into_iter().collect() }
    }
}

impl<C: Coeff> From<PolyRepr<C>> for Poly<C> {
    fn from(r: PolyRepr<C>) -> Self {
        let mut p = Poly::zero(r.nvars);
        for (e, c) in r.terms {
            p.add_term(e, &c);
        }
        p
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn monomial(exps: Vec<i64>, c: C) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, &c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i64]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: &C) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c);
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        self.map_coeffs(|c| c.mul(k))
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Poly<D> {
        let mut p = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            p.add_term(e.clone(), &f(c));
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars);
        let mut p = Poly::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                p.add_term(e, &c.mul(d));
            }
        }
        p
    }

    /// Multiply by the monomial `x^shift`.
    pub fn mul_monomial(&self, shift: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(x, s)| x + s).collect(), c.clone()))
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    /// Rename variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![0; self.nvars];
                for (i, &x) in e.iter().enumerate() {
                    f[perm[i]] = x;
                }
                (f, c.clone())
            })
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn swap(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute(&perm)
    }

    /// Invariance under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.swap(i - 1, i) == *self)
    }

    /// Embed into `total` variables, placing variable `k` at `offset + k`.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![0; total];
                f[offset..offset + self.nvars].copy_from_slice(e);
                (f, c.clone())
            })
            .collect();
        Poly { nvars: total, terms }
    }

    /// Keep the terms whose exponents satisfy `keep`.
    pub fn filter<F: Fn(&[i64]) -> bool>(&self, keep: F) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        Poly { nvars: self.nvars, terms }
    }

    /// Exact quotient by `x_i - x_j`, or `None` if it does not divide.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Option<Self> {
        assert!(i != j);
        let mut groups: BTreeMap<Vec<i64>, BTreeMap<i64, C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key[i] = 0;
            key[j] = e[i] + e[j];
            groups.entry(key).or_default().insert(e[i], c.clone());
        }
        let mut q = Poly::zero(self.nvars);
        for (key, coeffs) in groups {
            let d = key[j];
            let lo = *coeffs.keys().next().unwrap();
            let hi = *coeffs.keys().next_back().unwrap();
            let mut acc = C::zero();
            for k in ((lo + 1)..=hi).rev() {
                if let Some(c) = coeffs.get(&k) {
                    acc = acc.add(c);
                }
                let mut e = key.clone();
                e[i] = k - 1;
                e[j] = d - k;
                q.add_term(e, &acc);
            }
            if !acc.add(&coeffs[&lo]).is_zero() {
                return None;
            }
        }
        Some(q)
    }

    /// The lexicographically largest term.
    pub fn lex_leading(&self) -> Option<(&Vec<i64>, &C)> {
        self.terms.iter().next_back()
    }
}

impl TLaurentPoly {
    /// Specialize `t` to an integer.
    pub fn eval_t(&self, t: i64) -> LaurentPoly {
        self.map_coeffs(|c| c.eval(t))
    }
}

impl LaurentPoly {
    pub fn to_t(&self) -> TLaurentPoly {
        self.map_coeffs(|&c| TPoly::constant(c))
    }
}
