use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use shapes::{GenPartition, ShapeError};

use crate::error::RingError;
use crate::sign::Sign;

/// Sort exponents into a canonical z-monomial key.
pub(crate) fn mono(mut v: Vec<i64>) -> GenPartition {
    v.sort_unstable_by(|a, b| b.cmp(a));
    GenPartition::new(v).unwrap()
}

pub(crate) fn add_into(map: &mut BTreeMap<GenPartition, i64>, key: GenPartition, c: i64) {
    if c == 0 {
        return;
    }
    let e = map.entry(key.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        map.remove(&key);
    }
}

/// Polynomial in the commuting variables `z_k`, `k` in `Z`; a monomial
/// `z_{mu_1} ... z_{mu_k}` is keyed by its indices sorted decreasingly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<RTerm>", try_from = "Vec<RTerm>")]
pub struct RElem {
    terms: BTreeMap<GenPartition, i64>,
}

#[derive(Serialize, Deserialize)]
struct RTerm {
    z: Vec<i64>,
    c: i64,
}

impl From<RElem> for Vec<RTerm> {
    fn from(r: RElem) -> Self {
        r.terms.into_iter().map(|(k, c)| RTerm { z: k.parts().to_vec(), c }).collect()
    }
}

impl TryFrom<Vec<RTerm>> for RElem {
    type Error = ShapeError;
    fn try_from(v: Vec<RTerm>) -> Result<Self, ShapeError> {
        let mut r = RElem::zero();
        for t in v {
            r.add_term(mono(t.z), t.c);
        }
        Ok(r)
    }
}

impl RElem {
    pub fn zero() -> Self {
        RElem::default()
    }

    pub fn one() -> Self {
        RElem::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        RElem::monomial(&[], c)
    }

    pub fn z(k: i64) -> Self {
        RElem::monomial(&[k], 1)
    }

    /// `c z_{idx_1} ... z_{idx_r}` in any index order.
    pub fn monomial(idx: &[i64], c: i64) -> Self {
        let mut r = RElem::zero();
        r.add_term(mono(idx.to_vec()), c);
        r
    }

    pub fn terms(&self) -> &BTreeMap<GenPartition, i64> {
        &self.terms
    }

    pub fn coeff(&self, key: &GenPartition) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: GenPartition, c: i64) {
        add_into(&mut self.terms, key, c);
    }

    pub fn add(&self, o: &RElem) -> RElem {
        let mut r = self.clone();
        for (k, &c) in &o.terms {
            r.add_term(k.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &RElem) -> RElem {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, s: i64) -> RElem {
        let mut r = RElem::zero();
        for (k, &c) in &self.terms {
            r.add_term(k.clone(), c * s);
        }
        r
    }

    pub fn mul(&self, o: &RElem) -> RElem {
        let mut r = RElem::zero();
        for (a, &c) in &self.terms {
            for (b, &d) in &o.terms {
                let mut v = a.parts().to_vec();
                v.extend_from_slice(b.parts());
                r.add_term(mono(v), c * d);
            }
        }
        r
    }

    /// Degree of every term, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|k| k.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Smallest and largest index occurring.
    pub fn index_range(&self) -> Option<(i64, i64)> {
        let all = self.terms.keys().flat_map(|k| k.parts().iter().copied());
        all.fold(None, |acc, x| match acc {
            None => Some((x, x)),
            Some((a, b)) => Some((a.min(x), b.max(x))),
        })
    }

    /// The derivation `sum_k z_{k+shift} d/dz_k`.
    pub fn shift_derivation(&self, shift: i64) -> RElem {
        let mut r = RElem::zero();
        for (key, &c) in &self.terms {
            let parts = key.parts();
            let mut i = 0;
            while i < parts.len() {
                let k = parts[i];
                let mult = parts[i..].iter().take_while(|&&x| x == k).count();
                let mut v = parts.to_vec();
                v[i] = k + shift;
                r.add_term(mono(v), c * mult as i64);
                i += mult;
            }
        }
        r
    }

    /// `z_k -> z_{-k}`.
    pub fn omega(&self) -> RElem {
        let mut r = RElem::zero();
        for (key, &c) in &self.terms {
            r.add_term(mono(key.parts().iter().map(|x| -x).collect()), c);
        }
        r
    }
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (key, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let body: Vec<String> = key.parts().iter().map(|k| format!("z{k}")).collect();
            match (c.abs(), body.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", body.join(" "))?,
                (a, false) => write!(f, "{a} {}", body.join(" "))?,
            }
        }
        Ok(())
    }
}

/// `gamma^+-_n = (-1)^{n-1} sum_k z_{k -+ n} d/dz_k`.
pub fn p_action(sign: Sign, n: usize, f: &RElem) -> RElem {
    assert!(n >= 1, "power-sum index must be positive");
    let shift = match sign {
        Sign::Plus => -(n as i64),
        Sign::Minus => n as i64,
    };
    let s = if n % 2 == 1 { 1 } else { -1 };
    f.shift_derivation(shift).scale(s)
}

/// `z_{lambda/mu} = det(z_{lambda_i - mu_j - i + j})`.
pub fn z_skew_schur(lambda: &GenPartition, mu: &GenPartition) -> Result<RElem, RingError> {
    let n = lambda.len();
    if mu.len() != n {
        return Err(RingError::LengthMismatch { expected: n, got: mu.len() });
    }
    let (l, m) = (lambda.parts(), mu.parts());
    let mut r = RElem::zero();
    for (w, s) in permutations(n) {
        let idx: Vec<i64> = (0..n).map(|i| l[i] - m[w[i]] - i as i64 + w[i] as i64).collect();
        r.add_term(mono(idx), s);
    }
    Ok(r)
}

/// `z_lambda = det(z_{lambda_i - i + j})`; every `z_k`, including `z_0`, is a variable.
pub fn z_schur(lambda: &GenPartition) -> RElem {
    z_skew_schur(lambda, &GenPartition::constant(lambda.len(), 0)).unwrap()
}

/// Expansion `f = sum c_lambda z_lambda` over `lambda` of length `n`, by triangular
/// elimination on the lexicographically smallest monomial.
pub fn expand_in_z_schur(f: &RElem, n: usize) -> Result<BTreeMap<GenPartition, i64>, RingError> {
    let mut out = BTreeMap::new();
    let Some((lo, hi)) = f.index_range() else {
        if let Some(d) = f.homogeneous_degree() {
            if d != n {
                return Err(RingError::NotHomogeneous(n));
            }
            out.insert(GenPartition::default(), f.coeff(&GenPartition::default()));
        }
        return Ok(out);
    };
    if f.homogeneous_degree() != Some(n) {
        return Err(RingError::NotHomogeneous(n));
    }
    let (lo, hi) = (lo - n as i64, hi + n as i64);
    let mut rem = f.clone();
    while let Some((key, &c)) = rem.terms.iter().next() {
        let key = key.clone();
        if key.parts().iter().any(|&x| x < lo || x > hi) {
            return Err(RingError::NotFinite(key.to_string()));
        }
        rem = rem.sub(&z_schur(&key).scale(c));
        out.insert(key, c);
    }
    Ok(out)
}

pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == cur.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for j in k..cur.len() {
            cur.swap(k, j);
            rec(k + 1, cur, if j == k { sign } else { -sign }, out);
            cur.swap(k, j);
        }
    }
    rec(0, &mut cur, 1, &mut out);
    out
}
