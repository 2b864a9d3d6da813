use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use shapes::GenPartition;

use crate::relem::{mono, p_action, RElem};
use crate::sign::Sign;

/// Normal-ordered monomial `z_mu s^+_{a_1} ... s^-_{b_1} ...`; s-subscripts sorted increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DKey {
    pub z: GenPartition,
    pub splus: Vec<usize>,
    pub sminus: Vec<usize>,
}

impl DKey {
    fn with_s(&self, sign: Sign, n: usize) -> DKey {
        let mut k = self.clone();
        let v = match sign {
            Sign::Plus => &mut k.splus,
            Sign::Minus => &mut k.sminus,
        };
        let pos = v.partition_point(|&x| x <= n);
        v.insert(pos, n);
        k
    }
}

/// Element of the Ore extension `R[s^+, s^-]` in normal form (z's left of s's).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<DTerm>", from = "Vec<DTerm>")]
pub struct DElem {
    terms: BTreeMap<DKey, i64>,
}

#[derive(Serialize, Deserialize)]
struct DTerm {
    z: Vec<i64>,
    splus: Vec<usize>,
    sminus: Vec<usize>,
    c: i64,
}

impl From<DElem> for Vec<DTerm> {
    fn from(d: DElem) -> Self {
        d.terms
            .into_iter()
            .map(|(k, c)| DTerm { z: k.z.parts().to_vec(), splus: k.splus, sminus: k.sminus, c })
            .collect()
    }
}

impl From<Vec<DTerm>> for DElem {
    fn from(v: Vec<DTerm>) -> Self {
        let mut d = DElem::zero();
        for t in v {
            let (mut splus, mut sminus) = (t.splus, t.sminus);
            splus.sort_unstable();
            sminus.sort_unstable();
            d.add_term(DKey { z: mono(t.z), splus, sminus }, t.c);
        }
        d
    }
}

impl DElem {
    pub fn zero() -> Self {
        DElem::default()
    }

    pub fn one() -> Self {
        DElem::from_r(&RElem::one())
    }

    pub fn from_r(f: &RElem) -> Self {
        let mut d = DElem::zero();
        for (k, &c) in f.terms() {
            d.add_term(DKey { z: k.clone(), ..DKey::default() }, c);
        }
        d
    }

    pub fn z(k: i64) -> Self {
        DElem::from_r(&RElem::z(k))
    }

    /// The generator `s^+-_n`.
    pub fn s(sign: Sign, n: usize) -> Self {
        let mut d = DElem::zero();
        d.add_term(DKey::default().with_s(sign, n), 1);
        d
    }

    pub fn terms(&self) -> &BTreeMap<DKey, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: DKey, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &DElem) -> DElem {
        let mut d = self.clone();
        for (k, &c) in &o.terms {
            d.add_term(k.clone(), c);
        }
        d
    }

    pub fn sub(&self, o: &DElem) -> DElem {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, s: i64) -> DElem {
        let mut d = DElem::zero();
        for (k, &c) in &self.terms {
            d.add_term(k.clone(), c * s);
        }
        d
    }

    /// `s^+-_n * self`, using `s z = z s + gamma(z)`.
    fn left_s(&self, sign: Sign, n: usize) -> DElem {
        let mut d = DElem::zero();
        for (k, &c) in &self.terms {
            d.add_term(k.with_s(sign, n), c);
            let zpart = RElem::monomial(k.z.parts(), c);
            for (z, &e) in p_action(sign, n, &zpart).terms() {
                d.add_term(DKey { z: z.clone(), ..k.clone() }, e);
            }
        }
        d
    }

    fn left_z(&self, z: &GenPartition) -> DElem {
        let mut d = DElem::zero();
        for (k, &c) in &self.terms {
            let mut v = z.parts().to_vec();
            v.extend_from_slice(k.z.parts());
            d.add_term(DKey { z: mono(v), ..k.clone() }, c);
        }
        d
    }

    /// Act on `R`: `z` multiplies and `s^+-_n` acts as `gamma^+-_n`.
    pub fn apply(&self, f: &RElem) -> RElem {
        let mut out = RElem::zero();
        for (k, &c) in &self.terms {
            let mut g = f.clone();
            for &n in k.sminus.iter().rev() {
                g = p_action(Sign::Minus, n, &g);
            }
            for &n in k.splus.iter().rev() {
                g = p_action(Sign::Plus, n, &g);
            }
            out = out.add(&RElem::monomial(k.z.parts(), c).mul(&g));
        }
        out
    }

    /// `z_k -> z_{-k}`, `s^+-_n -> s^-+_n`.
    pub fn omega(&self) -> DElem {
        let mut d = DElem::zero();
        for (k, &c) in &self.terms {
            let z = mono(k.z.parts().iter().map(|x| -x).collect());
            d.add_term(DKey { z, splus: k.sminus.clone(), sminus: k.splus.clone() }, c);
        }
        d
    }
}

/// Product in the Ore extension, returned in normal form.
pub fn d_multiply(a: &DElem, b: &DElem) -> DElem {
    let mut out = DElem::zero();
    for (k, &c) in &a.terms {
        let mut right = b.scale(c);
        for &n in k.sminus.iter().rev() {
            right = right.left_s(Sign::Minus, n);
        }
        for &n in k.splus.iter().rev() {
            right = right.left_s(Sign::Plus, n);
        }
        out = out.add(&right.left_z(&k.z));
    }
    out
}
