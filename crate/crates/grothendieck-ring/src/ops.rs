use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use shapes::Partition;

use crate::delem::{d_multiply, DElem};
use crate::relem::{p_action, RElem};
use crate::sign::Sign;

/// Symmetric-group character `chi^lambda(kappa)` by the Murnaghan-Nakayama rule.
pub fn mn_character(lambda: &Partition, kappa: &[usize]) -> i64 {
    let l = lambda.len();
    let beta: Vec<i64> = (0..l).map(|i| (lambda.get(i) + l - 1 - i) as i64).collect();
    mn_rec(beta, kappa)
}

fn mn_rec(beta: Vec<i64>, kappa: &[usize]) -> i64 {
    let Some((&r, rest)) = kappa.split_first() else {
        return 1;
    };
    let r = r as i64;
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut next = beta.clone();
        next[i] = nb;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(next, rest);
    }
    total
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Size of the conjugacy class of cycle type `kappa` in `S_{|kappa|}`.
pub fn class_size(kappa: &Partition) -> i64 {
    let mut z: i64 = 1;
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in kappa.parts() {
        *mult.entry(p).or_default() += 1;
    }
    for (&p, &m) in &mult {
        z *= (p as i64).pow(m as u32) * factorial(m);
    }
    factorial(kappa.size()) / z
}

/// Power-sum expansion `|mu|! s_mu = sum_kappa |C_kappa| chi^mu(kappa) p_kappa`.
fn power_sum_expansion(mu: &Partition) -> Vec<(Partition, i64)> {
    Partition::all_of_size(mu.size())
        .into_iter()
        .map(|k| {
            let c = class_size(&k) * mn_character(mu, k.parts());
            (k, c)
        })
        .filter(|(_, c)| *c != 0)
        .collect()
}

/// The Schur-shape operator `s^+-_mu` on `R`. The power sum `p_n` of the `+` family
/// acts as `gamma^-_n` and that of the `-` family as `gamma^+_n`, so that
/// `s^+_{mu'}(z_lambda) = z_{lambda/mu*}` and `s^-_{mu'}(z_lambda) = z_{lambda/mu}`.
pub fn s_operator(sign: Sign, mu: &Partition, f: &RElem) -> RElem {
    if mu.is_empty() {
        return f.clone();
    }
    let mut total = RElem::zero();
    for (kappa, c) in power_sum_expansion(mu) {
        let mut g = f.clone();
        for &k in kappa.parts().iter().rev() {
            g = p_action(sign.flip(), k, &g);
        }
        total = total.add(&g.scale(c));
    }
    let d = factorial(mu.size());
    let mut out = RElem::zero();
    for (key, &c) in total.terms() {
        assert!(c % d == 0, "non-integral s-operator coefficient {c}/{d}");
        out.add_term(key.clone(), c / d);
    }
    out
}

/// `h^+-_n = s^+-_{(n)}`, with `h_0` the identity.
pub fn h_operator(sign: Sign, n: usize, f: &RElem) -> RElem {
    s_operator(sign, &Partition::row(n), f)
}

/// `(|mu|!, D)` with `D / |mu|!` the Ore-extension element acting as `s^+-_mu`.
pub fn s_operator_delem(sign: Sign, mu: &Partition) -> (i64, DElem) {
    if mu.is_empty() {
        return (1, DElem::one());
    }
    let mut d = DElem::zero();
    for (kappa, c) in power_sum_expansion(mu) {
        let mut term = DElem::one().scale(c);
        for &k in kappa.parts() {
            term = d_multiply(&term, &DElem::s(sign.flip(), k));
        }
        d = d.add(&term);
    }
    (factorial(mu.size()), d)
}

/// One Schur-shape operator factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SOp {
    pub sign: Sign,
    pub shape: Partition,
}

impl SOp {
    pub fn h(sign: Sign, n: usize) -> SOp {
        SOp { sign, shape: Partition::row(n) }
    }
}

impl fmt::Display for SOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.len() <= 1 {
            write!(f, "h{}{}", self.sign, self.shape.size())
        } else {
            write!(f, "s{}({})", self.sign, self.shape)
        }
    }
}

/// Integer combination of composites of Schur-shape operators; the leftmost factor acts last.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OpPoly {
    pub terms: BTreeMap<Vec<SOp>, i64>,
}

impl OpPoly {
    pub fn term(c: i64, ops: Vec<SOp>) -> OpPoly {
        let mut p = OpPoly::default();
        p.add_term(c, ops);
        p
    }

    pub fn add_term(&mut self, c: i64, ops: Vec<SOp>) {
        let ops: Vec<SOp> = ops.into_iter().filter(|o| !o.shape.is_empty()).collect();
        let e = self.terms.entry(ops.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&ops);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply(&self, f: &RElem) -> RElem {
        let mut out = RElem::zero();
        for (ops, &c) in &self.terms {
            let mut g = f.clone();
            for op in ops.iter().rev() {
                g = s_operator(op.sign, &op.shape, &g);
            }
            out = out.add(&g.scale(c));
        }
        out
    }

    /// `(L, D)` with `D / L` the Ore-extension element of this operator.
    pub fn to_delem(&self) -> (i64, DElem) {
        let parts: Vec<(i64, i64, DElem)> = self
            .terms
            .iter()
            .map(|(ops, &c)| {
                let mut scale = 1;
                let mut d = DElem::one();
                for op in ops {
                    let (s, e) = s_operator_delem(op.sign, &op.shape);
                    scale *= s;
                    d = d_multiply(&d, &e);
                }
                (c, scale, d)
            })
            .collect();
        let l = parts.iter().fold(1, |acc, (_, s, _)| lcm(acc, *s));
        let mut out = DElem::zero();
        for (c, s, d) in parts {
            out = out.add(&d.scale(c * (l / s)));
        }
        (l, out)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

impl fmt::Display for OpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (ops, &c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let body: Vec<String> = ops.iter().map(|o| o.to_string()).collect();
            match (c.abs(), body.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", body.join(" "))?,
                (a, false) => write!(f, "{a} {}", body.join(" "))?,
            }
        }
        Ok(())
    }
}

/// A generator of the annihilator of the span of `z_lambda`, `lambda` of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub ops: OpPoly,
    /// `delem / scale` is the relation inside the Ore extension.
    pub scale: i64,
    pub delem: DElem,
}

/// `h^+-_k` for `n < k <= kmax`, and `h^+_n h^-_i - h^+_{n-i}` for `0 <= i <= n`.
pub fn annihilator_relations(n: usize, kmax: usize) -> Vec<Relation> {
    let mut ops = Vec::new();
    for k in n + 1..=kmax {
        for sign in [Sign::Plus, Sign::Minus] {
            ops.push(OpPoly::term(1, vec![SOp::h(sign, k)]));
        }
    }
    for i in 0..=n {
        let mut p = OpPoly::term(1, vec![SOp::h(Sign::Plus, n), SOp::h(Sign::Minus, i)]);
        p.add_term(-1, vec![SOp::h(Sign::Plus, n - i)]);
        ops.push(p);
    }
    ops.into_iter()
        .map(|ops| {
            let (scale, delem) = ops.to_delem();
            Relation { ops, scale, delem }
        })
        .collect()
}
