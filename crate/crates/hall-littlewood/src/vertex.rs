use std::collections::{BTreeMap, HashMap};

use grothendieck_ring::{s_operator, z_schur, RElem, Sign};
use shapes::{gl_product, lr_product, GenPartition, Partition, TPoly};

use crate::error::HlError;
use crate::shape_ops::{column_op, row_op};
use crate::trelem::TRElem;

fn max_degree(f: &RElem) -> usize {
    f.terms().keys().map(GenPartition::len).max().unwrap_or(0)
}

/// Which vertex operator family: `b^t_k` or its mirror under `omega`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    B,
    Bar,
}

impl Family {
    fn shape_sign(self) -> Sign {
        match self {
            Family::B => Sign::Minus,
            Family::Bar => Sign::Plus,
        }
    }

    fn z_index(self, m: i64) -> i64 {
        match self {
            Family::B => m,
            Family::Bar => -m,
        }
    }
}

/// `sum_{i,j} (-1)^{i-j} t^j z_{i+k} . s_{(i-j)} s_{(1^j)} f` on `f` in `R`, for `j <= T`.
/// Shape operators of a row longer than the degree of `f` vanish, which bounds `i - j`.
fn apply_on_r(family: Family, k: i64, f: &RElem, t: u32, out: &mut TRElem) {
    if f.is_zero() {
        return;
    }
    let sign = family.shape_sign();
    let d = max_degree(f);
    for j in 0..=t as usize {
        let g = column_op(sign, j, f);
        if g.is_zero() {
            continue;
        }
        for r in 0..=d {
            let h = row_op(sign, r, &g);
            if h.is_zero() {
                continue;
            }
            let i = (r + j) as i64;
            let term = RElem::z(family.z_index(i + k)).mul(&h);
            out.add_scaled(j as u32, if r % 2 == 0 { 1 } else { -1 }, &term);
        }
        assert!(row_op(sign, d + 1, &g).is_zero());
    }
}

/// The Hall-Littlewood vertex operator `b^t_k` (or `omega(b^t_k)`) modulo `t^{T+1}`.
pub fn vertex_apply(family: Family, k: i64, f: &TRElem) -> TRElem {
    let t = f.truncation();
    let mut out = TRElem::zero(t);
    for p in 0..=t {
        let mut local = TRElem::zero(t - p);
        apply_on_r(family, k, f.coeff(p), t - p, &mut local);
        for j in 0..=(t - p) {
            out.add_scaled(j + p, 1, local.coeff(j));
        }
    }
    out
}

/// `b^t_k f` modulo `t^{T+1}`.
pub fn bt_apply(k: i64, f: &TRElem) -> TRElem {
    vertex_apply(Family::B, k, f)
}

/// `omega(b^t_k) f` modulo `t^{T+1}`.
pub fn bt_bar_apply(k: i64, f: &TRElem) -> TRElem {
    vertex_apply(Family::Bar, k, f)
}

/// `b^t_{w_1} ... b^t_{w_n} f`, rightmost first.
pub fn bt_word_apply(word: &[i64], f: &TRElem) -> TRElem {
    word.iter().rev().fold(f.clone(), |acc, &k| bt_apply(k, &acc))
}

/// `b^t_{mu_1} ... b^t_{mu_n} . 1` modulo `t^{T+1}`.
pub fn bt_word_action(mu: &[i64], t: u32) -> TRElem {
    bt_word_apply(mu, &TRElem::one(t))
}

/// `b^t_alpha = prod_{i<j} (1 - t R_ij) b^t_{alpha_1} ... b^t_{alpha_n}` as a
/// `t`-linear combination of words, truncated at `t^T`.
pub fn raising_expansion(alpha: &[i64], t: u32) -> BTreeMap<Vec<i64>, TPoly> {
    let mut terms: BTreeMap<Vec<i64>, TPoly> = BTreeMap::new();
    terms.insert(alpha.to_vec(), TPoly::one());
    let n = alpha.len();
    for i in 0..n {
        for j in i + 1..n {
            let mut next = terms.clone();
            for (w, c) in &terms {
                let c = c.shift(1).scale(-1).truncate(t);
                if c.is_zero() {
                    continue;
                }
                let mut w = w.clone();
                w[i] += 1;
                w[j] -= 1;
                let e = next.entry(w).or_insert_with(TPoly::zero);
                *e = &*e + &c;
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
    }
    terms
}

/// Word actions `b^t_{w_1} ... b^t_{w_n} f` on a fixed `f`, memoized by suffix.
#[derive(Debug, Clone)]
pub struct WordCache {
    base: TRElem,
    memo: HashMap<Vec<i64>, TRElem>,
}

impl WordCache {
    pub fn new(f: &TRElem) -> Self {
        WordCache { base: f.clone(), memo: HashMap::new() }
    }

    pub fn apply(&mut self, word: &[i64]) -> TRElem {
        if word.is_empty() {
            return self.base.clone();
        }
        if let Some(r) = self.memo.get(word) {
            return r.clone();
        }
        let inner = self.apply(&word[1..]);
        let r = bt_apply(word[0], &inner);
        self.memo.insert(word.to_vec(), r.clone());
        r
    }

    /// `b^t_alpha f` through the raising-operator expansion.
    pub fn apply_lambda(&mut self, alpha: &[i64]) -> TRElem {
        let t = self.base.truncation();
        let mut out = TRElem::zero(t);
        for (w, c) in raising_expansion(alpha, t) {
            let r = self.apply(&w);
            for (j, a) in c.terms() {
                for k in 0..=t {
                    out.add_scaled(k + j, a, r.coeff(k));
                }
            }
        }
        out
    }
}

/// `b^t_alpha f` through the raising-operator expansion.
pub fn bt_lambda_apply(alpha: &[i64], f: &TRElem) -> TRElem {
    WordCache::new(f).apply_lambda(alpha)
}

/// `b^t_lambda f` through the class formula
/// `sum (-1)^{|mu|} t^{|nu|} c^lambda_{eta sigma*} c^sigma_{mu nu} [B(-Lambda_eta) x B_mu x B_{nu'}]`.
pub fn bt_lambda_classes_apply(lambda: &GenPartition, f: &TRElem) -> TRElem {
    let t = f.truncation();
    let n = lambda.len();
    let mut out = TRElem::zero(t);
    for p in 0..=t {
        let g = f.coeff(p);
        if g.is_zero() {
            continue;
        }
        let d = max_degree(g);
        let budget = (t - p) as usize;
        let mus: Vec<Partition> = (0..=n * d)
            .flat_map(|s| Partition::all_in_box(s, n, d))
            .collect();
        let nus: Vec<Partition> = (0..=budget)
            .flat_map(|s| Partition::all_in_box(s, n, s))
            .collect();
        for nu in &nus {
            let g1 = s_operator(Sign::Minus, &nu.conjugate(), g);
            if g1.is_zero() {
                continue;
            }
            for mu in &mus {
                let g2 = s_operator(Sign::Minus, mu, &g1);
                if g2.is_zero() {
                    continue;
                }
                let sign = if mu.size() % 2 == 0 { 1 } else { -1 };
                for (sigma, c1) in lr_product(mu, nu, Some(n)) {
                    for (eta, c2) in gl_product(lambda, &sigma) {
                        let c = sign * (c1 * c2) as i64;
                        out.add_scaled(p + nu.size() as u32, c, &z_schur(&eta).mul(&g2));
                    }
                }
            }
        }
    }
    out
}

/// Whether `b_m b_n - t b_n b_m - t b_{m+1} b_{n-1} + b_{n-1} b_{m+1}` kills `sample`.
pub fn bt_commutator_check(m: i64, n: i64, sample: &TRElem) -> bool {
    let ab = |a: i64, b: i64| bt_apply(a, &bt_apply(b, sample));
    let lhs = ab(m, n)
        .sub(&ab(n, m).scale_t(1, 1))
        .and_then(|x| x.sub(&ab(m + 1, n - 1).scale_t(1, 1)))
        .and_then(|x| x.add(&ab(n - 1, m + 1)))
        .unwrap();
    lhs.is_zero()
}

/// Whether `omega(b_m) b_n = b_n omega(b_m)` on `sample`.
pub fn bar_commutes(m: i64, n: i64, sample: &TRElem) -> bool {
    bt_bar_apply(m, &bt_apply(n, sample)) == bt_apply(n, &bt_bar_apply(m, sample))
}

/// `b^t_k` with its `j`-sum truncated at `j <= T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HLOperator {
    pub k: i64,
    pub t_truncation: u32,
    pub family: Family,
}

impl HLOperator {
    pub fn new(k: i64, t_truncation: u32) -> Self {
        HLOperator { k, t_truncation, family: Family::B }
    }

    pub fn bar(k: i64, t_truncation: u32) -> Self {
        HLOperator { k, t_truncation, family: Family::Bar }
    }

    pub fn apply(&self, f: &TRElem) -> Result<TRElem, HlError> {
        if f.truncation() != self.t_truncation {
            return Err(HlError::TruncationMismatch(f.truncation(), self.t_truncation));
        }
        Ok(vertex_apply(self.family, self.k, f))
    }
}
