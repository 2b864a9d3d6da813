use std::collections::BTreeMap;

use crystal_core::Weight;
use shapes::{gen_lr_coefficient, gl_product, lr_coefficient, lr_product, GenPartition, Partition};

use crate::class::{Decomposition, ExtremalClass};
use crate::error::LrError;

/// Which column crystal is tensored on the right in [`pieri_column`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    B,
    Dual,
}

/// `[B_{mu,nu}][B_{sigma,tau}] = sum c^eta_{mu sigma} c^theta_{nu tau} [B_{eta,theta}]`.
pub fn level0_product(mu: &Partition, nu: &Partition, sigma: &Partition, tau: &Partition) -> Decomposition {
    let mut d = Decomposition::new();
    let right = lr_product(nu, tau, None);
    for (eta, a) in lr_product(mu, sigma, None) {
        for (theta, b) in &right {
            d.add(ExtremalClass::level0(eta.clone(), theta.clone()), a * b);
        }
    }
    d
}

/// Multiplicities of `B(Lambda_lambda)` in `B(Lambda_mu) x B(Lambda_nu)` over `lambda` with
/// entries in `[lo, hi]`.
pub fn hw_product(mu: &GenPartition, nu: &GenPartition, lo: i64, hi: i64) -> BTreeMap<GenPartition, u64> {
    let n = mu.len() + nu.len();
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(GenPartition::default(), 1);
        return out;
    }
    for lambda in GenPartition::all_with_size(n, mu.size() + nu.size(), lo, hi) {
        let c = gen_lr_coefficient(&lambda, mu, nu).expect("lengths agree");
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    out
}

/// Generalized partitions `mu >= base` with `base_i <= mu_i <= base_{i-1}` and `|mu| - |base| = size`.
fn horizontal_strips_up(base: &[i64], size: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(base.len());
    fn rec(base: &[i64], rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == base.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if i == 0 { rem } else { (base[i - 1] - base[i]).min(rem) };
        for d in 0..=cap {
            cur.push(base[i] + d);
            rec(base, rem - d, cur, out);
            cur.pop();
        }
    }
    rec(base, size, &mut cur, &mut out);
    out
}

/// `nu <= base` with `base_{i+1} <= nu_i <= base_i` and `|base| - |nu| = size`.
fn horizontal_strips_down(base: &[i64], size: i64) -> Vec<Vec<i64>> {
    let n = base.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(base: &[i64], rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = cur.len();
        if i == base.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = if i + 1 == base.len() { rem } else { (base[i] - base[i + 1]).min(rem) };
        for d in 0..=cap {
            cur.push(base[i] - d);
            rec(base, rem - d, cur, out);
            cur.pop();
        }
    }
    rec(base, size, &mut cur, &mut out);
    out
}

/// `B(Lambda_lambda) x B_{(1^a)}` (or its dual column) as a sum of classes.
pub fn pieri_column(lambda: &GenPartition, a: usize, side: Side) -> Decomposition {
    let mut d = Decomposition::new();
    for k in 0..=a {
        let strip = (a - k) as i64;
        let col = Partition::column(k);
        let shapes = match side {
            Side::B => horizontal_strips_up(lambda.parts(), strip),
            Side::Dual => horizontal_strips_down(lambda.parts(), strip),
        };
        if lambda.is_empty() && strip > 0 {
            continue;
        }
        for s in shapes {
            let hw = GenPartition::new(s).expect("interlacing keeps order");
            let class = match side {
                Side::B => ExtremalClass::new(col.clone(), Partition::empty(), Some(hw)),
                Side::Dual => ExtremalClass::new(Partition::empty(), col.clone(), Some(hw)),
            };
            d.add(class, 1);
        }
    }
    d
}

/// Pairs `(sigma, c)` with `c = c^outer_{sigma' alpha}` over `alpha` of length at most `m`, where
/// `outer = shape'`; yields `(sigma, alpha, c)`.
fn conjugate_splits(shape: &Partition, m: usize) -> Vec<(Partition, Partition, u64)> {
    let outer = shape.conjugate();
    let subs = outer.subpartitions();
    let mut out = Vec::new();
    for alpha in subs.iter().filter(|a| a.len() <= m) {
        for sc in subs.iter().filter(|s| s.size() + alpha.size() == outer.size()) {
            let c = lr_coefficient(&outer, sc, alpha);
            if c > 0 {
                out.push((sc.conjugate(), alpha.clone(), c));
            }
        }
    }
    out
}

/// `rho` with multiplicity `c^eta_{rho beta}`, i.e. the constituents of `V_eta x V_beta^*`.
fn divide_out(eta: &GenPartition, beta: &Partition) -> BTreeMap<GenPartition, u64> {
    let m = eta.len();
    let top = beta.get(0);
    let comp: Vec<usize> = (0..m).map(|i| top - beta.get(m - 1 - i)).collect();
    let comp = Partition::new(comp).expect("complement is a partition");
    gl_product(eta, &comp).into_iter().map(|(r, c)| (r.shift(-(top as i64)), c)).collect()
}

/// `B(Lambda_lambda) x B_{mu,nu} = sum B_{sigma,tau} x B(Lambda_rho)` with multiplicity
/// `sum c^lambda_{eta alpha*} c^{mu'}_{sigma' alpha} c^eta_{rho beta} c^{nu'}_{tau' beta}`,
/// `alpha, beta` of length at most `l(lambda)`.
pub fn hw_past_level0(lambda: &GenPartition, mu: &Partition, nu: &Partition) -> Decomposition {
    let m = lambda.len();
    if m == 0 {
        return Decomposition::single(ExtremalClass::level0(mu.clone(), nu.clone()));
    }
    let left = conjugate_splits(mu, m);
    let right = conjugate_splits(nu, m);
    let mut d = Decomposition::new();
    for (sigma, alpha, c1) in &left {
        for (eta, c2) in gl_product(lambda, alpha) {
            for (tau, beta, c3) in &right {
                for (rho, c4) in divide_out(&eta, beta) {
                    d.add(ExtremalClass::new(sigma.clone(), tau.clone(), Some(rho)), c1 * c2 * c3 * c4);
                }
            }
        }
    }
    d
}

/// `(B_{mu,nu} x B(Lambda_lambda)) x (B_{sigma,tau} x B(Lambda_rho))`, keeping classes whose
/// highest weight has entries in `[lo, hi]`.
#[allow(clippy::too_many_arguments)]
pub fn extremal_lr(
    lambda: &GenPartition,
    mu: &Partition,
    nu: &Partition,
    rho: &GenPartition,
    sigma: &Partition,
    tau: &Partition,
    lo: i64,
    hi: i64,
) -> Decomposition {
    let mut d = Decomposition::new();
    for (mid, c) in hw_past_level0(lambda, sigma, tau).iter() {
        let level0 = level0_product(mu, nu, &mid.mu, &mid.nu);
        let hws = hw_product(&mid.hw_or_empty(), rho, lo, hi);
        for (l0, a) in level0.iter() {
            for (zeta, b) in &hws {
                d.add(ExtremalClass::new(l0.mu.clone(), l0.nu.clone(), Some(zeta.clone())), c * a * b);
            }
        }
    }
    d
}

/// Product of two classes, see [`extremal_lr`].
pub fn class_product(a: &ExtremalClass, b: &ExtremalClass, lo: i64, hi: i64) -> Decomposition {
    extremal_lr(&a.hw_or_empty(), &a.mu, &a.nu, &b.hw_or_empty(), &b.mu, &b.nu, lo, hi)
}

/// Bilinear extension of [`class_product`].
pub fn product(a: &Decomposition, b: &Decomposition, lo: i64, hi: i64) -> Decomposition {
    let mut d = Decomposition::new();
    for (x, m) in a.iter() {
        for (y, n) in b.iter() {
            d.merge(&class_product(x, y, lo, hi), m * n);
        }
    }
    d
}

/// `(mu, nu)` with `B(Lambda) = B_{mu,nu}` for a level-0 weight.
pub fn level0_canonical(w: &Weight) -> Result<(Partition, Partition), LrError> {
    if w.level != 0 {
        return Err(LrError::NonzeroLevel(w.level));
    }
    let mut pos: Vec<usize> = w.eps.values().filter(|&&c| c > 0).map(|&c| c as usize).collect();
    let mut neg: Vec<usize> = w.eps.values().filter(|&&c| c < 0).map(|&c| (-c) as usize).collect();
    pos.sort_unstable_by(|a, b| b.cmp(a));
    neg.sort_unstable_by(|a, b| b.cmp(a));
    Ok((Partition::new(pos)?, Partition::new(neg)?))
}
