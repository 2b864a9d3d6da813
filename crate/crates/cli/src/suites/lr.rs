use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use characters::{branch_split, commuting_coefficient, schur_product};
use lr_engine::{extremal_lr, pieri_column, verify_truncated, Decomposition, Expr, ExtremalClass, Factor, Side};
use serde_json::{json, Value};
use shapes::{GenPartition, Partition};

use super::{ensure, grid, CheckResult, SuiteConfig};

fn verify_item(expr: &Expr, window: (i64, i64), predicted: &Decomposition) -> Result<u64, Value> {
    match verify_truncated(expr, window, predicted) {
        Ok(r) if r.matched => Ok(1),
        Ok(r) => Err(serde_json::to_value(&r).unwrap()),
        Err(e) => Err(json!({"expression": expr.to_string(), "window": window, "error": e.to_string()})),
    }
}

/// Pieri rule for `B(Lambda_lambda) x B_(1^a)` and its dual against brute force.
pub fn pieri(cfg: &SuiteConfig) -> CheckResult {
    let (bound, window) = if cfg.quick { (1, (-4, 4)) } else { (2, (-5, 5)) };
    let mut items = Vec::new();
    for lam in GenPartition::all_in_box(2, -bound, bound) {
        for a in 1..=3usize {
            for side in [Side::B, Side::Dual] {
                items.push((lam.clone(), a, side));
            }
        }
    }
    grid("pieri", json!({"lambda_box": [-bound, bound], "a": [1, 3], "window": window}), &items, |(lam, a, side)| {
        let second = match side {
            Side::B => Factor::Bcol(*a),
            Side::Dual => Factor::Bmn(Partition::empty(), Partition::column(*a)),
        };
        let expr = Expr(vec![Factor::B(lam.clone()), second]);
        verify_item(&expr, window, &pieri_column(lam, *a, *side))
    })
}

/// Level 1-1 decomposition and the column commuting relations as stated, checked by census.
pub fn level_one(cfg: &SuiteConfig) -> CheckResult {
    let window = (-4i64, 4i64);
    let (lo, hi) = window;
    let range = if cfg.quick { 0 } else { 1 };
    let mut items: Vec<(Expr, Decomposition)> = Vec::new();
    let g = |i: i64| GenPartition::new(vec![i]).unwrap();
    for i in -range..=range {
        for j in i..=range + 1 {
            let d = j - i;
            let top = (hi - j).min(i - lo + 1);
            let pred = (0..=top)
                .map(|a| (ExtremalClass::level0(Partition::column(a as usize), Partition::column((a + d) as usize)), 1))
                .collect();
            items.push((Expr(vec![Factor::B(g(i)), Factor::Bdual(g(j))]), pred));
            let top = (hi + i).min(-j - lo + 1);
            let pred = (0..=top)
                .map(|a| (ExtremalClass::level0(Partition::column((a + d) as usize), Partition::column(a as usize)), 1))
                .collect();
            items.push((Expr(vec![Factor::B(g(j)), Factor::Bdual(g(i))]), pred));
        }
    }
    for i in -range - 1..=range + 1 {
        for k in 0..=3i64 {
            let plus = (0..=k)
                .map(|a| (ExtremalClass::new(Partition::column(a as usize), Partition::empty(), Some(g(i + k - a))), 1))
                .collect();
            items.push((Expr(vec![Factor::B(g(i)), Factor::Bcol(k as usize)]), plus));
            let minus = (0..=k)
                .map(|a| (ExtremalClass::new(Partition::empty(), Partition::column(a as usize), Some(g(i - k + a))), 1))
                .collect();
            items.push((Expr(vec![Factor::B(g(i)), Factor::Bmn(Partition::empty(), Partition::column(k as usize))]), minus));
        }
    }
    grid("level-one-fixtures", json!({"window": window, "fixtures": items.len()}), &items, |(expr, pred)| {
        verify_item(expr, window, pred)
    })
}

fn lr_map(a: &Partition, b: &Partition) -> BTreeMap<Partition, i64> {
    let n = (a.size() + b.size()).max(1);
    schur_product(a, b, n).unwrap()
}

type CommKey = (GenPartition, Partition, Partition);
type CommTerms = Vec<(GenPartition, Partition, Partition, i64)>;
type SplitTable = BTreeMap<(GenPartition, GenPartition), i64>;

/// Entry bounds on the highest weight part of the (infinite) extremal decompositions.
const EXTREMAL_WINDOW: (i64, i64) = (-5, 5);

/// Memoized character coefficients shared across grid items.
#[derive(Default)]
struct CharacterOracle {
    commuting: Mutex<HashMap<CommKey, Arc<CommTerms>>>,
    splits: Mutex<HashMap<(GenPartition, usize, usize), Arc<SplitTable>>>,
}

impl CharacterOracle {
    /// `B(Lambda_lambda) x B_{sigma,tau} = sum c B_{sigma',tau'} x B(Lambda_eta)`.
    fn commuting(&self, lam: &GenPartition, sigma: &Partition, tau: &Partition) -> Arc<CommTerms> {
        let key = (lam.clone(), sigma.clone(), tau.clone());
        if let Some(v) = self.commuting.lock().unwrap().get(&key) {
            return v.clone();
        }
        let m = lam.len();
        let (lo, hi) = (lam.last().unwrap() - tau.size() as i64, lam.first().unwrap() + sigma.size() as i64);
        let mut terms = Vec::new();
        for s2 in sigma.subpartitions() {
            for t2 in tau.subpartitions() {
                let size = lam.size() + (sigma.size() - s2.size()) as i64 - (tau.size() - t2.size()) as i64;
                for eta in GenPartition::all_with_size(m, size, lo, hi) {
                    let c = commuting_coefficient(lam, sigma, tau, &eta, &s2, &t2).unwrap();
                    if c != 0 {
                        terms.push((eta, s2.clone(), t2.clone(), c));
                    }
                }
            }
        }
        let v = Arc::new(terms);
        self.commuting.lock().unwrap().insert(key, v.clone());
        v
    }

    fn split(&self, zeta: &GenPartition, m: usize, n: usize) -> Arc<SplitTable> {
        let key = (zeta.clone(), m, n);
        if let Some(v) = self.splits.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = Arc::new(branch_split(zeta, m, n).unwrap());
        self.splits.lock().unwrap().insert(key, v.clone());
        v
    }

    /// The two-alphabet character identity, summed into a decomposition of
    /// `(B_{mu,nu} x B(Lambda_lambda)) x (B_{sigma,tau} x B(Lambda_rho))`.
    fn predict(
        &self,
        lam: &GenPartition,
        mu: &Partition,
        nu: &Partition,
        rho: &GenPartition,
        sigma: &Partition,
        tau: &Partition,
    ) -> Decomposition {
        let mut d = Decomposition::new();
        let (m, n) = (lam.len(), rho.len());
        for (eta, s2, t2, c) in self.commuting(lam, sigma, tau).iter() {
            let left = lr_map(mu, s2);
            let right = lr_map(nu, t2);
            for zeta in GenPartition::all_with_size(m + n, eta.size() + rho.size(), EXTREMAL_WINDOW.0, EXTREMAL_WINDOW.1) {
                let b = self.split(&zeta, m, n).get(&(eta.clone(), rho.clone())).copied().unwrap_or(0);
                if b == 0 {
                    continue;
                }
                for (alpha, x) in &left {
                    for (beta, y) in &right {
                        let k = ExtremalClass::new(alpha.clone(), beta.clone(), Some(zeta.clone()));
                        d.add(k, (c * x * y * b) as u64);
                    }
                }
            }
        }
        d
    }
}

/// Extremal LR coefficients against the character identity.
pub fn extremal(cfg: &SuiteConfig) -> CheckResult {
    let (max_total, bound) = if cfg.quick { (2, 0) } else { (4, 1) };
    let shapes: Vec<Partition> = (0..=max_total).flat_map(Partition::all_of_size).collect();
    let mut items = Vec::new();
    for m in 1..=2 {
        for n in 1..=2 {
            for lam in GenPartition::all_in_box(m, -bound, bound) {
                for rho in GenPartition::all_in_box(n, -bound, bound) {
                    for mu in &shapes {
                        for nu in &shapes {
                            for sigma in &shapes {
                                for tau in &shapes {
                                    if mu.size() + nu.size() + sigma.size() + tau.size() <= max_total {
                                        items.push((lam.clone(), mu.clone(), nu.clone(), rho.clone(), sigma.clone(), tau.clone()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let oracle = CharacterOracle::default();
    grid(
        "extremal-lr",
        json!({"m": [1, 2], "n": [1, 2], "total_size": max_total, "hw_box": [-bound, bound], "window": [EXTREMAL_WINDOW.0, EXTREMAL_WINDOW.1]}),
        &items,
        |(lam, mu, nu, rho, sigma, tau)| {
            let got = extremal_lr(lam, mu, nu, rho, sigma, tau, EXTREMAL_WINDOW.0, EXTREMAL_WINDOW.1);
            let want = oracle.predict(lam, mu, nu, rho, sigma, tau);
            ensure(got == want, || {
                let diff = got.first_difference(&want).map(|(k, a, b)| json!({"class": k.to_string(), "formula": a, "characters": b}));
                json!({"lambda": lam, "mu": mu, "nu": nu, "rho": rho, "sigma": sigma, "tau": tau, "difference": diff})
            })?;
            Ok(want.len().max(1) as u64)
        },
    )
}
