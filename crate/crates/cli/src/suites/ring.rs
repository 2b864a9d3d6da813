use grothendieck_ring::{
    annihilator_relations, d_multiply, h_operator, s_operator, z_schur, z_skew_schur, DElem, RElem, Sign,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use shapes::{gl_lr_coefficient, GenPartition, Partition};

use super::{ensure, grid, CheckResult, SuiteConfig};

fn boxes(max_n: usize, lo: i64, hi: i64) -> Vec<GenPartition> {
    (1..=max_n).flat_map(|n| GenPartition::all_in_box(n, lo, hi)).collect()
}

/// `s^+_{mu'} z_lambda = z_{lambda/mu*}` and `s^-_{mu'} z_lambda = z_{lambda/mu}`, power sums
/// against determinants.
pub fn s_operator_identity(cfg: &SuiteConfig) -> CheckResult {
    let (b, max_mu) = if cfg.quick { (2, 3) } else { (3, 4) };
    let lams = boxes(3, -b, b);
    let mus: Vec<Partition> = (1..=max_mu).flat_map(Partition::all_of_size).collect();
    grid("s-operator-identity", json!({"n": [1, 3], "entries": [-b, b], "mu_size": [1, max_mu]}), &lams, |lam| {
        let n = lam.len();
        let zl = z_schur(lam);
        for mu in &mus {
            let conj = mu.conjugate();
            let plus = s_operator(Sign::Plus, &conj, &zl);
            let minus = s_operator(Sign::Minus, &conj, &zl);
            let ok = if mu.len() <= n {
                let m = mu.to_gen(n).unwrap();
                plus == z_skew_schur(lam, &m.star()).unwrap() && minus == z_skew_schur(lam, &m).unwrap()
            } else {
                plus.is_zero() && minus.is_zero()
            };
            ensure(ok, || json!({"lambda": lam, "mu": mu}))?;
        }
        Ok(2 * mus.len() as u64)
    })
}

/// `z_{lambda/mu} = sum c^lambda_{mu nu} z_nu`.
pub fn skew_expansion(cfg: &SuiteConfig) -> CheckResult {
    let b = if cfg.quick { 2 } else { 3 };
    let mut pairs = Vec::new();
    for n in 1..=3 {
        for lam in GenPartition::all_in_box(n, -b, b) {
            for mu in GenPartition::all_in_box(n, -b, b) {
                pairs.push((lam.clone(), mu));
            }
        }
    }
    grid("skew-expansion", json!({"n": [1, 3], "entries": [-b, b]}), &pairs, |(lam, mu)| {
        let lhs = z_skew_schur(lam, mu).unwrap();
        let (lo, hi) = (lam.last().unwrap() - mu.first().unwrap(), lam.first().unwrap() - mu.last().unwrap());
        let mut rhs = RElem::zero();
        for nu in GenPartition::all_with_size(lam.len(), lam.size() - mu.size(), lo, hi) {
            let c = gl_lr_coefficient(lam, mu, &nu).unwrap() as i64;
            if c != 0 {
                rhs = rhs.add(&z_schur(&nu).scale(c));
            }
        }
        ensure(lhs == rhs, || json!({"lambda": lam, "mu": mu}))?;
        Ok(1)
    })
}

fn random_monomial(rng: &mut ChaCha8Rng) -> DElem {
    let mut d = DElem::one();
    for _ in 0..rng.gen_range(0..=3) {
        let f = match rng.gen_range(0..3) {
            0 => DElem::z(rng.gen_range(-4..=4)),
            1 => DElem::s(Sign::Plus, rng.gen_range(1..=3)),
            _ => DElem::s(Sign::Minus, rng.gen_range(1..=3)),
        };
        d = d_multiply(&d, &f);
    }
    d
}

/// Normal-ordering commutators and associativity of the Ore product.
pub fn ore(cfg: &SuiteConfig) -> CheckResult {
    let triples = if cfg.quick { 200 } else { 1000 };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut items: Vec<Option<(DElem, DElem, DElem)>> = Vec::new();
    for _ in 0..triples {
        items.push(Some((random_monomial(&mut rng), random_monomial(&mut rng), random_monomial(&mut rng))));
    }
    items.push(None);
    grid("ore", json!({"n": [1, 5], "k": [-5, 5], "triples": triples, "seed": cfg.seed}), &items, |item| match item {
        Some((a, b, c)) => {
            let ok = d_multiply(&d_multiply(a, b), c) == d_multiply(a, &d_multiply(b, c));
            ensure(ok, || json!({"a": a, "b": b, "c": c}))?;
            Ok(1)
        }
        None => {
            let mut count = 0;
            for n in 1..=5usize {
                let sign = if n % 2 == 1 { 1 } else { -1 };
                for k in -5..=5i64 {
                    for (s, shifted) in [(Sign::Plus, k - n as i64), (Sign::Minus, k + n as i64)] {
                        let op = DElem::s(s, n);
                        let zk = DElem::z(k);
                        let comm = d_multiply(&op, &zk).sub(&d_multiply(&zk, &op));
                        ensure(comm == DElem::z(shifted).scale(sign), || json!({"sign": s.to_string(), "n": n, "k": k}))?;
                        count += 1;
                    }
                }
            }
            Ok(count)
        }
    })
}

/// `h^+-_n z_lambda = z_{lambda +- 1^n}` and `h^+_n h^-_i = h^+_{n-i}`.
pub fn h_calculus(cfg: &SuiteConfig) -> CheckResult {
    let max_n = if cfg.quick { 3 } else { 4 };
    let lams = boxes(max_n, -2, 2);
    grid("h-calculus", json!({"n": [1, max_n], "entries": [-2, 2]}), &lams, |lam| {
        let n = lam.len();
        let zl = z_schur(lam);
        ensure(h_operator(Sign::Plus, n, &zl) == z_schur(&lam.shift(1)), || json!({"lambda": lam, "op": "h+n"}))?;
        ensure(h_operator(Sign::Minus, n, &zl) == z_schur(&lam.shift(-1)), || json!({"lambda": lam, "op": "h-n"}))?;
        for i in 0..=n {
            let lhs = h_operator(Sign::Plus, n, &h_operator(Sign::Minus, i, &zl));
            ensure(lhs == h_operator(Sign::Plus, n - i, &zl), || json!({"lambda": lam, "i": i}))?;
        }
        Ok(n as u64 + 3)
    })
}

/// Every emitted relation annihilates every `z_lambda`.
pub fn annihilator(cfg: &SuiteConfig) -> CheckResult {
    let b = if cfg.quick { 1 } else { 2 };
    let lams = boxes(3, -b, b);
    grid("annihilator", json!({"n": [1, 3], "k_max": "n+3", "entries": [-b, b]}), &lams, |lam| {
        let n = lam.len();
        let zl = z_schur(lam);
        let rels = annihilator_relations(n, n + 3);
        for r in &rels {
            ensure(r.ops.apply(&zl).is_zero() && r.delem.apply(&zl).is_zero(), || {
                json!({"lambda": lam, "relation": r.ops.to_string()})
            })?;
        }
        Ok(rels.len() as u64)
    })
}
