use std::collections::BTreeMap;
use std::sync::Mutex;

use characters::kostka_foulkes_via_hl;
use grothendieck_ring::{z_schur, RElem};
use hall_littlewood::{bar_commutes, bt_commutator_check, bt_word_action, TRElem};
use serde_json::json;
use shapes::{kostka_foulkes, GenPartition, Partition, TPoly};

use super::{ensure, grid, CheckResult, SuiteConfig};

type KfTable = BTreeMap<(Partition, Partition), TPoly>;

/// `b_{mu_1} ... b_{mu_n} . 1 = sum K_{lambda mu}(t) z_lambda` with `K` from charge and from
/// Hall-Littlewood polynomials, plus the `t = 0` and `t = 1` specializations.
pub fn kostka_foulkes_action(cfg: &SuiteConfig) -> CheckResult {
    let max = if cfg.quick { 4 } else { 6 };
    let mus: Vec<Partition> = (1..=max).flat_map(Partition::all_of_size).filter(|p| p.len() <= 3).collect();
    let tables: Mutex<BTreeMap<(usize, usize), KfTable>> = Mutex::new(BTreeMap::new());
    grid("hall-littlewood", json!({"mu_size": [1, max], "max_len": 3, "T": "n(mu)"}), &mus, |mu| {
        let n = mu.len();
        let t = mu.n_stat() as u32;
        let word: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
        let mu_g = mu.to_gen(n).unwrap();
        let action = bt_word_action(&word, t);
        let got = action.expand(n).map_err(|e| json!({"mu": mu, "error": e.to_string()}))?;
        let lo = mu_g.last().unwrap() - t as i64 - 2;
        let hi = mu_g.first().unwrap() + t as i64 + 2;
        let mut lambdas = GenPartition::all_with_size(n, mu_g.size(), lo, hi);
        lambdas.extend(got.keys().cloned());
        lambdas.sort();
        lambdas.dedup();
        let mut count = 0;
        for lambda in &lambdas {
            let c = got.get(lambda).cloned().unwrap_or_else(TPoly::zero);
            let charge = kostka_foulkes(lambda, &mu_g).unwrap().truncate(t);
            let q = (-lambda.last().unwrap()).max(0);
            let size = (mu_g.size() + n as i64 * q) as usize;
            let key = (lambda.shift(q).to_partition().unwrap(), mu_g.shift(q).to_partition().unwrap());
            let via_p = {
                let mut tables = tables.lock().unwrap();
                let table = tables.entry((size, n)).or_insert_with(|| kostka_foulkes_via_hl(size, n).unwrap());
                table.get(&key).cloned().unwrap_or_else(TPoly::zero).truncate(t)
            };
            ensure(c == charge && c == via_p, || {
                json!({"mu": mu, "lambda": lambda, "T": t, "action": c, "charge": charge, "p_expansion": via_p})
            })?;
            count += 1;
        }
        let rodrigues = bt_word_action(&word, 0);
        ensure(rodrigues.coeff(0) == &z_schur(&mu_g), || json!({"mu": mu, "check": "t = 0"}))?;
        let diff = action.eval(1).sub(&RElem::monomial(&word, 1));
        let stray = diff.terms().keys().find(|k| k.parts().iter().all(|&x| x >= 0));
        ensure(stray.is_none(), || json!({"mu": mu, "check": "t = 1", "stray": stray}))?;
        Ok(count + 2)
    })
}

/// The defining relation of the `b^t` operators and the commutation with their
/// `omega`-conjugates on basis elements of degree at most 2, modulo `t^3`.
pub fn relations(cfg: &SuiteConfig) -> CheckResult {
    let t = 2;
    let b = if cfg.quick { 1 } else { 2 };
    let mut samples = vec![(GenPartition::default(), TRElem::one(t))];
    for n in 1..=2 {
        for l in GenPartition::all_in_box(n, -b, b) {
            samples.push((l.clone(), TRElem::from_r(&z_schur(&l), t)));
        }
    }
    grid("bt-relations", json!({"m": [-b, b], "n": [-b, b], "degree": [0, 2], "entries": [-b, b], "T": t}), &samples, |(l, f)| {
        let mut count = 0;
        for m in -b..=b {
            for n in -b..=b {
                ensure(bt_commutator_check(m, n, f), || json!({"relation": "defining", "m": m, "n": n, "z": l}))?;
                ensure(bar_commutes(m, n, f), || json!({"relation": "bar", "m": m, "n": n, "z": l}))?;
                count += 2;
            }
        }
        Ok(count)
    })
}
