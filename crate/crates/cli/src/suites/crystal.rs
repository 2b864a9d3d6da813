use std::collections::BTreeMap;

use crystal_core::{decompose_components, enumerate_sst, sst_words, Word};
use matrix_bicrystal::{bicrystal_components, BinaryMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use shapes::{lr_product, Partition};

use super::{ensure, grid, CheckResult, SuiteConfig};

fn weight_partition(coeffs: impl Iterator<Item = i64>) -> Option<Partition> {
    let v: Option<Vec<usize>> = coeffs.map(|c| usize::try_from(c).ok()).collect();
    Partition::new(v?).ok()
}

/// Components of `SST(mu) x SST(nu)` on `[1, top]` against the LR rule.
pub fn lr_oracle(cfg: &SuiteConfig) -> CheckResult {
    let (max_total, top, max_len) = if cfg.quick { (5, 5, 3) } else { (7, 6, 4) };
    let shapes: Vec<Partition> = (0..=max_total)
        .flat_map(|n| Partition::all_of_size(n).into_iter().filter(|p| p.len() <= max_len))
        .collect();
    let mut pairs = Vec::new();
    for mu in &shapes {
        for nu in &shapes {
            if mu.size() + nu.size() <= max_total {
                pairs.push((mu.clone(), nu.clone()));
            }
        }
    }
    let colors: Vec<i64> = (1..top).collect();
    grid(
        "lr-oracle",
        json!({"max_total": max_total, "alphabet": [1, top], "max_len": max_len}),
        &pairs,
        |(mu, nu)| {
            let left = sst_words(mu, 1, top, false);
            let right = sst_words(nu, 1, top, false);
            let mut words: Vec<Word> = Vec::with_capacity(left.len() * right.len());
            for a in &left {
                for b in &right {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    words.push(w);
                }
            }
            let comps = decompose_components(&words, &colors).map_err(|e| json!({"mu": mu, "nu": nu, "error": e.to_string()}))?;
            let mut census: BTreeMap<Partition, u64> = BTreeMap::new();
            for c in &comps {
                let lambda = weight_partition((1..=top).map(|i| c.highest_weight.coeff(i)))
                    .ok_or_else(|| json!({"mu": mu, "nu": nu, "bad_weight": c.highest_weight.to_string()}))?;
                *census.entry(lambda).or_insert(0) += 1;
            }
            let want = lr_product(mu, nu, Some(top as usize));
            ensure(census == want, || {
                let diff: Vec<_> = want
                    .keys()
                    .chain(census.keys())
                    .filter(|l| census.get(*l) != want.get(*l))
                    .map(|l| json!({"lambda": l, "components": census.get(l).copied().unwrap_or(0), "lr": want.get(l).copied().unwrap_or(0)}))
                    .collect();
                json!({"mu": mu, "nu": nu, "mismatch": diff})
            })?;
            Ok(want.values().sum::<u64>().max(1))
        },
    )
}

type Op = fn(&BinaryMatrix, i64) -> Option<BinaryMatrix>;

/// Column and row crystal operators commute on random matrices.
pub fn bicrystal_commutation(cfg: &SuiteConfig) -> CheckResult {
    let count = if cfg.quick { 1000 } else { 10_000 };
    let (rows, cols) = (4usize, 7usize);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mats: Vec<BinaryMatrix> = (0..count)
        .map(|_| {
            let data: Vec<Vec<u8>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..2)).collect()).collect();
            BinaryMatrix::from_rows(1, 1, &data).unwrap()
        })
        .collect();
    let small: [(&str, Op); 2] = [("e", BinaryMatrix::matrix_raise), ("f", BinaryMatrix::matrix_lower)];
    let cap: [(&str, Op); 2] = [("E", BinaryMatrix::cap_raise), ("F", BinaryMatrix::cap_lower)];
    grid(
        "bicrystal-commutation",
        json!({"matrices": count, "rows": [1, rows], "cols": [1, cols], "seed": cfg.seed}),
        &mats,
        |a| {
            let mut n = 0;
            for k in 1..cols as i64 {
                for l in 1..rows as i64 {
                    for (xn, x) in &small {
                        for (yn, y) in &cap {
                            let one = y(a, l).and_then(|b| x(&b, k));
                            let two = x(a, k).and_then(|b| y(&b, l));
                            ensure(one == two, || {
                                json!({"matrix": a.to_string(), "k": k, "l": l, "ops": format!("{xn}_{k} {yn}_{l}")})
                            })?;
                            n += 1;
                        }
                    }
                }
            }
            Ok(n)
        },
    )
}

/// Bicrystal components of all binary matrices on `[rows] x [1, cols]`.
pub fn duality_en(cfg: &SuiteConfig) -> CheckResult {
    let (rows, cols) = if cfg.quick { (2i64, 4i64) } else { (3, 5) };
    let all = BinaryMatrix::all((1, rows), (1, cols));
    let col_colors: Vec<i64> = (1..cols).collect();
    let row_colors: Vec<i64> = (1..rows).collect();
    let params = json!({"rows": [1, rows], "cols": [1, cols], "matrices": all.len()});
    let comps = match bicrystal_components(&all, &col_colors, &row_colors) {
        Ok(c) => c,
        Err(e) => {
            return grid("duality-en", params, &[()], |_| Err(json!({"error": e.to_string()})));
        }
    };
    let mut seen: BTreeMap<Partition, usize> = BTreeMap::new();
    let mut items = Vec::new();
    for c in &comps {
        let mu = weight_partition((1..=cols).map(|j| c.col_weight.coeff(j)));
        if let Some(mu) = &mu {
            *seen.entry(mu.clone()).or_insert(0) += 1;
        }
        items.push((mu, c.size, c.highest.to_string()));
    }
    let expected: Vec<Partition> =
        (0..=(rows * cols) as usize).flat_map(|n| Partition::all_in_box(n, cols as usize, rows as usize)).collect();
    let mut r = grid("duality-en", params, &items, |(mu, size, hw)| {
        let mu = mu.as_ref().ok_or_else(|| json!({"highest": hw, "error": "weight is not a partition"}))?;
        let want = enumerate_sst(mu, 1, cols, false).len() * enumerate_sst(&mu.conjugate(), 1, rows, false).len();
        ensure(*size == want && mu.get(0) <= rows as usize, || json!({"mu": mu, "size": size, "expected": want}))?;
        Ok(1)
    });
    let bijective = seen.len() == expected.len() && seen.values().all(|&c| c == 1) && expected.iter().all(|m| seen.contains_key(m));
    if !bijective {
        r.passed = false;
        r.failures += 1;
        let missing: Vec<&Partition> = expected.iter().filter(|m| !seen.contains_key(*m)).collect();
        let repeated: Vec<&Partition> = seen.iter().filter(|(_, &c)| c != 1).map(|(m, _)| m).collect();
        r.counterexample.get_or_insert(json!({"missing": missing, "repeated": repeated}));
    }
    r
}
