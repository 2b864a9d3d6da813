use std::collections::BTreeMap;

use crate::error::ShapeError;
use crate::gen::GenPartition;
use crate::partition::Partition;
use crate::skew::SkewShape;

/// Number of LR tableaux of shape `lambda/mu` and content `nu`: semistandard
/// fillings whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
    // Rows top to bottom, each right to left: the reverse reading order.
    let mut cells = Vec::with_capacity(shape.size());
    for r in 0..lambda.len() {
        for c in (mu.get(r)..lambda.get(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..lambda.len()).map(|r| vec![0; lambda.get(r)]).collect();
    let mut count = vec![0usize; nu.len() + 1];
    let mut total = 0u64;
    fill(0, &cells, lambda, mu, nu, &mut grid, &mut count, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill(
    k: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut [Vec<usize>],
    count: &mut [usize],
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[k];
    let mut hi = nu.len().min(r + 1);
    if c + 1 < lambda.get(r) {
        hi = hi.min(grid[r][c + 1]);
    }
    let lo = if r > 0 && c >= mu.get(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    for v in lo..=hi {
        if count[v] >= nu.get(v - 1) {
            continue;
        }
        if v > 1 && count[v] + 1 > count[v - 1] {
            continue;
        }
        count[v] += 1;
        grid[r][c] = v;
        fill(k + 1, cells, lambda, mu, nu, grid, count, total);
        count[v] -= 1;
    }
    grid[r][c] = 0;
}

/// `s_mu s_nu = sum c^lambda_{mu nu} s_lambda`, keeping `lambda` with at most `max_len` parts.
pub fn lr_product(mu: &Partition, nu: &Partition, max_len: Option<usize>) -> BTreeMap<Partition, u64> {
    let n = mu.size() + nu.size();
    let cap = max_len.unwrap_or(usize::MAX).min(mu.len() + nu.len());
    let mut out = BTreeMap::new();
    for lambda in Partition::all_of_size(n) {
        if lambda.len() > cap || !lambda.contains(mu) || !lambda.contains(nu) {
            continue;
        }
        let c = lr_coefficient(&lambda, mu, nu);
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    out
}

/// Branching coefficient of `GL_{m+n}` restricted to `GL_m x GL_n`, via a common shift.
pub fn gen_lr_coefficient(
    lambda: &GenPartition,
    mu: &GenPartition,
    nu: &GenPartition,
) -> Result<u64, ShapeError> {
    if lambda.len() != mu.len() + nu.len() {
        return Err(ShapeError::LengthMismatch {
            expected: mu.len() + nu.len(),
            got: lambda.len(),
        });
    }
    if lambda.size() != mu.size() + nu.size() {
        return Ok(0);
    }
    let low = [lambda.last(), mu.last(), nu.last()]
        .into_iter()
        .flatten()
        .min()
        .unwrap_or(0);
    let p = (-low).max(0);
    let l = lambda.shift(p).to_partition().unwrap();
    let a = mu.shift(p).to_partition().unwrap();
    let b = nu.shift(p).to_partition().unwrap();
    Ok(lr_coefficient(&l, &a, &b))
}

/// Tensor product multiplicity for `GL_m`: all three have length `m`.
pub fn gl_lr_coefficient(
    lambda: &GenPartition,
    mu: &GenPartition,
    nu: &GenPartition,
) -> Result<u64, ShapeError> {
    let m = lambda.len();
    for g in [mu, nu] {
        if g.len() != m {
            return Err(ShapeError::LengthMismatch { expected: m, got: g.len() });
        }
    }
    if m == 0 {
        return Ok(1);
    }
    if lambda.size() != mu.size() + nu.size() {
        return Ok(0);
    }
    let a = (-mu.last().unwrap()).max(0);
    let b = (-nu.last().unwrap()).max(0);
    let l = match lambda.shift(a + b).to_partition() {
        Some(l) => l,
        None => return Ok(0),
    };
    Ok(lr_coefficient(
        &l,
        &mu.shift(a).to_partition().unwrap(),
        &nu.shift(b).to_partition().unwrap(),
    ))
}

/// `s_lambda s_alpha` in `GL_m`, with `lambda` of length `m` and `l(alpha) <= m`.
pub fn gl_product(lambda: &GenPartition, alpha: &Partition) -> BTreeMap<GenPartition, u64> {
    let m = lambda.len();
    let mut out = BTreeMap::new();
    if alpha.len() > m {
        return out;
    }
    if m == 0 {
        out.insert(lambda.clone(), 1);
        return out;
    }
    let p = (-lambda.last().unwrap()).max(0);
    let l = lambda.shift(p).to_partition().unwrap();
    for (eta, c) in lr_product(&l, alpha, Some(m)) {
        out.insert(eta.to_gen(m).unwrap().shift(-p), c);
    }
    out
}
