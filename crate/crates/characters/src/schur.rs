use std::collections::{BTreeMap, HashMap};

use shapes::{GenPartition, Partition};

use crate::error::CharError;
use crate::poly::{Coeff, LaurentPoly, Poly};

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
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

/// `a_e = sum_w sgn(w) x^{w(e)}`.
pub fn alternant(exps: &[i64]) -> LaurentPoly {
    let n = exps.len();
    let mut p = Poly::zero(n);
    for (w, s) in signed_permutations(n) {
        let mut e = vec![0; n];
        for i in 0..n {
            e[w[i]] = exps[i];
        }
        p.add_term(e, &s);
    }
    p
}

fn delta(n: usize) -> Vec<i64> {
    (0..n).rev().map(|k| k as i64).collect()
}

/// Divide by the Vandermonde `prod_{i<j} (x_i - x_j)` on variables `vars`.
pub fn div_vandermonde<C: Coeff>(f: &Poly<C>, vars: &[usize]) -> Result<Poly<C>, CharError> {
    let mut q = f.clone();
    for a in 0..vars.len() {
        for b in a + 1..vars.len() {
            q = q.div_by_difference(vars[a], vars[b]).ok_or(CharError::NotDivisible)?;
        }
    }
    Ok(q)
}

/// Laurent Schur polynomial `s_lambda(x_1, ..., x_n)` as the bialternant `a_{lambda+delta} / a_delta`.
pub fn laurent_schur(lambda: &GenPartition) -> LaurentPoly {
    let n = lambda.len();
    let e: Vec<i64> = lambda.parts().iter().zip(delta(n)).map(|(l, d)| l + d).collect();
    let vars: Vec<usize> = (0..n).collect();
    div_vandermonde(&alternant(&e), &vars).expect("alternants are divisible by the Vandermonde")
}

/// Product of Laurent Schur polynomials in consecutive blocks of variables.
pub fn block_schur(parts: &[GenPartition]) -> LaurentPoly {
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let mut out = Poly::one(total);
    let mut offset = 0;
    for p in parts {
        out = out.mul(&laurent_schur(p).embed(total, offset));
        offset += p.len();
    }
    out
}

fn split_blocks(e: &[i64], blocks: &[usize]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut k = 0;
    for &b in blocks {
        out.push(e[k..k + b].to_vec());
        k += b;
    }
    out
}

/// Expand a polynomial that is symmetric within each block of variables into
/// products of block Laurent Schur polynomials, by triangular elimination on
/// the lexicographically leading monomial.
pub fn expand_in_schur<C: Coeff>(
    f: &Poly<C>,
    blocks: &[usize],
) -> Result<BTreeMap<Vec<GenPartition>, C>, CharError> {
    let total: usize = blocks.iter().sum();
    if total != f.nvars() {
        return Err(CharError::LengthMismatch { expected: total, got: f.nvars() });
    }
    let mut cache: HashMap<Vec<GenPartition>, Poly<C>> = HashMap::new();
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rem.lex_leading() {
        let (e, c) = (e.clone(), c.clone());
        let key = split_blocks(&e, blocks)
            .into_iter()
            .map(GenPartition::new)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CharError::NotSymmetric(e.clone()))?;
        let s = cache
            .entry(key.clone())
            .or_insert_with(|| block_schur(&key).map_coeffs(|&x| C::from_int(x)));
        let next = rem.sub(&s.scale(&c));
        if next.lex_leading().is_some_and(|(e2, _)| *e2 >= e) {
            return Err(CharError::NotSymmetric(e));
        }
        rem = next;
        out.insert(key, c);
    }
    Ok(out)
}

/// Coefficients of `s_lambda(x_1..x_{m+n}) = sum c s_mu(x_1..x_m) s_nu(x_{m+1}..x_{m+n})`.
pub fn branch_split(
    lambda: &GenPartition,
    m: usize,
    n: usize,
) -> Result<BTreeMap<(GenPartition, GenPartition), i64>, CharError> {
    if m == 0 || n == 0 {
        return Err(CharError::EmptyAlphabet);
    }
    if lambda.len() != m + n {
        return Err(CharError::LengthMismatch { expected: m + n, got: lambda.len() });
    }
    Ok(expand_in_schur(&laurent_schur(lambda), &[m, n])?
        .into_iter()
        .map(|(mut k, c)| {
            let nu = k.pop().unwrap();
            let mu = k.pop().unwrap();
            ((mu, nu), c)
        })
        .collect())
}

/// Schur expansion of `s_mu s_nu` in `nvars` variables.
pub fn schur_product(mu: &Partition, nu: &Partition, nvars: usize) -> Result<BTreeMap<Partition, i64>, CharError> {
    let need = mu.len().max(nu.len());
    if need > nvars {
        return Err(CharError::TooLong { len: need, nvars });
    }
    let a = laurent_schur(&mu.to_gen(nvars).unwrap());
    let b = laurent_schur(&nu.to_gen(nvars).unwrap());
    Ok(expand_in_schur(&a.mul(&b), &[nvars])?
        .into_iter()
        .map(|(mut k, c)| (k.pop().unwrap().to_partition().unwrap(), c))
        .collect())
}

/// Monomial symmetric polynomial `m_mu(x_1..x_n)`.
pub fn monomial_symmetric(mu: &Partition, nvars: usize) -> Result<LaurentPoly, CharError> {
    if mu.len() > nvars {
        return Err(CharError::TooLong { len: mu.len(), nvars });
    }
    let e: Vec<i64> = mu.to_gen(nvars).unwrap().parts().to_vec();
    let mut p = Poly::zero(nvars);
    let mut seen = std::collections::BTreeSet::new();
    for (w, _) in signed_permutations(nvars) {
        let f: Vec<i64> = w.iter().map(|&i| e[i]).collect();
        if seen.insert(f.clone()) {
            p.add_term(f, &1);
        }
    }
    Ok(p)
}
