use std::collections::BTreeMap;

use shapes::{Partition, TPoly};

use crate::error::CharError;
use crate::poly::{Poly, TLaurentPoly};
use crate::schur::{div_vandermonde, expand_in_schur, signed_permutations};

/// `[j]_t = 1 + t + ... + t^{j-1}`.
fn t_integer(j: usize) -> TPoly {
    TPoly::from_terms((0..j as u32).map(|e| (e, 1)))
}

/// `v_mu(t) = prod_i prod_{j=1}^{m_i} [j]_t`, with `m_0 = nvars - l(mu)`.
fn v_mu(mu: &Partition, nvars: usize) -> TPoly {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_default() += 1;
    }
    *mult.entry(0).or_default() += nvars - mu.len();
    let mut v = TPoly::one();
    for &m in mult.values() {
        for j in 1..=m {
            v = &v * &t_integer(j);
        }
    }
    v
}

/// Hall-Littlewood `P_mu(x_1..x_n; t)` by symmetrizing `x^mu prod_{i<j} (x_i - t x_j)`.
pub fn hall_littlewood_p(mu: &Partition, nvars: usize) -> Result<TLaurentPoly, CharError> {
    if mu.len() > nvars {
        return Err(CharError::TooLong { len: mu.len(), nvars });
    }
    let e: Vec<i64> = mu.to_gen(nvars).unwrap().parts().to_vec();
    let mut f = Poly::monomial(e, TPoly::one());
    for i in 0..nvars {
        for j in i + 1..nvars {
            let xi = Poly::var(nvars, i);
            let xj = Poly::var(nvars, j).scale(&TPoly::monomial(1, 1));
            f = f.mul(&xi.sub(&xj));
        }
    }
    let mut anti = Poly::zero(nvars);
    for (w, s) in signed_permutations(nvars) {
        anti = anti.add(&f.permute(&w).scale(&TPoly::constant(s)));
    }
    let vars: Vec<usize> = (0..nvars).collect();
    let r = div_vandermonde(&anti, &vars)?;
    let v = v_mu(mu, nvars);
    let mut out = Poly::zero(nvars);
    for (e, c) in r.terms() {
        out.add_term(e.clone(), &c.div_exact(&v).ok_or(CharError::NotDivisible)?);
    }
    Ok(out)
}

/// Schur expansion `P_mu = sum_lambda w_{mu lambda}(t) s_lambda` in `nvars` variables.
pub fn hl_p_schur_expansion(mu: &Partition, nvars: usize) -> Result<BTreeMap<Partition, TPoly>, CharError> {
    let p = hall_littlewood_p(mu, nvars)?;
    Ok(expand_in_schur(&p, &[nvars])?
        .into_iter()
        .map(|(mut k, c)| (k.pop().unwrap().to_partition().unwrap(), c))
        .collect())
}

/// Kostka-Foulkes polynomials `K_{lambda mu}(t)` for `|lambda| = |mu| = size`, lengths at most
/// `nvars`, defined by `s_lambda = sum_mu K_{lambda mu}(t) P_mu` and obtained by inverting the
/// unitriangular `P`-to-Schur transition matrix.
pub fn kostka_foulkes_via_hl(size: usize, nvars: usize) -> Result<BTreeMap<(Partition, Partition), TPoly>, CharError> {
    let mut parts: Vec<Partition> = Partition::all_of_size(size).into_iter().filter(|p| p.len() <= nvars).collect();
    parts.sort();
    let mut w: BTreeMap<Partition, BTreeMap<Partition, TPoly>> = BTreeMap::new();
    for mu in &parts {
        w.insert(mu.clone(), hl_p_schur_expansion(mu, nvars)?);
    }
    let mut k: BTreeMap<Partition, BTreeMap<Partition, TPoly>> = BTreeMap::new();
    for lam in &parts {
        let mut row: BTreeMap<Partition, TPoly> = BTreeMap::new();
        row.insert(lam.clone(), TPoly::one());
        for (nu, c) in &w[lam] {
            if nu == lam {
                if *c != TPoly::one() {
                    return Err(CharError::NotDivisible);
                }
                continue;
            }
            for (kappa, d) in &k[nu] {
                let e = row.entry(kappa.clone()).or_insert_with(TPoly::zero);
                *e = &*e - &(c * d);
            }
        }
        row.retain(|_, c| !c.is_zero());
        k.insert(lam.clone(), row);
    }
    Ok(k.into_iter()
        .flat_map(|(lam, row)| row.into_iter().map(move |(mu, c)| ((lam.clone(), mu), c)))
        .collect())
}
