use shapes::{GenPartition, Partition};

use crate::error::CharError;
use crate::poly::{LaurentPoly, Poly};
use crate::schur::{block_schur, signed_permutations};

fn degree_in(e: &[i64], lo: usize, hi: usize) -> i64 {
    e[lo..hi].iter().sum()
}

/// `prod_{i<m, j} (1 - x_i^{xsign} y_j)^{-1}` with `y` at `[ylo, yhi)`, truncated to `y`-degree `<= d`.
fn cauchy_series(nvars: usize, m: usize, ylo: usize, yhi: usize, xsign: i64, d: i64) -> LaurentPoly {
    let mut out = Poly::one(nvars);
    for i in 0..m {
        for j in ylo..yhi {
            let mut g = Poly::zero(nvars);
            for k in 0..=d {
                let mut e = vec![0; nvars];
                e[i] = xsign * k;
                e[j] = k;
                g.add_term(e, &1);
            }
            out = out.mul(&g).filter(|e| degree_in(e, ylo, yhi) <= d);
        }
    }
    out
}

fn padded_conjugate(p: &Partition, n: usize) -> GenPartition {
    p.conjugate().to_gen(n).expect("conjugate fits")
}

/// Multiplicity of `B_{sigma,tau} x B(Lambda_rho)` in `B(Lambda_lambda) x B_{mu,nu}`, read off
/// as the coefficient of `s_lambda(x) s_{mu'}(y) s_{nu'}(w)` in
/// `s_rho(x) s_{sigma'}(y) s_{tau'}(w) / prod (1 - x_i^{-1} y_j) prod (1 - x_i w_j)`.
pub fn commuting_coefficient(
    lambda: &GenPartition,
    mu: &Partition,
    nu: &Partition,
    rho: &GenPartition,
    sigma: &Partition,
    tau: &Partition,
) -> Result<i64, CharError> {
    let m = lambda.len();
    if m == 0 {
        return Err(CharError::EmptyAlphabet);
    }
    if rho.len() != m {
        return Err(CharError::LengthMismatch { expected: m, got: rho.len() });
    }
    let d1 = mu.size() as i64 - sigma.size() as i64;
    let d2 = nu.size() as i64 - tau.size() as i64;
    if d1 < 0 || d2 < 0 || lambda.size() + d1 - d2 != rho.size() {
        return Ok(0);
    }
    let ny = mu.get(0).max(sigma.get(0)).max(1);
    let nw = nu.get(0).max(tau.get(0)).max(1);
    let (y0, w0, total) = (m, m + ny, m + ny + nw);
    let base = block_schur(&[rho.clone(), padded_conjugate(sigma, ny), padded_conjugate(tau, nw)]);
    let ydeg = mu.size() as i64;
    let wdeg = nu.size() as i64;
    let c1 = cauchy_series(total, m, y0, w0, -1, d1);
    let c2 = cauchy_series(total, m, w0, total, 1, d2);
    let g = base
        .mul(&c1)
        .filter(|e| degree_in(e, y0, w0) == ydeg)
        .mul(&c2)
        .filter(|e| degree_in(e, w0, total) == wdeg);

    let mut target: Vec<i64> = Vec::with_capacity(total);
    for (block, n) in [
        (lambda.clone(), m),
        (padded_conjugate(mu, ny), ny),
        (padded_conjugate(nu, nw), nw),
    ] {
        target.extend(block.parts().iter().enumerate().map(|(i, &x)| x + (n - 1 - i) as i64));
    }
    let (px, py, pw) = (signed_permutations(m), signed_permutations(ny), signed_permutations(nw));
    let mut acc = 0i64;
    let mut e = target.clone();
    for (a, sa) in &px {
        for (b, sb) in &py {
            for (c, sc) in &pw {
                for (off, n, w) in [(0, m, a), (y0, ny, b), (w0, nw, c)] {
                    for i in 0..n {
                        e[off + i] = target[off + i] - (n - 1 - w[i]) as i64;
                    }
                }
                let coef = g.coeff(&e);
                if coef != 0 {
                    acc += sa * sb * sc * coef;
                }
            }
        }
    }
    Ok(acc)
}
