use grothendieck_ring::{RElem, Sign};
use shapes::GenPartition;

fn step(sign: Sign) -> i64 {
    match sign {
        Sign::Minus => -1,
        Sign::Plus => 1,
    }
}

/// `s_{(1^j)}` with the given sign: the generating series is multiplicative, so each
/// factor `z_a` of a monomial moves by `j_i` with `sum j_i = j`.
pub fn column_op(sign: Sign, j: usize, f: &RElem) -> RElem {
    let s = step(sign);
    let mut out = RElem::zero();
    for (key, &c) in f.terms() {
        let parts = key.parts();
        let mut cur = vec![0i64; parts.len()];
        distribute(parts, j, 0, &mut cur, &mut |v| {
            let idx: Vec<i64> = parts.iter().zip(v).map(|(a, x)| a + s * x).collect();
            out.add_term(monomial_key(idx), c);
        });
    }
    out
}

/// `s_{(r)}` with the given sign: `r` distinct factors each move by one step.
pub fn row_op(sign: Sign, r: usize, f: &RElem) -> RElem {
    let s = step(sign);
    let mut out = RElem::zero();
    for (key, &c) in f.terms() {
        let parts = key.parts();
        let mut cur = vec![0i64; parts.len()];
        choose(parts.len(), r, 0, &mut cur, &mut |v| {
            let idx: Vec<i64> = parts.iter().zip(v).map(|(a, x)| a + s * x).collect();
            out.add_term(monomial_key(idx), c);
        });
    }
    out
}

fn monomial_key(mut idx: Vec<i64>) -> GenPartition {
    idx.sort_unstable_by(|a, b| b.cmp(a));
    GenPartition::new(idx).unwrap()
}

fn distribute(parts: &[i64], rem: usize, i: usize, cur: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if i + 1 >= parts.len() {
        if parts.is_empty() {
            if rem == 0 {
                emit(cur);
            }
            return;
        }
        cur[i] = rem as i64;
        emit(cur);
        return;
    }
    for x in 0..=rem {
        cur[i] = x as i64;
        distribute(parts, rem - x, i + 1, cur, emit);
    }
}

fn choose(n: usize, r: usize, i: usize, cur: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if r == 0 {
        emit(cur);
        return;
    }
    if n - i < r {
        return;
    }
    cur[i] = 1;
    choose(n, r - 1, i + 1, cur, emit);
    cur[i] = 0;
    choose(n, r, i + 1, cur, emit);
}
