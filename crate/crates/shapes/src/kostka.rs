use crate::error::ShapeError;
use crate::gen::GenPartition;
use crate::partition::Partition;
use crate::tpoly::TPoly;

/// Semistandard tableaux of shape `lambda` with `content[k]` entries equal to `k+1`,
/// as rows of entries.
pub fn ssyt_with_content(lambda: &Partition, content: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if lambda.size() != content.iter().sum::<usize>() {
        return out;
    }
    let rows: Vec<Vec<usize>> = (0..lambda.len()).map(|_| Vec::new()).collect();
    let shape = vec![0usize; lambda.len()];
    grow(0, lambda, content, shape, rows, &mut out);
    out
}

fn grow(
    k: usize,
    lambda: &Partition,
    content: &[usize],
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if k == content.len() {
        if shape.iter().enumerate().all(|(i, &s)| s == lambda.get(i)) {
            out.push(rows);
        }
        return;
    }
    // Add a horizontal strip of `content[k]` cells labelled `k+1`.
    let n = shape.len();
    let mut add = vec![0usize; n];
    strip(0, content[k], &shape, lambda, &mut add, &mut |add| {
        let mut s = shape.clone();
        let mut r = rows.clone();
        for i in 0..n {
            for _ in 0..add[i] {
                r[i].push(k + 1);
            }
            s[i] += add[i];
        }
        grow(k + 1, lambda, content, s, r, out);
    });
}

fn strip(
    i: usize,
    rem: usize,
    shape: &[usize],
    lambda: &Partition,
    add: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if i == shape.len() {
        if rem == 0 {
            f(add);
        }
        return;
    }
    let cap_above = if i == 0 { usize::MAX } else { shape[i - 1] };
    let max = (lambda.get(i) - shape[i]).min(cap_above.saturating_sub(shape[i])).min(rem);
    for a in 0..=max {
        add[i] = a;
        strip(i + 1, rem - a, shape, lambda, add, f);
    }
    add[i] = 0;
}

pub fn kostka_number(lambda: &Partition, content: &[usize]) -> usize {
    ssyt_with_content(lambda, content).len()
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> u32 {
    let mut used = vec![false; word.len()];
    let mut left = word.len();
    let mut total = 0u32;
    while left > 0 {
        let max_letter = word
            .iter()
            .zip(&used)
            .filter(|(_, &u)| !u)
            .map(|(&w, _)| w)
            .max()
            .unwrap();
        let n = word.len();
        let mut pos = n;
        let mut index = 0u32;
        for letter in 1..=max_letter {
            // Scan leftwards cyclically from `pos` for `letter`.
            let mut found = None;
            let mut wrapped = false;
            let mut p = pos;
            for _ in 0..n {
                if p == 0 {
                    p = n;
                    wrapped = true;
                }
                p -= 1;
                if !used[p] && word[p] == letter {
                    found = Some(p);
                    break;
                }
            }
            let p = match found {
                Some(p) => p,
                None => break,
            };
            if letter > 1 && (wrapped || p > pos) {
                index += 1;
            }
            total += index;
            used[p] = true;
            left -= 1;
            pos = p;
        }
    }
    total
}

fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// `K_{lambda mu}(t)` as the charge generating function over `SSYT(lambda, mu)`,
/// extended to generalized partitions by a common shift.
pub fn kostka_foulkes(lambda: &GenPartition, mu: &GenPartition) -> Result<TPoly, ShapeError> {
    if lambda.len() != mu.len() {
        return Err(ShapeError::LengthMismatch { expected: lambda.len(), got: mu.len() });
    }
    if lambda.size() != mu.size() {
        return Err(ShapeError::DegreeMismatch(lambda.size(), mu.size()));
    }
    let low = lambda.last().into_iter().chain(mu.last()).min().unwrap_or(0);
    let p = (-low).max(0);
    let l = lambda.shift(p).to_partition().unwrap();
    let m: Vec<usize> = mu.shift(p).parts().iter().map(|&x| x as usize).collect();
    let mut out = TPoly::zero();
    for t in ssyt_with_content(&l, &m) {
        out.add_term(charge(&reading_word(&t)), 1);
    }
    Ok(out)
}
