use std::collections::{HashSet, VecDeque};

use crystal_core::{dual_word, sst_words, tensor_lower, tensor_raise, Letter, Word};
use serde::Serialize;
use shapes::{GenPartition, Partition};

use crate::class::{Decomposition, ExtremalClass};
use crate::error::LrError;
use crate::expr::{Expr, Factor};

/// How a word segment extends when the window grows to the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sea {
    None,
    Column,
    DualColumn,
}

#[derive(Debug, Clone)]
struct Piece {
    word: Word,
    segments: Vec<(usize, Sea)>,
    eps: Vec<u32>,
    phi: Vec<u32>,
}

/// Signature lengths of a word for the colors `lo..hi`.
fn signature(word: &[Letter], lo: i64, hi: i64) -> (Vec<u32>, Vec<u32>) {
    let mut eps = Vec::new();
    let mut phi = Vec::new();
    for i in lo..hi {
        let (mut e, mut p) = (0u32, 0u32);
        for l in word {
            if l.eps(i) == 1 {
                if p > 0 {
                    p -= 1;
                } else {
                    e += 1;
                }
            }
            if l.phi(i) == 1 {
                p += 1;
            }
        }
        eps.push(e);
        phi.push(p);
    }
    (eps, phi)
}

fn piece(word: Word, segments: Vec<(usize, Sea)>, lo: i64, hi: i64) -> Piece {
    let (eps, phi) = signature(&word, lo, hi);
    Piece { word, segments, eps, phi }
}

fn too_small(lo: i64, hi: i64, reason: String) -> LrError {
    LrError::WindowTooSmall { lo, hi, reason }
}

/// Column words `[lo..lambda_i]` for `lambda_n, ..., lambda_1`.
fn frozen_highest(lambda: &GenPartition, lo: i64, hi: i64) -> Result<(Word, Vec<usize>), LrError> {
    let mut word = Vec::new();
    let mut lens = Vec::new();
    for &l in lambda.parts().iter().rev() {
        if l < lo - 1 || l > hi {
            return Err(too_small(lo, hi, format!("highest weight entry {l} outside the window")));
        }
        word.extend((lo..=l).map(Letter::b));
        lens.push((l - lo + 1) as usize);
    }
    Ok((word, lens))
}

/// The connected window sub-crystal generated by the frozen highest weight word.
fn frozen_component(lambda: &GenPartition, lo: i64, hi: i64) -> Result<(Vec<Word>, Vec<usize>), LrError> {
    let (hw, lens) = frozen_highest(lambda, lo, hi)?;
    let mut seen: HashSet<Word> = HashSet::from([hw.clone()]);
    let mut queue = VecDeque::from([hw.clone()]);
    let mut out = vec![hw];
    while let Some(w) = queue.pop_front() {
        for i in lo..hi {
            if let Some(n) = tensor_lower(&w, i) {
                if seen.insert(n.clone()) {
                    queue.push_back(n.clone());
                    out.push(n);
                }
            }
        }
    }
    Ok((out, lens))
}

fn factor_pieces(f: &Factor, lo: i64, hi: i64, only_highest: bool) -> Result<Vec<Piece>, LrError> {
    let plain = |w: Word| {
        let n = w.len();
        piece(w, vec![(n, Sea::None)], lo, hi)
    };
    let pieces: Vec<Piece> = match f {
        Factor::Bmn(mu, nu) => {
            let left = sst_words(mu, lo, hi, false);
            let right = sst_words(nu, lo, hi, true);
            left.iter()
                .flat_map(|a| right.iter().map(move |b| [a.clone(), b.clone()].concat()))
                .map(plain)
                .collect()
        }
        Factor::Bcol(a) => sst_words(&Partition::column(*a), lo, hi, false).into_iter().map(plain).collect(),
        Factor::B(lambda) if only_highest => {
            let (w, lens) = frozen_highest(lambda, lo, hi)?;
            vec![piece(w, lens.into_iter().map(|l| (l, Sea::Column)).collect(), lo, hi)]
        }
        Factor::B(lambda) => {
            let (words, lens) = frozen_component(lambda, lo, hi)?;
            let segs: Vec<(usize, Sea)> = lens.into_iter().map(|l| (l, Sea::Column)).collect();
            words.into_iter().map(|w| piece(w, segs.clone(), lo, hi)).collect()
        }
        Factor::Bdual(lambda) => {
            let (words, lens) = frozen_component(lambda, lo, hi)?;
            let segs: Vec<(usize, Sea)> = lens.into_iter().rev().map(|l| (l, Sea::DualColumn)).collect();
            words.iter().map(|w| piece(dual_word(w), segs.clone(), lo, hi)).collect()
        }
    };
    Ok(if only_highest { pieces.into_iter().filter(|p| p.eps.iter().all(|&e| e == 0)).collect() } else { pieces })
}

/// Highest weight elements of the window truncation, as chosen piece indices per factor.
fn highest_elements(factors: &[Vec<Piece>], ncolors: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(k: usize, plus: Vec<u32>, factors: &[Vec<Piece>], chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == factors.len() {
            out.push(chosen.clone());
            return;
        }
        for (idx, p) in factors[k].iter().enumerate() {
            if p.eps.iter().zip(&plus).any(|(e, q)| e > q) {
                continue;
            }
            let next: Vec<u32> = plus.iter().zip(&p.eps).zip(&p.phi).map(|((q, e), f)| q - e + f).collect();
            chosen.push(idx);
            rec(k + 1, next, factors, chosen, out);
            chosen.pop();
        }
    }
    rec(0, vec![0; ncolors], factors, &mut chosen, &mut out);
    out
}

/// Re-embed a window element into `[lo - extra, ...]` by filling the sea of every column.
fn embed(pieces: &[&Piece], lo: i64, extra: i64) -> Word {
    let mut out = Vec::new();
    for p in pieces {
        let mut at = 0;
        for &(len, sea) in &p.segments {
            let seg = &p.word[at..at + len];
            at += len;
            match sea {
                Sea::None => out.extend_from_slice(seg),
                Sea::Column => {
                    out.extend((lo - extra..lo).map(Letter::b));
                    out.extend_from_slice(seg);
                }
                Sea::DualColumn => {
                    out.extend_from_slice(seg);
                    out.extend((lo - extra..lo).rev().map(Letter::v));
                }
            }
        }
    }
    out
}

fn raise_fully(mut w: Word, lo: i64, hi: i64) -> Word {
    loop {
        let mut moved = false;
        for i in lo..hi {
            while let Some(n) = tensor_raise(&w, i) {
                w = n;
                moved = true;
            }
        }
        if !moved {
            return w;
        }
    }
}

/// Class of the highest weight `h` (content on `[lo, hi]`, dual letters negative) at level `n`.
fn decode(h: &[i64], n: i64, lo: i64) -> Option<ExtremalClass> {
    let sigma: Vec<usize> = h.iter().take_while(|&&x| x > n).map(|&x| (x - n) as usize).collect();
    let tau: Vec<usize> = h.iter().rev().take_while(|&&x| x < 0).map(|&x| (-x) as usize).collect();
    let hw = if n == 0 {
        None
    } else {
        let m: Vec<i64> = h.iter().map(|&x| x.clamp(0, n)).collect();
        let rho: Vec<i64> = (1..=n).map(|i| lo - 1 + m.iter().filter(|&&x| x >= i).count() as i64).collect();
        Some(GenPartition::new(rho).ok()?)
    };
    Some(ExtremalClass::new(Partition::new(sigma).ok()?, Partition::new(tau).ok()?, hw))
}

/// Bounds selecting the classes compared by the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_mu: usize,
    pub max_nu: usize,
    pub hw_lo: i64,
    pub hw_hi: i64,
}

impl Caps {
    /// The smallest bounds containing every predicted class.
    pub fn from_predicted(d: &Decomposition) -> Caps {
        let mut c = Caps { max_mu: 0, max_nu: 0, hw_lo: i64::MAX, hw_hi: i64::MIN };
        for (k, _) in d.iter() {
            c.max_mu = c.max_mu.max(k.mu.size());
            c.max_nu = c.max_nu.max(k.nu.size());
            for &x in k.hw_or_empty().parts() {
                c.hw_lo = c.hw_lo.min(x);
                c.hw_hi = c.hw_hi.max(x);
            }
        }
        c
    }

    pub fn contains(&self, k: &ExtremalClass) -> bool {
        k.mu.size() <= self.max_mu
            && k.nu.size() <= self.max_nu
            && k.hw_or_empty().parts().iter().all(|&x| self.hw_lo <= x && x <= self.hw_hi)
    }
}

/// Whether the extremal element of a class has a realization inside the window.
fn fits(k: &ExtremalClass, lo: i64, hi: i64) -> bool {
    let (ls, lt) = (k.mu.len() as i64, k.nu.len() as i64);
    match &k.hw {
        None => ls + lt <= hi - lo + 1,
        Some(h) => {
            let (top, bottom) = (h.first().unwrap(), h.last().unwrap());
            bottom >= lo - 1 && top <= hi && ls <= bottom - lo + 1 && lt <= hi - top
        }
    }
}

/// Census of the classes meeting the window truncation of `expr` on `[lo, hi]`.
pub fn window_census(expr: &Expr, lo: i64, hi: i64) -> Result<(Decomposition, usize), LrError> {
    let level = expr.level();
    if level < 0 {
        return Err(LrError::NegativeLevel(level));
    }
    let factors: Vec<Vec<Piece>> = expr
        .factors()
        .iter()
        .enumerate()
        .map(|(k, f)| factor_pieces(f, lo, hi, k == 0))
        .collect::<Result<_, _>>()?;
    let ncolors = (hi - lo).max(0) as usize;
    let highest = highest_elements(&factors, ncolors);
    let extra = (hi - lo + 1) + expr.boxes() as i64;
    let (wlo, whi) = (lo - extra, hi + extra);
    let mut seen: HashSet<Word> = HashSet::new();
    let mut census = Decomposition::new();
    for choice in &highest {
        let pieces: Vec<&Piece> = choice.iter().enumerate().map(|(k, &i)| &factors[k][i]).collect();
        let top = raise_fully(embed(&pieces, lo, extra), wlo, whi);
        if !seen.insert(top.clone()) {
            continue;
        }
        let mut h = vec![0i64; (whi - wlo + 1) as usize];
        for l in &top {
            h[(l.index - wlo) as usize] += if l.dual { -1 } else { 1 };
        }
        let class = decode(&h, level, wlo)
            .ok_or_else(|| too_small(lo, hi, format!("undecodable highest weight {h:?}")))?;
        census.add(class, 1);
    }
    Ok((census, highest.len()))
}

/// Outcome of a truncated comparison.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub expression: String,
    pub window: (i64, i64),
    pub caps: Caps,
    pub predicted: Decomposition,
    pub actual: Decomposition,
    pub highest_elements: usize,
    pub matched: bool,
    /// First differing class with its predicted and actual multiplicities.
    pub discrepancy: Option<(ExtremalClass, u64, u64)>,
}

fn check_window(expr: &Expr, lo: i64, hi: i64, predicted: &Decomposition, caps: &Caps) -> Result<VerifyReport, LrError> {
    let predicted = predicted.filter(|k| caps.contains(k));
    if let Some((k, _)) = predicted.iter().find(|(k, _)| !fits(k, lo, hi)) {
        return Err(too_small(lo, hi, format!("predicted class {k} does not fit")));
    }
    let (actual, count) = window_census(expr, lo, hi)?;
    let actual = actual.filter(|k| caps.contains(k));
    let (wider, _) = window_census(expr, lo - 1, hi + 1)?;
    let wider = wider.filter(|k| caps.contains(k));
    if let Some((k, a, b)) = actual.first_difference(&wider) {
        return Err(too_small(lo, hi, format!("census of {k} changes from {a} to {b} when widened")));
    }
    let discrepancy = predicted.first_difference(&actual);
    Ok(VerifyReport {
        expression: expr.to_string(),
        window: (lo, hi),
        caps: caps.clone(),
        matched: discrepancy.is_none(),
        predicted,
        actual,
        highest_elements: count,
        discrepancy,
    })
}

/// Compare the brute-force decomposition of `expr` on the window with `predicted`, restricted
/// to `caps`. A window that is not faithful is widened by one on each side once.
pub fn verify_with_caps(expr: &Expr, window: (i64, i64), predicted: &Decomposition, caps: &Caps) -> Result<VerifyReport, LrError> {
    match check_window(expr, window.0, window.1, predicted, caps) {
        Err(LrError::WindowTooSmall { .. }) => check_window(expr, window.0 - 1, window.1 + 1, predicted, caps),
        r => r,
    }
}

/// [`verify_with_caps`] with the caps spanned by the predicted classes.
pub fn verify_truncated(expr: &Expr, window: (i64, i64), predicted: &Decomposition) -> Result<VerifyReport, LrError> {
    verify_with_caps(expr, window, predicted, &Caps::from_predicted(predicted))
}
