use crystal_core::{dual_word, tableau_word, Tableau};
use shapes::{Partition, SkewShape};
use thiserror::Error;

use crate::matrix::BinaryMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("entry {0} outside window {1}..{2}")]
    OutsideWindow(i64, i64, i64),
    #[error("tableau letters are from the wrong alphabet")]
    WrongAlphabet,
}

/// Columns of `t`, right to left, as index lists.
fn columns(t: &Tableau) -> Vec<Vec<i64>> {
    let o = t.shape().outer();
    (0..o.get(0))
        .rev()
        .map(|c| (0..o.len()).filter_map(|r| t.get(r, c)).map(|l| l.index).collect::<Vec<_>>())
        .filter(|col| !col.is_empty())
        .collect()
}

/// Row `r` of the image is the `r`-th column of `t` from the right: the indicator
/// of its entries over `B`, the complement of its entries over `B^dual`.
pub fn embed_tableau(t: &Tableau, lo: i64, hi: i64) -> Result<BinaryMatrix, EmbedError> {
    let dual = t.rows().iter().flatten().next().is_some_and(|l| l.dual);
    let cols = columns(t);
    let n = cols.len().max(1) as i64;
    let mut m = BinaryMatrix::zeros((1, n), (lo, hi)).unwrap();
    for r in 1..=n {
        for j in lo..=hi {
            m.set(r, j, dual as u8);
        }
    }
    for (k, col) in cols.iter().enumerate() {
        for &x in col {
            if x < lo || x > hi {
                return Err(EmbedError::OutsideWindow(x, lo, hi));
            }
            m.set(k as i64 + 1, x, (!dual) as u8);
        }
    }
    Ok(m)
}

pub fn embed_sigma(t: &Tableau, lo: i64, hi: i64) -> Result<BinaryMatrix, EmbedError> {
    if t.rows().iter().flatten().any(|l| l.dual) {
        return Err(EmbedError::WrongAlphabet);
    }
    embed_tableau(t, lo, hi)
}

pub fn embed_tau(t: &Tableau, lo: i64, hi: i64) -> Result<BinaryMatrix, EmbedError> {
    if t.rows().iter().flatten().any(|l| !l.dual) {
        return Err(EmbedError::WrongAlphabet);
    }
    embed_tableau(t, lo, hi)
}

/// The `180` degree rotation of a normal-shape tableau over `B`, dualized: an element of `B^dual_nu`.
pub fn rotate_dual(t: &Tableau) -> Tableau {
    let nu = t.shape().outer();
    let w = nu.get(0);
    let outer = Partition::new(vec![w; nu.len()]).unwrap();
    let inner = Partition::new((0..nu.len()).map(|r| w - nu.get(nu.len() - 1 - r)).collect()).unwrap();
    let shape = SkewShape::new(outer, inner).unwrap();
    Tableau::from_word(&shape, &dual_word(&tableau_word(t))).expect("rotation is semistandard")
}
