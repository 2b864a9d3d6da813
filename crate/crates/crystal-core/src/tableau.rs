use shapes::{Partition, SkewShape};

use crate::letter::{Letter, Word};

/// A semistandard tableau over `B` or `B^dual`; `rows[r]` holds the cells of row `r`
/// from column `inner_r` to `outer_r - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Option<Self> {
        let (o, i) = (shape.outer(), shape.inner());
        if rows.len() != o.len() || rows.iter().enumerate().any(|(r, row)| row.len() != o.get(r) - i.get(r)) {
            return None;
        }
        let t = Tableau { shape, rows };
        t.is_semistandard().then_some(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        let start = self.shape.inner().get(r);
        if r >= self.rows.len() || c < start {
            return None;
        }
        self.rows[r].get(c - start).copied()
    }

    fn is_semistandard(&self) -> bool {
        let letters: Vec<Letter> = self.rows.iter().flatten().copied().collect();
        if letters.windows(2).any(|w| w[0].dual != w[1].dual) {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[1].less(w[0])) {
                return false;
            }
            if r == 0 {
                continue;
            }
            let start = self.shape.inner().get(r);
            for (k, &x) in row.iter().enumerate() {
                if let Some(above) = self.get(r - 1, start + k) {
                    if !above.less(x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Inverse of [`tableau_word`]: fill columns right to left, each top to bottom.
    pub fn from_word(shape: &SkewShape, word: &[Letter]) -> Option<Self> {
        let (o, i) = (shape.outer(), shape.inner());
        let mut rows: Vec<Vec<Option<Letter>>> =
            (0..o.len()).map(|r| vec![None; o.get(r) - i.get(r)]).collect();
        let mut it = word.iter();
        for c in (0..o.get(0)).rev() {
            for r in 0..o.len() {
                if c >= i.get(r) && c < o.get(r) {
                    rows[r][c - i.get(r)] = Some(*it.next()?);
                }
            }
        }
        if it.next().is_some() {
            return None;
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x.unwrap()).collect()).collect();
        Tableau::new(shape.clone(), rows)
    }
}

/// Column reading word: columns right to left, each column top to bottom.
pub fn tableau_word(t: &Tableau) -> Word {
    let o = t.shape.outer();
    let mut w = Vec::with_capacity(t.shape.size());
    for c in (0..o.get(0)).rev() {
        for r in 0..o.len() {
            if let Some(x) = t.get(r, c) {
                w.push(x);
            }
        }
    }
    w
}

/// All semistandard tableaux of shape `lambda` over the letters with indices in `[lo, hi]`.
pub fn enumerate_sst(lambda: &Partition, lo: i64, hi: i64, dual: bool) -> Vec<Tableau> {
    let n = if hi >= lo { (hi - lo + 1) as usize } else { 0 };
    let letter = |rank: usize| {
        if dual {
            Letter::v(hi - rank as i64)
        } else {
            Letter::b(lo + rank as i64)
        }
    };
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (0..lambda.get(r)).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..lambda.len()).map(|r| vec![0; lambda.get(r)]).collect();
    let mut out = Vec::new();
    let shape = SkewShape::new(lambda.clone(), Partition::empty()).unwrap();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        emit: &mut dyn FnMut(&Vec<Vec<usize>>),
    ) {
        if k == cells.len() {
            emit(grid);
            return;
        }
        let (r, c) = cells[k];
        let mut lo = if c > 0 { grid[r][c - 1] } else { 0 };
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..n {
            grid[r][c] = v;
            rec(k + 1, cells, n, grid, emit);
        }
    }
    rec(0, &cells, n, &mut grid, &mut |g| {
        let rows = g.iter().map(|row| row.iter().map(|&x| letter(x)).collect()).collect();
        out.push(Tableau { shape: shape.clone(), rows });
    });
    out
}

pub fn sst_words(lambda: &Partition, lo: i64, hi: i64, dual: bool) -> Vec<Word> {
    enumerate_sst(lambda, lo, hi, dual).iter().map(tableau_word).collect()
}
