use std::collections::BTreeSet;

use crystal_core::{Element, Weight};
use serde::{Deserialize, Serialize};

use crate::matrix::RowVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MayaKind {
    /// Finitely many ones.
    E,
    /// Ones at every position far enough to the left, zeros far to the right.
    F,
}

/// A row of the level-0 model (`E`) or the level-1 model (`F`). For `F` rows,
/// `delta` is the symmetric difference with the vacuum `{k <= charge}`;
/// the charge is kept normalized so that equal rows compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MayaRow {
    pub kind: MayaKind,
    pub charge: i64,
    pub delta: BTreeSet<i64>,
}

impl MayaRow {
    pub fn e_row<I: IntoIterator<Item = i64>>(ones: I) -> Self {
        MayaRow { kind: MayaKind::E, charge: 0, delta: ones.into_iter().collect() }
    }

    /// The vacuum `u_{Lambda_i}`: ones exactly at `k <= i`.
    pub fn vacuum(i: i64) -> Self {
        MayaRow { kind: MayaKind::F, charge: i, delta: BTreeSet::new() }
    }

    pub fn f_row(charge: i64, delta: BTreeSet<i64>) -> Self {
        MayaRow { kind: MayaKind::F, charge, delta }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.kind == MayaKind::E {
            return self;
        }
        let c = self.charge;
        let above = self.delta.iter().filter(|&&k| k > c).count() as i64;
        let below = self.delta.len() as i64 - above;
        let charge = c + above - below;
        let ones: BTreeSet<i64> = self.window_ones(self.span().0, self.span().1);
        let (lo, hi) = self.span();
        self.charge = charge;
        self.delta = (lo..=hi)
            .filter(|&k| ones.contains(&k) != (k <= charge))
            .collect();
        self
    }

    fn span(&self) -> (i64, i64) {
        let lo = self.delta.iter().next().copied().unwrap_or(self.charge).min(self.charge) - 1;
        let hi = self.delta.iter().next_back().copied().unwrap_or(self.charge).max(self.charge) + 1;
        (lo, hi)
    }

    pub fn get(&self, k: i64) -> u8 {
        let flipped = self.delta.contains(&k);
        let base = self.kind == MayaKind::F && k <= self.charge;
        (base != flipped) as u8
    }

    fn window_ones(&self, lo: i64, hi: i64) -> BTreeSet<i64> {
        (lo..=hi).filter(|&k| self.get(k) == 1).collect()
    }

    /// Smallest window outside of which the row agrees with its asymptotics.
    pub fn support(&self) -> (i64, i64) {
        match self.kind {
            MayaKind::E => (
                self.delta.iter().next().copied().unwrap_or(0),
                self.delta.iter().next_back().copied().unwrap_or(0),
            ),
            MayaKind::F => self.span(),
        }
    }

    /// Snapshot on `[lo, hi]`.
    pub fn to_window(&self, lo: i64, hi: i64) -> RowVec {
        let mut r = RowVec::zeros(lo, (hi - lo + 1) as u32);
        for k in lo..=hi {
            r.set(k, self.get(k));
        }
        r
    }

    /// Rebuild from a snapshot, using the asymptotics of `self` outside the window.
    pub fn from_window(&self, r: &RowVec) -> Self {
        let (lo, hi) = (r.lo, r.lo + r.len as i64 - 1);
        match self.kind {
            MayaKind::E => MayaRow::e_row(r.ones()),
            MayaKind::F => {
                let delta: BTreeSet<i64> = (lo..=hi).filter(|&k| (r.get(k) == 1) != (k <= self.charge)).collect();
                let outside: BTreeSet<i64> =
                    self.delta.iter().copied().filter(|&k| k < lo || k > hi).collect();
                let all = delta.union(&outside).copied().collect();
                MayaRow::f_row(self.charge, all)
            }
        }
    }

    fn act(&self, k: i64, from: (u8, u8)) -> Option<Self> {
        if (self.get(k), self.get(k + 1)) != from {
            return None;
        }
        let mut delta = self.delta.clone();
        for j in [k, k + 1] {
            if !delta.remove(&j) {
                delta.insert(j);
            }
        }
        Some(MayaRow { delta, ..self.clone() }.normalized())
    }
}

impl Element for MayaRow {
    fn raise(&self, k: i64) -> Option<Self> {
        self.act(k, (0, 1))
    }

    fn lower(&self, k: i64) -> Option<Self> {
        self.act(k, (1, 0))
    }

    fn eps(&self, k: i64) -> usize {
        ((self.get(k), self.get(k + 1)) == (0, 1)) as usize
    }

    fn phi(&self, k: i64) -> usize {
        ((self.get(k), self.get(k + 1)) == (1, 0)) as usize
    }

    /// Level 0 for `E`; for `F`, `Lambda_0 + sum_{i>0} a_i eps_i + sum_{i<=0} (a_i - 1) eps_i`.
    fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        match self.kind {
            MayaKind::E => {
                for &k in &self.delta {
                    w.add_eps(k, 1);
                }
            }
            MayaKind::F => {
                w.level = 1;
                let (lo, hi) = self.span();
                for k in lo.min(0)..=hi.max(1) {
                    let a = self.get(k) as i64;
                    w.add_eps(k, if k > 0 { a } else { a - 1 });
                }
            }
        }
        w
    }
}
