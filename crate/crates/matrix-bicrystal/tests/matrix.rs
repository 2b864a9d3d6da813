use std::collections::{BTreeMap, BTreeSet};

use crystal_core::{enumerate_sst, tableau_word, Element, Letter, Tableau, Weight};
use matrix_bicrystal::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shapes::Partition;

fn m(s: &str) -> BinaryMatrix {
    s.parse().unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn commutes(a: &BinaryMatrix, k: i64, l: i64) -> bool {
    type Op = fn(&BinaryMatrix, i64) -> Option<BinaryMatrix>;
    let small: [Op; 2] = [BinaryMatrix::matrix_raise, BinaryMatrix::matrix_lower];
    let cap: [Op; 2] = [BinaryMatrix::cap_raise, BinaryMatrix::cap_lower];
    small.iter().all(|x| {
        cap.iter().all(|y| {
            let one = y(a, l).and_then(|b| x(&b, k));
            let two = x(a, k).and_then(|b| y(&b, l));
            one == two
        })
    })
}

#[test]
fn row_operator_examples() {
    let a = m("rows=1..1 cols=0..1\n10");
    assert_eq!(a.matrix_lower(0), Some(m("rows=1..1 cols=0..1\n01")));
    assert_eq!(m("rows=1..1 cols=0..1\n11").matrix_lower(0), None);
    assert_eq!(m("rows=1..1 cols=0..1\n01").matrix_raise(0), Some(a));
}

#[test]
fn signature_examples() {
    let a = m("rows=1..2 cols=1..2\n10\n10");
    assert_eq!(a.matrix_lower(1), Some(m("rows=1..2 cols=1..2\n01\n10")));
    let b = m("rows=1..2 cols=1..2\n10\n01");
    assert_eq!(b.matrix_lower(1), None);
    assert_eq!(b.matrix_raise(1), None);
    let c = m("rows=1..2 cols=1..2\n01\n10");
    assert_eq!(c.matrix_raise(1), Some(m("rows=1..2 cols=1..2\n10\n10")));
    assert_eq!(c.matrix_lower(1), Some(m("rows=1..2 cols=1..2\n01\n01")));
    assert!(c.is_k_admissible(1));
}

#[test]
fn rho_examples() {
    let one = m("rows=3..3 cols=5..5\n1");
    let r = one.rho();
    assert_eq!(r.row_range(), (-5, -5));
    assert_eq!(r.col_range(), (3, 3));
    let id = m("rows=1..2 cols=1..2\n10\n01");
    let r = id.rho();
    assert_eq!(r.row_range(), (-2, -1));
    assert_eq!(r.get(-1, 1), 1);
    assert_eq!(r.get(-2, 2), 1);
    assert_eq!(r.get(-1, 2), 0);
    assert_eq!(r.rho_inv(), id);
    let z = BinaryMatrix::zeros((1, 2), (0, 3)).unwrap();
    assert_eq!(z.rho().rows.iter().map(|x| x.bits).sum::<u64>(), 0);
}

#[test]
fn cap_operator_examples() {
    let v = m("rows=1..2 cols=0..0\n1\n0");
    assert_eq!(v.cap_lower(1), Some(m("rows=1..2 cols=0..0\n0\n1")));
    assert_eq!(v.cap_lower(1).unwrap().cap_raise(1), Some(v));
    let eq = m("rows=1..2 cols=0..2\n101\n101");
    assert_eq!(eq.cap_lower(1), None);
    assert_eq!(eq.cap_raise(1), None);
}

#[test]
fn dual_examples() {
    let z = BinaryMatrix::zeros((1, 2), (0, 2)).unwrap();
    assert!(z.dual().rows.iter().all(|r| r.bits == 0b111));
    let a = m("rows=1..1 cols=0..1\n10");
    assert_eq!(a.dual(), m("rows=1..1 cols=0..1\n01"));
    assert_eq!(a.matrix_lower(0), a.dual().matrix_raise(0).map(|b| b.dual()));
}

#[test]
fn literal_round_trip() {
    let a = m("rows=1..2 cols=-1..3\n01011\n10100");
    assert_eq!(a.to_string().parse::<BinaryMatrix>().unwrap(), a);
    assert!("rows=1..2 cols=0..1\n01".parse::<BinaryMatrix>().is_err());
    assert!("cols=0..1\n01".parse::<BinaryMatrix>().is_err());
}

#[test]
fn commutation_exhaustive_3x4() {
    for a in BinaryMatrix::all((1, 3), (1, 4)) {
        for k in 1..=3 {
            for l in 1..=2 {
                assert!(commutes(&a, k, l), "fails at k={k} l={l}\n{a}");
            }
        }
    }
}

#[test]
fn commutation_random_4x7() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let data: Vec<Vec<u8>> = (0..4).map(|_| (0..7).map(|_| rng.gen_range(0..2)).collect()).collect();
        let a = BinaryMatrix::from_rows(1, 1, &data).unwrap();
        for k in 1..=6 {
            for l in 1..=3 {
                assert!(commutes(&a, k, l));
            }
        }
    }
}

#[test]
fn duality_exhaustive() {
    for a in BinaryMatrix::all((1, 3), (0, 3)) {
        assert_eq!(a.dual().dual(), a);
        assert_eq!(a.dual_reversed().dual_reversed(), a);
        for k in 0..=2 {
            let d = a.dual_reversed();
            assert_eq!(a.matrix_lower(k), d.matrix_raise(k).map(|b| b.dual_reversed()));
            assert_eq!(a.matrix_raise(k), d.matrix_lower(k).map(|b| b.dual_reversed()));
        }
    }
    for a in BinaryMatrix::all((1, 1), (0, 4)) {
        for k in 0..=3 {
            assert_eq!(a.matrix_lower(k), a.dual().matrix_raise(k).map(|b| b.dual()));
        }
    }
}

#[test]
fn duality_without_row_reversal_fails_on_two_rows() {
    let a = m("rows=1..2 cols=0..1\n10\n10");
    let lhs = a.matrix_lower(0);
    let rhs = a.dual().matrix_raise(0).map(|b| b.dual());
    assert_eq!(lhs, Some(m("rows=1..2 cols=0..1\n01\n10")));
    assert_eq!(rhs, Some(m("rows=1..2 cols=0..1\n10\n01")));
}

#[test]
fn embedding_examples() {
    let col = Tableau::from_word(
        &shapes::SkewShape::new(p("1,1"), Partition::empty()).unwrap(),
        &[Letter::b(1), Letter::b(3)],
    )
    .unwrap();
    let a = embed_sigma(&col, 0, 4).unwrap();
    assert_eq!(a, m("rows=1..1 cols=0..4\n01010"));
    let empty = Tableau::new(shapes::SkewShape::new(Partition::empty(), Partition::empty()).unwrap(), vec![]).unwrap();
    assert_eq!(embed_sigma(&empty, 0, 2).unwrap(), m("rows=1..1 cols=0..2\n000"));
    let t0 = Tableau::new(shapes::SkewShape::new(Partition::empty(), Partition::empty()).unwrap(), vec![]).unwrap();
    let ones = embed_tableau(&t0, 0, 2).unwrap();
    assert_eq!(ones, m("rows=1..1 cols=0..2\n000"));
    assert!(embed_sigma(&col, 2, 4).is_err());
}

#[test]
fn embeddings_intertwine() {
    let (lo, hi) = (-2, 2);
    for mu in [p("1"), p("2,1"), p("2,2"), p("3,1"), p("2,1,1")] {
        for t in enumerate_sst(&mu, lo, hi, false) {
            let w = tableau_word(&t);
            let a = embed_sigma(&t, lo, hi).unwrap();
            let d = rotate_dual(&t);
            let dw = tableau_word(&d);
            let b = embed_tau(&d, lo, hi).unwrap();
            for k in lo..hi {
                let via_word = w.lower(k).map(|x| embed_sigma(&Tableau::from_word(t.shape(), &x).unwrap(), lo, hi).unwrap());
                assert_eq!(a.matrix_lower(k), via_word);
                let via_word = w.raise(k).map(|x| embed_sigma(&Tableau::from_word(t.shape(), &x).unwrap(), lo, hi).unwrap());
                assert_eq!(a.matrix_raise(k), via_word);
                let via_dual = dw.lower(k).map(|x| embed_tau(&Tableau::from_word(d.shape(), &x).unwrap(), lo, hi).unwrap());
                assert_eq!(b.matrix_lower(k), via_dual);
                let via_dual = dw.raise(k).map(|x| embed_tau(&Tableau::from_word(d.shape(), &x).unwrap(), lo, hi).unwrap());
                assert_eq!(b.matrix_raise(k), via_dual);
            }
        }
    }
}

#[test]
fn maya_weights() {
    assert_eq!(MayaRow::vacuum(0).weight(), Weight::fundamental(0));
    for i in -4..=4 {
        assert_eq!(MayaRow::vacuum(i).weight(), Weight::fundamental(i));
    }
    let e = MayaRow::e_row([2, 5]);
    assert_eq!(e.weight(), &Weight::epsilon(2) + &Weight::epsilon(5));
    // Moving the top 1 of the charge-0 vacuum to position 1 gives charge 0 still.
    let v = MayaRow::vacuum(0).lower(0).unwrap();
    assert_eq!(v.charge, 0);
    assert_eq!(v.get(0), 0);
    assert_eq!(v.get(1), 1);
    assert_eq!(v.weight(), &Weight::fundamental(0) - &Weight::alpha(0));
    assert_eq!(v.raise(0), Some(MayaRow::vacuum(0)));
    // Adding a one just above the vacuum is the same row as the next vacuum.
    assert_eq!(MayaRow::f_row(0, BTreeSet::from([1])), MayaRow::vacuum(1));
}

#[test]
fn maya_window_snapshots() {
    let v = MayaRow::f_row(0, BTreeSet::from([-1, 2]));
    let r = v.to_window(-3, 3);
    assert_eq!(v.from_window(&r), v);
    for k in -3..3 {
        assert_eq!(v.lower(k), r.lower(k).map(|x| v.from_window(&x)));
        assert_eq!(v.raise(k), r.raise(k).map(|x| v.from_window(&x)));
    }
}

/// Level-n truncation: `n` frozen rows, ones left of the window, zeros right of it.
fn frozen_sources(n: usize, lo: i64, hi: i64) -> BTreeMap<Vec<i64>, usize> {
    let mut out = BTreeMap::new();
    for a in BinaryMatrix::all((1, n as i64), (lo, hi)) {
        let colors: Vec<i64> = (lo..hi).collect();
        if colors.iter().any(|&k| a.matrix_raise(k).is_some()) {
            continue;
        }
        let rows: Vec<MayaRow> = a
            .rows
            .iter()
            .map(|r| MayaRow::f_row(lo - 1, (lo..=hi).filter(|&k| r.get(k) == 1).collect()))
            .collect();
        let wt = rows.weight();
        // lambda_i = lo - 1 + #{columns with at least i ones}.
        let content: Vec<usize> = (lo..=hi).map(|j| (1..=n as i64).filter(|&i| a.get(i, j) == 1).count()).collect();
        let lambda: Vec<i64> = (1..=n).map(|i| lo - 1 + content.iter().filter(|&&c| c >= i).count() as i64).collect();
        let expect = Weight::lambda(&shapes::GenPartition::new(lambda.clone()).unwrap());
        assert_eq!(wt, expect, "source weight is not Lambda_lambda");
        *out.entry(lambda).or_insert(0) += 1;
    }
    out
}

#[test]
fn level_n_sources_have_weights_lambda() {
    for n in 1..=3 {
        let (lo, hi) = (-1, 2);
        let s = frozen_sources(n, lo, hi);
        // B(Lambda_lambda) occurs once for each element of the gl_n crystal of highest weight lambda.
        let all = shapes::GenPartition::all_in_box(n, lo - 1, hi);
        assert_eq!(s.len(), all.len());
        for lambda in all {
            let shape = lambda.shift(1 - lo).to_partition().unwrap();
            assert_eq!(s[&lambda.parts().to_vec()], enumerate_sst(&shape, 1, n as i64, false).len());
        }
    }
}

#[test]
fn en_census_small() {
    let all = BinaryMatrix::all((1, 2), (1, 4));
    let comps = bicrystal_components(&all, &[1, 2, 3], &[1]).unwrap();
    let mut seen = BTreeMap::new();
    for c in &comps {
        let mu: Vec<usize> = (1..=4).map(|j| c.col_weight.coeff(j) as usize).collect();
        let mu = Partition::new(mu).unwrap();
        let expect = enumerate_sst(&mu, 1, 4, false).len() * enumerate_sst(&mu.conjugate(), 1, 2, false).len();
        assert_eq!(c.size, expect);
        *seen.entry(mu).or_insert(0) += 1;
    }
    let expected: Vec<Partition> = (0..=8).flat_map(|n| Partition::all_in_box(n, 4, 2)).collect();
    assert_eq!(seen.len(), expected.len());
    assert!(seen.values().all(|&c| c == 1));
}

proptest! {
    #[test]
    fn cap_operators_are_inverse(bits in prop::collection::vec(0u8..2, 12), l in 1i64..=2) {
        let data: Vec<Vec<u8>> = bits.chunks(4).map(|c| c.to_vec()).collect();
        let a = BinaryMatrix::from_rows(1, 0, &data).unwrap();
        if let Some(b) = a.cap_lower(l) {
            prop_assert_eq!(b.cap_raise(l), Some(a.clone()));
        }
        if let Some(b) = a.cap_raise(l) {
            prop_assert_eq!(b.cap_lower(l), Some(a.clone()));
        }
        prop_assert_eq!(a.rho().rho_inv(), a);
    }
}
