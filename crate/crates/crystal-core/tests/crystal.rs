use std::collections::BTreeMap;

use crystal_core::*;
use proptest::prelude::*;
use shapes::{Partition, SkewShape};

fn b(i: i64) -> Letter {
    Letter::b(i)
}

fn v(i: i64) -> Letter {
    Letter::v(i)
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// `s_lambda(1^n)` by the hook-content formula.
fn hook_content(lambda: &Partition, n: i64) -> u128 {
    let conj = lambda.conjugate();
    let (mut num, mut den) = (1i128, 1i128);
    for r in 0..lambda.len() {
        for c in 0..lambda.get(r) {
            num *= n as i128 + c as i128 - r as i128;
            den *= ((lambda.get(r) - c - 1) + (conj.get(c) - r - 1) + 1) as i128;
        }
    }
    (num / den).max(0) as u128
}

fn product(sets: &[Vec<Word>]) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for s in sets {
        let mut next = Vec::new();
        for w in &out {
            for x in s {
                let mut y = w.clone();
                y.extend_from_slice(x);
                next.push(y);
            }
        }
        out = next;
    }
    out
}

#[test]
fn operator_examples() {
    assert_eq!(raise(&[b(0)], 0), None);
    assert_eq!(lower(&[b(0)], 0), Some(vec![b(1)]));
    assert_eq!(lower(&[v(1)], 0), Some(vec![v(0)]));
    assert_eq!(eps(&[b(0)], 0), 0);
    // Signature `+ -` cancels, so both eps and phi vanish.
    assert_eq!(phi(&[b(0), b(1)], 0), 0);
    assert_eq!(eps(&[b(0), b(1)], 0), 0);
    assert_eq!(phi(&[b(1), b(0)], 0), 1);
    let mut w = Weight::epsilon(2);
    w.add_eps(1, -1);
    assert_eq!(weight(&[b(2), v(1)]), w);
}

#[test]
fn tensor_tie_goes_to_first_factor() {
    assert_eq!(raise(&[b(1), b(1)], 0), Some(vec![b(1), b(0)]));
    assert_eq!(lower(&[b(0), b(0)], 0), Some(vec![b(1), b(0)]));
    // phi(1 x 0) = eps(1) = 1: raise acts on the first factor.
    let b1 = vec![b(1), b(0)];
    let b2 = vec![b(1)];
    assert_eq!(b1.phi(0), b2.eps(0));
    assert_eq!(raise(&[b(1), b(0), b(1)], 0), Some(vec![b(0), b(0), b(1)]));
}

#[test]
fn weyl_examples() {
    assert_eq!(weyl_reflect(&vec![b(0)], 0), vec![b(1)]);
    assert_eq!(weyl_reflect(&vec![b(1)], 1), vec![b(2)]);
    assert_eq!(weyl_reflect(&vec![b(0), b(1)], 0), vec![b(0), b(1)]);
    assert_eq!(weyl_reflect(&vec![b(5)], 0), vec![b(5)]);
}

#[test]
fn fundamental_weights() {
    let l2 = Weight::fundamental(2);
    assert_eq!(l2.level, 1);
    assert_eq!(l2.coeff(1), 1);
    assert_eq!(l2.coeff(2), 1);
    let lm1 = Weight::fundamental(-1);
    assert_eq!(lm1.coeff(0), -1);
    assert_eq!(lm1.coeff(-1), 0);
    assert_eq!(Weight::fundamental(0).eps.len(), 0);
    assert_eq!(l2.pair(2), 1);
    assert_eq!(l2.pair(1), 0);
}

#[test]
fn tableau_words() {
    let shape = SkewShape::new(p("2,1"), Partition::empty()).unwrap();
    let t = Tableau::new(shape.clone(), vec![vec![b(1), b(2)], vec![b(3)]]).unwrap();
    assert_eq!(tableau_word(&t), vec![b(2), b(1), b(3)]);
    assert_eq!(Tableau::from_word(&shape, &[b(2), b(1), b(3)]), Some(t));
    let col = SkewShape::new(p("1,1"), Partition::empty()).unwrap();
    let t = Tableau::new(col, vec![vec![b(1)], vec![b(2)]]).unwrap();
    assert_eq!(tableau_word(&t), vec![b(1), b(2)]);
    assert!(Tableau::new(shape, vec![vec![b(2), b(1)], vec![b(3)]]).is_none());
}

#[test]
fn sst_counts() {
    assert_eq!(enumerate_sst(&p("1"), 1, 3, false).len(), 3);
    assert_eq!(enumerate_sst(&p("2,1"), 1, 3, false).len(), 8);
    assert_eq!(enumerate_sst(&p("1,1,1,1"), 1, 3, false).len(), 0);
    for n in 1..=4 {
        for size in 0..=5 {
            for lambda in Partition::all_of_size(size) {
                let expect = hook_content(&lambda, n);
                assert_eq!(enumerate_sst(&lambda, -1, n - 2, false).len() as u128, expect);
                assert_eq!(enumerate_sst(&lambda, -1, n - 2, true).len() as u128, expect);
            }
        }
    }
}

#[test]
fn decompose_examples() {
    let one = sst_words(&p("1"), 1, 3, false);
    let comps = decompose_components(&product(&[one.clone(), one]), &[1, 2]).unwrap();
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.size).collect();
    sizes.sort();
    assert_eq!(sizes, vec![3, 6]);
    let two = sst_words(&p("1"), 1, 2, false);
    let comps = decompose_components(&product(&[two.clone(), two.clone(), two]), &[1]).unwrap();
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.size).collect();
    sizes.sort();
    assert_eq!(sizes, vec![2, 2, 4]);
    let single = vec![vec![b(5), b(5)]];
    assert_eq!(decompose_components(&single, &[1]).unwrap().len(), 1);
    let broken = vec![vec![b(1)]];
    assert!(matches!(
        decompose_components(&broken, &[1]),
        Err(CrystalError::NotClosed { .. })
    ));
}

#[test]
fn equivalence_examples() {
    let w = vec![b(1), b(2)];
    assert!(is_equivalent(&w, &w, &[1], 100).unwrap());
    assert!(!is_equivalent(&vec![b(1), b(2)], &vec![b(2), b(1)], &[1], 100).unwrap());
    // Two highest-weight copies of (2,1) inside B^{x3}.
    let x = vec![b(1), b(1), b(2)];
    let y = vec![b(1), b(2), b(1)];
    assert!(highest_in_colors(&x, &[1, 2]));
    assert!(highest_in_colors(&y, &[1, 2]));
    assert!(is_equivalent(&x, &y, &[1, 2], 1000).unwrap());
}

#[test]
fn dual_sst_is_one_component() {
    for lambda in [p("2,1"), p("2,2"), p("3,1"), p("1,1,1")] {
        let normal = sst_words(&lambda, -1, 2, true);
        let rotated: Vec<Word> = sst_words(&lambda, -1, 2, false).iter().map(|w| dual_word(w)).collect();
        let colors = [-1, 0, 1];
        let a = decompose_components(&normal, &colors).unwrap();
        let r = decompose_components(&rotated, &colors).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(r.len(), 1);
        assert_eq!(a[0].highest_weight, r[0].highest_weight);
        // The highest weight of B^dual_lambda is -(lambda reversed) on the top of the interval.
        let mut expect = Weight::zero();
        for (k, &part) in lambda.parts().iter().enumerate() {
            expect.add_eps(2 - k as i64, -(part as i64));
        }
        assert_eq!(a[0].highest_weight, expect);
    }
}

#[test]
fn letter_json() {
    let w = vec![b(2), v(-1)];
    let s = serde_json::to_string(&w).unwrap();
    assert_eq!(s, r#"[2,"-1*"]"#);
    let back: Word = serde_json::from_str(&s).unwrap();
    assert_eq!(back, w);
}

fn letter() -> impl Strategy<Value = Letter> {
    (-3i64..=3, any::<bool>()).prop_map(|(index, dual)| Letter { index, dual })
}

proptest! {
    #[test]
    fn operator_axioms(w in prop::collection::vec(letter(), 0..=5), i in -3i64..=3) {
        if let Some(x) = lower(&w, i) {
            prop_assert_eq!(raise(&x, i), Some(w.clone()));
            prop_assert_eq!(&weight(&x), &(&weight(&w) - &Weight::alpha(i)));
        }
        if let Some(x) = raise(&w, i) {
            prop_assert_eq!(lower(&x, i), Some(w.clone()));
        }
        let mut k = 0;
        let mut cur = w.clone();
        while let Some(x) = raise(&cur, i) {
            cur = x;
            k += 1;
        }
        prop_assert_eq!(k, eps(&w, i));
        prop_assert_eq!(phi(&w, i) as i64, weight(&w).pair(i) + eps(&w, i) as i64);
        prop_assert_eq!(weyl_reflect(&weyl_reflect(&w, i), i), w.clone());
    }

    #[test]
    fn dual_law(w in prop::collection::vec(letter(), 0..=5), i in -3i64..=3) {
        prop_assert_eq!(raise(&dual_word(&w), i), lower(&w, i).map(|x| dual_word(&x)));
        prop_assert_eq!(lower(&dual_word(&w), i), raise(&w, i).map(|x| dual_word(&x)));
    }

    #[test]
    fn semistandard_preserved(k in 0usize..8, dual in any::<bool>(), i in -2i64..=2, seed in 0usize..1000) {
        let shapes = ["1", "2", "1,1", "2,1", "3,1", "2,2", "2,1,1", "3,2"];
        let lambda = p(shapes[k]);
        let all = enumerate_sst(&lambda, -2, 2, dual);
        let t = &all[seed % all.len()];
        let w = tableau_word(t);
        for x in [raise(&w, i), lower(&w, i)].into_iter().flatten() {
            prop_assert!(Tableau::from_word(t.shape(), &x).is_some());
        }
    }
}

#[test]
fn weight_multiset_of_gl3_square() {
    let words = sst_words(&p("1"), 1, 3, false);
    let comps = decompose_components(&product(&[words.clone(), words]), &[1, 2]).unwrap();
    let c: BTreeMap<Vec<i64>, usize> = comps
        .iter()
        .map(|c| ((1..=3).map(|i| c.highest_weight.coeff(i)).collect(), c.size))
        .collect();
    assert_eq!(c[&vec![2, 0, 0]], 6);
    assert_eq!(c[&vec![1, 1, 0]], 3);
}
