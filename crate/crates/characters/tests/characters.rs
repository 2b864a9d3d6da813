use std::collections::BTreeMap;

use characters::{
    branch_split, commuting_coefficient, hall_littlewood_p, kostka_foulkes_via_hl, laurent_schur, monomial_symmetric,
    schur_product, LaurentPoly, Poly, TLaurentPoly,
};
use proptest::prelude::*;
use shapes::{gen_lr_coefficient, kostka_foulkes, lr_product, GenPartition, Partition, TPoly};

fn g(v: &[i64]) -> GenPartition {
    GenPartition::new(v.to_vec()).unwrap()
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn poly(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
    let mut f = Poly::zero(n);
    for (e, c) in terms {
        f.add_term(e.to_vec(), c);
    }
    f
}

/// Number of semistandard tableaux of shape `lambda` in `n` letters, by the hook-content formula.
fn hook_content(lambda: &Partition, n: usize) -> i64 {
    let conj = lambda.conjugate();
    let (mut num, mut den) = (1i128, 1i128);
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            num *= n as i128 + c as i128 - r as i128;
            den *= (len - c + conj.get(c) - r - 1) as i128;
        }
    }
    (num / den) as i64
}

#[test]
fn laurent_schur_examples() {
    assert_eq!(laurent_schur(&g(&[0, 0, 0])), Poly::one(3));
    assert_eq!(laurent_schur(&g(&[1, 0])), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
    assert_eq!(laurent_schur(&g(&[0, -1])), poly(2, &[(&[-1, 0], 1), (&[0, -1], 1)]));
    assert_eq!(
        laurent_schur(&g(&[1, -1])),
        poly(2, &[(&[1, -1], 1), (&[0, 0], 1), (&[-1, 1], 1)])
    );
}

#[test]
fn laurent_schur_shift_and_census() {
    for lam in GenPartition::all_in_box(3, -2, 2) {
        let s = laurent_schur(&lam);
        assert!(s.is_symmetric());
        let pshift = (-lam.last().unwrap()).max(0);
        let shifted = lam.shift(pshift);
        let direct = laurent_schur(&shifted).mul_monomial(&[-pshift; 3]);
        assert_eq!(s, direct, "{lam}");
        let again = laurent_schur(&shifted.shift(2)).mul_monomial(&[-pshift - 2; 3]);
        assert_eq!(s, again, "{lam}");
        let total: i64 = s.terms().values().sum();
        assert_eq!(total, hook_content(&shifted.to_partition().unwrap(), 3), "{lam}");
    }
}

#[test]
fn branch_split_examples() {
    let one = branch_split(&g(&[1, 0]), 1, 1).unwrap();
    assert_eq!(one, BTreeMap::from([((g(&[1]), g(&[0])), 1), ((g(&[0]), g(&[1])), 1)]));
    let zero = branch_split(&g(&[0, 0]), 1, 1).unwrap();
    assert_eq!(zero, BTreeMap::from([((g(&[0]), g(&[0])), 1)]));
    let mixed = branch_split(&g(&[1, -1]), 1, 1).unwrap();
    assert_eq!(
        mixed,
        BTreeMap::from([((g(&[1]), g(&[-1])), 1), ((g(&[0]), g(&[0])), 1), ((g(&[-1]), g(&[1])), 1)])
    );
}

#[test]
fn branch_split_matches_gen_lr() {
    for total in 2..=4usize {
        for m in 1..total {
            let n = total - m;
            for lam in GenPartition::all_in_box(total, -2, 2) {
                let split = branch_split(&lam, m, n).unwrap();
                for ((mu, nu), &c) in &split {
                    assert_eq!(c as u64, gen_lr_coefficient(&lam, mu, nu).unwrap(), "{lam} -> {mu} {nu}");
                }
                let (lo, hi) = (-2 - 2 * total as i64, 2 + 2 * total as i64);
                let mut expected = 0;
                for mu in GenPartition::all_in_box(m, lo.max(-4), hi.min(4)) {
                    let nu_size = lam.size() - mu.size();
                    for nu in GenPartition::all_with_size(n, nu_size, -4, 4) {
                        expected += gen_lr_coefficient(&lam, &mu, &nu).unwrap();
                    }
                }
                let got: i64 = split.values().sum();
                assert_eq!(got as u64, expected, "{lam} m={m}");
            }
        }
    }
}

#[test]
fn schur_product_matches_lr() {
    for a in Partition::all_in_box(3, 3, 3) {
        for b in Partition::all_in_box(3, 3, 3) {
            if a.size() + b.size() > 5 {
                continue;
            }
            let got = schur_product(&a, &b, 5).unwrap();
            let want: BTreeMap<Partition, i64> =
                lr_product(&a, &b, Some(5)).into_iter().map(|(k, v)| (k, v as i64)).collect();
            assert_eq!(got, want, "{a} * {b}");
        }
    }
}

#[test]
fn hall_littlewood_examples() {
    let p11 = hall_littlewood_p(&p(&[1, 1]), 2).unwrap();
    assert_eq!(p11, Poly::monomial(vec![1, 1], TPoly::one()));
    for size in 1..=4 {
        for mu in Partition::all_of_size(size).into_iter().filter(|m| m.len() <= 3) {
            let hl = hall_littlewood_p(&mu, 3).unwrap();
            assert!(hl.is_symmetric());
            assert_eq!(hl.eval_t(0), laurent_schur(&mu.to_gen(3).unwrap()), "t=0 {mu}");
            assert_eq!(hl.eval_t(1), monomial_symmetric(&mu, 3).unwrap(), "t=1 {mu}");
        }
    }
    assert!(hall_littlewood_p(&p(&[1, 1, 1]), 2).is_err());
}

#[test]
fn kostka_foulkes_from_hall_littlewood_matches_charge() {
    for size in 1..=6 {
        let k = kostka_foulkes_via_hl(size, 3).unwrap();
        let parts: Vec<Partition> = Partition::all_of_size(size).into_iter().filter(|q| q.len() <= 3).collect();
        for lam in &parts {
            for mu in &parts {
                let want = kostka_foulkes(&lam.to_gen(3).unwrap(), &mu.to_gen(3).unwrap()).unwrap();
                let got = k.get(&(lam.clone(), mu.clone())).cloned().unwrap_or_else(TPoly::zero);
                assert_eq!(got, want, "K_{lam},{mu}");
            }
        }
    }
}

#[test]
fn commuting_coefficient_single_boxes() {
    let e = Partition::empty();
    let one = p(&[1]);
    for i in -2..=2 {
        let lam = g(&[i]);
        let c = |rho: i64, s: &Partition, t: &Partition, mu: &Partition, nu: &Partition| {
            commuting_coefficient(&lam, mu, nu, &g(&[rho]), s, t).unwrap()
        };
        assert_eq!(c(i, &one, &e, &one, &e), 1);
        assert_eq!(c(i + 1, &e, &e, &one, &e), 1);
        assert_eq!(c(i - 1, &e, &e, &one, &e), 0);
        assert_eq!(c(i, &e, &one, &e, &one), 1);
        assert_eq!(c(i - 1, &e, &e, &e, &one), 1);
        assert_eq!(c(i + 1, &e, &e, &e, &one), 0);
        assert_eq!(c(i, &e, &e, &e, &e), 1);
    }
}

#[test]
fn commuting_coefficient_needs_long_alpha() {
    let e = Partition::empty();
    let c = commuting_coefficient(&g(&[0, 0]), &p(&[2]), &e, &g(&[1, 1]), &e, &e).unwrap();
    assert_eq!(c, 1);
    let c = commuting_coefficient(&g(&[0, 0]), &p(&[2]), &e, &g(&[2, 0]), &e, &e).unwrap();
    assert_eq!(c, 0);
    let c = commuting_coefficient(&g(&[0, 0]), &p(&[1, 1]), &e, &g(&[2, 0]), &e, &e).unwrap();
    assert_eq!(c, 1);
}

#[test]
fn json_round_trip() {
    let s = laurent_schur(&g(&[1, -1]));
    let text = serde_json::to_string(&s).unwrap();
    assert_eq!(text, r#"{"nvars":2,"terms":[[[-1,1],1],[[0,0],1],[[1,-1],1]]}"#);
    let back: LaurentPoly = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
    let hl = hall_littlewood_p(&p(&[1]), 2).unwrap();
    let text = serde_json::to_string(&hl).unwrap();
    let back: TLaurentPoly = serde_json::from_str(&text).unwrap();
    assert_eq!(back, hl);
}

proptest! {
    #[test]
    fn schur_invariant_under_swaps(v in proptest::collection::vec(-3i64..=3, 1..=4), i in 0usize..4, j in 0usize..4) {
        let mut v = v;
        v.sort_unstable_by(|a, b| b.cmp(a));
        let n = v.len();
        let s = laurent_schur(&GenPartition::new(v).unwrap());
        prop_assert_eq!(s.swap(i % n, j % n), s);
    }

    #[test]
    fn schur_multiplies_by_determinant(v in proptest::collection::vec(-2i64..=2, 1..=3), k in -2i64..=2) {
        let mut v = v;
        v.sort_unstable_by(|a, b| b.cmp(a));
        let n = v.len();
        let lam = GenPartition::new(v).unwrap();
        prop_assert_eq!(laurent_schur(&lam.shift(k)), laurent_schur(&lam).mul_monomial(&vec![k; n]));
    }
}
