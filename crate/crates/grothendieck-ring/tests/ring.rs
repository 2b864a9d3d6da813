use std::collections::BTreeMap;

use grothendieck_ring::{
    annihilator_relations, d_multiply, expand_in_z_schur, h_operator, mn_character, omega, p_action, s_operator,
    z_schur, z_skew_schur, DElem, RElem, RingError, Sign,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shapes::{gl_lr_coefficient, GenPartition, Partition, SkewShape};

fn g(v: &[i64]) -> GenPartition {
    GenPartition::new(v.to_vec()).unwrap()
}

fn z(idx: &[i64]) -> RElem {
    RElem::monomial(idx, 1)
}

fn sign_of(n: usize) -> i64 {
    if n % 2 == 1 {
        1
    } else {
        -1
    }
}

#[test]
fn z_schur_examples() {
    assert_eq!(z_schur(&g(&[4])), RElem::z(4));
    assert_eq!(z_schur(&g(&[1, 0])), z(&[1, 0]).sub(&z(&[2, -1])));
    assert_eq!(z_schur(&g(&[0, 0])), z(&[0, 0]).sub(&z(&[1, -1])));
    assert_eq!(z_schur(&g(&[])), RElem::one());
}

#[test]
fn z_skew_schur_examples() {
    let lam = g(&[2, 1, -1]);
    assert_eq!(z_skew_schur(&lam, &g(&[0, 0, 0])).unwrap(), z_schur(&lam));
    let self_skew = expand_in_z_schur(&z_skew_schur(&lam, &lam).unwrap(), 3).unwrap();
    assert_eq!(self_skew[&g(&[0, 0, 0])], 1);
    for (nu, &c) in &self_skew {
        assert_eq!(c as u64, gl_lr_coefficient(&lam, &lam, nu).unwrap(), "{nu}");
    }
    let row = g(&[3]);
    let one_var = expand_in_z_schur(&z_skew_schur(&row, &row).unwrap(), 1).unwrap();
    assert_eq!(one_var, BTreeMap::from([(g(&[0]), 1)]));
    let e = z_skew_schur(&g(&[1, 0]), &g(&[1, 0])).unwrap();
    assert_eq!(e, z(&[0, 0]).sub(&z(&[2, -2])));
    assert_eq!(e, z_schur(&g(&[0, 0])).add(&z_schur(&g(&[1, -1]))));
    assert!(matches!(z_skew_schur(&g(&[1]), &g(&[0, 0])), Err(RingError::LengthMismatch { .. })));
}

#[test]
fn expand_round_trip_and_errors() {
    for lam in GenPartition::all_in_box(3, -2, 2) {
        assert_eq!(expand_in_z_schur(&z_schur(&lam), 3).unwrap(), BTreeMap::from([(lam.clone(), 1)]));
    }
    let mixed = z_schur(&g(&[1, 0])).scale(3).add(&z_schur(&g(&[2, -2])).scale(-2));
    assert_eq!(
        expand_in_z_schur(&mixed, 2).unwrap(),
        BTreeMap::from([(g(&[1, 0]), 3), (g(&[2, -2]), -2)])
    );
    assert!(expand_in_z_schur(&RElem::zero(), 2).unwrap().is_empty());
    assert!(matches!(expand_in_z_schur(&z(&[1, 0]), 2), Err(RingError::NotFinite(_))));
    assert!(matches!(
        expand_in_z_schur(&z(&[1, 0]).add(&RElem::z(3)), 2),
        Err(RingError::NotHomogeneous(2))
    ));
}

/// The monomial `z_1 z_0` has the infinite expansion `sum_{j >= 0} z_{(1+j, -j)}`: every
/// truncation leaves only terms outside the index window.
#[test]
fn monomial_expansion_is_infinite() {
    for cut in 1..6i64 {
        let partial = (0..cut).fold(RElem::zero(), |acc, j| acc.add(&z_schur(&g(&[1 + j, -j]))));
        let rest = z(&[1, 0]).sub(&partial);
        assert_eq!(rest, z(&[cut + 1, -cut]));
    }
}

#[test]
fn ore_examples() {
    let s1 = DElem::s(Sign::Plus, 1);
    let s2 = DElem::s(Sign::Plus, 2);
    let z0 = DElem::z(0);
    assert_eq!(d_multiply(&s1, &z0), d_multiply(&z0, &s1).add(&DElem::z(-1)));
    assert_eq!(d_multiply(&s2, &z0), d_multiply(&z0, &s2).sub(&DElem::z(-2)));
    let a = d_multiply(&DElem::z(3), &DElem::s(Sign::Minus, 2));
    assert_eq!(d_multiply(&DElem::one(), &a), a);
    assert_eq!(d_multiply(&a, &DElem::one()), a);
}

#[test]
fn ore_commutators() {
    for n in 1..=5usize {
        for k in -5..=5i64 {
            for (sign, shifted) in [(Sign::Plus, k - n as i64), (Sign::Minus, k + n as i64)] {
                let s = DElem::s(sign, n);
                let zk = DElem::z(k);
                let comm = d_multiply(&s, &zk).sub(&d_multiply(&zk, &s));
                assert_eq!(comm, DElem::z(shifted).scale(sign_of(n)), "n={n} k={k} {sign}");
            }
        }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng) -> DElem {
    let mut d = DElem::one();
    for _ in 0..rng.gen_range(0..=3) {
        let f = match rng.gen_range(0..3) {
            0 => DElem::z(rng.gen_range(-4..=4)),
            1 => DElem::s(Sign::Plus, rng.gen_range(1..=3)),
            _ => DElem::s(Sign::Minus, rng.gen_range(1..=3)),
        };
        d = d_multiply(&d, &f);
    }
    d
}

#[test]
fn ore_associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let (a, b, c) = (random_monomial(&mut rng), random_monomial(&mut rng), random_monomial(&mut rng));
        assert_eq!(d_multiply(&d_multiply(&a, &b), &c), d_multiply(&a, &d_multiply(&b, &c)));
    }
}

#[test]
fn delem_action_is_a_module_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = z_schur(&g(&[1, 0])).add(&z(&[2, -3]));
    for _ in 0..200 {
        let (a, b) = (random_monomial(&mut rng), random_monomial(&mut rng));
        assert_eq!(d_multiply(&a, &b).apply(&f), a.apply(&b.apply(&f)));
    }
}

#[test]
fn p_action_examples() {
    assert_eq!(p_action(Sign::Plus, 1, &RElem::z(0)), RElem::z(-1));
    assert_eq!(p_action(Sign::Plus, 3, &RElem::one()), RElem::zero());
    assert_eq!(p_action(Sign::Minus, 2, &z(&[0, 0])), z(&[2, 0]).scale(-2));
}

#[test]
fn mn_characters() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(mn_character(&p(&[2, 1]), &[1, 1, 1]), 2);
    assert_eq!(mn_character(&p(&[2, 1]), &[3]), -1);
    assert_eq!(mn_character(&p(&[1, 1, 1]), &[2, 1]), -1);
    assert_eq!(mn_character(&p(&[3, 1]), &[2, 2]), -1);
    for n in 1..=5 {
        for lam in Partition::all_of_size(n) {
            let dim = mn_character(&lam, &vec![1; n]);
            assert_eq!(dim as u128, lam.standard_count());
        }
    }
}

fn padded(mu: &Partition, n: usize) -> GenPartition {
    mu.to_gen(n).unwrap()
}

#[test]
fn s_operator_identity_both_branches() {
    for n in 1..=3usize {
        for lam in GenPartition::all_in_box(n, -3, 3) {
            let zl = z_schur(&lam);
            for size in 1..=4 {
                for mu in Partition::all_of_size(size) {
                    let conj = mu.conjugate();
                    let plus = s_operator(Sign::Plus, &conj, &zl);
                    let minus = s_operator(Sign::Minus, &conj, &zl);
                    if mu.len() <= n {
                        let m = padded(&mu, n);
                        assert_eq!(plus, z_skew_schur(&lam, &m.star()).unwrap(), "+ {lam} {mu}");
                        assert_eq!(minus, z_skew_schur(&lam, &m).unwrap(), "- {lam} {mu}");
                    } else {
                        assert!(plus.is_zero() && minus.is_zero(), "{lam} {mu}");
                    }
                }
            }
        }
    }
}

#[test]
fn jacobi_skew_expansion() {
    for n in 1..=3usize {
        for lam in GenPartition::all_in_box(n, -2, 2) {
            for mu in GenPartition::all_in_box(n, -2, 2) {
                let lhs = z_skew_schur(&lam, &mu).unwrap();
                let (lo, hi) = (lam.last().unwrap() - mu.first().unwrap(), lam.first().unwrap() - mu.last().unwrap());
                let mut rhs = RElem::zero();
                for nu in GenPartition::all_with_size(n, lam.size() - mu.size(), lo, hi) {
                    let c = gl_lr_coefficient(&lam, &mu, &nu).unwrap() as i64;
                    rhs = rhs.add(&z_schur(&nu).scale(c));
                }
                assert_eq!(lhs, rhs, "{lam} / {mu}");
            }
        }
    }
}

fn vertical_strip_sum(sign: Sign, m: usize, lam: &GenPartition) -> RElem {
    let n = lam.len();
    let mut out = RElem::zero();
    let (lo, hi) = (lam.last().unwrap() - 1, lam.first().unwrap() + 1);
    let target = match sign {
        Sign::Plus => lam.size() + m as i64,
        Sign::Minus => lam.size() - m as i64,
    };
    for mu in GenPartition::all_with_size(n, target, lo, hi) {
        let (big, small) = match sign {
            Sign::Plus => (&mu, lam),
            Sign::Minus => (lam, &mu),
        };
        let base = small.last().unwrap();
        let (Some(b), Some(s)) = (big.shift(-base).to_partition(), small.shift(-base).to_partition()) else {
            continue;
        };
        if let Ok(sk) = SkewShape::new(b, s) {
            if sk.is_vertical_strip() && sk.size() == m {
                out = out.add(&z_schur(&mu));
            }
        }
    }
    out
}

#[test]
fn h_calculus() {
    for n in 1..=4usize {
        for lam in GenPartition::all_in_box(n, -2, 2) {
            let zl = z_schur(&lam);
            assert_eq!(h_operator(Sign::Plus, n, &zl), z_schur(&lam.shift(1)), "{lam}");
            assert_eq!(h_operator(Sign::Minus, n, &zl), z_schur(&lam.shift(-1)), "{lam}");
            for i in 0..=n {
                let lhs = h_operator(Sign::Plus, n, &h_operator(Sign::Minus, i, &zl));
                assert_eq!(lhs, h_operator(Sign::Plus, n - i, &zl), "{lam} i={i}");
            }
            for m in 0..=n {
                for sign in [Sign::Plus, Sign::Minus] {
                    assert_eq!(h_operator(sign, m, &zl), vertical_strip_sum(sign, m, &lam), "{sign} {m} {lam}");
                }
            }
            assert!(h_operator(Sign::Plus, n + 1, &zl).is_zero());
            assert!(h_operator(Sign::Minus, n + 1, &zl).is_zero());
        }
    }
}

#[test]
fn omega_examples() {
    assert_eq!(omega(&DElem::z(3)), DElem::z(-3));
    assert_eq!(omega(&DElem::s(Sign::Plus, 2)), DElem::s(Sign::Minus, 2));
    let w = omega(&DElem::from_r(&z_schur(&g(&[1, 0]))));
    assert_eq!(w, DElem::from_r(&z_schur(&g(&[0, -1]))));
    for lam in GenPartition::all_in_box(3, -2, 2) {
        assert_eq!(z_schur(&lam).omega(), z_schur(&lam.star()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let (a, b) = (random_monomial(&mut rng), random_monomial(&mut rng));
        assert_eq!(omega(&omega(&a)), a);
        assert_eq!(omega(&d_multiply(&a, &b)), d_multiply(&omega(&a), &omega(&b)));
    }
}

#[test]
fn annihilators() {
    for n in 1..=3usize {
        let rels = annihilator_relations(n, n + 3);
        assert_eq!(rels.len(), 2 * 3 + n + 1);
        assert!(rels.iter().any(|r| r.ops.is_zero()), "the i = 0 relation is identically zero");
        for lam in GenPartition::all_in_box(n, -2, 2) {
            let zl = z_schur(&lam);
            for r in &rels {
                assert!(r.ops.apply(&zl).is_zero(), "{} on {lam}", r.ops);
                assert!(r.delem.apply(&zl).is_zero(), "{} on {lam} (Ore form)", r.ops);
            }
        }
    }
    let r = &annihilator_relations(1, 2)[0];
    assert_eq!(r.ops.to_string(), "h+2");
    for k in -3..=3 {
        assert!(r.ops.apply(&RElem::z(k)).is_zero());
    }
}

#[test]
fn json_round_trip() {
    let r = z_schur(&g(&[1, 0]));
    let text = serde_json::to_string(&r).unwrap();
    assert_eq!(text, r#"[{"z":[1,0],"c":1},{"z":[2,-1],"c":-1}]"#);
    assert_eq!(serde_json::from_str::<RElem>(&text).unwrap(), r);
    let d = d_multiply(&DElem::s(Sign::Plus, 2), &DElem::z(0));
    let text = serde_json::to_string(&d).unwrap();
    assert_eq!(serde_json::from_str::<DElem>(&text).unwrap(), d);
    assert!(text.contains("\"splus\":[2]"));
}

fn arb_relem() -> impl Strategy<Value = RElem> {
    proptest::collection::vec((proptest::collection::vec(-3i64..=3, 0..=3), -3i64..=3), 0..4)
        .prop_map(|ts| ts.into_iter().fold(RElem::zero(), |acc, (idx, c)| acc.add(&RElem::monomial(&idx, c))))
}

proptest! {
    #[test]
    fn p_action_is_a_derivation(f in arb_relem(), h in arb_relem(), n in 1usize..=3, plus in any::<bool>()) {
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let lhs = p_action(sign, n, &f.mul(&h));
        let rhs = p_action(sign, n, &f).mul(&h).add(&f.mul(&p_action(sign, n, &h)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_is_a_ring_map_on_r(f in arb_relem(), h in arb_relem()) {
        prop_assert_eq!(f.mul(&h).omega(), f.omega().mul(&h.omega()));
        prop_assert_eq!(f.omega().omega(), f);
    }
}
