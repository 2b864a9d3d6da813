use proptest::prelude::*;
use shapes::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn g(s: &str) -> GenPartition {
    s.parse().unwrap()
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn parse_and_display() {
    assert_eq!(p("3,1").parts(), &[3, 1]);
    assert_eq!(p("3,1,0,0").to_string(), "3,1");
    assert_eq!(p("0"), Partition::empty());
    assert_eq!(g("2,0,-1").parts(), &[2, 0, -1]);
    assert!("1,2".parse::<Partition>().is_err());
    assert!("0,1".parse::<GenPartition>().is_err());
    let s: SkewShape = "3,1/1".parse().unwrap();
    assert_eq!(s.size(), 3);
    assert!("1/2".parse::<SkewShape>().is_err());
}

#[test]
fn conjugates_and_strips() {
    assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    assert_eq!(Partition::empty().conjugate(), Partition::empty());
    let s = |o: &str, i: &str| SkewShape::new(p(o), p(i)).unwrap();
    assert!(s("2", "1").is_horizontal_strip());
    assert!(s("2", "1").is_vertical_strip());
    assert!(!s("2,2", "1").is_horizontal_strip());
    assert!(s("2,1", "1").is_vertical_strip());
}

#[test]
fn lr_examples() {
    assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("1,1")), 1);
    assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
    assert_eq!(lr_coefficient(&p("1"), &p("0"), &p("1")), 1);
    assert_eq!(lr_coefficient(&p("4,2,2,1"), &p("2,1"), &p("3,2,1")), 2);
}

#[test]
fn gen_lr_examples() {
    assert_eq!(gen_lr_coefficient(&g("1,-1"), &g("1"), &g("-1")).unwrap(), 1);
    assert_eq!(gen_lr_coefficient(&g("1,0"), &g("1"), &g("1")).unwrap(), 0);
    assert_eq!(gen_lr_coefficient(&g("0,0"), &g("0"), &g("0")).unwrap(), 1);
    assert!(gen_lr_coefficient(&g("1,0,0"), &g("1"), &g("0")).is_err());
}

#[test]
fn gl_lr_dual_pairing() {
    // V_(1) x V_(1)* = V_(1,-1) + V_(0,0) in GL_2.
    let d = g("0,-1");
    assert_eq!(gl_lr_coefficient(&g("1,-1"), &g("1,0"), &d).unwrap(), 1);
    assert_eq!(gl_lr_coefficient(&g("0,0"), &g("1,0"), &d).unwrap(), 1);
    assert_eq!(gl_lr_coefficient(&g("2,-2"), &g("1,0"), &d).unwrap(), 0);
    let prod = gl_product(&g("0,-1"), &p("1"));
    assert_eq!(prod.len(), 2);
}

#[test]
fn kostka_foulkes_examples() {
    let kf = |a: &str, b: &str| kostka_foulkes(&g(a), &g(b)).unwrap();
    assert_eq!(kf("2,1,0", "1,1,1"), TPoly::from_terms([(1, 1), (2, 1)]));
    assert_eq!(kf("2,0", "1,1"), TPoly::monomial(1, 1));
    assert_eq!(kf("1,1", "1,1"), TPoly::one());
    assert_eq!(kf("3,0,0", "1,1,1"), TPoly::monomial(3, 1));
    assert_eq!(kf("2,2,0", "2,1,1"), TPoly::monomial(1, 1));
    assert_eq!(kf("3,1,0", "2,1,1"), TPoly::from_terms([(1, 1), (2, 1)]));
    assert_eq!(kf("1,-1", "0,0"), TPoly::monomial(1, 1));
    assert!(kostka_foulkes(&g("1,0"), &g("1")).is_err());
    assert!(kostka_foulkes(&g("2,0"), &g("1,0")).is_err());
    // K_{lambda, (1^n)}(t) is the fake degree polynomial: K(1) = f^lambda.
    let k = kf("3,2,1,0,0,0", "1,1,1,1,1,1");
    assert_eq!(k.eval(1), 16);
}

#[test]
fn tpoly_json_and_division() {
    let t = TPoly::from_terms([(1, 1), (2, 1)]);
    assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,1],[2,1]]");
    let back: TPoly = serde_json::from_str("[[1,1],[2,1]]").unwrap();
    assert_eq!(back, t);
    let one_minus_t = TPoly::from_terms([(0, 1), (1, -1)]);
    let prod = &t * &one_minus_t;
    assert_eq!(prod.div_exact(&one_minus_t), Some(t));
}

fn small_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = Partition::all_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn lr_is_symmetric(mu in small_partition(4), nu in small_partition(4)) {
        for (lambda, c) in lr_product(&mu, &nu, None) {
            prop_assert_eq!(c, lr_coefficient(&lambda, &nu, &mu));
        }
    }

    #[test]
    fn lr_conjugation(mu in small_partition(4), nu in small_partition(3)) {
        for (lambda, c) in lr_product(&mu, &nu, None) {
            prop_assert_eq!(c, lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
        }
    }

    #[test]
    fn lr_standard_count_identity(mu in small_partition(4), nu in small_partition(4)) {
        let lhs: u128 = lr_product(&mu, &nu, None)
            .iter()
            .map(|(l, &c)| c as u128 * l.standard_count())
            .sum();
        let rhs = mu.standard_count() * nu.standard_count()
            * binom((mu.size() + nu.size()) as u128, mu.size() as u128);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kostka_foulkes_at_one(n in 1usize..=6, i in 0usize..11, j in 0usize..11) {
        let all = Partition::all_of_size(n);
        let (l, m) = (&all[i % all.len()], &all[j % all.len()]);
        let len = l.len().max(m.len());
        let k = kostka_foulkes(&l.to_gen(len).unwrap(), &m.to_gen(len).unwrap()).unwrap();
        prop_assert_eq!(k.eval(1) as usize, kostka_number(l, m.parts()));
        if !l.dominates(m) {
            prop_assert!(k.is_zero());
        }
        if l == m {
            prop_assert_eq!(&k, &TPoly::one());
        }
        // Degree of K_{lambda mu} is n(mu) - n(lambda).
        if !k.is_zero() {
            prop_assert_eq!(k.degree().unwrap() as usize, m.n_stat() - l.n_stat());
        }
    }

    #[test]
    fn gen_lr_shift_invariant(a in -2i64..=2, b in -2i64..=2, c in -2i64..=2, s in -3i64..=3) {
        let mu = GenPartition::new(vec![a.max(b), a.min(b)]).unwrap();
        let nu = GenPartition::new(vec![c]).unwrap();
        for lambda in GenPartition::all_with_size(3, mu.size() + nu.size(), -4, 6) {
            let x = gen_lr_coefficient(&lambda, &mu, &nu).unwrap();
            let y = gen_lr_coefficient(&lambda.shift(s), &mu.shift(s), &nu.shift(s)).unwrap();
            prop_assert_eq!(x, y);
        }
    }
}
