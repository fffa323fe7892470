use qverify::bailey::{
    bt_transform_check, bt_transform_sides, limited_pair, wp_pair, LimitedPair, RestrictedBaileyPair, WpPairKind,
};
use qverify::identities::{random_instances, run_all, RunOptions};
use qverify::numeric::BigComplex;
use qverify::series::{int, rat, QMonomial, QTerm};
use qverify::summation::TermGenerator;

const DIGITS: u32 = 80;

fn bs() -> Vec<QMonomial> {
    vec![
        QMonomial::constant(int(2)),
        QMonomial::constant(rat(1, 3)),
        QMonomial::new(int(3), 2),
        QMonomial::new(int(-1), 1),
    ]
}

fn kinds() -> [LimitedPair; 3] {
    [LimitedPair::Bressoud3, LimitedPair::Bressoud2, LimitedPair::Cn333]
}

fn num(n: i64, d: i64) -> BigComplex {
    BigComplex::from_rational(&rat(n, d), DIGITS)
}

#[test]
fn limited_pairs_satisfy_the_restricted_relation() {
    for kind in kinds() {
        for b in bs() {
            let pair = limited_pair(kind, &b).unwrap();
            assert_eq!(pair.relation_mismatch(15, 12).unwrap(), None, "{kind:?} b={b}");
        }
    }
}

#[test]
fn corrupted_beta_is_caught_at_its_index() {
    let b = QMonomial::constant(rat(1, 3));
    let good = limited_pair(LimitedPair::Bressoud2, &b).unwrap();
    let beta = good.beta.clone();
    let bad_beta = TermGenerator::new(
        move |n| {
            let t = beta.term(n)?;
            Ok(if n == 3 { t.scale(&rat(1001, 1000)) } else { t })
        },
        |_| 0,
    );
    let bad = RestrictedBaileyPair::new(good.alpha.clone(), bad_beta, b, 2);
    let (m, _) = bad.relation_mismatch(10, 10).unwrap().expect("mismatch expected");
    assert_eq!(m, 3);
}

#[test]
fn delta_alpha_gives_the_kernel() {
    let b = QMonomial::new(rat(-1, 2), 1);
    let pair = RestrictedBaileyPair::from_alpha(TermGenerator::delta(), b.clone(), 1, 20).unwrap();
    for n in 0..8 {
        let want = QTerm::one().mul_poch(&b, n).div_qfac(n).to_series(20).unwrap();
        let got = pair.beta.term(n).unwrap().to_series(20).unwrap();
        assert_eq!(got.first_difference(&want), None, "n={n}");
    }
}

#[test]
fn transformation_with_limited_pairs_holds() {
    let a = QMonomial::constant(int(2));
    let c = QMonomial::q_pow(3);
    for kind in kinds() {
        let pair = limited_pair(kind, &QMonomial::constant(rat(1, 3))).unwrap();
        let r = bt_transform_check("limited", &pair, &a, &c, 20).unwrap();
        assert!(r.passed(), "{kind:?}: {}", r.discrepancy);
    }
}

// With the first limited pair the left side is the left side of the first
// companion identity, term by term.
#[test]
fn transformation_left_side_matches_first_companion() {
    let (a, b, c) = (QMonomial::constant(int(2)), QMonomial::constant(rat(1, 3)), QMonomial::q_pow(3));
    let pair = limited_pair(LimitedPair::Bressoud3, &b).unwrap();
    let (lhs, _) = bt_transform_sides(&pair, &a, &c, 20).unwrap();
    let x = c.div(&a.shifted(1));
    let mut direct = qverify::series::QSeries::zero(20);
    for m in 0..=20 {
        let t = QTerm::one()
            .mul_poch_step(&a, 2, m)
            .mul_poch_step(&b.recip(), 2, m)
            .div_poch_step(&c, 2, m)
            .div_poch_step(&QMonomial::q_pow(2), 2, m)
            .mul_mono_pow(&x, m);
        direct.add_assign_ref(&t.to_series(20).unwrap());
    }
    assert_eq!(lhs.first_difference(&direct), None);
}

#[test]
fn wp_pairs_satisfy_the_wp_relation() {
    for i in 0..=3 {
        let kind = WpPairKind::from_index(i).unwrap();
        for (a, k, q) in [(num(1, 3), num(1, 7), num(1, 5)), (num(-2, 5), num(3, 11), num(2, 7))] {
            let err = wp_pair(kind, &a, &k, &q).relation_error(12).unwrap();
            assert!(err < 1e-60, "{kind:?}: {err:e}");
        }
    }
}

#[test]
fn perturbed_wp_pair_fails_the_relation() {
    let (a, k, q) = (num(1, 3), num(1, 7), num(1, 5));
    let mut pair = wp_pair(WpPairKind::Bressoud3, &a, &k, &q);
    let mut beta = std::mem::replace(&mut pair.beta, Box::new(|_| unreachable!()));
    let bump = num(1_000_001, 1_000_000);
    pair.beta = Box::new(move |n| Ok(if n == 4 { beta(n)?.mul(&bump) } else { beta(n)? }));
    assert!(pair.relation_error(8).unwrap() > 1e-8);
}

// Replacing k by ak and letting a -> 0 turns each WP pair (base sqrt q) into
// the limited pair with sqrt q renamed to q.
#[test]
fn wp_pairs_degenerate_to_limited_pairs() {
    let big_q = num(1, 5);
    let q = big_q.mul(&big_q);
    let b = num(2, 3);
    let a = BigComplex::from_i64(10, DIGITS).powi(40).recip();
    for (wp, lim) in [
        (WpPairKind::Bressoud3, LimitedPair::Bressoud3),
        (WpPairKind::Bressoud2, LimitedPair::Bressoud2),
        (WpPairKind::Cn333, LimitedPair::Cn333),
    ] {
        let mut pair = wp_pair(wp, &a, &a.mul(&b), &q);
        let (mut alpha, mut beta) = qverify::bailey::pairs::limited_pair_numeric(lim, &b, &big_q);
        for n in 0..8 {
            let da = (pair.alpha)(n).unwrap().sub(&alpha(n).unwrap()).abs_f64();
            let db = (pair.beta)(n).unwrap().sub(&beta(n).unwrap()).abs_f64();
            assert!(da < 1e-15 && db < 1e-15, "{wp:?} n={n}: {da:e} {db:e}");
        }
    }
}

#[test]
fn btrans2_holds_for_fifty_random_instances() {
    let bounds = random_instances(|id| id == "btrans2", 7, 50);
    assert_eq!(bounds.len(), 50);
    let opts = RunOptions { order: 12, ..RunOptions::default() };
    for r in run_all(&bounds, &opts) {
        assert!(r.passed(), "{:?}: {}", r.params, r.discrepancy);
    }
}
