use proptest::prelude::*;
use qverify::numeric::{
    inverse_square_tail, nprod_qpoch, nsum, zeta2_constant, BigComplex, PochLen, PochTable, SumRange, TailPolicy,
    MAX_TERMS,
};
use qverify::series::{rat, Rational};
use qverify::Error;

const D: u32 = 60;

fn num(n: i64, d: i64) -> BigComplex {
    BigComplex::from_rational(&rat(n, d), D)
}

fn cnum(re: (i64, i64), im: (i64, i64)) -> BigComplex {
    BigComplex::from_rationals(&rat(re.0, re.1), &rat(im.0, im.1), D)
}

fn assert_close(a: &BigComplex, b: &BigComplex, tol: f64) {
    let d = a.sub(b).abs_f64();
    assert!(d < tol, "{:?} vs {:?}: {d:e}", a.to_f64_pair(), b.to_f64_pair());
}

fn poch_inf(a: &BigComplex, q: &BigComplex) -> BigComplex {
    nprod_qpoch(a, q, PochLen::Infinite, &TailPolicy::default()).unwrap()
}

#[test]
fn geometric_series() {
    let half = num(1, 2);
    let s = nsum(|n| Ok(half.powi(n)), SumRange::Unilateral, &TailPolicy::default(), D).unwrap();
    assert_close(&s.value, &num(2, 1), 1e-38);
    assert!(s.last_term < 1e-40);
}

#[test]
fn bilateral_geometric_series() {
    // sum_n 3^{-|n|} = 2
    let third = num(1, 3);
    let s = nsum(|n| Ok(third.powi(n.abs())), SumRange::Bilateral, &TailPolicy::default(), D).unwrap();
    assert_close(&s.value, &num(2, 1), 1e-38);
}

#[test]
fn constant_terms_do_not_converge() {
    let err = nsum(|_| Ok(BigComplex::one(30)), SumRange::Unilateral, &TailPolicy::for_digits(30), 30).unwrap_err();
    assert_eq!(err, Error::NoConvergence(MAX_TERMS));
}

#[test]
fn growing_terms_overflow() {
    let two = num(2, 1);
    let err = nsum(|n| Ok(two.powi(n)), SumRange::Unilateral, &TailPolicy::default(), D).unwrap_err();
    assert_eq!(err, Error::Overflow);
}

// 2phi1(a, b; c; q, c/(ab)) = (c/a, c/b; q)_inf / (c, c/(ab); q)_inf
#[test]
fn q_gauss_sum() {
    let (a, b, c, q) = (num(1, 3), cnum((1, 4), (1, 5)), num(1, 20), num(1, 7));
    let z = c.div(&a.mul(&b));
    let (mut ta, mut tb, mut tc, mut tq) =
        (PochTable::new(&a, &q), PochTable::new(&b, &q), PochTable::new(&c, &q), PochTable::new(&q, &q));
    let lhs = nsum(
        |n| Ok(ta.get(n)?.mul(&tb.get(n)?).div(&tc.get(n)?.mul(&tq.get(n)?)).mul(&z.powi(n))),
        SumRange::Unilateral,
        &TailPolicy::default(),
        D,
    )
    .unwrap();
    let rhs = poch_inf(&c.div(&a), &q).mul(&poch_inf(&c.div(&b), &q)).div(&poch_inf(&c, &q).mul(&poch_inf(&z, &q)));
    assert_close(&lhs.value, &rhs, 1e-38);
}

#[test]
fn product_edge_cases() {
    let q = num(1, 3);
    assert_close(&poch_inf(&BigComplex::zero(D), &q), &BigComplex::one(D), 1e-50);
    let a = num(2, 5);
    let two = nprod_qpoch(&a, &q, PochLen::Finite(2), &TailPolicy::default()).unwrap();
    let want = a.one_minus().mul(&a.mul(&q).one_minus());
    assert_close(&two, &want, 1e-50);
    let err = nprod_qpoch(&a, &num(3, 2), PochLen::Infinite, &TailPolicy::default()).unwrap_err();
    assert!(matches!(err, Error::Domain(_)));
    // (a;q)_{-1} = 1/(1 - a/q) vanishes when a = q
    let err = nprod_qpoch(&q, &q, PochLen::Finite(-1), &TailPolicy::default()).unwrap_err();
    assert!(matches!(err, Error::Pole(_)));
}

// (1/2; 1/2)_inf = (1 - 1/2)(1/4; 1/2)_inf
#[test]
fn infinite_product_peels_its_first_factor() {
    let h = num(1, 2);
    let whole = poch_inf(&h, &h);
    let rest = poch_inf(&h.mul(&h), &h);
    assert_close(&whole, &h.mul(&rest), 1e-45);
    let (re, _) = whole.to_f64_pair();
    assert!((re - 0.288_788_095_086_602_4).abs() < 1e-15, "{re}");
}

#[test]
fn zeta_two_to_thirty_digits() {
    let want: Rational = "1644934066848226436472415166646/1000000000000000000000000000000".parse().unwrap();
    let z = zeta2_constant(40);
    assert_close(&z, &BigComplex::from_rational(&want, 40), 1e-30);
}

#[test]
fn zeta_two_from_partial_sums_and_tail() {
    let exact = zeta2_constant(D);
    for k in [60u64, 100, 250] {
        let mut s = BigComplex::zero(D);
        for j in 1..=k {
            s = s.add(&BigComplex::from_i64(j as i64, D).powi(-2));
        }
        assert_close(&s.add(&inverse_square_tail(k, D)), &exact, 1e-50);
    }
}

#[test]
fn precision_changes_only_the_last_digits() {
    let (q, a) = (num(1, 5), num(2, 3));
    let lo = poch_inf(&a, &q);
    let hi = nprod_qpoch(&a.with_digits(120), &q.with_digits(120), PochLen::Infinite, &TailPolicy::for_digits(120)).unwrap();
    assert_close(&lo.with_digits(120), &hi, 1e-39);
}

// sum_{k=0}^{n} (q^-n;q)_k/(q;q)_k z^k = (z q^-n; q)_n
#[test]
fn terminating_q_binomial() {
    let (q, z) = (num(2, 7), cnum((1, 3), (-1, 2)));
    for n in 0..8 {
        let qn = q.powi(-n);
        let (mut ta, mut tq) = (PochTable::new(&qn, &q), PochTable::new(&q, &q));
        let mut lhs = BigComplex::zero(D);
        for k in 0..=n {
            lhs = lhs.add(&ta.get(k).unwrap().div(&tq.get(k).unwrap()).mul(&z.powi(k)));
        }
        let rhs = nprod_qpoch(&z.mul(&qn), &q, PochLen::Finite(n), &TailPolicy::default()).unwrap();
        assert_close(&lhs, &rhs, 1e-40);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_seed: proptest::test_runner::RngSeed::Fixed(41), ..ProptestConfig::default() })]

    // (a;q)_{n+k} = (a;q)_n (a q^n; q)_k and (a;q)_{-n} (a q^{-n}; q)_n = 1
    #[test]
    fn pochhammer_shift(an in -9i64..=9, qn in prop_oneof![-6i64..=-1, 1i64..=6], n in 0i64..10, k in 0i64..10) {
        let (a, q) = (num(an, 10), num(qn, 7));
        let p = TailPolicy::default();
        let whole = nprod_qpoch(&a, &q, PochLen::Finite(n + k), &p).unwrap();
        let head = nprod_qpoch(&a, &q, PochLen::Finite(n), &p).unwrap();
        let tail = nprod_qpoch(&a.mul(&q.powi(n)), &q, PochLen::Finite(k), &p).unwrap();
        prop_assert!(whole.sub(&head.mul(&tail)).abs_f64() < 1e-45);
        let shifted = a.mul(&q.powi(-n));
        if let Ok(neg) = nprod_qpoch(&a, &q, PochLen::Finite(-n), &p) {
            let back = nprod_qpoch(&shifted, &q, PochLen::Finite(n), &p).unwrap();
            prop_assert!(neg.mul(&back).sub(&BigComplex::one(D)).abs_f64() < 1e-40);
        }
        let mut table = PochTable::new(&a, &q);
        prop_assert!(table.get(n + k).unwrap().sub(&whole).abs_f64() < 1e-45);
    }
}

#[test]
fn q_gauss_at_the_reference_point() {
    let (a, b, c, q) = (num(1, 2), num(1, 4), num(1, 10), num(1, 5));
    let z = c.div(&a.mul(&b));
    let (mut ta, mut tb, mut tc, mut tq) =
        (PochTable::new(&a, &q), PochTable::new(&b, &q), PochTable::new(&c, &q), PochTable::new(&q, &q));
    let lhs = nsum(
        |n| Ok(ta.get(n)?.mul(&tb.get(n)?).div(&tc.get(n)?.mul(&tq.get(n)?)).mul(&z.powi(n))),
        SumRange::Unilateral,
        &TailPolicy::default(),
        D,
    )
    .unwrap();
    let rhs = poch_inf(&c.div(&a), &q).mul(&poch_inf(&c.div(&b), &q)).div(&poch_inf(&c, &q).mul(&poch_inf(&z, &q)));
    assert_close(&lhs.value, &rhs, 1e-20);
}

// The default floor 1e-40 bounds the truncation error near 1e-41; this
// comparison needs a floor below 1e-50.
#[test]
fn half_product_against_250_factors_at_80_digits() {
    let h = num(1, 2);
    let tight = TailPolicy { abs_floor: 1e-55, ..TailPolicy::default() };
    let mut direct = BigComplex::one(80);
    let mut x = BigComplex::from_rational(&rat(1, 2), 80);
    let h80 = x.clone();
    for _ in 0..250 {
        direct = direct.mul(&x.one_minus());
        x = x.mul(&h80);
    }
    let p = nprod_qpoch(&h, &h, PochLen::Infinite, &tight).unwrap();
    assert_close(&p.with_digits(80), &direct, 1e-50);
    assert_close(&poch_inf(&h, &h).with_digits(80), &direct, 1e-39);
}

#[test]
fn zeta_two_is_stable_and_matches_pi() {
    use qverify::numeric::pi;
    for digits in [30u32, 60] {
        let tol = 10f64.powi(-(digits as i32 - 2));
        let lo = zeta2_constant(digits);
        let hi = zeta2_constant(2 * digits);
        assert_close(&lo.with_digits(2 * digits), &hi, tol);
        let p = BigComplex::from_real(pi(digits), digits);
        let ratio = lo.scale(&rat(6, 1)).div(&p.mul(&p));
        assert_close(&ratio, &BigComplex::one(digits), tol);
    }
}

// (a;q)_inf / (1 - a) = (aq;q)_inf
#[test]
fn infinite_pochhammer_shift() {
    let q = cnum((1, 4), (1, 9));
    for a in [num(1, 3), cnum((-2, 3), (1, 2)), num(5, 1)] {
        let lhs = poch_inf(&a, &q).div(&a.one_minus());
        assert_close(&lhs, &poch_inf(&a.mul(&q), &q), 1e-38);
    }
}

#[test]
fn finitely_supported_sum_is_exact() {
    let vals = [rat(1, 3), rat(-2, 7), rat(5, 11), rat(0, 1), rat(1, 13)];
    let exact: Rational = vals.iter().sum();
    let s = nsum(
        |n| Ok(vals.get(n as usize).map(|v| BigComplex::from_rational(v, D)).unwrap_or_else(|| BigComplex::zero(D))),
        SumRange::Unilateral,
        &TailPolicy::default(),
        D,
    )
    .unwrap();
    assert_close(&s.value, &BigComplex::from_rational(&exact, D), 1e-55);
}
