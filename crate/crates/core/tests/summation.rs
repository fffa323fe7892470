use qverify::identities::{default_instances, Backend};
use qverify::series::{int, qpoch_infinite, QMonomial, QSeries, QTerm};
use qverify::summation::{
    evaluate, evaluate_with_stats, sum_bilateral, sum_bilateral_laurent, sum_unilateral, IndexDomain,
    LaurentGenerator, SumSpec, TermGenerator, GUARD,
};
use qverify::Error;

fn q() -> QMonomial {
    QMonomial::q_pow(1)
}

#[test]
fn delta_sums_to_one() {
    assert_eq!(sum_unilateral(&TermGenerator::delta(), 10).unwrap(), QSeries::one(10));
    assert_eq!(sum_bilateral(&TermGenerator::delta(), 10).unwrap(), QSeries::one(10));
}

// sum q^{n^2}/(q;q)_n^2 = 1/(q;q)_inf
#[test]
fn durfee_square_sum() {
    let gen = TermGenerator::new(|n| Ok(QTerm::q_pow(n * n).div_qfac(n).div_qfac(n)), |n| n * n);
    let lhs = sum_unilateral(&gen, 9).unwrap();
    assert_eq!(lhs, QSeries::from_ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30], 9));
}

// sum q^{n^2}/(q;q)_n = 1/((q;q^5)_inf (q^4;q^5)_inf)
#[test]
fn first_rogers_ramanujan_sum() {
    let gen = TermGenerator::new(|n| Ok(QTerm::q_pow(n * n).div_qfac(n)), |n| n * n);
    let lhs = sum_unilateral(&gen, 6).unwrap();
    assert_eq!(lhs, QSeries::from_ints(&[1, 1, 1, 1, 2, 2, 3], 6));
}

#[test]
fn theta_function() {
    let gen = TermGenerator::new(|n| Ok(QTerm::q_pow(n * n)), |n| n * n);
    let s = sum_bilateral(&gen, 10).unwrap();
    assert_eq!(s, QSeries::from_ints(&[1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0], 10));
}

#[test]
fn theta_function_with_z() {
    let gen = LaurentGenerator::new(|n| Ok((QTerm::q_pow(n * n), n)), |n| n * n);
    let s = sum_bilateral_laurent(&gen, 9, (-3, 3)).unwrap();
    for n in -3i64..=3 {
        assert_eq!(s.coeff((n * n) as usize, n), int(1), "z^{n}");
    }
    assert_eq!(s.coeff(4, 1), int(0));
    assert!(matches!(sum_bilateral_laurent(&gen, 9, (-2, 2)), Err(Error::WindowOverflow { .. })));
}

#[test]
fn two_fold_multipartition_sum() {
    let b = default_instances(|id| id == "mseq10")
        .into_iter()
        .find(|b| b.params.get("k").is_some_and(|v| v.to_string() == "2"))
        .unwrap();
    let spec = b.entry.lhs_sum(&b.params).unwrap().unwrap();
    let s = evaluate(&spec, 6).unwrap();
    assert_eq!(s, QSeries::from_ints(&[1, 2, 5, 10, 20, 36, 65], 6));
}

#[test]
fn results_are_stable_under_order() {
    let gen = TermGenerator::new(|n| Ok(QTerm::q_pow(n * n + n).div_qfac(n)), |n| n * n + n);
    let hi = sum_unilateral(&gen, 25).unwrap();
    for n in [0, 1, 7, 12, 24] {
        assert_eq!(sum_unilateral(&gen, n).unwrap(), hi.truncate(n));
    }
}

#[test]
fn ordered_domain_counts_partitions() {
    // sum over m_1 >= m_2 >= m_3 >= 0 of q^{m_1+m_2+m_3}
    let spec = SumSpec::new(
        IndexDomain::Ordered { len: 3 },
        |level, idx| Ok(QTerm::q_pow(idx[level])),
        |idx| idx.iter().sum::<i64>(),
    );
    let (s, stats) = evaluate_with_stats(&spec, 10).unwrap();
    // partitions into at most 3 parts
    let want = QSeries::from_ints(&[1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14], 10);
    assert_eq!(s, want);
    assert!(stats.materialized > 0 && stats.leaves >= stats.materialized);
}

// sum q^n/(q;q)_n = 1/(q;q)_inf
#[test]
fn euler_product_from_the_engine() {
    let gen = TermGenerator::new(|n| Ok(QTerm::q_pow(n).div_qfac(n)), |n| n);
    let s = sum_unilateral(&gen, 12).unwrap();
    let want = qpoch_infinite(&q().into(), 12).unwrap().invert().unwrap();
    assert_eq!(s, want);
}

#[test]
fn a_bound_that_never_grows_does_not_terminate() {
    let gen = TermGenerator::new(|_| Ok(QTerm::zero()), |_| 0);
    assert_eq!(sum_unilateral(&gen, 4).unwrap_err(), Error::NoTermination(GUARD));
}

#[test]
fn an_optimistic_bound_is_reported() {
    // q^n claimed to have valuation 2n
    let gen = TermGenerator::new(|n| Ok(QTerm::q_pow(n)), |n| 2 * n);
    let err = sum_unilateral(&gen, 6).unwrap_err();
    assert!(matches!(err, Error::PruningUnsound { .. }), "{err:?}");
}

#[test]
fn a_bound_that_resumes_below_the_order_is_reported() {
    let gen = TermGenerator::new(|n| Ok(QTerm::q_pow(n)), |n| if n == 3 { 100 } else { n });
    let err = sum_unilateral(&gen, 6).unwrap_err();
    assert!(matches!(err, Error::PruningUnsound { .. }), "{err:?}");
}

#[test]
fn every_exact_default_instance_evaluates() {
    for b in default_instances(|_| true).into_iter().filter(|b| b.backend == Backend::Exact) {
        if let Some(spec) = b.entry.lhs_sum(&b.params) {
            evaluate(&spec.unwrap(), 6).unwrap_or_else(|e| panic!("{}#{}: {e}", b.entry.id, b.instance));
        }
    }
}

// sum (-1)^n q^{(7n^2+n)/2} = (q^3, q^4, q^7; q^7)_inf
#[test]
fn seven_fold_theta_matches_its_product() {
    use qverify::series::qpoch_infinite_product;
    let gen = TermGenerator::new(
        |n| {
            let t = QTerm::q_pow((7 * n * n + n) / 2);
            Ok(if n % 2 == 0 { t } else { t.neg() })
        },
        |n| (7 * n * n + n) / 2,
    );
    let lhs = sum_bilateral(&gen, 10).unwrap();
    let rhs = qpoch_infinite_product(&[QMonomial::q_pow(3), QMonomial::q_pow(4), QMonomial::q_pow(7)], 7, 10).unwrap();
    assert_eq!(lhs, rhs);
}
