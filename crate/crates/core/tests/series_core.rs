use qverify::series::{int, qpoch_finite, qpoch_infinite, QMonomial, QSeries, QTerm, ShiftedSeries};

fn q() -> QMonomial {
    QMonomial::q_pow(1)
}

#[test]
fn finite_pochhammer_q_3() {
    let s = qpoch_finite(&q().into(), 3, 6).unwrap();
    assert_eq!(s, QSeries::from_ints(&[1, -1, -1, 0, 1, 1, -1], 6));
}

#[test]
fn euler_product_pentagonal() {
    let s = qpoch_infinite(&q().into(), 7).unwrap();
    assert_eq!(s, QSeries::from_ints(&[1, -1, -1, 0, 0, 1, 0, 1], 7));
}

#[test]
fn inverse_euler_gives_partition_numbers() {
    let s = qpoch_infinite(&q().into(), 9).unwrap().invert().unwrap();
    assert_eq!(s, QSeries::from_ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30], 9));
}

#[test]
fn qterm_division_matches_series_inverse() {
    let t = QTerm::one().div_poch(&q(), 5);
    let direct = t.to_series(12).unwrap();
    let inv = qpoch_finite(&q().into(), 5, 12).unwrap().invert().unwrap();
    assert_eq!(direct, inv);
}

#[test]
fn negative_exponent_binomial_rewrite() {
    // (1 - 2 q^-1) = -2 q^-1 (1 - q/2)
    let t = QTerm::q_pow(3).mul_binomial(&int(2), -1, 1);
    assert_eq!(t.valuation().unwrap(), Some(2));
    let s = t.to_series(5).unwrap();
    assert_eq!(s, QSeries::from_ints(&[0, 0, -2, 1, 0, 0], 5));
}

#[test]
fn shifted_series_from_negative_shift_term() {
    let t = QTerm::q_pow(-2).mul_binomial(&int(1), 1, -1);
    let s = ShiftedSeries::from_term(&t, 4).unwrap();
    assert_eq!(s.coeff(-2), int(1));
    assert_eq!(s.coeff(2), int(1));
    assert_eq!(s.coeff(-3), int(0));
}

mod ring {
    use proptest::prelude::*;
    use qverify::series::{int, rat, QSeries};
    use qverify::Error;

    #[test]
    fn sum_and_product() {
        let a = QSeries::from_ints(&[1, 2, 0, -1], 3);
        let b = QSeries::from_ints(&[0, 1, 1, 1], 3);
        assert_eq!(&a + &b, QSeries::from_ints(&[1, 3, 1, 0], 3));
        assert_eq!(&a - &b, QSeries::from_ints(&[1, 1, -1, -2], 3));
        assert_eq!(&a * &b, QSeries::from_ints(&[0, 1, 3, 3], 3));
        assert_eq!(-&a, QSeries::from_ints(&[-1, -2, 0, 1], 3));
    }

    #[test]
    fn mixed_orders_truncate_to_the_smaller() {
        let a = QSeries::from_ints(&[1, 1, 1, 1, 1], 4);
        let b = QSeries::from_ints(&[1, 1], 1);
        assert_eq!((&a * &b).order(), 1);
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_q = QSeries::from_ints(&[1, -1], 5);
        assert_eq!(one_minus_q.invert().unwrap(), QSeries::from_ints(&[1; 6], 5));
        let half = QSeries::from_coeffs(vec![int(2), int(0), int(1)]);
        let inv = half.invert().unwrap();
        assert_eq!(inv.coeff(0), &rat(1, 2));
        assert_eq!(inv.coeff(2), &rat(-1, 4));
    }

    #[test]
    fn zero_constant_term_cannot_be_inverted() {
        let s = QSeries::from_ints(&[0, 1, 2], 4);
        assert_eq!(s.invert().unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn binomial_multiply_and_divide_round_trip() {
        let mut s = QSeries::from_ints(&[3, -1, 4, 1, -5, 9], 5);
        let orig = s.clone();
        s.mul_binomial(&rat(2, 3), 2);
        assert_eq!(s.coeff(2), &(int(4) - int(2)));
        s.div_binomial(&rat(2, 3), 2);
        assert_eq!(s, orig);
    }

    fn series(order: usize) -> impl Strategy<Value = QSeries> {
        prop::collection::vec(-20i64..=20, order + 1).prop_map(move |v| QSeries::from_ints(&v, order))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = QSeries> {
        (prop_oneof![-5i64..=-1, 1i64..=5], series(order)).prop_map(|(c0, mut s)| {
            *s.coeff_mut(0) = int(c0);
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 100, rng_seed: proptest::test_runner::RngSeed::Fixed(17), ..ProptestConfig::default() })]

        #[test]
        fn ring_axioms(a in series(10), b in series(10), c in series(10)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &QSeries::one(10), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn inverse_round_trip(a in unit_series(12)) {
            prop_assert_eq!(&a * &a.invert().unwrap(), QSeries::one(12));
        }

        #[test]
        fn truncation_commutes_with_products(a in series(12), b in series(12), n in 0usize..12) {
            prop_assert_eq!((&a * &b).truncate(n), &a.truncate(n) * &b.truncate(n));
        }
    }
}

mod pochhammer {
    use proptest::prelude::*;
    use qverify::series::{int, qpoch_finite, qpoch_infinite, qpoch_infinite_product, qpoch_step, QMonomial, QSeries};

    #[test]
    fn empty_product_is_one() {
        let s = qpoch_finite(&QMonomial::new(int(7), 2).into(), 0, 8).unwrap();
        assert_eq!(s, QSeries::one(8));
    }

    // (q^2;q^2)_inf
    #[test]
    fn step_two_product() {
        let s = qpoch_step(&QMonomial::q_pow(2), 2, None, 10).unwrap();
        assert_eq!(s, QSeries::from_ints(&[1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1], 10));
    }

    // (q;q)_inf (-q;q)_inf = (q^2;q^2)_inf
    #[test]
    fn product_of_two_infinite_products() {
        let both = qpoch_infinite_product(&[QMonomial::q_pow(1), QMonomial::new(int(-1), 1)], 1, 14).unwrap();
        let sq = qpoch_step(&QMonomial::q_pow(2), 2, None, 14).unwrap();
        assert_eq!(both, sq);
    }

    // Products that agree once the first omitted factor is beyond the order.
    #[test]
    fn infinite_product_is_a_long_finite_one() {
        for order in [5, 12, 20] {
            let a: qverify::series::ParamSpec = QMonomial::new(int(3), 1).into();
            assert_eq!(qpoch_infinite(&a, order).unwrap(), qpoch_finite(&a, order + 1, order).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 100, rng_seed: proptest::test_runner::RngSeed::Fixed(29), ..ProptestConfig::default() })]

        // (a;q)_{n+1} = (a;q)_n (1 - a q^n)
        #[test]
        fn recurrence(c in -4i64..=4, m in 1u32..4, n in 0usize..8) {
            let order = 16;
            let a = QMonomial::new(int(c), m as i64);
            let mut lhs = qpoch_finite(&a.clone().into(), n, order).unwrap();
            lhs.mul_binomial(&int(c), m as usize + n);
            prop_assert_eq!(lhs, qpoch_finite(&a.into(), n + 1, order).unwrap());
        }
    }
}

mod laurent {
    use qverify::series::{int, QSeries, ZLaurentSeries};
    use qverify::Error;

    const W: (i64, i64) = (-4, 4);

    fn z_plus_inv(order: usize) -> ZLaurentSeries {
        let z = ZLaurentSeries::monomial(int(1), 0, 1, order, W).unwrap();
        let zi = ZLaurentSeries::monomial(int(1), 0, -1, order, W).unwrap();
        z.add(&zi).unwrap()
    }

    #[test]
    fn square_of_z_plus_inverse() {
        let s = z_plus_inv(3);
        let sq = s.mul(&s, W).unwrap();
        assert_eq!(sq.coeff(0, 2), int(1));
        assert_eq!(sq.coeff(0, 0), int(2));
        assert_eq!(sq.coeff(0, -2), int(1));
        assert_eq!(sq.coeff(0, 1), int(0));
    }

    #[test]
    fn shift_moves_and_overflows() {
        let s = z_plus_inv(2);
        let t = s.z_shift(2).unwrap();
        assert_eq!(t.coeff(0, 3), int(1));
        assert_eq!(t.coeff(0, 1), int(1));
        let err = s.z_shift(4).unwrap_err();
        assert!(matches!(err, Error::WindowOverflow { exponent: 5, .. }), "{err:?}");
    }

    #[test]
    fn product_outside_destination_window_is_an_error() {
        let s = z_plus_inv(2);
        assert!(matches!(s.mul(&s, (-1, 1)), Err(Error::WindowOverflow { .. })));
    }

    #[test]
    fn z_coefficients_round_trip() {
        let f = QSeries::from_ints(&[1, -2, 3], 2);
        let s = ZLaurentSeries::from_qseries(&f, -3, W).unwrap();
        assert_eq!(s.z_coeff(-3), f);
        assert!(s.z_coeff(0).is_zero());
        let d = s.add(&s.neg()).unwrap();
        assert_eq!(d, ZLaurentSeries::zero(2, W));
        assert_eq!(s.scalar_mul(&int(2)).first_difference(&s), Some((0, -3)));
    }
}

mod worked_examples {
    use qverify::series::{int, qpoch_finite, qpoch_infinite, rat, QMonomial, QSeries, ZLaurentSeries};

    #[test]
    fn cancellation_and_telescoping() {
        let a = QSeries::from_ints(&[1, 1], 8);
        let b = QSeries::from_ints(&[1, -1], 8);
        assert_eq!(&a + &b, QSeries::constant(int(2), 8));
        let geo = QSeries::from_ints(&[1; 9], 8);
        assert_eq!(&b * &geo, QSeries::one(8));
    }

    #[test]
    fn double_inverse_is_identity() {
        let f = QSeries::from_coeffs((0..12).map(|i| rat(3 * i - 7, i + 2)).collect());
        assert_eq!(f.invert().unwrap().invert().unwrap(), f);
    }

    #[test]
    fn pochhammer_special_values() {
        let two = QMonomial::constant(int(2));
        assert_eq!(qpoch_finite(&two.into(), 1, 4).unwrap(), QSeries::constant(int(-1), 4));
        assert_eq!(qpoch_infinite(&QMonomial::zero().into(), 6).unwrap(), QSeries::one(6));
        // the k = 0 factor of (1;q)_inf vanishes
        assert!(qpoch_infinite(&QMonomial::constant(int(1)).into(), 6).unwrap().is_zero());
    }

    #[test]
    fn pochhammer_recurrence_for_listed_parameters() {
        let order = 30;
        let params = [
            QMonomial::q_pow(1),
            QMonomial::q_pow(2),
            QMonomial::constant(int(2)),
            QMonomial::new(rat(-1, 3), 1),
        ];
        for a in params {
            for n in 0..=12usize {
                let mut lhs = qpoch_finite(&a.clone().into(), n, order).unwrap();
                let shifted = a.shifted(n as i64);
                // multiply by (1 - a q^n); a q^0 constant factors are scaled directly
                if shifted.power == 0 {
                    lhs.scale_in_place(&(int(1) - &shifted.coeff));
                } else {
                    lhs.mul_binomial(&shifted.coeff, shifted.power as usize);
                }
                assert_eq!(lhs, qpoch_finite(&a.clone().into(), n + 1, order).unwrap(), "{a:?} n={n}");
            }
        }
    }

    #[test]
    fn shift_by_one() {
        let one = ZLaurentSeries::one(3, (-2, 2));
        let z = ZLaurentSeries::monomial(int(1), 0, 1, 3, (-2, 2)).unwrap();
        assert_eq!(one.z_shift(1).unwrap(), z);
    }
}
