use qverify::identities::{
    catalog, instantiate, lookup, params_from, verify_exact, verify_exact_with, verify_numeric, verify_numeric_with,
    Backend, Params,
};
use qverify::Error;

fn params(id: &str, pairs: &[(&str, &str)]) -> Params {
    params_from(&lookup(id).unwrap().slots, pairs)
}

fn partitions(n: usize, max: usize) -> i64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|p| partitions(n - p, p)).sum()
}

#[test]
fn catalog_shape() {
    assert!(catalog().len() >= 40);
    assert!(lookup("jacobi_id").is_ok());
    assert!(catalog().iter().all(|e| !e.anchor.quote.trim().is_empty()));
    assert!(matches!(lookup("no_such_identity"), Err(Error::UnknownIdentity(_))));
}

#[test]
fn instantiate_checks_the_domain() {
    assert!(instantiate("mnkqid", &params("mnkqid", &[("k", "1")]), Backend::Exact).is_ok());
    let err = instantiate("c33", &params("c33", &[("k", "3"), ("j", "2")]), Backend::Exact).unwrap_err();
    assert!(err.to_string().contains("j+k even"), "{err}");
    // c/(ab) = 5/4
    let p = params("q_gauss", &[("a", "1/2"), ("b", "1/2"), ("c", "5/16")]);
    let err = instantiate("q_gauss", &p, Backend::Numeric).unwrap_err();
    assert!(matches!(err, Error::DomainViolation { .. }), "{err:?}");
}

#[test]
fn jacobi_identity_to_order_thirty() {
    let b = instantiate("jacobi_id", &Params::new(), Backend::Exact).unwrap();
    let r = verify_exact(&b, 30).unwrap();
    assert!(r.passed(), "{r}");
    let (lhs, _) = match b.entry.lhs_sum(&b.params) {
        Some(spec) => (qverify::summation::evaluate(&spec.unwrap(), 30).unwrap(), ()),
        None => panic!("jacobi_id has a summation left side"),
    };
    for n in 0..=30 {
        assert_eq!(*lhs.coeff(n), qverify::series::int(partitions(n, n)), "p({n})");
    }
}

#[test]
fn mnkqid_first_member() {
    let b = instantiate("mnkqid", &params("mnkqid", &[("k", "1")]), Backend::Exact).unwrap();
    assert!(verify_exact(&b, 25).unwrap().passed());
}

#[test]
fn perturbed_right_side_fails_at_the_fifth_power() {
    let b = instantiate("jacobi_id", &Params::new(), Backend::Exact).unwrap();
    let r = verify_exact_with(&b, 30, true).unwrap();
    assert!(!r.passed());
    assert_eq!(r.first_diff_exponent, Some(5));
}

#[test]
fn numeric_entries_pass_and_detect_faults() {
    for id in ["q_gauss", "c5_zeta"] {
        let b = instantiate(id, &Params::new(), Backend::Numeric).unwrap();
        let r = verify_numeric(&b, 60, 1e-20).unwrap();
        assert!(r.passed(), "{r}");
        assert!(!verify_numeric_with(&b, 60, 1e-20, true).unwrap().passed(), "{id} fault not seen");
    }
}

#[test]
fn unsupported_backend_is_reported() {
    let err = instantiate("jacobi_id", &Params::new(), Backend::Numeric).unwrap_err();
    assert!(matches!(err, Error::UnsupportedBackend { .. }), "{err:?}");
}
