use qverify::bailey::num_beta_from_alpha;
use qverify::identities::{catalog, random_instances, run_all, RunOptions};
use qverify::numeric::{BigComplex, PochTable};
use qverify::qpolys::{al_salam_chihara, ultraspherical, UnitCirclePoint};
use qverify::series::rat;
use qverify::Error;

const D: u32 = 60;

fn num(n: i64, d: i64) -> BigComplex {
    BigComplex::from_rational(&rat(n, d), D)
}

fn close(a: &BigComplex, b: &BigComplex) -> bool {
    a.sub(b).abs_f64() < 1e-45
}

#[test]
fn ultraspherical_low_degrees() {
    let (beta, q) = (num(1, 3), num(1, 5));
    let pt = UnitCirclePoint::new(&rat(1, 7), D);
    assert!(close(&ultraspherical(0, &beta, &q, &pt).unwrap(), &BigComplex::one(D)));
    let want = BigComplex::one(D).sub(&beta).div(&BigComplex::one(D).sub(&q)).mul(&pt.two_cos());
    assert!(close(&ultraspherical(1, &beta, &q, &pt).unwrap(), &want));
}

#[test]
fn ultraspherical_is_even_in_theta() {
    let (beta, q) = (num(2, 7), num(-1, 3));
    let pt = UnitCirclePoint::new(&rat(3, 11), D);
    for n in 0..10 {
        let a = ultraspherical(n, &beta, &q, &pt).unwrap();
        let b = ultraspherical(n, &beta, &q, &pt.conj()).unwrap();
        assert!(close(&a, &b), "n={n}");
    }
}

// C_n e^{in theta} is the beta of the restricted pair with
// alpha_n = (beta)_n e^{2 i n theta}/(q)_n and parameter beta.
#[test]
fn ultraspherical_matches_the_bailey_construction() {
    let (beta, q) = (num(1, 3), num(1, 5));
    let pt = UnitCirclePoint::new(&rat(1, 7), D);
    let (mut tb, mut tq) = (PochTable::new(&beta, &q), PochTable::new(&q, &q));
    let x2 = pt.x.mul(&pt.x);
    let alpha: Vec<BigComplex> = (0..=15)
        .map(|n| tb.get(n).unwrap().div(&tq.get(n).unwrap()).mul(&x2.powi(n)))
        .collect();
    let betas = num_beta_from_alpha(&alpha, &beta, &q).unwrap();
    for (n, b) in betas.iter().enumerate() {
        let c = ultraspherical(n as i64, &beta, &q, &pt).unwrap();
        assert!(close(&b.mul(&pt.x.powi(-(n as i64))), &c), "n={n}");
    }
}

#[test]
fn al_salam_chihara_low_degrees() {
    let (t1, t2, q) = (num(1, 2), num(1, 10), num(1, 4));
    let pt = UnitCirclePoint::new(&rat(1, 5), D);
    assert!(close(&al_salam_chihara(0, &t1, &t2, &q, &pt).unwrap(), &BigComplex::one(D)));
    // n = 1: (1-q) t1/(1-t1 t2) * ((1 - t1/x) x + (1 - t2 x)/x) / (1-q)
    let one = BigComplex::one(D);
    let x = &pt.x;
    let inner = one.sub(&t1.div(x)).mul(x).add(&one.sub(&t2.mul(x)).div(x));
    let want = t1.div(&one.sub(&t1.mul(&t2))).mul(&inner);
    assert!(close(&al_salam_chihara(1, &t1, &t2, &q, &pt).unwrap(), &want));
}

#[test]
fn al_salam_chihara_pole() {
    let q = num(1, 4);
    let pt = UnitCirclePoint::new(&rat(1, 5), D);
    // t1 t2 = q^-1 makes (t1 t2;q)_2 vanish
    let err = al_salam_chihara(3, &num(8, 1), &num(1, 2), &q, &pt).unwrap_err();
    assert!(matches!(err, Error::Pole(_)), "{err:?}");
    assert!(al_salam_chihara(1, &num(8, 1), &num(1, 2), &q, &pt).is_ok());
}

#[test]
fn seeded_extra_instances_pass() {
    for id in ["usp1", "pneq"] {
        assert!(catalog().iter().any(|e| e.id == id));
        let bounds = random_instances(|e| e == id, 2024, 3);
        assert_eq!(bounds.len(), 3);
        for r in run_all(&bounds, &RunOptions::default()) {
            assert!(r.passed(), "{id} {:?}: {:?} {}", r.params, r.verdict, r.discrepancy);
        }
    }
}
