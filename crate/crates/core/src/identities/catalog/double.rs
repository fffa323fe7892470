//! Double-sum identities: the limiting form of the bilateral double-sum
//! theorem and the product identities obtained by choosing `g`.

use rand_chacha::ChaCha8Rng;

use super::{build, ensure, g_at, int_in, series, theta, value};
use crate::error::Result;
use crate::identities::params::{slot, Params, ParamsExt, SlotKind};
use crate::identities::support::*;
use crate::identities::{Backend, ExactSide, IdentityStatement, NumericSide};
use crate::numeric::{inverse_square_tail, zeta2_constant, BigComplex};
use crate::series::{QMonomial, QTerm, ZLaurentSeries};
use crate::summation::{sum_bilateral, sum_bilateral_laurent, IndexDomain, LaurentGenerator, SumSpec, TermGenerator};

use Backend::{Exact, Numeric};
use SlotKind::{Int, Seq, Value};

pub(super) fn entries() -> Vec<IdentityStatement> {
    vec![
        tc1_eq2(),
        pak_eq1(),
        c1(),
        jacobi_triple_product(),
        mnkqid(),
        mnk2qid(),
        mnktwoqid(),
        c33(),
        amod7id(),
        c3eq1(),
        c5_zeta(),
    ]
}

/// `(-q^k, -q^k, q^{2k}; q^{2k})_inf / (q;q)_inf^e`.
fn mnk_product(order: usize, k: i64, e: i64) -> Result<crate::series::QSeries> {
    let num = [(neg_qp(k), 2 * k), (neg_qp(k), 2 * k), (qp(2 * k), 2 * k)];
    let den: Vec<_> = (0..e).map(|_| (qp(1), 1)).collect();
    inf_prod(order, &num, &den)
}

fn tc1_eq2() -> IdentityStatement {
    IdentityStatement::new(
        "tc1_eq2",
        "sum_{m,n>=0} q^(mn) g(m-n)/((q;q)_m (q;q)_n) = (sum_k g(k))/(q;q)_inf",
        "limit a -> infinity of the bilateral double-sum theorem",
        "Let $a\\to \\infty$ in",
    )
    .slots(&[slot("g", Seq, "finitely supported g on Z")])
    .exact_sum(tc1_spec, tc1_rhs)
    .validate(|p, _| p.seq("g").map(|_| ()))
    .random(tc1_random)
    .instance(Exact, &[("g", "{-2: 1, 0: 3, 1: -1/2}")])
    .instance(Exact, &[("g", "{-1: 2, 3: 5}")])
}

fn tc1_spec(p: &Params) -> Result<SumSpec> {
    let g = p.seq("g")?;
    let smax = support_max(&g);
    let support = support_of(&g);
    Ok(SumSpec::new(
        IndexDomain::BilateralInner { len: 2 },
        move |level, idx| {
            let m = idx[0];
            if level == 0 {
                return Ok(QTerm::one().div_qfac(m));
            }
            let t = idx[1];
            Ok(QTerm::q_pow(m * (m - t)).div_qfac(m - t).mul(&g_at(&g, t)))
        },
        move |idx| match idx {
            [m] => m * (m - smax).max(0),
            [m, t, ..] => m * (m - t),
            [] => 0,
        },
    )
    .with_support(support))
}

fn tc1_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    series(euler_inv(order, 1)?.scalar_mul(&seq_total(&p.seq("g")?)))
}

fn tc1_random(rng: &mut ChaCha8Rng, backend: Backend) -> Option<Params> {
    (backend == Exact).then(|| build(vec![("g", random_seq(rng, -3, 3, 3))]))
}

/// `z = r q^e` with `0 <= e <= 1`, for the `q^{m^2-mn+n^2} z^{m-n}` sums.
fn pak_z(p: &Params) -> Result<QMonomial> {
    let z = p.mono("z")?;
    require_nonzero("z", &z)?;
    ensure((0..=1).contains(&z.power), "z = r*q^e with 0 <= e <= 1")?;
    Ok(z)
}

fn pak_spec(p: &Params) -> Result<SumSpec> {
    let z = pak_z(p)?;
    let e = z.power;
    let row = move |m: i64| ((3 * m * m + 2 * e * m - e * e).div_euclid(4)).max(0);
    let col = move |n: i64| ((3 * n * n - 2 * e * n - e * e).div_euclid(4)).max(0);
    Ok(SumSpec::new(
        IndexDomain::Independent { len: 2 },
        move |level, idx| {
            let m = idx[0];
            if level == 0 {
                return Ok(QTerm::one().div_qfac(m));
            }
            let n = idx[1];
            Ok(QTerm::q_pow(m * m - m * n + n * n).mul_mono_pow(&z, m - n).div_qfac(n))
        },
        move |idx| match idx {
            [m] => row(*m),
            [m, n, ..] => row(*m).max(col(*n)),
            [] => 0,
        },
    ))
}

fn pak_eq1() -> IdentityStatement {
    IdentityStatement::new(
        "pak_eq1",
        "sum_{m,n>=0} q^(m^2-mn+n^2) z^(m-n)/((q;q)_m (q;q)_n) = (sum_k z^k q^(k^2))/(q;q)_inf",
        "double sum with a theta-function right side",
        "for a combinatorial proof",
    )
    .slots(&[slot("z", Value, "z = r*q^e with e in {0, 1}")])
    .exact_sum(pak_spec, |p, order| {
        let z = pak_z(p)?;
        series(&theta(order, &z.coeff, z.power, 1)? * &euler_inv(order, 1)?)
    })
    .validate(|p, _| pak_z(p).map(|_| ()))
    .instance(Exact, &[("z", "1")])
    .instance(Exact, &[("z", "q")])
    .instance(Exact, &[("z", "2")])
}

fn c1() -> IdentityStatement {
    IdentityStatement::new(
        "c1",
        "sum_{m,n>=0} q^(m^2-mn+n^2) z^(m-n)/((q;q)_m (q;q)_n) = (-q/z,-qz;q^2)_inf/(q;q^2)_inf",
        "product form of the theta double sum",
        "The case $z=1$ gives",
    )
    .slots(&[slot("z", Value, "z = r*q^e with e in {0, 1}")])
    .exact_sum(pak_spec, |p, order| {
        let z = pak_z(p)?;
        let a = QMonomial::new(-z.coeff.recip(), 1 - z.power);
        let b = QMonomial::new(-z.coeff.clone(), 1 + z.power);
        series(inf_prod(order, &[(a, 2), (b, 2)], &[(qp(1), 2)])?)
    })
    .validate(|p, _| pak_z(p).map(|_| ()))
    .instance(Exact, &[("z", "1")])
    .instance(Exact, &[("z", "q")])
}

fn jacobi_triple_product() -> IdentityStatement {
    IdentityStatement::new(
        "jacobi_triple_product",
        "sum_{n in Z} q^(n^2) z^n = (-qz,-q/z,q^2;q^2)_inf",
        "Jacobi triple product identity",
        "Let $z$ be a non-zero complex number",
    )
    .slots(&[slot("z", Value, "formal z, or z = r*q^e with |e| <= 1")])
    .exact(jtp_lhs, jtp_rhs)
    .validate(|p, _| jtp_z(p).map(|_| ()))
    .instance(Exact, &[("z", "z")])
    .instance(Exact, &[("z", "1")])
    .instance(Exact, &[("z", "-2")])
    .instance(Exact, &[("z", "q/3")])
}

/// `None` for a formal z.
fn jtp_z(p: &Params) -> Result<Option<QMonomial>> {
    if p.is_formal("z") {
        return Ok(None);
    }
    let z = p.mono("z")?;
    require_nonzero("z", &z)?;
    ensure(z.power.abs() <= 1, "z = r*q^e with |e| <= 1")?;
    Ok(Some(z))
}

fn jtp_window(order: usize) -> (i64, i64) {
    let w = (order as f64).sqrt().ceil() as i64 + 1;
    (-w, w)
}

fn jtp_lhs(p: &Params, order: usize) -> Result<ExactSide> {
    match jtp_z(p)? {
        None => {
            let gen = LaurentGenerator::new(|n| Ok((QTerm::q_pow(n * n), n)), |n| n * n);
            Ok(ExactSide::Laurent(sum_bilateral_laurent(&gen, order, jtp_window(order))?))
        }
        Some(z) => {
            let e = z.power;
            let gen = TermGenerator::new(
                move |n| Ok(QTerm::q_pow(n * n).mul_mono_pow(&z, n)),
                move |n| n * n + e * n,
            );
            series(sum_bilateral(&gen, order)?)
        }
    }
}

fn jtp_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    match jtp_z(p)? {
        None => {
            let window = jtp_window(order);
            let base = inf_prod(order, &[(qp(2), 2)], &[])?;
            let mut acc = ZLaurentSeries::from_qseries(&base, 0, window)?;
            let one = crate::series::int(1);
            let mut j = 1;
            while j <= order {
                for z in [1, -1] {
                    let mut f = ZLaurentSeries::one(order, window);
                    f.add_term(j, z, &one)?;
                    acc = acc.mul(&f, window)?;
                }
                j += 2;
            }
            Ok(ExactSide::Laurent(acc))
        }
        Some(z) => {
            let a = QMonomial::new(-z.coeff.clone(), 1 + z.power);
            let b = QMonomial::new(-z.coeff.recip(), 1 - z.power);
            series(inf_prod(order, &[(a, 2), (b, 2), (qp(2), 2)], &[])?)
        }
    }
}

/// Bound for `q^{k m^2 - (2k-1) mn + k n^2 + ...}` with nonnegative extras:
/// the form is at least `3/4` of either square.
fn three_quarters(idx: &[i64]) -> i64 {
    idx.iter().take(2).map(|m| 3 * m * m / 4).max().unwrap_or(0)
}

fn mnkqid() -> IdentityStatement {
    IdentityStatement::new(
        "mnkqid",
        "sum_{m,n>=0} q^(km^2-(2k-1)mn+kn^2)/((q;q)_m (q;q)_n) = (-q^k,-q^k,q^2k;q^2k)_inf/(q;q)_inf",
        "non-diagonal quadratic form family",
        "If $|q|<1$ and $k\\geq 1$ is integral",
    )
    .slots(&[slot("k", Int, "k >= 1")])
    .exact_sum(
        |p| {
            let k = int_in(p, "k", 1, 8)?;
            Ok(SumSpec::new(
                IndexDomain::Independent { len: 2 },
                move |level, idx| {
                    let m = idx[0];
                    if level == 0 {
                        return Ok(QTerm::one().div_qfac(m));
                    }
                    let n = idx[1];
                    Ok(QTerm::q_pow(k * m * m - (2 * k - 1) * m * n + k * n * n).div_qfac(n))
                },
                three_quarters,
            ))
        },
        |p, order| series(mnk_product(order, int_in(p, "k", 1, 8)?, 1)?),
    )
    .validate(|p, _| int_in(p, "k", 1, 8).map(|_| ()))
    .instance(Exact, &[("k", "1")])
    .instance(Exact, &[("k", "2")])
    .instance(Exact, &[("k", "3")])
}

fn mnk2qid() -> IdentityStatement {
    IdentityStatement::new(
        "mnk2qid",
        "triple sum with exponent km^2-(2k-2)mn+kn^2+r^2+mr+nr, equal to (-q^k,-q^k,q^2k;q^2k)_inf/(q;q)_inf",
        "triple-sum companion of the quadratic form family",
        "also proved the identity",
    )
    .slots(&[slot("k", Int, "k >= 1")])
    .exact_sum(
        |p| {
            let k = int_in(p, "k", 1, 4)?;
            Ok(SumSpec::new(
                IndexDomain::Independent { len: 3 },
                move |level, idx| {
                    let x = idx[level];
                    let mut t = QTerm::one().div_qfac(x);
                    if level == 2 {
                        let (m, n, r) = (idx[0], idx[1], idx[2]);
                        t = t.mul_q_pow(k * m * m - (2 * k - 2) * m * n + k * n * n + r * r + m * r + n * r);
                    }
                    Ok(t)
                },
                move |idx| match idx {
                    [m] => m * m,
                    [m, n] => m * m + n * n,
                    [m, n, r, ..] => k * m * m - (2 * k - 2) * m * n + k * n * n + r * r + m * r + n * r,
                    [] => 0,
                },
            ))
        },
        |p, order| series(mnk_product(order, int_in(p, "k", 1, 4)?, 1)?),
    )
    .validate(|p, _| int_in(p, "k", 1, 4).map(|_| ()))
    .instance(Exact, &[("k", "1")])
    .instance(Exact, &[("k", "2")])
}

fn mnktwoqid() -> IdentityStatement {
    IdentityStatement::new(
        "mnktwoqid",
        "triple sum with (q;q)_(m+r) in the denominator, equal to (-q^k,-q^k,q^2k;q^2k)_inf/(q;q)_inf^2",
        "depth-three specialization of the bilateral limiting family",
        "re-indexing the summation variables so that they all start at 0",
    )
    .slots(&[slot("k", Int, "k >= 1")])
    .exact_sum(
        |p| {
            let k = int_in(p, "k", 1, 4)?;
            Ok(SumSpec::new(
                IndexDomain::Independent { len: 3 },
                move |level, idx| {
                    let x = idx[level];
                    let mut t = QTerm::one().div_qfac(x);
                    if level == 2 {
                        let (m, n, r) = (idx[0], idx[1], idx[2]);
                        t = t
                            .mul_q_pow(k * m * m - (2 * k - 1) * m * n + k * n * n + r * r + m * r)
                            .div_qfac(m + r);
                    }
                    Ok(t)
                },
                move |idx| match idx {
                    [m, n, r, ..] => k * m * m - (2 * k - 1) * m * n + k * n * n + r * r + m * r,
                    _ => three_quarters(idx),
                },
            ))
        },
        |p, order| series(mnk_product(order, int_in(p, "k", 1, 4)?, 2)?),
    )
    .validate(|p, _| int_in(p, "k", 1, 4).map(|_| ()))
    .instance(Exact, &[("k", "1")])
    .instance(Exact, &[("k", "2")])
    .instance(Exact, &[("k", "3")])
}

fn c33_params(p: &Params) -> Result<(i64, i64)> {
    let k = int_in(p, "k", 1, 40)?;
    let j = p.int("j")?;
    ensure((0..k).contains(&j), "0 <= j < k")?;
    ensure((j + k) % 2 == 0, "j+k even")?;
    Ok((k, j))
}

fn c33() -> IdentityStatement {
    IdentityStatement::new(
        "c33",
        "sum_{m,n>=0} (-1)^(m-n) q^((km^2-(2k-2)mn+kn^2+j(m-n))/2)/((q;q)_m (q;q)_n) = (q^((k-j)/2),q^((k+j)/2),q^k;q^k)_inf/(q;q)_inf",
        "alternating double sums with a triple product side",
        "integers with $j+k$ even",
    )
    .slots(&[slot("k", Int, "k >= 1"), slot("j", Int, "0 <= j < k, j+k even")])
    .exact_sum(c33_spec, |p, order| {
        let (k, j) = c33_params(p)?;
        series(inf_prod(order, &[(qp((k - j) / 2), k), (qp((k + j) / 2), k), (qp(k), k)], &[(qp(1), 1)])?)
    })
    .validate(|p, _| c33_params(p).map(|_| ()))
    .instance(Exact, &[("k", "2"), ("j", "0")])
    .instance(Exact, &[("k", "4"), ("j", "2")])
    .instance(Exact, &[("k", "7"), ("j", "1")])
}

fn c33_spec(p: &Params) -> Result<SumSpec> {
    let (k, j) = c33_params(p)?;
    // 2Q = m^2 + n^2 + (k-1)d^2 + jd with d = m - n, and (k-1)d^2 + jd >= -c.
    let c = if k == 1 { 0 } else { (j * j + 4 * (k - 1) - 1) / (4 * (k - 1)) };
    let half = move |x: i64| (x - c).div_euclid(2).max(0);
    Ok(SumSpec::new(
        IndexDomain::Independent { len: 2 },
        move |level, idx| {
            let m = idx[0];
            if level == 0 {
                return Ok(QTerm::one().div_qfac(m));
            }
            let n = idx[1];
            let two_q = k * m * m - (2 * k - 2) * m * n + k * n * n + j * (m - n);
            Ok(QTerm::constant(sign(m - n)).mul_q_pow(two_q / 2).div_qfac(n))
        },
        move |idx| match idx {
            [m] => half(m * m),
            [m, n, ..] => half(m * m + n * n),
            [] => 0,
        },
    ))
}

fn amod7id() -> IdentityStatement {
    IdentityStatement::new(
        "amod7id",
        "sum_{m,n>=0} q^(2m^2+2mn+n^2)/((q;q)_m (q;q)_n) = (q^3,q^4,q^7;q^7)_inf/(q;q)_inf",
        "double-sum mod 7 identity",
        "one of the mod 7 identities",
    )
    .exact_sum(
        |_| {
            Ok(SumSpec::new(
                IndexDomain::Independent { len: 2 },
                |level, idx| {
                    let m = idx[0];
                    if level == 0 {
                        return Ok(QTerm::one().div_qfac(m));
                    }
                    let n = idx[1];
                    Ok(QTerm::q_pow(2 * m * m + 2 * m * n + n * n).div_qfac(n))
                },
                |idx| match idx {
                    [m] => 2 * m * m,
                    [m, n, ..] => 2 * m * m + 2 * m * n + n * n,
                    [] => 0,
                },
            ))
        },
        |_, order| series(inf_prod(order, &[(qp(3), 7), (qp(4), 7), (qp(7), 7)], &[(qp(1), 1)])?),
    )
    .instance(Exact, &[])
}

fn c3eq1() -> IdentityStatement {
    IdentityStatement::new(
        "c3eq1",
        "double sum from g(i) = q^(i^2)/(q;q)_i in the bilateral theorem, summed by Rogers-Ramanujan",
        "Rogers-Ramanujan double sum",
        "use the first Rogers-Ramanujan identity",
    )
    .slots(&[slot("a", Value, "a = r, r != 0, 1"), slot("q", Value, "nome, numeric backend only")])
    .exact_sum(c3_spec, c3_rhs)
    .numeric(c3_nlhs, c3_nrhs)
    .validate(c3_validate)
    .instance(Exact, &[("a", "2")])
    .instance(Exact, &[("a", "-3")])
    .instance(Exact, &[("a", "1/2")])
    .instance(Numeric, &[("q", "3/10"), ("a", "17/10+3/5i")])
}

fn c3_validate(p: &Params, backend: Backend) -> Result<()> {
    match backend {
        Exact => {
            let a = p.mono("a")?;
            require_nonzero("a", &a)?;
            ensure(a.power == 0, "a must be a nonzero constant")?;
            require_not_one("a", &a)
        }
        Numeric => {
            let ctx = NumCtx::new(p, 30)?;
            let a = ctx.val(p, "a")?;
            require_inside_unit("q", &ctx.q)?;
            ensure(!a.is_zero(), "a must be nonzero")?;
            require_inside_unit("q/a^2", &ctx.q.div(&a.mul(&a)))
        }
    }
}

fn c3_spec(p: &Params) -> Result<SumSpec> {
    let a = p.mono("a")?;
    let qa = q1().div(&a);
    let a2 = a.mul(&a);
    Ok(SumSpec::new(
        IndexDomain::Ordered { len: 2 },
        move |level, idx| {
            let m = idx[0];
            if level == 0 {
                return Ok(QTerm::one().mul_poch(&a, m).div_qfac(m));
            }
            let n = idx[1];
            let d = m - n;
            Ok(QTerm::q_pow(d * d + n)
                .mul_poch(&a, n)
                .mul_poch(&qa, d)
                .div_qfac(n)
                .div_poch(&a, d)
                .div_qfac(d)
                .mul_mono_pow(&a2, -n))
        },
        |idx| match idx {
            [m] => *m,
            [m, n, ..] => (m - n) * (m - n) + n,
            [] => 0,
        },
    ))
}

fn c3_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let a = p.mono("a")?;
    let qa = q1().div(&a);
    let s = inf_prod(order, &[(qa.clone(), 1), (qa.clone(), 1)], &[(qa.div(&a), 1), (qp(1), 1)])?;
    series(&s * &inf_prod(order, &[], &[(qp(1), 5), (qp(4), 5)])?)
}

fn c3_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let a = ctx.val(p, "a")?;
    let qa = ctx.q.div(&a);
    let (mut ta, mut tq, mut tqa) = (ctx.table(&a), ctx.table(&ctx.q), ctx.table(&qa));
    let mut px = ctx.pows(&qa.div(&a));
    value(ctx.nested_sum(2, &mut |idx| {
        let (n, d) = (idx[0], idx[1]);
        let m = n + d;
        Ok(ta.get(m)?
            .mul(&ta.get(n)?)
            .mul(&tqa.get(d)?)
            .mul(&px.get(n))
            .mul(&ctx.qpow(d * d))
            .div(&tq.get(m)?.mul(&tq.get(n)?).mul(&ta.get(d)?).mul(&tq.get(d)?)))
    })?)
}

fn c3_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let a = ctx.val(p, "a")?;
    let qa = ctx.q.div(&a);
    let q5 = ctx.qpow(5);
    let rr = ctx.inf_base(&ctx.q, &q5)?.mul(&ctx.inf_base(&ctx.qpow(4), &q5)?);
    value(ctx.inf_ratio(&[&qa, &qa], &[&qa.div(&a), &ctx.q])?.div(&rr))
}

fn c5_zeta() -> IdentityStatement {
    IdentityStatement::new(
        "c5_zeta",
        "double sum weighted by 1/(m-n)^2, equal to zeta(2) (q/a,q/a;q)_inf/(q/a^2,q;q)_inf",
        "double sum evaluating to a multiple of zeta(2)",
        "The following amusing result",
    )
    .slots(&[slot("a", Value, "a != 0 with |q/a^2| < 1"), slot("q", Value, "nome")])
    .numeric(c5_nlhs, c5_nrhs)
    .validate(|p, _| {
        let ctx = NumCtx::new(p, 30)?;
        let a = ctx.val(p, "a")?;
        require_inside_unit("q", &ctx.q)?;
        ensure(!a.is_zero(), "a must be nonzero")?;
        require_inside_unit("q/a^2", &ctx.q.div(&a.mul(&a)))
    })
    .instance(Numeric, &[("q", "1/10"), ("a", "3")])
}

fn c5_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let a = ctx.val(p, "a")?;
    let qa = ctx.q.div(&a);
    let (mut ta, mut tq, mut tqa) = (ctx.table(&a), ctx.table(&ctx.q), ctx.table(&qa));
    let mut px = ctx.pows(&qa.div(&a));
    // w(k) = (q/a)_k/(a)_k sum_n (a)_{n+k} (a)_n / ((q)_{n+k} (q)_n) (q/a^2)^n
    // tends to a limit geometrically, so the k > K tail is w(K) times the
    // tail of zeta(2).
    let mut w = |k: i64| -> Result<BigComplex> {
        let inner = ctx.sum_up(|n| {
            Ok(ta.get(n + k)?
                .mul(&ta.get(n)?)
                .mul(&px.get(n))
                .div(&tq.get(n + k)?.mul(&tq.get(n)?)))
        })?;
        Ok(inner.mul(&tqa.get(k)?).div(&ta.get(k)?))
    };
    let rate = -ctx.q.abs_f64().log10();
    let big_k = ((digits as f64 + 5.0) / rate).ceil().max(digits as f64) as i64;
    let mut acc = BigComplex::zero(digits);
    let mut last = BigComplex::zero(digits);
    for k in 1..=big_k {
        last = w(k)?;
        acc = acc.add(&last.div(&BigComplex::from_i64(k * k, digits)));
    }
    value(acc.add(&last.mul(&inverse_square_tail(big_k as u64, digits))))
}

fn c5_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let a = ctx.val(p, "a")?;
    let qa = ctx.q.div(&a);
    let pre = ctx.inf_ratio(&[&qa, &qa], &[&qa.div(&a), &ctx.q])?;
    value(zeta2_constant(digits).mul(&pre))
}

#[cfg(test)]
mod tests {
    #[test]
    fn c33_constant_bounds_the_linear_part() {
        for k in 2..9i64 {
            for j in 0..k {
                let c = (j * j + 4 * (k - 1) - 1) / (4 * (k - 1));
                for d in -20..20 {
                    assert!((k - 1) * d * d + j * d >= -c, "k={k} j={j} d={d}");
                }
            }
        }
    }
}
