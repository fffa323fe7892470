//! The q-Gauss sum, the two double-sum theorems and their iterations to
//! nested multi-sums.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{build, ensure, g_at, series, value};
use crate::error::Result;
use crate::identities::params::{slot, ParamValue, Params, ParamsExt, SlotKind};
use crate::identities::support::*;
use crate::identities::{Backend, IdentityStatement, NumericSide};
use crate::numeric::{BigComplex, SumRange};
use crate::series::{qpoch_step, QMonomial, QSeries, QTerm};
use crate::summation::{IndexDomain, SumSpec};

use Backend::{Exact, Numeric};
use SlotKind::{List, Seq, Value};

pub(super) fn entries() -> Vec<IdentityStatement> {
    vec![
        q_gauss(),
        thm_t2(),
        thm_t3(),
        multc(),
        multcc(),
        multcfin(),
        multcinf(),
        multcinf2(),
        multcinf3(),
        multcr(),
        t3c4_whipple(),
        wq3f2(),
    ]
}

const Q: crate::identities::params::Slot = slot("q", Value, "nome, numeric backend only");

// ---------------------------------------------------------------- q-Gauss

fn q_gauss() -> IdentityStatement {
    IdentityStatement::new(
        "q_gauss",
        "sum (a,b;q)_n/(c,q;q)_n (c/ab)^n = (c/a,c/b;q)_inf/(c,c/ab;q)_inf",
        "q-Gauss sum",
        "we first recall the $q$-Gauss sum",
    )
    .slots(&[
        slot("a", Value, "numerator parameter"),
        slot("b", Value, "numerator parameter"),
        slot("c", Value, "denominator parameter"),
        Q,
    ])
    .exact_sum(q_gauss_spec, q_gauss_rhs)
    .numeric(q_gauss_nlhs, q_gauss_nrhs)
    .validate(q_gauss_validate)
    .instance(Exact, &[("a", "2"), ("b", "3"), ("c", "q")])
    .instance(Exact, &[("a", "q"), ("b", "-2"), ("c", "q^3")])
    .instance(Numeric, &[("q", "1/5"), ("a", "1/2"), ("b", "1/4"), ("c", "1/10")])
}

fn q_gauss_validate(p: &Params, backend: Backend) -> Result<()> {
    match backend {
        Exact => {
            let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
            for (n, m) in [("a", &a), ("b", &b), ("c", &c)] {
                require_nonzero(n, m)?;
            }
            require_nonneg("a", &a)?;
            require_nonneg("b", &b)?;
            require_positive_valuation("c/(ab)", &c.div(&a.mul(&b)))
        }
        Numeric => {
            let ctx = NumCtx::new(p, 30)?;
            require_inside_unit("q", &ctx.q)?;
            let (a, b, c) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?);
            require_inside_unit("c/(ab)", &c.div(&a.mul(&b)))
        }
    }
}

fn q_gauss_spec(p: &Params) -> Result<SumSpec> {
    let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
    let x = c.div(&a.mul(&b));
    let v = x.power;
    Ok(leaf_spec(
        IndexDomain::Unilateral,
        move |idx| {
            let n = idx[0];
            Ok(QTerm::one()
                .mul_poch(&a, n)
                .mul_poch(&b, n)
                .div_poch(&c, n)
                .div_qfac(n)
                .mul_mono_pow(&x, n))
        },
        move |idx| v * idx[0],
    ))
}

fn q_gauss_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    series(gauss_rhs(order, &p.mono("a")?, &p.mono("b")?, &p.mono("c")?)?)
}

fn q_gauss_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?);
    let x = c.div(&a.mul(&b));
    let (mut ta, mut tb, mut tc, mut tq) = (ctx.table(&a), ctx.table(&b), ctx.table(&c), ctx.table(&ctx.q));
    let mut px = ctx.pows(&x);
    value(ctx.sum_up(|n| {
        Ok(ta.get(n)?
            .mul(&tb.get(n)?)
            .mul(&px.get(n))
            .div(&tc.get(n)?.mul(&tq.get(n)?)))
    })?)
}

fn q_gauss_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?);
    value(num_gauss(&ctx, &a, &b, &c)?)
}

/// `(c/a, c/b; q)_inf / (c, c/(ab); q)_inf` at a numeric point.
fn num_gauss(ctx: &NumCtx, a: &BigComplex, b: &BigComplex, c: &BigComplex) -> Result<BigComplex> {
    ctx.inf_ratio(&[&c.div(a), &c.div(b)], &[c, &c.div(&a.mul(b))])
}

// ------------------------------------------------------------ bilateral double sum

fn thm_t2() -> IdentityStatement {
    IdentityStatement::new(
        "thm_t2",
        "double sum over m, n >= 0 with g(m-n) equals a product times the bilateral sum of g",
        "bilateral double-sum theorem",
        "any function such that both series",
    )
    .slots(&[
        slot("a", Value, "parameter a"),
        slot("g", Seq, "finitely supported g on Z (exact backend)"),
        slot("z", Value, "g(k) = q^(k^2) z^k (numeric backend)"),
        Q,
    ])
    .exact_sum(t2_spec, t2_rhs)
    .numeric(t2_nlhs, t2_nrhs)
    .validate(t2_validate)
    .random(t2_random)
    .instance(Exact, &[("a", "2"), ("g", "{-2: 1, 0: 3, 1: -1/2}")])
    .instance(Exact, &[("a", "-1/3"), ("g", "{-1: 2, 2: 5}")])
    .instance(Numeric, &[("q", "3/10"), ("a", "5/2"), ("z", "2/3")])
}

fn t2_validate(p: &Params, backend: Backend) -> Result<()> {
    match backend {
        Exact => {
            let a = p.mono("a")?;
            require_unit_param("a", &a)?;
            p.seq("g").map(|_| ())
        }
        Numeric => {
            let ctx = NumCtx::new(p, 30)?;
            require_inside_unit("q", &ctx.q)?;
            let a = ctx.val(p, "a")?;
            require_inside_unit("q/a^2", &ctx.q.div(&a.mul(&a)))
        }
    }
}

/// `a` enters as `(a;q)_k` in a denominator for both signs of `k`, so on
/// the exact backend it must be a nonzero constant other than 1.
fn require_unit_param(name: &str, a: &QMonomial) -> Result<()> {
    require_nonzero(name, a)?;
    ensure(a.power == 0, &format!("{name} must be a constant (q-power 0)"))?;
    require_not_one(name, a)
}

fn t2_spec(p: &Params) -> Result<SumSpec> {
    let a = p.mono("a")?;
    let g = p.seq("g")?;
    let smax = support_max(&g).max(0);
    let support = support_of(&g);
    Ok(SumSpec::new(
        IndexDomain::BilateralInner { len: 2 },
        move |level, idx| match level {
            0 => Ok(QTerm::one()),
            _ => Ok(bilateral_level(&a, idx[0], idx[1]).mul(&g_at(&g, idx[1]))),
        },
        move |idx| match *idx {
            [m] => (m - smax).max(0),
            [m, k] => m - k.max(0),
            _ => unreachable!(),
        },
    )
    .with_support(support))
}

/// `(q/a, q/a; q)_inf / (q, q/a^2; q)_inf`.
fn bilateral_prefactor(order: usize, a: &QMonomial) -> Result<QSeries> {
    let qa = q1().div(a);
    gauss_prod(order, &qa, &qa, &q1(), &qa.div(a))
}

fn t2_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    let s = bilateral_prefactor(order, &p.mono("a")?)?;
    series(s.scalar_mul(&seq_total(&p.seq("g")?)))
}

fn t2_random(rng: &mut ChaCha8Rng, backend: Backend) -> Option<Params> {
    if backend != Exact {
        return None;
    }
    let a = QMonomial::constant(random_unit_free(rng));
    Some(build(vec![("a", ParamValue::Mono(a)), ("g", random_seq(rng, -3, 3, 3))]))
}

fn t2_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, z) = (ctx.val(p, "a")?, ctx.val(p, "z")?);
    let qa = ctx.q.div(&a);
    let x = qa.div(&a);
    let (mut ta, mut tq, mut tqa) = (ctx.table(&a), ctx.table(&ctx.q), ctx.table(&qa));
    let mut px = ctx.pows(&x);
    value(ctx.nested_sum(2, &mut |idx| {
        let (m, n) = (idx[0], idx[1]);
        let k = m - n;
        let g = ctx.qpow(k * k).mul(&z.powi(k));
        Ok(ta.get(m)?
            .mul(&ta.get(n)?)
            .mul(&tqa.get(k)?)
            .mul(&px.get(n))
            .mul(&g)
            .div(&tq.get(m)?.mul(&tq.get(n)?).mul(&ta.get(k)?)))
    })?)
}

fn t2_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, z) = (ctx.val(p, "a")?, ctx.val(p, "z")?);
    let qa = ctx.q.div(&a);
    let pre = ctx.inf_ratio(&[&qa, &qa], &[&ctx.q, &qa.div(&a)])?;
    let s = ctx.sum(SumRange::Bilateral, |k| Ok(ctx.qpow(k * k).mul(&z.powi(k))))?;
    value(pre.mul(&s))
}

// ------------------------------------------------------------ unilateral double sum

fn thm_t3() -> IdentityStatement {
    IdentityStatement::new(
        "thm_t3",
        "double sum over m >= n >= 0 with g(m-n) equals the q-Gauss product times the sum of g",
        "unilateral double-sum theorem",
        "Set $m-n=k$ or $m=n+k$",
    )
    .slots(&[
        slot("a", Value, "parameter a"),
        slot("b", Value, "parameter b"),
        slot("c", Value, "parameter c"),
        slot("g", Seq, "finitely supported g on n >= 0 (exact backend)"),
        slot("z", Value, "g(k) = q^(k^2) z^k (numeric backend)"),
        Q,
    ])
    .exact_sum(t3_spec, t3_rhs)
    .numeric(t3_nlhs, t3_nrhs)
    .validate(t3_validate)
    .random(t3_random)
    .instance(Exact, &[("a", "2"), ("b", "3"), ("c", "q"), ("g", "{0: 1, 1: -2, 3: 1/2}")])
    .instance(Exact, &[("a", "-1/2"), ("b", "q"), ("c", "3q^3"), ("g", "{1: 1, 2: 4}")])
    .instance(Numeric, &[("q", "1/5"), ("a", "1/2"), ("b", "1/4"), ("c", "1/10"), ("z", "2/3")])
}

fn t3_validate(p: &Params, backend: Backend) -> Result<()> {
    match backend {
        Exact => {
            check_gauss_level(1, &p.mono("a")?, &p.mono("b")?, &p.mono("c")?)?;
            require_unilateral(&p.seq("g")?)
        }
        Numeric => q_gauss_validate(p, Numeric),
    }
}

fn t3_spec(p: &Params) -> Result<SumSpec> {
    let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
    let g = p.seq("g")?;
    let x = c.div(&a.mul(&b));
    let v = x.power;
    let cb = c.div(&b);
    let smax = support_max(&g);
    let support = support_of(&g);
    Ok(SumSpec::new(
        IndexDomain::Ordered { len: 2 },
        move |level, idx| match level {
            0 => Ok(QTerm::one().mul_poch(&a, idx[0]).div_poch(&c, idx[0])),
            _ => {
                let (m, k) = (idx[0], idx[1]);
                let d = m - k;
                Ok(QTerm::one()
                    .mul_poch(&b, d)
                    .mul_poch(&cb, k)
                    .div_qfac(d)
                    .div_poch(&a, k)
                    .mul_mono_pow(&x, d)
                    .mul(&g_at(&g, k)))
            }
        },
        move |idx| match *idx {
            [m] => v * (m - smax).max(0),
            [m, k] => v * (m - k),
            _ => unreachable!(),
        },
    )
    .with_support(support))
}

fn t3_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    let s = gauss_rhs(order, &p.mono("a")?, &p.mono("b")?, &p.mono("c")?)?;
    series(s.scalar_mul(&seq_total(&p.seq("g")?)))
}

fn t3_random(rng: &mut ChaCha8Rng, backend: Backend) -> Option<Params> {
    if backend != Exact {
        return None;
    }
    let (a, b, c) = random_gauss_level(rng);
    Some(build(vec![
        ("a", ParamValue::Mono(a)),
        ("b", ParamValue::Mono(b)),
        ("c", ParamValue::Mono(c)),
        ("g", random_seq(rng, 0, 4, 3)),
    ]))
}

fn t3_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c, z) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?, ctx.val(p, "z")?);
    let x = c.div(&a.mul(&b));
    let cb = c.div(&b);
    let (mut ta, mut tb, mut tc, mut tq, mut tcb) =
        (ctx.table(&a), ctx.table(&b), ctx.table(&c), ctx.table(&ctx.q), ctx.table(&cb));
    let mut px = ctx.pows(&x);
    // Outer index k = m - n, inner n.
    value(ctx.nested_sum(2, &mut |idx| {
        let (k, n) = (idx[0], idx[1]);
        let m = n + k;
        let g = ctx.qpow(k * k).mul(&z.powi(k));
        Ok(ta.get(m)?
            .mul(&tb.get(n)?)
            .mul(&tcb.get(k)?)
            .mul(&px.get(n))
            .mul(&g)
            .div(&tc.get(m)?.mul(&tq.get(n)?).mul(&ta.get(k)?)))
    })?)
}

fn t3_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c, z) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?, ctx.val(p, "z")?);
    let s = ctx.sum_up(|k| Ok(ctx.qpow(k * k).mul(&z.powi(k))))?;
    value(num_gauss(&ctx, &a, &b, &c)?.mul(&s))
}

// ------------------------------------------------- multi-sum theorems

/// The lists `a`, `b`, `c` of one q-Gauss level each, validated, with the
/// valuations of `c_j/(a_j b_j)`.
struct Levels {
    a: Vec<QMonomial>,
    b: Vec<QMonomial>,
    c: Vec<QMonomial>,
    v: Vec<i64>,
}

fn levels(p: &Params, names: [&str; 3], min_len: usize) -> Result<Levels> {
    let a = p.list(names[0])?;
    let k = a.len();
    ensure(k >= min_len && k <= 6, &format!("{} must have between {min_len} and 6 entries", names[0]))?;
    let b = mono_list(p, names[1], k)?;
    let c = mono_list(p, names[2], k)?;
    let mut v = Vec::with_capacity(k);
    for j in 0..k {
        v.push(check_gauss_level(j + 1, &a[j], &b[j], &c[j])?);
    }
    Ok(Levels { a, b, c, v })
}

impl Levels {
    fn rhs(&self, order: usize) -> Result<QSeries> {
        let mut s = QSeries::one(order);
        for j in 0..self.a.len() {
            s = &s * &gauss_rhs(order, &self.a[j], &self.b[j], &self.c[j])?;
        }
        Ok(s)
    }

    fn level(&self, j: usize, m: i64, n: i64) -> QTerm {
        gauss_level(&self.a[j], &self.b[j], &self.c[j], m, n)
    }

    fn vmin(&self) -> i64 {
        self.v.iter().copied().min().unwrap_or(1)
    }

    /// `sum v_j (m_j - m_{j+1})` over the gaps fully inside `idx`.
    fn known(&self, idx: &[i64]) -> i64 {
        (0..self.v.len().min(idx.len().saturating_sub(1)))
            .map(|j| self.v[j] * (idx[j] - idx[j + 1]))
            .sum()
    }

    fn params(self) -> Vec<(&'static str, ParamValue)> {
        vec![
            ("a", ParamValue::List(self.a)),
            ("b", ParamValue::List(self.b)),
            ("c", ParamValue::List(self.c)),
        ]
    }
}

fn random_levels(rng: &mut ChaCha8Rng, k: usize) -> Levels {
    let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
    for _ in 0..k {
        let (x, y, z) = random_gauss_level(rng);
        a.push(x);
        b.push(y);
        c.push(z);
    }
    Levels { a, b, c, v: Vec::new() }
}

fn multc() -> IdentityStatement {
    IdentityStatement::new(
        "multc",
        "k-fold nested sum of q-Gauss levels with g at the innermost index",
        "unilateral multi-sum transformation",
        "over all integer  $k+1$-tuples",
    )
    .slots(&[
        slot("a", List, "a_1..a_k"),
        slot("b", List, "b_1..b_k"),
        slot("c", List, "c_1..c_k"),
        slot("g", Seq, "finitely supported g on n >= 0"),
    ])
    .exact_sum(multc_spec, multc_rhs)
    .validate(multc_validate)
    .random(multc_random)
    .instance(Exact, &[("a", "[2]"), ("b", "[3]"), ("c", "[q]"), ("g", "{0: 1, 1: -2, 3: 1/2}")])
    .instance(
        Exact,
        &[("a", "[2, q]"), ("b", "[-3, 1/2]"), ("c", "[q, 2q^3]"), ("g", "{0: 1, 2: 3}")],
    )
    .instance(
        Exact,
        &[("a", "[2, q, -1/2]"), ("b", "[3, q, 2]"), ("c", "[q^2, q^3, q]"), ("g", "{0: 2, 1: -1}")],
    )
}

fn multc_validate(p: &Params, _: Backend) -> Result<()> {
    levels(p, ["a", "b", "c"], 1)?;
    require_unilateral(&p.seq("g")?)
}

/// Shared by the unilateral multi-sums: gauss levels between consecutive
/// indices, `last(t)` multiplied in at the innermost index, and the bound
/// `known + rest(m_p)` on a proper prefix ending in `m_p`.
fn gauss_chain(
    lv: Levels,
    last: impl Fn(i64) -> QTerm + Send + Sync + 'static,
    last_bound: impl Fn(i64) -> i64 + Send + Sync + 'static,
    rest: impl Fn(i64) -> i64 + Send + Sync + 'static,
) -> SumSpec {
    let k = lv.a.len();
    let lv = std::sync::Arc::new(lv);
    let lb = lv.clone();
    SumSpec::new(
        IndexDomain::Ordered { len: k + 1 },
        move |level, idx| {
            if level == 0 {
                return Ok(QTerm::one());
            }
            let t = lv.level(level - 1, idx[level - 1], idx[level]);
            Ok(if level == k { t.mul(&last(idx[k])) } else { t })
        },
        move |idx| {
            let known = lb.known(idx);
            if idx.len() == k + 1 {
                known + last_bound(idx[k])
            } else {
                known + rest(idx[idx.len() - 1])
            }
        },
    )
}

fn multc_spec(p: &Params) -> Result<SumSpec> {
    let lv = levels(p, ["a", "b", "c"], 1)?;
    let g = p.seq("g")?;
    let smax = support_max(&g);
    let vmin = lv.vmin();
    let support = support_of(&g);
    Ok(gauss_chain(lv, move |t| g_at(&g, t), |_| 0, move |m| vmin * (m - smax).max(0)).with_support(support))
}

fn multc_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    let lv = levels(p, ["a", "b", "c"], 1)?;
    series(lv.rhs(order)?.scalar_mul(&seq_total(&p.seq("g")?)))
}

fn multc_random(rng: &mut ChaCha8Rng, backend: Backend) -> Option<Params> {
    if backend != Exact {
        return None;
    }
    let k = rng.gen_range(1..=3);
    let mut v = random_levels(rng, k).params();
    v.push(("g", random_seq(rng, 0, 4, 3)));
    Some(build(v))
}

fn multcr() -> IdentityStatement {
    IdentityStatement::new(
        "multcr",
        "the multi-sum transformation with g(j) = q^(j^2)/(q;q)_j, summed by Rogers-Ramanujan",
        "multi-sum with the first Rogers-Ramanujan sequence",
        "g(j) = \\frac{q^{j^2}}{(q;q)_j}",
    )
    .slots(&[slot("a", List, "a_1..a_k"), slot("b", List, "b_1..b_k"), slot("c", List, "c_1..c_k")])
    .exact_sum(multcr_spec, multcr_rhs)
    .validate(|p, _| levels(p, ["a", "b", "c"], 1).map(|_| ()))
    .instance(Exact, &[("a", "[2]"), ("b", "[3]"), ("c", "[q]")])
    .instance(Exact, &[("a", "[2, q]"), ("b", "[-3, 1/2]"), ("c", "[q, 2q^3]")])
}

fn multcr_spec(p: &Params) -> Result<SumSpec> {
    let lv = levels(p, ["a", "b", "c"], 1)?;
    let vmin = lv.vmin();
    // min over t of vmin (m - t) + t^2
    let rest = move |m: i64| (vmin * m - vmin * vmin / 4).max(0);
    Ok(gauss_chain(lv, |t| QTerm::q_pow(t * t).div_qfac(t), |t| t * t, rest))
}

fn multcr_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    let lv = levels(p, ["a", "b", "c"], 1)?;
    let rr = inf_prod(order, &[], &[(qp(1), 5), (qp(4), 5)])?;
    series(&lv.rhs(order)? * &rr)
}

fn multcc() -> IdentityStatement {
    IdentityStatement::new(
        "multcc",
        "nested q-Gauss levels closed by a bilateral innermost sum",
        "bilateral multi-sum transformation",
        "results in a bilateral infinite series",
    )
    .slots(&[
        slot("a", Value, "parameter a of the bilateral level"),
        slot("aj", List, "a_1..a_(k-1)"),
        slot("bj", List, "b_1..b_(k-1)"),
        slot("cj", List, "c_1..c_(k-1)"),
        slot("g", Seq, "finitely supported g on Z"),
    ])
    .exact_sum(multcc_spec, multcc_rhs)
    .validate(multcc_validate)
    .random(multcc_random)
    .instance(Exact, &[("a", "2"), ("aj", "[]"), ("bj", "[]"), ("cj", "[]"), ("g", "{-2: 1, 0: 3, 1: -1/2}")])
    .instance(Exact, &[("a", "-3"), ("aj", "[2]"), ("bj", "[3]"), ("cj", "[q]"), ("g", "{-1: 2, 2: 1}")])
}

fn multcc_validate(p: &Params, _: Backend) -> Result<()> {
    levels(p, ["aj", "bj", "cj"], 0)?;
    require_unit_param("a", &p.mono("a")?)?;
    p.seq("g").map(|_| ())
}

fn multcc_spec(p: &Params) -> Result<SumSpec> {
    let lv = levels(p, ["aj", "bj", "cj"], 0)?;
    let a = p.mono("a")?;
    let g = p.seq("g")?;
    let s = support_max(&g).max(0);
    let support = support_of(&g);
    let k = lv.a.len() + 1;
    let lv = std::sync::Arc::new(lv);
    let lb = lv.clone();
    Ok(SumSpec::new(
        IndexDomain::BilateralInner { len: k + 1 },
        move |level, idx| {
            if level == 0 {
                Ok(QTerm::one())
            } else if level < k {
                Ok(lv.level(level - 1, idx[level - 1], idx[level]))
            } else {
                Ok(bilateral_level(&a, idx[k - 1], idx[k]).mul(&g_at(&g, idx[k])))
            }
        },
        move |idx| {
            let known = lb.known(idx);
            if idx.len() == k + 1 {
                known + idx[k - 1] - idx[k].max(0)
            } else {
                known + (idx[idx.len() - 1] - s).max(0)
            }
        },
    )
    .with_support(support))
}

fn multcc_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    let lv = levels(p, ["aj", "bj", "cj"], 0)?;
    let pre = bilateral_prefactor(order, &p.mono("a")?)?;
    series((&pre * &lv.rhs(order)?).scalar_mul(&seq_total(&p.seq("g")?)))
}

fn multcc_random(rng: &mut ChaCha8Rng, backend: Backend) -> Option<Params> {
    if backend != Exact {
        return None;
    }
    let k = rng.gen_range(1..=2);
    let lv = random_levels(rng, k - 1);
    let a = QMonomial::constant(random_unit_free(rng));
    Some(build(vec![
        ("a", ParamValue::Mono(a)),
        ("aj", ParamValue::List(lv.a)),
        ("bj", ParamValue::List(lv.b)),
        ("cj", ParamValue::List(lv.c)),
        ("g", random_seq(rng, -3, 3, 3)),
    ]))
}

// ------------------------------------------------------------- multcfin

fn multcfin() -> IdentityStatement {
    IdentityStatement::new(
        "multcfin",
        "the multi-sum transformation at a_j = q^(-n_j), g = delta: a finite product",
        "finite-product specialization",
        "provided either the multi-sum terminates",
    )
    .slots(&[
        slot("n", List, "positive integers n_1..n_k"),
        slot("b", List, "b_1..b_k"),
        slot("c", List, "c_1..c_k"),
    ])
    .exact_sum(multcfin_spec, multcfin_rhs)
    .validate(|p, _| multcfin_params(p).map(|_| ()))
    .instance(Exact, &[("n", "[3, 2]"), ("b", "[2, 3]"), ("c", "[2q, q]")])
    .instance(Exact, &[("n", "[2, 3]"), ("b", "[2, 3]"), ("c", "[2q, q]")])
}

type FinParams = (Vec<i64>, Vec<QMonomial>, Vec<QMonomial>, Vec<i64>);

fn multcfin_params(p: &Params) -> Result<FinParams> {
    let n = int_list(p, "n")?;
    let k = n.len();
    ensure((1..=6).contains(&k), "n must have between 1 and 6 entries")?;
    ensure(n.iter().all(|&x| x >= 1), "each n_j must be a positive integer")?;
    let b = mono_list(p, "b", k)?;
    let c = mono_list(p, "c", k)?;
    let mut v = Vec::new();
    for j in 0..k {
        require_nonzero(&format!("b_{}", j + 1), &b[j])?;
        require_nonzero(&format!("c_{}", j + 1), &c[j])?;
        require_nonneg(&format!("b_{}", j + 1), &b[j])?;
        let cb = c[j].div(&b[j]);
        require_positive_valuation(&format!("c_{0}/b_{0}", j + 1), &cb)?;
        v.push(cb.power);
    }
    Ok((n, b, c, v))
}

fn multcfin_spec(p: &Params) -> Result<SumSpec> {
    let (n, b, c, v) = multcfin_params(p)?;
    let k = n.len();
    Ok(SumSpec::new(
        IndexDomain::Ordered { len: k },
        move |level, idx| {
            let mut t = QTerm::one();
            if level >= 1 {
                let j = level - 1;
                let (m, m1) = (idx[j], idx[j + 1]);
                let d = m - m1;
                let cb = c[j].div(&b[j]);
                t = t
                    .mul_poch(&qp(m1 - n[j]), d)
                    .mul_poch(&b[j], d)
                    .mul_poch(&cb, m1)
                    .div_poch(&c[j], m)
                    .div_qfac(d)
                    .mul_mono_pow(&cb.shifted(n[j]), d);
            }
            if level == k - 1 {
                let m = idx[level];
                let cb = c[level].div(&b[level]);
                t = t
                    .mul_poch(&qp(-n[level]), m)
                    .mul_poch(&b[level], m)
                    .div_poch(&c[level], m)
                    .div_qfac(m)
                    .mul_mono_pow(&cb.shifted(n[level]), m);
            }
            Ok(t)
        },
        move |idx| {
            let p = idx.len();
            let known: i64 = (0..p - 1).map(|j| v[j] * (idx[j] - idx[j + 1])).sum();
            if p == k {
                known + v[k - 1] * idx[k - 1]
            } else {
                known + idx[p - 1]
            }
        },
    ))
}

fn multcfin_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    let (n, b, c, _) = multcfin_params(p)?;
    let mut s = QSeries::one(order);
    for j in 0..n.len() {
        let len = Some(n[j] as usize);
        let top = qpoch_step(&c[j].div(&b[j]), 1, len, order)?;
        let bot = qpoch_step(&c[j], 1, len, order)?;
        s = &(&s * &top) * &bot.invert()?;
    }
    series(s)
}

/// Whether the multcfin sum has finitely many nonzero terms:
/// exactly when `n_1 >= n_2 >= ... >= n_k`.
pub fn multcfin_terminates(n: &[i64]) -> bool {
    n.windows(2).all(|w| w[0] >= w[1])
}

/// The index tuples with `m_1 <= max_m1` whose multcfin summand is not
/// identically zero, found by building each summand.
pub fn multcfin_nonzero(p: &Params, max_m1: i64) -> Result<Vec<Vec<i64>>> {
    let spec = multcfin_spec(p)?;
    let k = spec.len();
    let mut out = Vec::new();
    let mut idx = vec![0i64; k];
    fn rec(spec: &SumSpec, idx: &mut Vec<i64>, level: usize, top: i64, out: &mut Vec<Vec<i64>>) -> Result<()> {
        if level == idx.len() {
            if !spec.term_at(idx)?.is_zero() {
                out.push(idx.clone());
            }
            return Ok(());
        }
        for v in 0..=top {
            idx[level] = v;
            rec(spec, idx, level + 1, v, out)?;
        }
        Ok(())
    }
    rec(&spec, &mut idx, 0, max_m1, &mut out)?;
    Ok(out)
}

// ------------------------------------------------- Chu-type summations

fn multcinf() -> IdentityStatement {
    IdentityStatement::new(
        "multcinf",
        "independent-index form of the multi-sum with g = delta",
        "independent-index summation formula",
        "gives rise to the summation formula",
    )
    .slots(&[
        slot("a", List, "a_1..a_k"),
        slot("x", List, "x_1..x_k"),
        slot("y", List, "y_1..y_k"),
        Q,
    ])
    .numeric(multcinf_nlhs, multcinf_nrhs)
    .validate(|p, _| chu_validate(p, "a"))
    .instance(Numeric, &[("q", "3/10"), ("a", "[2, 3]"), ("x", "[1/2, 1/4]"), ("y", "[2/5, 3/5]")])
}

fn multcinf2() -> IdentityStatement {
    IdentityStatement::new(
        "multcinf2",
        "the independent-index summation with every a_j equal to a",
        "equal-parameter case of the summation formula",
        "was stated by Chu",
    )
    .slots(&[slot("a", Value, "common parameter a"), slot("x", List, "x_1..x_k"), slot("y", List, "y_1..y_k"), Q])
    .numeric(multcinf2_nlhs, multcinf2_nrhs)
    .validate(|p, _| chu_validate(p, ""))
    .instance(Numeric, &[("q", "3/10"), ("a", "5/2"), ("x", "[1/2, 1/4]"), ("y", "[2/5, 3/5]")])
}

/// Numeric lists `(a, x, y)`; with `a_name` empty the scalar `a` is
/// repeated.
fn chu_lists(ctx: &NumCtx, p: &Params, a_name: &str) -> Result<(Vec<BigComplex>, Vec<BigComplex>, Vec<BigComplex>)> {
    let x = ctx.list(p, "x")?;
    let y = ctx.list(p, "y")?;
    ensure(x.len() == y.len() && !x.is_empty() && x.len() <= 3, "x and y must have equal length 1..3")?;
    let a = if a_name.is_empty() {
        vec![ctx.val(p, "a")?; x.len()]
    } else {
        ctx.list(p, a_name)?
    };
    ensure(a.len() == x.len(), "a must have one entry per level")?;
    Ok((a, x, y))
}

fn chu_validate(p: &Params, a_name: &str) -> Result<()> {
    let ctx = NumCtx::new(p, 30)?;
    require_inside_unit("q", &ctx.q)?;
    let (a, x, y) = chu_lists(&ctx, p, a_name)?;
    for j in 0..x.len() {
        require_inside_unit(&format!("y_{0}/a_{0}", j + 1), &y[j].div(&a[j]))?;
        require_inside_unit(&format!("x_{}", j + 1), &x[j])?;
    }
    Ok(())
}

/// `M_j = m_j + ... + m_k`, with a trailing 0.
fn suffix_sums(m: &[i64]) -> Vec<i64> {
    let mut out = vec![0; m.len() + 1];
    for j in (0..m.len()).rev() {
        out[j] = out[j + 1] + m[j];
    }
    out
}

fn multcinf_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, x, y) = chu_lists(&ctx, p, "a")?;
    let k = x.len();
    value(ctx.nested_sum(k, &mut |m| {
        let big = suffix_sums(m);
        let mut t = ctx.one();
        for j in 0..k {
            let xy = x[j].div(&y[j]);
            t = t
                .mul(&ctx.poch(&a[j], big[j])?)
                .mul(&ctx.poch(&y[j], big[j + 1])?)
                .mul(&ctx.poch(&xy, m[j])?)
                .mul(&y[j].div(&a[j]).powi(m[j]))
                .div(&ctx.poch(&x[j], big[j])?.mul(&ctx.poch(&a[j], big[j + 1])?).mul(&ctx.poch(&ctx.q, m[j])?));
        }
        Ok(t)
    })?)
}

fn chu_rhs(ctx: &NumCtx, a: &[BigComplex], x: &[BigComplex], y: &[BigComplex]) -> Result<BigComplex> {
    let mut r = ctx.one();
    for j in 0..x.len() {
        r = r.mul(&ctx.inf_ratio(&[&x[j].div(&a[j]), &y[j]], &[&x[j], &y[j].div(&a[j])])?);
    }
    Ok(r)
}

fn multcinf_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, x, y) = chu_lists(&ctx, p, "a")?;
    value(chu_rhs(&ctx, &a, &x, &y)?)
}

fn multcinf2_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let a = ctx.val(p, "a")?;
    let (_, x, y) = chu_lists(&ctx, p, "")?;
    let k = x.len();
    value(ctx.nested_sum(k, &mut |m| {
        let big = suffix_sums(m);
        let mut t = ctx.poch(&a, big[0])?;
        for j in 0..k {
            let xy = x[j].div(&y[j]);
            t = t
                .mul(&ctx.poch(&y[j], big[j + 1])?)
                .mul(&ctx.poch(&xy, m[j])?)
                .mul(&y[j].div(&a).powi(m[j]))
                .div(&ctx.poch(&x[j], big[j])?.mul(&ctx.poch(&ctx.q, m[j])?));
        }
        Ok(t)
    })?)
}

fn multcinf2_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, x, y) = chu_lists(&ctx, p, "")?;
    value(chu_rhs(&ctx, &a, &x, &y)?)
}

fn multcinf3() -> IdentityStatement {
    IdentityStatement::new(
        "multcinf3",
        "limit y_j -> 0, a -> infinity of the equal-parameter summation",
        "limiting case of the summation formula",
        "also stated by Chu",
    )
    .slots(&[slot("x", List, "x_1..x_k, each of q-valuation >= 1")])
    .exact_sum(multcinf3_spec, multcinf3_rhs)
    .validate(|p, _| multcinf3_params(p).map(|_| ()))
    .instance(Exact, &[("x", "[q]")])
    .instance(Exact, &[("x", "[q, q^2]")])
    .instance(Exact, &[("x", "[q, q^2, q^3]")])
}

fn multcinf3_params(p: &Params) -> Result<Vec<QMonomial>> {
    let x = p.list("x")?;
    ensure((1..=4).contains(&x.len()), "x must have between 1 and 4 entries")?;
    for (j, m) in x.iter().enumerate() {
        require_nonzero(&format!("x_{}", j + 1), m)?;
        require_positive_valuation(&format!("x_{}", j + 1), m)?;
    }
    Ok(x)
}

fn multcinf3_spec(p: &Params) -> Result<SumSpec> {
    let x = multcinf3_params(p)?;
    let k = x.len();
    let e: Vec<i64> = x.iter().map(|m| m.power).collect();
    Ok(SumSpec::new(
        IndexDomain::Independent { len: k },
        move |level, idx| {
            let m = idx[level];
            let mut t = QTerm::one().mul_mono_pow(&x[level], m).mul_q_pow(m * (m - 1) / 2).div_qfac(m);
            if level == k - 1 {
                let big = suffix_sums(idx);
                t = t.mul_q_pow(big[0] * (big[0] - 1) / 2);
                for j in 0..k {
                    t = t.div_poch(&x[j], big[j]);
                }
            }
            Ok(t)
        },
        move |idx| {
            let s: i64 = idx.iter().sum();
            idx.iter().zip(&e).map(|(m, e)| m * e + m * (m - 1) / 2).sum::<i64>() + s * (s - 1) / 2
        },
    ))
}

fn multcinf3_rhs(p: &Params, order: usize) -> Result<crate::identities::ExactSide> {
    let x = multcinf3_params(p)?;
    let den: Vec<(QMonomial, i64)> = x.into_iter().map(|m| (m, 1)).collect();
    series(inf_prod(order, &[], &den)?)
}

// ----------------------------------------------------------- Whipple

const WHIPPLE_SLOTS: [crate::identities::params::Slot; 4] = [
    slot("a", Value, "parameter a"),
    slot("c", Value, "parameter c, |c| < 1"),
    slot("d", Value, "parameter d"),
    Q,
];

fn t3c4_whipple() -> IdentityStatement {
    let mut slots = WHIPPLE_SLOTS.to_vec();
    slots.extend([
        slot("A", Value, "outer parameter A"),
        slot("B", Value, "outer parameter B"),
        slot("C", Value, "outer parameter C"),
    ]);
    IdentityStatement::new(
        "t3c4_whipple",
        "the unilateral double-sum theorem fed with the terms of the q-Whipple sum",
        "double sum from the q-analogue of Whipple's sum",
        "use the $q$-analogue of Whipple's",
    )
    .slots(&slots)
    .numeric(t3c4_nlhs, t3c4_nrhs)
    .validate(whipple_validate)
    .instance(
        Numeric,
        &[
            ("q", "1/5"),
            ("a", "7/10"),
            ("c", "3/10"),
            ("d", "9/20"),
            ("A", "3/5"),
            ("B", "1/2"),
            ("C", "3/20"),
        ],
    )
}

fn wq3f2() -> IdentityStatement {
    IdentityStatement::new(
        "wq3f2",
        "q-analogue of Whipple's 3F2 sum",
        "q-Whipple summation",
        "use the $q$-analogue of Whipple's",
    )
    .slots(&WHIPPLE_SLOTS)
    .numeric(wq3f2_nlhs, wq3f2_nrhs)
    .validate(whipple_validate)
    .instance(Numeric, &[("q", "1/5"), ("a", "7/10"), ("c", "3/10"), ("d", "9/20")])
    .instance(Numeric, &[("q", "-1/3"), ("a", "2"), ("c", "-1/4"), ("d", "3/2")])
}

fn whipple_validate(p: &Params, _: Backend) -> Result<()> {
    let ctx = NumCtx::new(p, 30)?;
    require_inside_unit("q", &ctx.q)?;
    require_inside_unit("c", &ctx.val(p, "c")?)?;
    if p.contains_key("C") {
        let (a, b, c) = (ctx.val(p, "A")?, ctx.val(p, "B")?, ctx.val(p, "C")?);
        require_inside_unit("C/(AB)", &c.div(&a.mul(&b)))?;
    }
    Ok(())
}

/// Term tables of the q-Whipple sum, including `1/(q;q)_k`.
struct Whipple {
    num: Vec<crate::numeric::PochTable>,
    den: Vec<crate::numeric::PochTable>,
    c: crate::numeric::PowTable,
}

impl Whipple {
    fn new(ctx: &NumCtx, p: &Params) -> Result<Self> {
        let (a, c, d) = (ctx.val(p, "a")?, ctx.val(p, "c")?, ctx.val(p, "d")?);
        let q = &ctx.q;
        let s = c.neg().sqrt();
        let qs = q.mul(&s);
        let num = [c.neg(), qs.clone(), qs.neg(), a.clone(), q.div(&a), c.clone(), d.neg(), q.div(&d).neg()];
        let den = [
            s.clone(),
            s.neg(),
            c.mul(q).div(&a).neg(),
            a.mul(&c).neg(),
            q.neg(),
            c.mul(q).div(&d),
            c.mul(&d),
            q.clone(),
        ];
        Ok(Whipple {
            num: num.iter().map(|x| ctx.table(x)).collect(),
            den: den.iter().map(|x| ctx.table(x)).collect(),
            c: ctx.pows(&c),
        })
    }

    fn term(&mut self, k: i64) -> Result<BigComplex> {
        let mut t = self.c.get(k);
        for tb in &mut self.num {
            t = t.mul(&tb.get(k)?);
        }
        for tb in &mut self.den {
            t = t.div(&tb.get(k)?);
        }
        Ok(t)
    }
}

fn whipple_product(ctx: &NumCtx, p: &Params) -> Result<BigComplex> {
    let (a, c, d) = (ctx.val(p, "a")?, ctx.val(p, "c")?, ctx.val(p, "d")?);
    let q = &ctx.q;
    let q2 = q.mul(q);
    let cq = c.mul(q);
    let mut r = ctx.inf_ratio(
        &[&c.neg(), &cq.neg()],
        &[&c.mul(&d), &cq.div(&d), &a.mul(&c).neg(), &cq.div(&a).neg()],
    )?;
    for x in [a.mul(&c).mul(&d), a.mul(&cq).div(&d), c.mul(&d).mul(q).div(&a), cq.mul(q).div(&a.mul(&d))] {
        r = r.mul(&ctx.inf_base(&x, &q2)?);
    }
    Ok(r)
}

fn wq3f2_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let mut w = Whipple::new(&ctx, p)?;
    value(ctx.sum_up(|k| w.term(k))?)
}

fn wq3f2_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    value(whipple_product(&ctx, p)?)
}

fn t3c4_nlhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c) = (ctx.val(p, "A")?, ctx.val(p, "B")?, ctx.val(p, "C")?);
    let mut w = Whipple::new(&ctx, p)?;
    let x = c.div(&a.mul(&b));
    let cb = c.div(&b);
    let (mut ta, mut tb, mut tc, mut tq, mut tcb) =
        (ctx.table(&a), ctx.table(&b), ctx.table(&c), ctx.table(&ctx.q), ctx.table(&cb));
    let mut px = ctx.pows(&x);
    value(ctx.nested_sum(2, &mut |idx| {
        let (k, n) = (idx[0], idx[1]);
        let m = n + k;
        Ok(w.term(k)?
            .mul(&tcb.get(k)?)
            .mul(&ta.get(m)?)
            .mul(&tb.get(n)?)
            .mul(&px.get(n))
            .div(&ta.get(k)?.mul(&tc.get(m)?).mul(&tq.get(n)?)))
    })?)
}

fn t3c4_nrhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c) = (ctx.val(p, "A")?, ctx.val(p, "B")?, ctx.val(p, "C")?);
    value(num_gauss(&ctx, &a, &b, &c)?.mul(&whipple_product(&ctx, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffix_sums_trail_zero() {
        assert_eq!(suffix_sums(&[1, 2, 3]), vec![6, 5, 3, 0]);
    }

    #[test]
    fn termination_criterion() {
        assert!(multcfin_terminates(&[3, 2]));
        assert!(!multcfin_terminates(&[2, 3]));
        assert!(multcfin_terminates(&[4]));
    }
}
