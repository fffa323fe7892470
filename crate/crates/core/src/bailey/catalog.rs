//! Catalog entries for the restricted-pair transformation, the companion
//! identities it produces, and the pair relations themselves.

use rand::Rng;

use super::pairs::{limited_pair, limited_pair_numeric, wp_pair, LimitedPair, WpPairKind};
use super::{num_beta_from_alpha, wp_transform_sides};
use crate::error::Result;
use crate::identities::catalog::{build, ensure, int_in, series, value};
use crate::identities::params::{slot, ParamValue, Params, ParamsExt, Slot, SlotKind};
use crate::identities::support::*;
use crate::identities::{Backend, ExactSide, IdentityStatement, NumericSide};
use crate::numeric::BigComplex;
use crate::series::{QMonomial, QTerm};
use crate::summation::{IndexDomain, SumSpec};

use Backend::{Exact, Numeric};
use SlotKind::{Int, Seq, Value};

const Q: Slot = slot("q", Value, "nome, numeric backend only");
const PAIR_DEPTH: usize = 20;

pub(crate) fn catalog_entries() -> Vec<IdentityStatement> {
    vec![
        btrans2(),
        btrans2eq2(),
        btrans2eq22(),
        companion::<0>(),
        companion::<1>(),
        companion::<2>(),
        albet2_relation(),
        wppair_relation(),
        wpeq_bressoud(),
    ]
}

fn btrans2() -> IdentityStatement {
    IdentityStatement::new(
        "btrans2",
        "restricted Bailey pair transformation with beta built from a finitely supported alpha",
        "restricted-pair transformation",
        "transformation involving restricted WP-Bailey pairs",
    )
    .slots(&[
        slot("alpha", Seq, "finitely supported alpha on n >= 0"),
        slot("a", Value, "numerator parameter"),
        slot("b", Value, "pair parameter"),
        slot("c", Value, "denominator parameter"),
    ])
    .exact_sum(btrans2_spec, btrans2_rhs)
    .validate(|p, _| {
        check_gauss_level(1, &p.mono("a")?, &p.mono("b")?, &p.mono("c")?)?;
        require_unilateral(&p.seq("alpha")?)
    })
    .random(|rng, backend| {
        if backend != Exact {
            return None;
        }
        let (a, b, c) = random_gauss_level(rng);
        Some(build(vec![
            ("alpha", random_seq(rng, 0, 4, 3)),
            ("a", ParamValue::Mono(a)),
            ("b", ParamValue::Mono(b)),
            ("c", ParamValue::Mono(c)),
        ]))
    })
    .instance(Exact, &[("alpha", "{0: 1, 1: -2, 3: 1/2}"), ("a", "2"), ("b", "3"), ("c", "q")])
    .instance(Exact, &[("alpha", "{2: 1}"), ("a", "q"), ("b", "-1/2"), ("c", "3q^3")])
}

/// `sum_m (a)_m/(c)_m (c/ab)^m sum_{n<=m} (b)_{m-n}/(q)_{m-n} alpha_n`.
fn btrans2_spec(p: &Params) -> Result<SumSpec> {
    let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
    let v = check_gauss_level(1, &a, &b, &c)?;
    let alpha = p.seq("alpha")?;
    let x = c.div(&a.mul(&b));
    let support = support_of(&alpha);
    Ok(SumSpec::new(
        IndexDomain::Ordered { len: 2 },
        move |level, idx| {
            let m = idx[0];
            if level == 0 {
                return Ok(QTerm::one().mul_poch(&a, m).div_poch(&c, m).mul_mono_pow(&x, m));
            }
            let n = idx[1];
            Ok(super::kernel(&b, 1, m - n).scale(&seq_value(&alpha, n)))
        },
        move |idx| v * idx[0],
    )
    .with_support(support))
}

fn btrans2_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
    let x = c.div(&a.mul(&b));
    let cb = c.div(&b);
    let mut sum = crate::series::QSeries::zero(order);
    for (k, v) in p.seq("alpha")? {
        let t = QTerm::constant(v).mul_poch(&a, k).div_poch(&cb, k).mul_mono_pow(&x, k);
        sum.add_assign_ref(&t.to_series(order)?);
    }
    series(&gauss_rhs(order, &a, &b, &c)? * &sum)
}

// ------------------------------------------------- companion identities

const COMPANION_SLOTS: [Slot; 4] = [
    slot("a", Value, "numerator parameter"),
    slot("b", Value, "pair parameter"),
    slot("c", Value, "denominator parameter"),
    Q,
];

fn btrans2eq2() -> IdentityStatement {
    IdentityStatement::new(
        "btrans2eq2",
        "sum (a,1/b;q^2)_m/(c,q^2;q^2)_m (c/aq)^m = (c/a,c/b;q^2)_inf/(c,c/ab;q^2)_inf sum (a;q^2)_k (1/b;q)_k/((c/b;q^2)_k (q;q)_k) (c/aq)^k",
        "first companion to Andrews' identity",
        "a pair of companion identities",
    )
    .slots(&COMPANION_SLOTS)
    .exact_sum(eq2_spec::<0>, eq2_rhs::<0>)
    .numeric(eq2_nlhs::<0>, eq2_nrhs::<0>)
    .validate(eq2_validate)
    .instance(Exact, &[("a", "2"), ("b", "1/3"), ("c", "q^3")])
    .instance(Exact, &[("a", "q"), ("b", "-1/2"), ("c", "q^4")])
    .instance(Numeric, &[("q", "1/5"), ("a", "1/2"), ("b", "3/7"), ("c", "1/20")])
}

fn btrans2eq22() -> IdentityStatement {
    IdentityStatement::new(
        "btrans2eq22",
        "sum (a,q^2/b;q^2)_m/(c,q^2;q^2)_m (c/aq)^m = (c/a,c/b;q^2)_inf/(c,c/ab;q^2)_inf sum (a;q^2)_k (q/b;q)_k/((c/b;q^2)_k (q;q)_k) (c/aq)^k",
        "second companion to Andrews' identity",
        "a pair of companion identities",
    )
    .slots(&COMPANION_SLOTS)
    .exact_sum(eq2_spec::<1>, eq2_rhs::<1>)
    .numeric(eq2_nlhs::<1>, eq2_nrhs::<1>)
    .validate(eq2_validate)
    .instance(Exact, &[("a", "2"), ("b", "1/3"), ("c", "q^3")])
    .instance(Exact, &[("a", "q"), ("b", "-1/2"), ("c", "q^4")])
    .instance(Numeric, &[("q", "1/5"), ("a", "1/2"), ("b", "3/7"), ("c", "1/20")])
}

fn eq2_validate(p: &Params, backend: Backend) -> Result<()> {
    match backend {
        Exact => {
            let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
            for (n, m) in [("a", &a), ("b", &b), ("c", &c)] {
                require_nonzero(n, m)?;
            }
            require_nonneg("a", &a)?;
            ensure(b.power <= 0, "b must carry a nonpositive power of q")?;
            ensure(c.div(&a).power >= 2, "c/(aq) must have q-valuation at least 1")
        }
        Numeric => {
            let ctx = NumCtx::new(p, 30)?;
            let (a, b, c) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?);
            require_inside_unit("q", &ctx.q)?;
            ensure(!a.is_zero() && !b.is_zero(), "a and b must be nonzero")?;
            require_inside_unit("c/(aq)", &c.div(&a.mul(&ctx.q)))
        }
    }
}

/// `q^V / b`: the pair argument on the left (`V = 0` or `2`) or right
/// (`V = 0` or `1`) of the two companions.
fn companion_arg<const V: u8>(b: &QMonomial, left: bool) -> QMonomial {
    let shift = match (V, left) {
        (0, _) => 0,
        (_, true) => 2,
        (_, false) => 1,
    };
    b.recip().shifted(shift)
}

fn eq2_spec<const V: u8>(p: &Params) -> Result<SumSpec> {
    let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
    let u = companion_arg::<V>(&b, true);
    let x = c.div(&a.shifted(1));
    let v = x.power;
    Ok(leaf_spec(
        IndexDomain::Unilateral,
        move |idx| {
            let m = idx[0];
            Ok(QTerm::one()
                .mul_poch_step(&a, 2, m)
                .mul_poch_step(&u, 2, m)
                .div_poch_step(&c, 2, m)
                .div_poch_step(&qp(2), 2, m)
                .mul_mono_pow(&x, m))
        },
        move |idx| v * idx[0],
    ))
}

fn eq2_rhs<const V: u8>(p: &Params, order: usize) -> Result<ExactSide> {
    let (a, b, c) = (p.mono("a")?, p.mono("b")?, p.mono("c")?);
    let w = companion_arg::<V>(&b, false);
    let x = c.div(&a.shifted(1));
    let cb = c.div(&b);
    let v = x.power;
    let sum = crate::summation::sum_unilateral(
        &crate::summation::TermGenerator::new(
            {
                let (a, cb) = (a.clone(), cb.clone());
                move |k| {
                    Ok(QTerm::one()
                        .mul_poch_step(&a, 2, k)
                        .mul_poch(&w, k)
                        .div_poch_step(&cb, 2, k)
                        .div_qfac(k)
                        .mul_mono_pow(&x, k))
                }
            },
            move |k| v * k,
        ),
        order,
    )?;
    let prod = inf_prod(order, &[(c.div(&a), 2), (cb.clone(), 2)], &[(c.clone(), 2), (cb.div(&a), 2)])?;
    series(&prod * &sum)
}

fn eq2_nlhs<const V: u8>(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?);
    let q2 = ctx.qpow(2);
    let u = b.recip().mul(&ctx.qpow(if V == 0 { 0 } else { 2 }));
    let x = c.div(&a.mul(&ctx.q));
    let (mut ta, mut tu, mut tc, mut tq) = (
        ctx.table_base(&a, &q2),
        ctx.table_base(&u, &q2),
        ctx.table_base(&c, &q2),
        ctx.table_base(&q2, &q2),
    );
    let mut px = ctx.pows(&x);
    value(ctx.sum_up(|m| {
        Ok(ta.get(m)?
            .mul(&tu.get(m)?)
            .div(&tc.get(m)?.mul(&tq.get(m)?))
            .mul(&px.get(m)))
    })?)
}

fn eq2_nrhs<const V: u8>(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, c) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "c")?);
    let q2 = ctx.qpow(2);
    let w = b.recip().mul(&ctx.qpow(if V == 0 { 0 } else { 1 }));
    let x = c.div(&a.mul(&ctx.q));
    let cb = c.div(&b);
    let (mut ta, mut tw, mut tcb, mut tq) = (
        ctx.table_base(&a, &q2),
        ctx.table(&w),
        ctx.table_base(&cb, &q2),
        ctx.table(&ctx.q),
    );
    let mut px = ctx.pows(&x);
    let sum = ctx.sum_up(|k| {
        Ok(ta.get(k)?
            .mul(&tw.get(k)?)
            .div(&tcb.get(k)?.mul(&tq.get(k)?))
            .mul(&px.get(k)))
    })?;
    let num = ctx.inf_base(&c.div(&a), &q2)?.mul(&ctx.inf_base(&cb, &q2)?);
    let den = ctx.inf_base(&c, &q2)?.mul(&ctx.inf_base(&cb.div(&a), &q2)?);
    value(num.div(&den).mul(&sum))
}

/// The three restatements in the variables `(a, b, t)`:
/// `sum (a,b;q^2)_m/(bt,q^2;q^2)_m (t q^s)^m
///   = (abt q^-e, t;q^2)_inf/(bt, at q^-e;q^2)_inf
///     sum (b;q^2)_k (a q^-f;q)_k/((abt q^-e;q^2)_k (q;q)_k) (t q^r)^k`
/// with `(s, e, f, r)` per variant.
struct Shape {
    id: &'static str,
    description: &'static str,
    location: &'static str,
    quote: &'static str,
    s: i64,
    e: i64,
    f: i64,
    r: i64,
}

const SHAPES: [Shape; 3] = [
    Shape {
        id: "btrans2eq2_equiv",
        description: "restatement of the first companion in the variables (a, b, t)",
        location: "first companion, restated",
        quote: "is easily seen to be equivalent to the identity",
        s: -1,
        e: 0,
        f: 0,
        r: -1,
    },
    Shape {
        id: "btrans2eq22_equiv",
        description: "restatement of the second companion in the variables (a, b, t)",
        location: "second companion, restated",
        quote: "is equivalent to the identity",
        s: -1,
        e: 2,
        f: 1,
        r: -1,
    },
    Shape {
        id: "andrews_thm7",
        description: "Andrews' identity with (tq)^m on the left and t^k on the right",
        location: "Andrews' identity that the companions accompany",
        quote: "companions to the afore-mentioned identity",
        s: 1,
        e: 0,
        f: 0,
        r: 0,
    },
];

fn companion<const V: usize>() -> IdentityStatement {
    let sh = &SHAPES[V];
    IdentityStatement::new(sh.id, sh.description, sh.location, sh.quote)
        .slots(&[
            slot("a", Value, "parameter"),
            slot("b", Value, "parameter"),
            slot("t", Value, "parameter"),
            Q,
        ])
        .numeric(companion_nlhs::<V>, companion_nrhs::<V>)
        .validate(companion_validate::<V>)
        .instance(Numeric, &[("q", "1/5"), ("a", "2/5"), ("b", "1/3"), ("t", "3/40")])
        .instance(Numeric, &[("q", "-1/4"), ("a", "1/2+1/3i"), ("b", "3/4"), ("t", "1/20")])
}

fn companion_validate<const V: usize>(p: &Params, _: Backend) -> Result<()> {
    let sh = &SHAPES[V];
    let ctx = NumCtx::new(p, 30)?;
    let (a, b, t) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "t")?);
    require_inside_unit("q", &ctx.q)?;
    let (q2, qe) = (ctx.qpow(2), ctx.qpow(-sh.e));
    require_no_pole("bt", &b.mul(&t), &q2)?;
    require_no_pole("at", &a.mul(&t).mul(&qe), &q2)?;
    require_no_pole("abt", &a.mul(&b).mul(&t).mul(&qe), &q2)?;
    require_inside_unit("left ratio", &t.mul(&ctx.qpow(sh.s)))?;
    require_inside_unit("right ratio", &t.mul(&ctx.qpow(sh.r)))
}

fn companion_nlhs<const V: usize>(p: &Params, digits: u32) -> Result<NumericSide> {
    let sh = &SHAPES[V];
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, t) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "t")?);
    let q2 = ctx.qpow(2);
    let (mut ta, mut tb, mut tbt, mut tq) = (
        ctx.table_base(&a, &q2),
        ctx.table_base(&b, &q2),
        ctx.table_base(&b.mul(&t), &q2),
        ctx.table_base(&q2, &q2),
    );
    let mut px = ctx.pows(&t.mul(&ctx.qpow(sh.s)));
    value(ctx.sum_up(|m| {
        Ok(ta.get(m)?
            .mul(&tb.get(m)?)
            .div(&tbt.get(m)?.mul(&tq.get(m)?))
            .mul(&px.get(m)))
    })?)
}

fn companion_nrhs<const V: usize>(p: &Params, digits: u32) -> Result<NumericSide> {
    let sh = &SHAPES[V];
    let ctx = NumCtx::new(p, digits)?;
    let (a, b, t) = (ctx.val(p, "a")?, ctx.val(p, "b")?, ctx.val(p, "t")?);
    let q2 = ctx.qpow(2);
    let qe = ctx.qpow(-sh.e);
    let abt = a.mul(&b).mul(&t).mul(&qe);
    let (mut tb, mut ta, mut tabt, mut tq) = (
        ctx.table_base(&b, &q2),
        ctx.table(&a.mul(&ctx.qpow(-sh.f))),
        ctx.table_base(&abt, &q2),
        ctx.table(&ctx.q),
    );
    let mut px = ctx.pows(&t.mul(&ctx.qpow(sh.r)));
    let sum = ctx.sum_up(|k| {
        Ok(tb.get(k)?
            .mul(&ta.get(k)?)
            .div(&tabt.get(k)?.mul(&tq.get(k)?))
            .mul(&px.get(k)))
    })?;
    let num = ctx.inf_base(&abt, &q2)?.mul(&ctx.inf_base(&t, &q2)?);
    let den = ctx.inf_base(&b.mul(&t), &q2)?.mul(&ctx.inf_base(&a.mul(&t).mul(&qe), &q2)?);
    value(num.div(&den).mul(&sum))
}

// ------------------------------------------------------- pair relations

fn albet2_relation() -> IdentityStatement {
    IdentityStatement::new(
        "albet2_relation",
        "the restricted pairs from Bressoud's pairs and the McLaughlin-Zimmer pair satisfy beta = kernel * alpha",
        "restricted Bailey pair relation",
        "gives a pair defined by",
    )
    .slots(&[
        slot("pair", Int, "1: from Bressoud (1-aq^2n), 2: from Bressoud (1-sqrt(a)q^n), 3: from McLaughlin-Zimmer"),
        slot("b", Value, "pair parameter"),
        Q,
    ])
    .exact(|p, order| pair_exact(p, order, true), |p, order| pair_exact(p, order, false))
    .numeric(|p, d| pair_numeric(p, d, true), |p, d| pair_numeric(p, d, false))
    .validate(|p, backend| {
        int_in(p, "pair", 1, 3)?;
        match backend {
            Exact => require_nonzero("b", &p.mono("b")?),
            Numeric => {
                let ctx = NumCtx::new(p, 30)?;
                require_inside_unit("q", &ctx.q)?;
                ensure(!ctx.val(p, "b")?.is_zero(), "b must be nonzero")
            }
        }
    })
    .random(|rng, backend| {
        (backend == Exact).then(|| {
            let b = QMonomial::new(random_coeff(rng), rng.gen_range(0..=2));
            build(vec![("pair", ParamValue::Int(rng.gen_range(1..=3))), ("b", ParamValue::Mono(b))])
        })
    })
    .instance(Exact, &[("pair", "1"), ("b", "2")])
    .instance(Exact, &[("pair", "2"), ("b", "1/3")])
    .instance(Exact, &[("pair", "3"), ("b", "q")])
    .instance(Exact, &[("pair", "1"), ("b", "3q^2")])
    .instance(Numeric, &[("pair", "1"), ("b", "1/3"), ("q", "1/5")])
    .instance(Numeric, &[("pair", "2"), ("b", "2/3"), ("q", "1/4")])
    .instance(Numeric, &[("pair", "3"), ("b", "3/7+1/2i"), ("q", "1/5")])
}

fn pair_exact(p: &Params, order: usize, stated: bool) -> Result<ExactSide> {
    let kind = LimitedPair::from_index(int_in(p, "pair", 1, 3)?)?;
    let pair = limited_pair(kind, &p.mono("b")?)?;
    let (s, c) = pair.relation_sides(PAIR_DEPTH, order)?;
    Ok(ExactSide::List(if stated { s } else { c }))
}

fn pair_numeric(p: &Params, digits: u32, stated: bool) -> Result<NumericSide> {
    let kind = LimitedPair::from_index(int_in(p, "pair", 1, 3)?)?;
    let ctx = NumCtx::new(p, digits)?;
    let b = ctx.val(p, "b")?;
    let (mut alpha, mut beta) = limited_pair_numeric(kind, &b, &ctx.q);
    let seq = |f: &mut super::NumSeq| -> Result<Vec<BigComplex>> { (0..=PAIR_DEPTH as i64).map(f).collect() };
    Ok(NumericSide::List(if stated {
        seq(&mut beta)?
    } else {
        num_beta_from_alpha(&seq(&mut alpha)?, &b, &ctx.qpow(2))?
    }))
}

const WP_SLOTS: [Slot; 4] = [
    slot("pair", Int, "0: delta, 1: Bressoud (1-aq^2n), 2: Bressoud (1-sqrt(a)q^n), 3: McLaughlin-Zimmer"),
    slot("a", Value, "pair parameter a"),
    slot("k", Value, "pair parameter k"),
    Q,
];

fn wp_validate(p: &Params) -> Result<(NumCtx, BigComplex, BigComplex)> {
    int_in(p, "pair", 0, 3)?;
    let ctx = NumCtx::new(p, 30)?;
    let (a, k) = (ctx.val(p, "a")?, ctx.val(p, "k")?);
    require_inside_unit("q", &ctx.q)?;
    ensure(!a.is_zero() && !k.is_zero(), "a and k must be nonzero")?;
    Ok((ctx, a, k))
}

fn wppair_relation() -> IdentityStatement {
    let mut e = IdentityStatement::new(
        "wppair_relation",
        "the WP-Bailey pairs of Bressoud and of McLaughlin-Zimmer satisfy the WP-Bailey relation",
        "WP-Bailey pair relation",
        "WP-Bailey pair of Bressoud",
    )
    .slots(&WP_SLOTS)
    .numeric(|p, d| wp_relation(p, d, true), |p, d| wp_relation(p, d, false))
    .validate(|p, _| wp_validate(p).map(|_| ()));
    for pair in ["0", "1", "2", "3"] {
        e = e.instance(Numeric, &[("pair", pair), ("a", "1/3"), ("k", "1/7"), ("q", "1/5")]);
    }
    for pair in ["1", "2", "3"] {
        e = e.instance(Numeric, &[("pair", pair), ("a", "2/5"), ("k", "3/10+1/5i"), ("q", "1/3")]);
    }
    e
}

fn wp_relation(p: &Params, digits: u32, stated: bool) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let kind = WpPairKind::from_index(p.int("pair")?)?;
    let mut pair = wp_pair(kind, &ctx.val(p, "a")?, &ctx.val(p, "k")?, &ctx.q);
    let (s, c) = pair.relation_sides(PAIR_DEPTH)?;
    Ok(NumericSide::List(if stated { s } else { c }))
}

fn wpeq_bressoud() -> IdentityStatement {
    let mut e = IdentityStatement::new(
        "wpeq_bressoud",
        "limiting WP-Bailey chain transformation applied to the cataloged WP-Bailey pairs",
        "limiting case of Andrews' first WP-Bailey chain",
        "limiting case of Andrews' first WP-Bailey chain",
    )
    .slots(&[
        WP_SLOTS[0],
        WP_SLOTS[1],
        WP_SLOTS[2],
        slot("y", Value, "chain parameter"),
        slot("z", Value, "chain parameter"),
        Q,
    ])
    .numeric(|p, d| wpeq_side(p, d, true), |p, d| wpeq_side(p, d, false))
    .validate(|p, _| {
        let (ctx, a, _) = wp_validate(p)?;
        let (y, z) = (ctx.val(p, "y")?, ctx.val(p, "z")?);
        ensure(!y.is_zero() && !z.is_zero(), "y and z must be nonzero")?;
        require_inside_unit("qa/(yz)", &ctx.q.mul(&a).div(&y.mul(&z)))
    });
    for pair in ["1", "2", "3", "0"] {
        e = e.instance(
            Numeric,
            &[("pair", pair), ("a", "1/3"), ("k", "1/7"), ("y", "1/2"), ("z", "2/3"), ("q", "1/5")],
        );
    }
    e
}

fn wpeq_side(p: &Params, digits: u32, left: bool) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let kind = WpPairKind::from_index(p.int("pair")?)?;
    let mut pair = wp_pair(kind, &ctx.val(p, "a")?, &ctx.val(p, "k")?, &ctx.q);
    let (l, r) = wp_transform_sides(&mut pair, &ctx.val(p, "y")?, &ctx.val(p, "z")?, digits)?;
    value(if left { l } else { r })
}
