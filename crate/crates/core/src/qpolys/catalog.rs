use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Convolution, UnitCirclePoint};
use crate::error::Result;
use crate::identities::catalog::{build, ensure, value};
use crate::identities::params::{slot, ParamValue, Params, ParamsExt, Slot, SlotKind};
use crate::identities::support::*;
use crate::identities::{Backend, IdentityStatement, NumericSide};
use crate::numeric::BigComplex;
use crate::series::{rat, Rational};

use Backend::Numeric;
use SlotKind::{Angle, Value};

const Q: Slot = slot("q", Value, "nome, |q| < 1");
const THETA: Slot = slot("theta", Angle, "angle, a rational multiple of pi");

pub(crate) fn catalog_entries() -> Vec<IdentityStatement> {
    vec![usp1(), pneq()]
}

fn point(p: &Params, digits: u32) -> Result<UnitCirclePoint> {
    Ok(UnitCirclePoint::new(&p.angle("theta")?, digits))
}

fn random_angle(rng: &mut ChaCha8Rng) -> ParamValue {
    let d = rng.gen_range(3..=12);
    ParamValue::AnglePi(rat(rng.gen_range(1..d), d))
}

fn random_nome(rng: &mut ChaCha8Rng) -> Rational {
    const NOMES: [(i64, i64); 5] = [(1, 5), (1, 4), (1, 3), (-1, 4), (2, 5)];
    let (n, d) = NOMES[rng.gen_range(0..NOMES.len())];
    rat(n, d)
}

fn real(r: Rational) -> ParamValue {
    ParamValue::Complex(r, Rational::from_integer(0.into()))
}

// ------------------------------------------------------------------ usp1

fn usp1() -> IdentityStatement {
    IdentityStatement::new(
        "usp1",
        "sum (a)_n/(c)_n (c e^{i theta}/(a beta))^n C_n(cos theta; beta|q) = (c/a, c/beta)_inf/(c, c/(a beta))_inf sum (a, beta)_n/(c/beta, q)_n (c e^{2i theta}/(a beta))^n",
        "transformation for the continuous q-ultraspherical polynomials",
        r"If $|c e^{i\theta}/(a\beta)|,\,|c e^{2i\theta}/(a\beta)|<1$",
    )
    .slots(&[
        slot("a", Value, "numerator parameter"),
        slot("beta", Value, "ultraspherical parameter"),
        slot("c", Value, "denominator parameter"),
        THETA,
        Q,
    ])
    .numeric(usp1_lhs, usp1_rhs)
    .validate(|p, _| {
        let ctx = NumCtx::new(p, 30)?;
        let (a, beta, c) = (ctx.val(p, "a")?, ctx.val(p, "beta")?, ctx.val(p, "c")?);
        require_inside_unit("q", &ctx.q)?;
        ensure(!a.is_zero() && !beta.is_zero(), "a and beta must be nonzero")?;
        let x = point(p, 30)?.x;
        let r = c.div(&a.mul(&beta));
        require_inside_unit("c e^{i theta}/(a beta)", &r.mul(&x))?;
        require_inside_unit("c e^{2i theta}/(a beta)", &r.mul(&x).mul(&x))
    })
    .random(|rng, backend| {
        if backend != Numeric {
            return None;
        }
        let a = rat(rng.gen_range(1..=9), 10);
        let beta = rat(rng.gen_range(1..=9), 10);
        let c = &a * &beta * rat(rng.gen_range(1..=8), 10);
        Some(build(vec![
            ("a", real(a)),
            ("beta", real(beta)),
            ("c", real(c)),
            ("theta", random_angle(rng)),
            ("q", real(random_nome(rng))),
        ]))
    })
    .instance(Numeric, &[("q", "1/5"), ("beta", "1/3"), ("a", "1/2"), ("c", "1/20"), ("theta", "pi/7")])
    .instance(Numeric, &[("q", "-1/3"), ("beta", "2/3+1/4i"), ("a", "3/5"), ("c", "1/7"), ("theta", "2pi/5")])
}

fn usp1_lhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, beta, c) = (ctx.val(p, "a")?, ctx.val(p, "beta")?, ctx.val(p, "c")?);
    let x = point(p, digits)?.x;
    let (mut ta, mut tc) = (ctx.table(&a), ctx.table(&c));
    let mut px = ctx.pows(&c.mul(&x).div(&a.mul(&beta)));
    let mut cn = Convolution::new(&beta, &beta, &ctx.q, &x);
    value(ctx.sum_up(|n| Ok(ta.get(n)?.div(&tc.get(n)?).mul(&px.get(n)).mul(&cn.get(n)?)))?)
}

fn usp1_rhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (a, beta, c) = (ctx.val(p, "a")?, ctx.val(p, "beta")?, ctx.val(p, "c")?);
    let x = point(p, digits)?.x;
    let cb = c.div(&beta);
    let (mut ta, mut tb, mut tcb, mut tq) = (ctx.table(&a), ctx.table(&beta), ctx.table(&cb), ctx.table(&ctx.q));
    let mut px = ctx.pows(&c.mul(&x).mul(&x).div(&a.mul(&beta)));
    let sum = ctx.sum_up(|n| {
        Ok(ta.get(n)?
            .mul(&tb.get(n)?)
            .div(&tcb.get(n)?.mul(&tq.get(n)?))
            .mul(&px.get(n)))
    })?;
    let num = ctx.inf(&c.div(&a))?.mul(&ctx.inf(&cb)?);
    let den = ctx.inf(&c)?.mul(&ctx.inf(&cb.div(&a))?);
    value(num.div(&den).mul(&sum))
}

// ------------------------------------------------------------------ pneq

fn pneq() -> IdentityStatement {
    IdentityStatement::new(
        "pneq",
        "sum p_n(cos theta; t1, t2|q) (t2/(t1 q))^n = (1 - t1 t2/q)/(1 - 2 t2 cos(theta)/q + t2^2/q^2)",
        "summation for the Al-Salam-Chihara polynomials",
        r"Let $p_n(\cos \theta;t_1,t_2 | q)$ be as at",
    )
    .slots(&[
        slot("t1", Value, "first parameter"),
        slot("t2", Value, "second parameter"),
        THETA,
        Q,
    ])
    .numeric(pneq_lhs, pneq_rhs)
    .validate(|p, _| {
        let ctx = NumCtx::new(p, 30)?;
        let (t1, t2) = (ctx.val(p, "t1")?, ctx.val(p, "t2")?);
        let x = point(p, 30)?.x;
        require_inside_unit("q", &ctx.q)?;
        ensure(!t1.is_zero(), "t1 must be nonzero")?;
        let r = t2.div(&ctx.q);
        require_inside_unit("t2 e^{-i theta}/q", &r.div(&x))?;
        require_inside_unit("t2 e^{i theta}/q", &r.mul(&x))
    })
    .random(|rng, backend| {
        if backend != Numeric {
            return None;
        }
        let q = random_nome(rng);
        let t1 = rat(rng.gen_range(1..=9), 10) * rat(if rng.gen_bool(0.5) { 1 } else { -1 }, 1);
        let t2 = &q * rat(rng.gen_range(1..=7), 10);
        Some(build(vec![
            ("t1", real(t1)),
            ("t2", real(t2)),
            ("theta", random_angle(rng)),
            ("q", real(q)),
        ]))
    })
    .instance(Numeric, &[("q", "1/4"), ("t1", "1/2"), ("t2", "1/10"), ("theta", "pi/5")])
    .instance(Numeric, &[("q", "1/3"), ("t1", "-2/3+1/5i"), ("t2", "1/7"), ("theta", "3pi/8")])
}

fn pneq_lhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (t1, t2) = (ctx.val(p, "t1")?, ctx.val(p, "t2")?);
    let x = point(p, digits)?.x;
    // p_n (t2/(t1 q))^n = (q)_n/(t1 t2)_n (t2/q)^n * conv_n
    let (mut tq, mut tt) = (ctx.table(&ctx.q), ctx.table(&t1.mul(&t2)));
    let mut px = ctx.pows(&t2.div(&ctx.q));
    let mut conv = Convolution::new(&t2.mul(&x), &t1.div(&x), &ctx.q, &x);
    value(ctx.sum_up(|n| Ok(tq.get(n)?.div(&tt.get(n)?).mul(&px.get(n)).mul(&conv.get(n)?)))?)
}

fn pneq_rhs(p: &Params, digits: u32) -> Result<NumericSide> {
    let ctx = NumCtx::new(p, digits)?;
    let (t1, t2) = (ctx.val(p, "t1")?, ctx.val(p, "t2")?);
    let pt = point(p, digits)?;
    let one = BigComplex::one(digits);
    let r = t2.div(&ctx.q);
    let num = one.sub(&t1.mul(&r));
    let den = one.sub(&r.mul(&pt.two_cos())).add(&r.mul(&r));
    value(num.div(&den))
}
