//! Restricted and WP-Bailey pairs: the two convolutions that define
//! them, the transforms they feed, and the cataloged pairs.
//!
//! Restricted pairs satisfy
//! `beta_m = sum_{n<=m} (b;Q)_{m-n}/(Q;Q)_{m-n} alpha_n` with `Q = q^step`,
//! so pairs whose natural base is `sqrt(Q)` are written over the series
//! variable `q` with `step = 2`.

mod catalog;
pub mod pairs;

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::identities::support::NumCtx;
use crate::identities::{Backend, Verdict, VerificationReport};
use crate::numeric::{big_to_f64, relative_discrepancy, BigComplex, PochTable};
use crate::series::{QMonomial, QSeries, QTerm, ShiftedSeries};
use crate::summation::{sum_unilateral, TermGenerator};

pub use pairs::{limited_pair, wp_pair, LimitedPair, WpPairKind};

pub(crate) use catalog::catalog_entries;

/// A pair `(alpha, beta)` related by the restricted convolution with
/// parameter `b` over the base `q^step`.
#[derive(Clone)]
pub struct RestrictedBaileyPair {
    pub alpha: TermGenerator,
    pub beta: TermGenerator,
    pub b: QMonomial,
    pub step: i64,
}

/// `(b; q^step)_d / (q^step; q^step)_d`, the convolution kernel.
pub fn kernel(b: &QMonomial, step: i64, d: i64) -> QTerm {
    QTerm::one()
        .mul_poch_step(b, step, d)
        .div_poch_step(&QMonomial::q_pow(step), step, d)
}

/// `beta_m` as a truncated Laurent series: the convolution of `alpha`
/// with the kernel, each summand known to `rel_order` past its valuation.
pub fn beta_shifted(alpha: &TermGenerator, b: &QMonomial, step: i64, m: i64, rel_order: usize) -> Result<ShiftedSeries> {
    let mut acc: Option<ShiftedSeries> = None;
    for n in 0..=m {
        let t = kernel(b, step, m - n).mul(&alpha.term(n)?);
        if t.is_zero() {
            continue;
        }
        let s = ShiftedSeries::from_term(&t, rel_order)?;
        acc = Some(match acc {
            None => s,
            Some(a) => a.add(&s),
        });
    }
    Ok(acc.unwrap_or_else(|| ShiftedSeries::zero_from(0, rel_order)))
}

/// The generator `beta_m` built from `alpha` by the restricted
/// convolution, exact modulo `q^(order+1)`. Needs `b` with a nonnegative
/// power of q so that each `beta_m` is a power series.
pub fn beta_from_alpha(alpha: &TermGenerator, b: &QMonomial, step: i64, order: usize) -> Result<TermGenerator> {
    if b.power < 0 {
        return Err(Error::violation("b must carry a nonnegative power of q"));
    }
    let (alpha, b) = (alpha.clone(), b.clone());
    let bound_alpha = alpha.clone();
    Ok(TermGenerator::new(
        move |m| {
            let s = beta_shifted(&alpha, &b, step, m, order)?;
            Ok(QTerm::from_series(s.series).mul_q_pow(s.shift))
        },
        move |m| (0..=m).map(|n| (bound_alpha.valuation_bound)(n)).min().unwrap_or(0),
    ))
}

impl RestrictedBaileyPair {
    pub fn new(alpha: TermGenerator, beta: TermGenerator, b: QMonomial, step: i64) -> Self {
        RestrictedBaileyPair { alpha, beta, b, step }
    }

    /// The pair whose `beta` is the convolution of `alpha`.
    pub fn from_alpha(alpha: TermGenerator, b: QMonomial, step: i64, order: usize) -> Result<Self> {
        let beta = beta_from_alpha(&alpha, &b, step, order)?;
        Ok(RestrictedBaileyPair { alpha, beta, b, step })
    }

    /// `beta_m` for `m <= depth`, once as stated and once from the
    /// convolution.
    pub fn relation_sides(&self, depth: usize, rel_order: usize) -> Result<(Vec<ShiftedSeries>, Vec<ShiftedSeries>)> {
        let mut stated = Vec::with_capacity(depth + 1);
        let mut conv = Vec::with_capacity(depth + 1);
        for m in 0..=depth as i64 {
            stated.push(ShiftedSeries::from_term(&self.beta.term(m)?, rel_order)?);
            conv.push(beta_shifted(&self.alpha, &self.b, self.step, m, rel_order)?);
        }
        Ok((stated, conv))
    }

    /// First `(m, exponent)` where the stated `beta` differs from the
    /// convolution, if any.
    pub fn relation_mismatch(&self, depth: usize, rel_order: usize) -> Result<Option<(usize, i64)>> {
        let (stated, conv) = self.relation_sides(depth, rel_order)?;
        Ok(stated
            .iter()
            .zip(&conv)
            .enumerate()
            .find_map(|(m, (x, y))| x.first_difference(y).map(|e| (m, e))))
    }
}

/// Valuation of a term, used as an exact bound when summing generators
/// whose terms are cheap to build.
fn exact_bound(t: Result<QTerm>) -> i64 {
    match t.and_then(|t| t.valuation()) {
        Ok(Some(v)) => v,
        Ok(None) => i64::MAX / 4,
        Err(_) => i64::MIN / 4,
    }
}

/// Both sides of the restricted-pair transformation
/// `sum (a;Q)_m/(c;Q)_m (c/ab)^m beta_m
///   = (c/a, c/b; Q)_inf/(c, c/ab; Q)_inf sum (a;Q)_k/(c/b;Q)_k (c/ab)^k alpha_k`
/// with `Q = q^step`, modulo `q^(order+1)`.
pub fn bt_transform_sides(pair: &RestrictedBaileyPair, a: &QMonomial, c: &QMonomial, order: usize) -> Result<(QSeries, QSeries)> {
    let (b, step) = (pair.b.clone(), pair.step);
    let x = c.div(&a.mul(&b));
    let weight = {
        let (a, x) = (a.clone(), x.clone());
        move |n: i64, den: &QMonomial| {
            QTerm::one()
                .mul_poch_step(&a, step, n)
                .div_poch_step(den, step, n)
                .mul_mono_pow(&x, n)
        }
    };
    let lhs_term = {
        let (w, beta, c) = (weight.clone(), pair.beta.clone(), c.clone());
        move |m: i64| Ok(w(m, &c).mul(&beta.term(m)?))
    };
    let rhs_term = {
        let (w, alpha, cb) = (weight, pair.alpha.clone(), c.div(&b));
        move |k: i64| Ok(w(k, &cb).mul(&alpha.term(k)?))
    };
    let lt = lhs_term.clone();
    let lhs = sum_unilateral(&TermGenerator::new(lhs_term, move |m| exact_bound(lt(m))), order)?;
    let rt = rhs_term.clone();
    let mut gen = TermGenerator::new(rhs_term, move |k| exact_bound(rt(k)));
    if let Some(s) = &pair.alpha.support_hint {
        gen = gen.with_support(s.clone());
    }
    let sum = sum_unilateral(&gen, order)?;
    let prod = crate::identities::support::inf_prod(
        order,
        &[(c.div(a), step), (c.div(&b), step)],
        &[(c.clone(), step), (x, step)],
    )?;
    Ok((lhs, &prod * &sum))
}

/// Runs the restricted-pair transformation on the exact backend.
pub fn bt_transform_check(
    id: &str,
    pair: &RestrictedBaileyPair,
    a: &QMonomial,
    c: &QMonomial,
    order: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let (lhs, rhs) = bt_transform_sides(pair, a, c, order)?;
    let diff = lhs.first_difference(&rhs);
    let params = BTreeMap::from([
        ("a".to_string(), a.to_string()),
        ("b".to_string(), pair.b.to_string()),
        ("c".to_string(), c.to_string()),
    ]);
    Ok(VerificationReport {
        id: id.to_string(),
        backend: Backend::Exact,
        order_or_precision: order as u32,
        params,
        verdict: if diff.is_none() { Verdict::Pass } else { Verdict::Fail },
        discrepancy: match diff {
            None => "0".into(),
            Some(e) => format!("q^{e}: lhs {} vs rhs {}", lhs.coeff(e), rhs.coeff(e)),
        },
        first_diff_exponent: diff.map(|e| e as i64),
        wall_ms: start.elapsed().as_millis() as u64,
        instance: 0,
    })
}

/// A numeric sequence, evaluated on demand.
pub type NumSeq = Box<dyn FnMut(i64) -> Result<BigComplex> + Send>;

/// `beta_m = sum_{n<=m} (b;Q)_{m-n}/(Q;Q)_{m-n} alpha_n` at a numeric base
/// `Q`, for `m <= depth`.
pub fn num_beta_from_alpha(alpha: &[BigComplex], b: &BigComplex, base: &BigComplex) -> Result<Vec<BigComplex>> {
    let mut tb = PochTable::new(b, base);
    let mut tq = PochTable::new(base, base);
    let digits = base.digits();
    let mut out = Vec::with_capacity(alpha.len());
    for m in 0..alpha.len() {
        let mut acc = BigComplex::zero(digits);
        for (n, a) in alpha.iter().enumerate().take(m + 1) {
            let d = (m - n) as i64;
            acc = acc.add(&tb.get(d)?.div(&tq.get(d)?).mul(a));
        }
        out.push(acc);
    }
    Ok(out)
}

/// A WP-Bailey pair at a numeric point `(a, k, q)`.
pub struct WPBaileyPair {
    pub alpha: NumSeq,
    pub beta: NumSeq,
    pub a: BigComplex,
    pub k: BigComplex,
    pub q: BigComplex,
}

/// `beta_n = sum_{j<=n} (k/a;q)_{n-j} (k;q)_{n+j} / ((q;q)_{n-j} (aq;q)_{n+j}) alpha_j`
/// for `n <= depth`.
pub fn wp_beta_from_alpha(alpha: &[BigComplex], a: &BigComplex, k: &BigComplex, q: &BigComplex) -> Result<Vec<BigComplex>> {
    let digits = q.digits();
    let mut tka = PochTable::new(&k.div(a), q);
    let mut tk = PochTable::new(k, q);
    let mut tq = PochTable::new(q, q);
    let mut taq = PochTable::new(&a.mul(q), q);
    let mut out = Vec::with_capacity(alpha.len());
    for n in 0..alpha.len() as i64 {
        let mut acc = BigComplex::zero(digits);
        for j in 0..=n {
            let den = tq.get(n - j)?.mul(&taq.get(n + j)?);
            if den.is_zero() {
                return Err(Error::Pole(format!("(aq;q)_{} vanishes", n + j)));
            }
            let num = tka.get(n - j)?.mul(&tk.get(n + j)?);
            acc = acc.add(&num.div(&den).mul(&alpha[j as usize]));
        }
        out.push(acc);
    }
    Ok(out)
}

impl WPBaileyPair {
    /// The stated `beta_n` and the convolution of `alpha`, for `n <= depth`.
    pub fn relation_sides(&mut self, depth: usize) -> Result<(Vec<BigComplex>, Vec<BigComplex>)> {
        let alpha: Vec<BigComplex> = (0..=depth as i64).map(|n| (self.alpha)(n)).collect::<Result<_>>()?;
        let stated: Vec<BigComplex> = (0..=depth as i64).map(|n| (self.beta)(n)).collect::<Result<_>>()?;
        let conv = wp_beta_from_alpha(&alpha, &self.a, &self.k, &self.q)?;
        Ok((stated, conv))
    }

    /// Largest relative discrepancy in the defining relation up to `depth`.
    pub fn relation_error(&mut self, depth: usize) -> Result<f64> {
        let (s, c) = self.relation_sides(depth)?;
        Ok(s.iter()
            .zip(&c)
            .map(|(x, y)| big_to_f64(&relative_discrepancy(x, y)))
            .fold(0.0, f64::max))
    }
}

/// Both sides of the limiting WP-Bailey chain transformation
/// `sum (q sqrt k, -q sqrt k, y, z)_n / (sqrt k, -sqrt k, qk/y, qk/z)_n (qa/yz)^n beta_n
///  = (qk, qk/yz, qa/y, qa/z)_inf / (qk/y, qk/z, qa, qa/yz)_inf
///    sum (y, z)_n / (qa/y, qa/z)_n (qa/yz)^n alpha_n`.
pub fn wp_transform_sides(pair: &mut WPBaileyPair, y: &BigComplex, z: &BigComplex, digits: u32) -> Result<(BigComplex, BigComplex)> {
    let q = pair.q.clone();
    let ctx = NumCtx {
        digits,
        q: q.clone(),
        policy: crate::numeric::TailPolicy::for_digits(digits),
    };
    let (a, k) = (pair.a.clone(), pair.k.clone());
    let sk = k.sqrt();
    let qa = q.mul(&a);
    let qk = q.mul(&k);
    let x = qa.div(&y.mul(z));
    let mut px = ctx.pows(&x);
    let (mut ty, mut tz) = (ctx.table(y), ctx.table(z));
    let (mut t1, mut t2) = (ctx.table(&q.mul(&sk)), ctx.table(&q.mul(&sk).neg()));
    let (mut t3, mut t4) = (ctx.table(&sk), ctx.table(&sk.neg()));
    let (mut tky, mut tkz) = (ctx.table(&qk.div(y)), ctx.table(&qk.div(z)));
    let (mut tay, mut taz) = (ctx.table(&qa.div(y)), ctx.table(&qa.div(z)));
    let beta = &mut pair.beta;
    let lhs = ctx.sum_up(|n| {
        let num = t1.get(n)?.mul(&t2.get(n)?).mul(&ty.get(n)?).mul(&tz.get(n)?);
        let den = t3.get(n)?.mul(&t4.get(n)?).mul(&tky.get(n)?).mul(&tkz.get(n)?);
        Ok(num.div(&den).mul(&px.get(n)).mul(&beta(n)?))
    })?;
    let alpha = &mut pair.alpha;
    let sum = ctx.sum_up(|n| {
        let num = ty.get(n)?.mul(&tz.get(n)?);
        let den = tay.get(n)?.mul(&taz.get(n)?);
        Ok(num.div(&den).mul(&px.get(n)).mul(&alpha(n)?))
    })?;
    let prod = ctx.inf_ratio(
        &[&qk, &qk.div(&y.mul(z)), &qa.div(y), &qa.div(z)],
        &[&qk.div(y), &qk.div(z), &qa, &x],
    )?;
    Ok((lhs, prod.mul(&sum)))
}
