//! Building blocks shared by the catalog entries.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::params::{ParamValue, Params, ParamsExt};
use crate::error::{Error, Result};
use crate::numeric::{
    nprod_qpoch, nsum, BigComplex, PochLen, PochTable, PowTable, SumRange, TailPolicy,
};
use crate::series::{qpoch_step, rat, QMonomial, QSeries, QTerm, Rational};
use crate::summation::{IndexDomain, SumSpec};

/// `prod (a; q^s)_inf` over `num` divided by the same over `den`.
pub fn inf_prod(order: usize, num: &[(QMonomial, i64)], den: &[(QMonomial, i64)]) -> Result<QSeries> {
    let mut top = QSeries::one(order);
    for (a, s) in num {
        top = &top * &qpoch_step(a, *s, None, order)?;
    }
    let mut bot = QSeries::one(order);
    for (a, s) in den {
        bot = &bot * &qpoch_step(a, *s, None, order)?;
    }
    Ok(&top * &bot.invert()?)
}

/// `1 / (q; q)_inf^k`.
pub fn euler_inv(order: usize, k: usize) -> Result<QSeries> {
    let e = qpoch_step(&QMonomial::q_pow(1), 1, None, order)?.invert()?;
    let mut out = QSeries::one(order);
    for _ in 0..k {
        out = &out * &e;
    }
    Ok(out)
}

/// `(x, y; q)_inf / (z, w; q)_inf`, the shape of every q-Gauss product.
pub fn gauss_prod(order: usize, x: &QMonomial, y: &QMonomial, z: &QMonomial, w: &QMonomial) -> Result<QSeries> {
    inf_prod(order, &[(x.clone(), 1), (y.clone(), 1)], &[(z.clone(), 1), (w.clone(), 1)])
}

pub fn q1() -> QMonomial {
    QMonomial::q_pow(1)
}

pub fn qp(e: i64) -> QMonomial {
    QMonomial::q_pow(e)
}

pub fn neg_qp(e: i64) -> QMonomial {
    QMonomial::new(-Rational::one(), e)
}

pub fn sign(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn support_max(g: &[(i64, Rational)]) -> i64 {
    g.iter().map(|(n, _)| *n).max().unwrap_or(0)
}

pub fn seq_value(g: &[(i64, Rational)], n: i64) -> Rational {
    g.iter().find(|(m, _)| *m == n).map(|(_, v)| v.clone()).unwrap_or_else(Rational::zero)
}

pub fn seq_total(g: &[(i64, Rational)]) -> Rational {
    g.iter().fold(Rational::zero(), |acc, (_, v)| acc + v)
}

/// A sum whose whole summand is built at the innermost level.
pub fn leaf_spec(
    domain: IndexDomain,
    term: impl Fn(&[i64]) -> Result<QTerm> + Send + Sync + 'static,
    bound: impl Fn(&[i64]) -> i64 + Send + Sync + 'static,
) -> SumSpec {
    let len = domain.len();
    SumSpec::new(
        domain,
        move |level, idx| if level + 1 == len { term(idx) } else { Ok(QTerm::one()) },
        bound,
    )
}

/// One q-Gauss level of the multi-sum transformation:
/// `(a)_m (c/b)_n (b)_{m-n} / ((c)_m (a)_n (q)_{m-n}) * (c/(ab))^{m-n}`.
pub fn gauss_level(a: &QMonomial, b: &QMonomial, c: &QMonomial, m: i64, n: i64) -> QTerm {
    let d = m - n;
    QTerm::one()
        .mul_poch(a, m)
        .mul_poch(&c.div(b), n)
        .mul_poch(b, d)
        .div_poch(c, m)
        .div_poch(a, n)
        .div_qfac(d)
        .mul_mono_pow(&c.div(&a.mul(b)), d)
}

/// The bilateral level of the transformation:
/// `(a)_m (q/a)_t (a)_{m-t} / ((q)_m (a)_t (q)_{m-t}) * (q/a^2)^{m-t}`.
pub fn bilateral_level(a: &QMonomial, m: i64, t: i64) -> QTerm {
    let d = m - t;
    let qa = q1().div(a);
    QTerm::one()
        .mul_poch(a, m)
        .mul_poch(&qa, t)
        .mul_poch(a, d)
        .div_qfac(m)
        .div_poch(a, t)
        .div_qfac(d)
        .mul_mono_pow(&qa.div(a), d)
}

/// Admissibility of `(a, b, c)` for a q-Gauss level on the exact backend;
/// returns the valuation of `c/(ab)`.
pub fn check_gauss_level(j: usize, a: &QMonomial, b: &QMonomial, c: &QMonomial) -> Result<i64> {
    for (n, m) in [("a", a), ("b", b), ("c", c)] {
        require_nonzero(&format!("{n}_{j}"), m)?;
    }
    require_nonneg(&format!("a_{j}"), a)?;
    require_nonneg(&format!("b_{j}"), b)?;
    require_not_one(&format!("a_{j}"), a)?;
    let v = c.div(&a.mul(b)).power;
    if v < 1 {
        return Err(Error::violation(format!("c_{j}/(a_{j} b_{j}) must have q-valuation at least 1")));
    }
    Ok(v)
}

/// `(c/a, c/b; q)_inf / (c, c/(ab); q)_inf`.
pub fn gauss_rhs(order: usize, a: &QMonomial, b: &QMonomial, c: &QMonomial) -> Result<QSeries> {
    gauss_prod(order, &c.div(a), &c.div(b), c, &c.div(&a.mul(b)))
}

/// Unilateral `g`: every support point must be `>= 0`.
pub fn require_unilateral(g: &[(i64, Rational)]) -> Result<()> {
    if g.iter().any(|(n, _)| *n < 0) {
        return Err(Error::violation("g must be supported on n >= 0"));
    }
    Ok(())
}

pub fn support_of(g: &[(i64, Rational)]) -> Vec<i64> {
    g.iter().map(|(n, _)| *n).collect()
}

/// Exact parameter checks shared by the q-Gauss family.
pub fn require_nonneg(name: &str, m: &QMonomial) -> Result<()> {
    if m.power < 0 {
        return Err(Error::violation(format!("{name} must carry a nonnegative power of q")));
    }
    Ok(())
}

/// `(x; q)_n` in a denominator must not vanish: `x = 1` is excluded.
pub fn require_not_one(name: &str, m: &QMonomial) -> Result<()> {
    if m.power == 0 && m.coeff.is_one() {
        return Err(Error::violation(format!("{name} must not equal 1")));
    }
    Ok(())
}

/// `(x; base)_inf` in a denominator must not vanish: `x base^j = 1` is
/// excluded for every `j >= 0` (checked until `|x base^j|` falls below 1/2).
pub fn require_no_pole(name: &str, x: &BigComplex, base: &BigComplex) -> Result<()> {
    let mut y = x.clone();
    for _ in 0..10_000 {
        if y.one_minus().abs_f64() < 1e-25 {
            return Err(Error::violation(format!("({name}; q)_inf in a denominator must not vanish")));
        }
        if y.abs_f64() < 0.5 {
            break;
        }
        y = y.mul(base);
    }
    Ok(())
}

pub fn require_positive_valuation(name: &str, m: &QMonomial) -> Result<()> {
    if m.power < 1 {
        return Err(Error::violation(format!("{name} must have q-valuation at least 1")));
    }
    Ok(())
}

pub fn require_nonzero(name: &str, m: &QMonomial) -> Result<()> {
    if m.coeff.is_zero() {
        return Err(Error::violation(format!("{name} must be nonzero")));
    }
    Ok(())
}

/// Numeric evaluation context: working precision, `q`, and tail policy.
pub struct NumCtx {
    pub digits: u32,
    pub q: BigComplex,
    pub policy: TailPolicy,
}

impl NumCtx {
    pub fn new(p: &Params, digits: u32) -> Result<Self> {
        let zero = BigComplex::zero(digits);
        let q = p.complex("q", &zero, digits)?;
        Ok(NumCtx {
            digits,
            q,
            policy: TailPolicy::for_digits(digits),
        })
    }

    pub fn val(&self, p: &Params, name: &str) -> Result<BigComplex> {
        p.complex(name, &self.q, self.digits)
    }

    pub fn list(&self, p: &Params, name: &str) -> Result<Vec<BigComplex>> {
        p.complex_list(name, &self.q, self.digits)
    }

    pub fn one(&self) -> BigComplex {
        BigComplex::one(self.digits)
    }

    /// `q^e`.
    pub fn qpow(&self, e: i64) -> BigComplex {
        self.q.powi(e)
    }

    pub fn poch(&self, a: &BigComplex, n: i64) -> Result<BigComplex> {
        nprod_qpoch(a, &self.q, PochLen::Finite(n), &self.policy)
    }

    pub fn inf(&self, a: &BigComplex) -> Result<BigComplex> {
        nprod_qpoch(a, &self.q, PochLen::Infinite, &self.policy)
    }

    pub fn inf_base(&self, a: &BigComplex, base: &BigComplex) -> Result<BigComplex> {
        nprod_qpoch(a, base, PochLen::Infinite, &self.policy)
    }

    /// `prod (x; q)_inf / prod (y; q)_inf`.
    pub fn inf_ratio(&self, num: &[&BigComplex], den: &[&BigComplex]) -> Result<BigComplex> {
        let mut acc = self.one();
        for a in num {
            acc = acc.mul(&self.inf(a)?);
        }
        for a in den {
            acc = acc.div(&self.inf(a)?);
        }
        Ok(acc)
    }

    pub fn table(&self, a: &BigComplex) -> PochTable {
        PochTable::new(a, &self.q)
    }

    pub fn table_base(&self, a: &BigComplex, base: &BigComplex) -> PochTable {
        PochTable::new(a, base)
    }

    pub fn pows(&self, x: &BigComplex) -> PowTable {
        PowTable::new(x)
    }

    pub fn sum(&self, range: SumRange, term: impl FnMut(i64) -> Result<BigComplex>) -> Result<BigComplex> {
        Ok(nsum(term, range, &self.policy, self.digits)?.value)
    }

    pub fn sum_up(&self, term: impl FnMut(i64) -> Result<BigComplex>) -> Result<BigComplex> {
        self.sum(SumRange::Unilateral, term)
    }

    /// Sum over `m_1, ..., m_depth >= 0`, nested with the first index
    /// outermost; `term` receives the full index vector.
    pub fn nested_sum(&self, depth: usize, term: &mut dyn FnMut(&[i64]) -> Result<BigComplex>) -> Result<BigComplex> {
        self.nested_level(depth, &[], term)
    }

    fn nested_level(
        &self,
        depth: usize,
        idx: &[i64],
        term: &mut dyn FnMut(&[i64]) -> Result<BigComplex>,
    ) -> Result<BigComplex> {
        if idx.len() == depth {
            return term(idx);
        }
        self.sum_up(|m| {
            let mut v = idx.to_vec();
            v.push(m);
            self.nested_level(depth, &v, &mut *term)
        })
    }
}

/// `|x| < 1` as a domain check.
pub fn require_inside_unit(name: &str, x: &BigComplex) -> Result<()> {
    if x.abs_f64() >= 1.0 {
        return Err(Error::violation(format!("|{name}| < 1")));
    }
    Ok(())
}

/// A small nonzero rational from a fixed palette.
pub fn random_coeff(rng: &mut ChaCha8Rng) -> Rational {
    const PALETTE: [(i64, i64); 10] = [(2, 1), (-2, 1), (3, 1), (-3, 1), (1, 2), (-1, 2), (3, 2), (-3, 2), (2, 3), (-1, 1)];
    let (n, d) = PALETTE[rng.gen_range(0..PALETTE.len())];
    rat(n, d)
}

/// A finitely supported sequence with `1..=max_len` entries drawn from
/// `lo..=hi`.
pub fn random_seq(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_len: usize) -> ParamValue {
    let len = rng.gen_range(1..=max_len);
    let mut out: Vec<(i64, Rational)> = Vec::new();
    while out.len() < len {
        let n = rng.gen_range(lo..=hi);
        if out.iter().any(|(m, _)| *m == n) {
            continue;
        }
        let v = rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        if v.is_zero() {
            continue;
        }
        out.push((n, v));
    }
    out.sort_by_key(|(n, _)| *n);
    ParamValue::Seq(out)
}

/// Parameters `(a_j, b_j, c_j)` of one q-Gauss level with
/// `val(c/(ab)) >= 1` and every Pochhammer base admissible.
pub fn random_gauss_level(rng: &mut ChaCha8Rng) -> (QMonomial, QMonomial, QMonomial) {
    let ea = rng.gen_range(0..=1);
    let eb = rng.gen_range(0..=1);
    let ec = ea + eb + rng.gen_range(1..=2);
    let mut ra = random_coeff(rng);
    while ea == 0 && ra.is_one() {
        ra = random_coeff(rng);
    }
    let rb = random_coeff(rng);
    let rc = random_coeff(rng);
    (QMonomial::new(ra, ea), QMonomial::new(rb, eb), QMonomial::new(rc, ec))
}

/// A plain rational outside `{0, 1, -1}`.
pub fn random_unit_free(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = random_coeff(rng);
        if !r.abs().is_one() {
            return r;
        }
    }
}

pub fn int_list(p: &Params, name: &str) -> Result<Vec<i64>> {
    p.list(name)?
        .iter()
        .map(|m| {
            if m.power == 0 && m.coeff.is_integer() {
                i64::try_from(m.coeff.to_integer()).map_err(|_| Error::InvalidParam(format!("{name}: integer too large")))
            } else {
                Err(Error::InvalidParam(format!("{name} must list integers")))
            }
        })
        .collect()
}

pub fn mono_list(p: &Params, name: &str, k: usize) -> Result<Vec<QMonomial>> {
    let v = p.list(name)?;
    if v.len() != k {
        return Err(Error::violation(format!("{name} must have k = {k} entries")));
    }
    Ok(v)
}
