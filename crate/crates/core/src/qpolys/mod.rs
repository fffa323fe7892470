//! Continuous q-ultraspherical and Al-Salam-Chihara polynomials on the unit
//! circle, and the two summations they satisfy.

mod catalog;

pub(crate) use catalog::catalog_entries;

use crate::error::{Error, Result};
use crate::numeric::{BigComplex, PochTable, PowTable};
use crate::series::Rational;

/// `x = e^{i theta}` with `theta` a rational multiple of pi.
#[derive(Clone, Debug)]
pub struct UnitCirclePoint {
    pub theta_over_pi: Rational,
    pub x: BigComplex,
    pub digits: u32,
}

impl UnitCirclePoint {
    pub fn new(theta_over_pi: &Rational, digits: u32) -> Self {
        UnitCirclePoint {
            theta_over_pi: theta_over_pi.clone(),
            x: BigComplex::cis_pi(theta_over_pi, digits),
            digits,
        }
    }

    /// `e^{-i theta}`.
    pub fn conj(&self) -> Self {
        UnitCirclePoint::new(&-self.theta_over_pi.clone(), self.digits)
    }

    /// `2 cos theta = x + 1/x`.
    pub fn two_cos(&self) -> BigComplex {
        self.x.add(&self.x.recip())
    }
}

/// `s_n = sum_{k<=n} (u;q)_k (v;q)_{n-k} / ((q;q)_k (q;q)_{n-k}) x^{n-2k}`
/// for increasing `n`, sharing the Pochhammer tables.
pub(crate) struct Convolution {
    u: PochTable,
    v: PochTable,
    qq: PochTable,
    xp: PowTable,
    xm: PowTable,
}

impl Convolution {
    pub(crate) fn new(u: &BigComplex, v: &BigComplex, q: &BigComplex, x: &BigComplex) -> Self {
        Convolution {
            u: PochTable::new(u, q),
            v: PochTable::new(v, q),
            qq: PochTable::new(q, q),
            xp: PowTable::new(x),
            xm: PowTable::new(&x.recip()),
        }
    }

    pub(crate) fn get(&mut self, n: i64) -> Result<BigComplex> {
        let mut acc = BigComplex::zero(self.xp.get(0).digits());
        for k in 0..=n {
            let e = n - 2 * k;
            let x = if e >= 0 { self.xp.get(e) } else { self.xm.get(-e) };
            let num = self.u.get(k)?.mul(&self.v.get(n - k)?);
            let den = self.qq.get(k)?.mul(&self.qq.get(n - k)?);
            acc = acc.add(&num.div(&den).mul(&x));
        }
        Ok(acc)
    }
}

/// `C_n(cos theta; beta | q)`.
pub fn ultraspherical(n: i64, beta: &BigComplex, q: &BigComplex, pt: &UnitCirclePoint) -> Result<BigComplex> {
    if n < 0 {
        return Err(Error::InvalidParam(format!("degree must be nonnegative, got {n}")));
    }
    Convolution::new(beta, beta, q, &pt.x).get(n)
}

/// `p_n(cos theta; t1, t2 | q)`.
pub fn al_salam_chihara(
    n: i64,
    t1: &BigComplex,
    t2: &BigComplex,
    q: &BigComplex,
    pt: &UnitCirclePoint,
) -> Result<BigComplex> {
    if n < 0 {
        return Err(Error::InvalidParam(format!("degree must be nonnegative, got {n}")));
    }
    let den = PochTable::new(&t1.mul(t2), q).get(n)?;
    if den.abs_f64() < 10f64.powi(5 - q.digits() as i32) {
        return Err(Error::Pole(format!("(t1 t2;q)_{n} vanishes")));
    }
    let lead = PochTable::new(q, q).get(n)?.mul(&t1.powi(n)).div(&den);
    let s = Convolution::new(&t2.mul(&pt.x), &t1.div(&pt.x), q, &pt.x).get(n)?;
    Ok(lead.mul(&s))
}
