use num_traits::{One, Zero};

use super::{ParamSpec, QMonomial, QSeries, Rational};
use crate::error::{Error, Result};

/// `(a; q)_n` expanded to `order`.
pub fn qpoch_finite(a: &ParamSpec, n: usize, order: usize) -> Result<QSeries> {
    qpoch_step(&a.as_monomial()?, 1, Some(n), order)
}

/// `(a; q)_inf` expanded to `order`; factors beyond `q^order` are invisible.
pub fn qpoch_infinite(a: &ParamSpec, order: usize) -> Result<QSeries> {
    qpoch_step(&a.as_monomial()?, 1, None, order)
}

/// `(a; q^step)_n`, or the infinite product when `n` is `None`.
/// Requires `a` to carry a nonnegative q-power and `step >= 1`.
pub fn qpoch_step(a: &QMonomial, step: i64, n: Option<usize>, order: usize) -> Result<QSeries> {
    if a.power < 0 {
        return Err(Error::InvalidParam(format!(
            "Pochhammer base {a} has a negative q-power"
        )));
    }
    if step < 1 {
        return Err(Error::InvalidParam("Pochhammer step must be positive".into()));
    }
    let mut s = QSeries::one(order);
    if a.coeff.is_zero() {
        return Ok(s);
    }
    let mut scalar = Rational::one();
    let mut k = 0usize;
    loop {
        if let Some(n) = n {
            if k >= n {
                break;
            }
        }
        let e = a.power + step * k as i64;
        if e > order as i64 {
            break;
        }
        if e == 0 {
            scalar *= Rational::one() - &a.coeff;
        } else {
            s.mul_binomial(&a.coeff, e as usize);
        }
        k += 1;
    }
    s.scale_in_place(&scalar);
    Ok(s)
}

/// Product of several infinite Pochhammers with a common step.
pub fn qpoch_infinite_product(params: &[QMonomial], step: i64, order: usize) -> Result<QSeries> {
    let mut out = QSeries::one(order);
    for a in params {
        out = &out * &qpoch_step(a, step, None, order)?;
    }
    Ok(out)
}
