//! Catalog entries, grouped by the theorem they come from.

mod double;
mod families;
mod general;

pub use general::{multcfin_nonzero, multcfin_terminates};

use super::params::{ParamValue, Params};
use super::support::seq_value;
use super::{ExactSide, IdentityStatement, NumericSide};
use crate::error::{Error, Result};
use crate::numeric::BigComplex;
use crate::series::{QSeries, QTerm, Rational};

pub(super) fn entries() -> Vec<IdentityStatement> {
    let mut v = general::entries();
    v.extend(families::entries());
    v.extend(double::entries());
    v
}

pub(crate) fn series(s: QSeries) -> Result<ExactSide> {
    Ok(ExactSide::Series(s))
}

pub(crate) fn value(v: BigComplex) -> Result<NumericSide> {
    Ok(NumericSide::Value(v))
}

/// `g(n)` as a constant factor.
pub(crate) fn g_at(g: &[(i64, Rational)], n: i64) -> QTerm {
    QTerm::constant(seq_value(g, n))
}

pub(crate) fn ensure(cond: bool, constraint: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::violation(constraint))
    }
}

pub(crate) fn build(pairs: Vec<(&str, ParamValue)>) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// An integer slot restricted to `lo..=hi`.
pub(crate) fn int_in(p: &Params, name: &str, lo: i64, hi: i64) -> Result<i64> {
    use super::params::ParamsExt;
    let k = p.int(name)?;
    ensure((lo..=hi).contains(&k), &format!("{lo} <= {name} <= {hi}"))?;
    Ok(k)
}

/// `sum_{k in Z} r^k q^{step k^2 + e k}`; needs `|e| <= step`.
pub(crate) fn theta(order: usize, r: &Rational, e: i64, step: i64) -> Result<QSeries> {
    use num_traits::Zero;
    ensure(e.abs() <= step, "q-exponent of z must satisfy |e| <= 1")?;
    ensure(!r.is_zero(), "z must be nonzero")?;
    let mut s = QSeries::zero(order);
    let n = order as i64;
    let mut k = 0i64;
    loop {
        let mut any = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let ex = step * kk * kk + e * kk;
            if ex <= n {
                any = true;
                *s.coeff_mut(ex as usize) += crate::series::rat_pow(r, kk);
            }
        }
        if !any && k > 0 {
            break;
        }
        k += 1;
    }
    Ok(s)
}
