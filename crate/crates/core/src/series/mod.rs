//! Exact truncated q-series: the coefficient field, dense power series,
//! factored single terms, Laurent-in-z series and q-Pochhammer expansions.

mod laurent;
mod monomial;
mod poch;
mod qseries;
mod shifted;
mod term;

pub use laurent::ZLaurentSeries;
pub use monomial::{rat_pow, ParamSpec, QMonomial};
pub use poch::{qpoch_finite, qpoch_infinite, qpoch_infinite_product, qpoch_step};
pub use qseries::QSeries;
pub use shifted::ShiftedSeries;
pub use term::QTerm;

/// Exact rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Default truncation order for suite runs.
pub const DEFAULT_ORDER: usize = 30;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"3"`, `"-2/5"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d == 0.into() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
