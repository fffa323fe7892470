use std::fmt;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};
use crate::numeric::BigComplex;

/// `coeff * q^power`. Negative powers appear only in intermediate
/// quantities such as `c/(ab)`, never in user parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMonomial {
    pub coeff: Rational,
    pub power: i64,
}

impl QMonomial {
    pub fn new(coeff: Rational, power: i64) -> Self {
        QMonomial { coeff, power }
    }

    pub fn q_pow(power: i64) -> Self {
        QMonomial::new(Rational::one(), power)
    }

    pub fn constant(coeff: Rational) -> Self {
        QMonomial::new(coeff, 0)
    }

    pub fn zero() -> Self {
        QMonomial::new(Rational::zero(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, other: &QMonomial) -> QMonomial {
        QMonomial::new(&self.coeff * &other.coeff, self.power + other.power)
    }

    pub fn div(&self, other: &QMonomial) -> QMonomial {
        QMonomial::new(&self.coeff / &other.coeff, self.power - other.power)
    }

    pub fn recip(&self) -> QMonomial {
        QMonomial::new(self.coeff.recip(), -self.power)
    }

    pub fn pow(&self, n: i64) -> QMonomial {
        QMonomial::new(rat_pow(&self.coeff, n), self.power * n)
    }

    /// Multiplies by `q^k`.
    pub fn shifted(&self, k: i64) -> QMonomial {
        QMonomial::new(self.coeff.clone(), self.power + k)
    }

    /// Substitutes `q -> q^s`.
    pub fn dilate(&self, s: i64) -> QMonomial {
        QMonomial::new(self.coeff.clone(), self.power * s)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.coeff),
            p => {
                if !self.coeff.is_one() {
                    write!(f, "{}*", self.coeff)?;
                }
                if p == 1 {
                    write!(f, "q")
                } else {
                    write!(f, "q^{p}")
                }
            }
        }
    }
}

/// `r^n` for any integer `n`; `0^n` with `n < 0` panics.
pub fn rat_pow(r: &Rational, n: i64) -> Rational {
    if n >= 0 {
        num_traits::pow(r.clone(), n as usize)
    } else {
        num_traits::pow(r.recip(), n.unsigned_abs() as usize)
    }
}

/// A parameter instantiation: an exact monomial `r * q^m` with `m >= 0`,
/// or a complex number for the numeric backend.
#[derive(Clone, Debug)]
pub enum ParamSpec {
    ExactMonomial { r: Rational, m: u32 },
    Numeric { value: BigComplex, precision_digits: u32 },
}

impl ParamSpec {
    pub fn exact(r: Rational, m: u32) -> Self {
        ParamSpec::ExactMonomial { r, m }
    }

    pub fn as_monomial(&self) -> Result<QMonomial> {
        match self {
            ParamSpec::ExactMonomial { r, m } => Ok(QMonomial::new(r.clone(), *m as i64)),
            ParamSpec::Numeric { .. } => Err(Error::InvalidParam(
                "numeric parameter used where an exact monomial is required".into(),
            )),
        }
    }
}

impl From<QMonomial> for ParamSpec {
    fn from(m: QMonomial) -> Self {
        assert!(m.power >= 0, "exact parameters need a nonnegative q-power");
        ParamSpec::ExactMonomial {
            r: m.coeff,
            m: m.power as u32,
        }
    }
}
