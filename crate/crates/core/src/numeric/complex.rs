use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::series::Rational;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision in bits for a number of decimal digits, with guard bits.
pub fn bits_for(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64
}

pub fn big_from_rational(r: &Rational, digits: u32) -> BigFloat {
    let p = bits_for(digits);
    with_consts(|cc| {
        let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, p, RM, cc);
        let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, p, RM, cc);
        n.div(&d, p, RM)
    })
}

/// Nearest f64, going through the decimal representation.
pub fn big_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    with_consts(|cc| x.format(Radix::Dec, RM, cc))
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .unwrap_or(f64::NAN)
}

/// Decimal rendering with `sig` significant digits.
pub fn big_to_string(x: &BigFloat, sig: usize) -> String {
    let v = big_to_f64(x);
    if sig <= 17 {
        return format!("{:.*e}", sig.saturating_sub(1), v);
    }
    with_consts(|cc| x.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
}

/// A complex number with arbitrary-precision parts, carrying its working
/// precision in decimal digits. Binary operations run at the smaller of
/// the two precisions.
#[derive(Clone, Debug)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    digits: u32,
}

impl BigComplex {
    pub fn from_parts(re: BigFloat, im: BigFloat, digits: u32) -> Self {
        BigComplex { re, im, digits }
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_i64(0, digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn from_i64(n: i64, digits: u32) -> Self {
        let p = bits_for(digits);
        BigComplex {
            re: BigFloat::from_i64(n, p),
            im: BigFloat::from_i64(0, p),
            digits,
        }
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        BigComplex {
            re: big_from_rational(r, digits),
            im: BigFloat::from_i64(0, bits_for(digits)),
            digits,
        }
    }

    pub fn from_rationals(re: &Rational, im: &Rational, digits: u32) -> Self {
        BigComplex {
            re: big_from_rational(re, digits),
            im: big_from_rational(im, digits),
            digits,
        }
    }

    pub fn from_real(re: BigFloat, digits: u32) -> Self {
        BigComplex {
            re,
            im: BigFloat::from_i64(0, bits_for(digits)),
            digits,
        }
    }

    /// `e^{i theta}`.
    pub fn cis(theta: &BigFloat, digits: u32) -> Self {
        let p = bits_for(digits);
        with_consts(|cc| BigComplex {
            re: theta.cos(p, RM, cc),
            im: theta.sin(p, RM, cc),
            digits,
        })
    }

    /// `e^{i pi r}` for rational `r`.
    pub fn cis_pi(r: &Rational, digits: u32) -> Self {
        Self::cis(&(pi(digits).mul(&big_from_rational(r, digits), bits_for(digits), RM)), digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    fn p2(&self, o: &Self) -> (usize, u32) {
        let d = self.digits.min(o.digits);
        (bits_for(d), d)
    }

    pub fn add(&self, o: &Self) -> Self {
        let (p, d) = self.p2(o);
        BigComplex {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
            digits: d,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (p, d) = self.p2(o);
        BigComplex {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
            digits: d,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (p, d) = self.p2(o);
        if self.im.is_zero() && o.im.is_zero() {
            return BigComplex {
                re: self.re.mul(&o.re, p, RM),
                im: BigFloat::from_i64(0, p),
                digits: d,
            };
        }
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        BigComplex { re, im, digits: d }
    }

    pub fn div(&self, o: &Self) -> Self {
        let (p, d) = self.p2(o);
        if o.im.is_zero() {
            return BigComplex {
                re: self.re.div(&o.re, p, RM),
                im: self.im.div(&o.re, p, RM),
                digits: d,
            };
        }
        let den = o.re.mul(&o.re, p, RM).add(&o.im.mul(&o.im, p, RM), p, RM);
        let re = self.re.mul(&o.re, p, RM).add(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.im.mul(&o.re, p, RM).sub(&self.re.mul(&o.im, p, RM), p, RM);
        BigComplex {
            re: re.div(&den, p, RM),
            im: im.div(&den, p, RM),
            digits: d,
        }
    }

    pub fn neg(&self) -> Self {
        BigComplex {
            re: self.re.neg(),
            im: self.im.neg(),
            digits: self.digits,
        }
    }

    pub fn conj(&self) -> Self {
        BigComplex {
            re: self.re.clone(),
            im: self.im.neg(),
            digits: self.digits,
        }
    }

    pub fn recip(&self) -> Self {
        Self::one(self.digits).div(self)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r, self.digits))
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> Self {
        Self::one(self.digits).sub(self)
    }

    pub fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one(self.digits);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// False after a division by zero or an overflow.
    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.im.is_nan() || self.re.is_inf() || self.im.is_inf())
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> BigFloat {
        let p = bits_for(self.digits);
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(bits_for(self.digits), RM)
    }

    pub fn abs_f64(&self) -> f64 {
        big_to_f64(&self.abs())
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let p = bits_for(self.digits);
        let r = self.abs();
        let two = BigFloat::from_i64(2, p);
        let re = r.add(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
        let mut im = r.sub(&self.re, p, RM).div(&two, p, RM).sqrt(p, RM);
        if self.im.is_negative() {
            im = im.neg();
        }
        BigComplex {
            re,
            im,
            digits: self.digits,
        }
    }

    /// Re-rounds to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        let p = bits_for(digits);
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        let _ = re.set_precision(p, RM);
        let _ = im.set_precision(p, RM);
        BigComplex { re, im, digits }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (big_to_f64(&self.re), big_to_f64(&self.im))
    }
}

/// `pi` at the given precision.
pub fn pi(digits: u32) -> BigFloat {
    with_consts(|cc| cc.pi(bits_for(digits), RM))
}

pub fn big_from_f64(x: f64, digits: u32) -> BigFloat {
    BigFloat::from_f64(x, bits_for(digits))
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(20);
        let re = big_to_string(&self.re, sig);
        if self.im.is_zero() {
            return write!(f, "{re}");
        }
        let im = big_to_string(&self.im.abs(), sig);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{re} {sign} {im}i")
    }
}

/// `|a - b| / max(|a|, |b|, 1e-30)`.
pub fn relative_discrepancy(a: &BigComplex, b: &BigComplex) -> BigFloat {
    let d = a.digits.min(b.digits);
    let p = bits_for(d);
    let diff = a.sub(b).abs();
    let mut den = a.abs().max(&b.abs());
    let floor = with_consts(|cc| BigFloat::parse("1e-30", Radix::Dec, p, RM, cc));
    den = den.max(&floor);
    diff.div(&den, p, RM)
}
