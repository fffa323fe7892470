use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A power series in q known modulo q^(order+1), with exact rational
/// coefficients stored densely for exponents 0..=order.
///
/// Equality compares coefficients up to the smaller of the two orders.
#[derive(Clone, Debug)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * q^e`, which is the zero series when `e > order`.
    pub fn monomial(c: Rational, e: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if e <= order {
            s.coeffs[e] = c;
        }
        s
    }

    /// Builds a series from its coefficient list; the order is `len - 1`.
    ///
    /// # Panics
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        QSeries { coeffs }
    }

    /// Integer coefficients, zero-padded (or cut) to `order`.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, v) in values.iter().enumerate().take(order + 1) {
            s.coeffs[i] = Rational::from_integer((*v).into());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, e: usize) -> &Rational {
        &self.coeffs[e]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, e: usize) -> &mut Rational {
        &mut self.coeffs[e]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient, if any is visible.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        QSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut s = Self::zero(n);
        for i in k..=n {
            s.coeffs[i] = self.coeffs[i - k].clone();
        }
        s
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_in_place(&mut self, c: &Rational) {
        if c.is_one() {
            return;
        }
        for x in self.coeffs.iter_mut() {
            if !x.is_zero() {
                *x *= c;
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &QSeries) {
        let n = self.order().min(other.order());
        self.coeffs.truncate(n + 1);
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    /// Adds `c * q^shift * other` in place without changing this order.
    /// `other` must reach at least `self.order() - shift`.
    pub fn add_scaled_shifted(&mut self, other: &QSeries, c: &Rational, shift: usize) {
        let n = self.order();
        if shift > n {
            return;
        }
        debug_assert!(other.order() + shift >= n);
        for i in shift..=n {
            let y = &other.coeffs[i - shift];
            if !y.is_zero() {
                self.coeffs[i] += y * c;
            }
        }
    }

    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut b = vec![Rational::zero(); n + 1];
        b[0] = inv0.clone();
        for i in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=i {
                let aj = &self.coeffs[j];
                if aj.is_zero() || b[i - j].is_zero() {
                    continue;
                }
                acc += aj * &b[i - j];
            }
            if !acc.is_zero() {
                b[i] = -(acc * &inv0);
            }
        }
        Ok(QSeries { coeffs: b })
    }

    /// Multiplies in place by `(1 - c q^e)`; `e` must be positive.
    pub fn mul_binomial(&mut self, c: &Rational, e: usize) {
        debug_assert!(e >= 1);
        let n = self.order();
        if c.is_zero() || e > n {
            return;
        }
        let unit = unit_sign(c);
        for i in (e..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            let prev = &lo[i - e];
            if prev.is_zero() {
                continue;
            }
            match unit {
                Some(true) => hi[0] -= prev,
                Some(false) => hi[0] += prev,
                None => hi[0] -= prev * c,
            }
        }
    }

    /// Divides in place by `(1 - c q^e)`; `e` must be positive.
    pub fn div_binomial(&mut self, c: &Rational, e: usize) {
        debug_assert!(e >= 1);
        let n = self.order();
        if c.is_zero() || e > n {
            return;
        }
        let unit = unit_sign(c);
        for i in e..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            let prev = &lo[i - e];
            if prev.is_zero() {
                continue;
            }
            match unit {
                Some(true) => hi[0] += prev,
                Some(false) => hi[0] -= prev,
                None => hi[0] += prev * c,
            }
        }
    }

    /// First exponent (up to the common order) where the two series differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

/// `Some(true)` for 1, `Some(false)` for -1.
fn unit_sign(c: &Rational) -> Option<bool> {
    if !c.denom().is_one() {
        return None;
    }
    if c.is_one() {
        Some(true)
    } else if c.numer().abs().is_one() {
        Some(false)
    } else {
        None
    }
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let mut s = self.truncate(rhs.order());
        s.add_assign_ref(rhs);
        s
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        QSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
