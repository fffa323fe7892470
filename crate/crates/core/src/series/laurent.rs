use std::fmt;

use num_traits::{One, Zero};

use super::{QSeries, Rational};
use crate::error::{Error, Result};

/// A series in q, truncated at `order`, whose coefficients are Laurent
/// polynomials in z supported on a declared window `[lo, hi]`.
///
/// Writing outside the window is an error rather than a silent drop.
#[derive(Clone, Debug)]
pub struct ZLaurentSeries {
    order: usize,
    lo: i64,
    hi: i64,
    // coeffs[q-exponent][z-exponent - lo]
    coeffs: Vec<Vec<Rational>>,
}

impl ZLaurentSeries {
    pub fn zero(order: usize, window: (i64, i64)) -> Self {
        let (lo, hi) = window;
        assert!(lo <= 0 && 0 <= hi, "window must contain z^0");
        let width = (hi - lo + 1) as usize;
        ZLaurentSeries {
            order,
            lo,
            hi,
            coeffs: vec![vec![Rational::zero(); width]; order + 1],
        }
    }

    pub fn one(order: usize, window: (i64, i64)) -> Self {
        let mut s = Self::zero(order, window);
        s.coeffs[0][(-s.lo) as usize] = Rational::one();
        s
    }

    /// `c * q^q_exp * z^z_exp`.
    pub fn monomial(c: Rational, q_exp: usize, z_exp: i64, order: usize, window: (i64, i64)) -> Result<Self> {
        let mut s = Self::zero(order, window);
        s.add_term(q_exp, z_exp, &c)?;
        Ok(s)
    }

    /// `f(q) * z^z_exp`.
    pub fn from_qseries(f: &QSeries, z_exp: i64, window: (i64, i64)) -> Result<Self> {
        let mut s = Self::zero(f.order(), window);
        for (i, c) in f.coeffs().iter().enumerate() {
            s.add_term(i, z_exp, c)?;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn coeff(&self, q_exp: usize, z_exp: i64) -> Rational {
        if z_exp < self.lo || z_exp > self.hi || q_exp > self.order {
            return Rational::zero();
        }
        self.coeffs[q_exp][(z_exp - self.lo) as usize].clone()
    }

    /// Adds `c q^q_exp z^z_exp`; q-exponents beyond the order are dropped
    /// (that is truncation), z-exponents outside the window are errors.
    pub fn add_term(&mut self, q_exp: usize, z_exp: i64, c: &Rational) -> Result<()> {
        if c.is_zero() || q_exp > self.order {
            return Ok(());
        }
        if z_exp < self.lo || z_exp > self.hi {
            return Err(Error::WindowOverflow {
                exponent: z_exp,
                lo: self.lo,
                hi: self.hi,
            });
        }
        self.coeffs[q_exp][(z_exp - self.lo) as usize] += c;
        Ok(())
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, i64, &Rational)> + '_ {
        self.coeffs.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j as i64 + self.lo, c))
        })
    }

    /// Sum, in the hull of both windows, at the smaller order.
    pub fn add(&self, other: &ZLaurentSeries) -> Result<ZLaurentSeries> {
        let order = self.order.min(other.order);
        let window = (self.lo.min(other.lo), self.hi.max(other.hi));
        let mut out = Self::zero(order, window);
        for (i, j, c) in self.nonzero().chain(other.nonzero()) {
            out.add_term(i, j, c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> ZLaurentSeries {
        let mut out = self.clone();
        for row in out.coeffs.iter_mut() {
            for c in row.iter_mut() {
                *c = -c.clone();
            }
        }
        out
    }

    /// Product into the destination `window`.
    pub fn mul(&self, other: &ZLaurentSeries, window: (i64, i64)) -> Result<ZLaurentSeries> {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order, window);
        let rhs: Vec<_> = other.nonzero().collect();
        for (i1, j1, c1) in self.nonzero() {
            if i1 > order {
                continue;
            }
            for (i2, j2, c2) in &rhs {
                if i1 + i2 > order {
                    continue;
                }
                out.add_term(i1 + i2, j1 + j2, &(c1 * *c2))?;
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &Rational) -> ZLaurentSeries {
        let mut out = self.clone();
        for row in out.coeffs.iter_mut() {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    /// Multiplies by `z^k` in the same window.
    pub fn z_shift(&self, k: i64) -> Result<ZLaurentSeries> {
        let mut out = Self::zero(self.order, (self.lo, self.hi));
        for (i, j, c) in self.nonzero() {
            out.add_term(i, j + k, c)?;
        }
        Ok(out)
    }

    /// The q-series multiplying `z^j`.
    pub fn z_coeff(&self, j: i64) -> QSeries {
        let mut s = QSeries::zero(self.order);
        if j >= self.lo && j <= self.hi {
            for i in 0..=self.order {
                *s.coeff_mut(i) = self.coeffs[i][(j - self.lo) as usize].clone();
            }
        }
        s
    }

    /// First `(q_exp, z_exp)` at which the two series differ, up to the
    /// smaller order.
    pub fn first_difference(&self, other: &ZLaurentSeries) -> Option<(usize, i64)> {
        let order = self.order.min(other.order);
        let lo = self.lo.min(other.lo);
        let hi = self.hi.max(other.hi);
        for i in 0..=order {
            for j in lo..=hi {
                if self.coeff(i, j) != other.coeff(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl PartialEq for ZLaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl fmt::Display for ZLaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for i in 0..=self.order {
            let mut zs = Vec::new();
            for j in self.lo..=self.hi {
                let c = &self.coeffs[i][(j - self.lo) as usize];
                if c.is_zero() {
                    continue;
                }
                zs.push(match j {
                    0 => format!("{c}"),
                    _ if c.is_one() => format!("z^{j}"),
                    _ => format!("{c}*z^{j}"),
                });
            }
            if zs.is_empty() {
                continue;
            }
            let inner = zs.join(" + ");
            parts.push(match i {
                0 => format!("({inner})"),
                _ => format!("({inner})*q^{i}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(q^{})", parts.join(" + "), self.order + 1)
    }
}
