use num_traits::{One, Zero};

use super::monomial::rat_pow;
use super::{QMonomial, QSeries, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Binomial {
    exp: i64,
    c: Rational,
    power: i32,
}

/// A single summand kept in factored form:
/// `coeff * q^shift * prod (1 - c q^e)^power * dense`, with every `e >= 1`.
///
/// The factored form gives the exact q-valuation for free (it is `shift`
/// when there is no dense factor) and expands in `O(#factors * N)`.
#[derive(Clone, Debug)]
pub struct QTerm {
    coeff: Rational,
    shift: i64,
    factors: Vec<Binomial>,
    dense: Option<QSeries>,
    pole: Option<String>,
}

impl Default for QTerm {
    fn default() -> Self {
        QTerm::one()
    }
}

impl QTerm {
    pub fn one() -> Self {
        QTerm::constant(Rational::one())
    }

    pub fn zero() -> Self {
        QTerm::constant(Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        QTerm {
            coeff: c,
            shift: 0,
            factors: Vec::new(),
            dense: None,
            pole: None,
        }
    }

    pub fn monomial(m: &QMonomial) -> Self {
        QTerm::one().mul_mono(m)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        let mut t = QTerm::one();
        t.shift = e;
        t
    }

    pub fn from_series(s: QSeries) -> Self {
        QTerm::one().mul_series(&s)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn has_dense(&self) -> bool {
        self.dense.is_some()
    }

    pub fn is_zero(&self) -> bool {
        self.pole.is_none() && self.coeff.is_zero()
    }

    /// Lowest q-exponent of the term: exact without a dense factor,
    /// otherwise exact as far as the dense factor is known.
    /// `None` for the zero term.
    pub fn valuation(&self) -> Result<Option<i64>> {
        if let Some(p) = &self.pole {
            return Err(Error::Pole(p.clone()));
        }
        if self.coeff.is_zero() {
            return Ok(None);
        }
        Ok(Some(match &self.dense {
            None => self.shift,
            Some(d) => self.shift + d.valuation().unwrap_or(d.order() + 1) as i64,
        }))
    }

    pub fn scale(mut self, r: &Rational) -> Self {
        self.coeff *= r;
        self
    }

    pub fn neg(mut self) -> Self {
        self.coeff = -self.coeff;
        self
    }

    pub fn mul_q_pow(mut self, e: i64) -> Self {
        self.shift += e;
        self
    }

    pub fn mul_mono(mut self, m: &QMonomial) -> Self {
        self.coeff *= &m.coeff;
        self.shift += m.power;
        self
    }

    /// Multiplies by `m^n` for any integer `n`.
    pub fn mul_mono_pow(mut self, m: &QMonomial, n: i64) -> Self {
        if n == 0 {
            return self;
        }
        if m.coeff.is_zero() {
            if n > 0 {
                self.coeff = Rational::zero();
            } else {
                self.pole = Some("negative power of a zero parameter".into());
            }
            return self;
        }
        self.coeff *= rat_pow(&m.coeff, n);
        self.shift += m.power * n;
        self
    }

    pub fn mul_series(mut self, s: &QSeries) -> Self {
        self.dense = Some(match self.dense.take() {
            None => s.clone(),
            Some(d) => &d * s,
        });
        self
    }

    /// Multiplies by `(1 - c q^e)^power` for any integer `e`.
    pub fn mul_binomial(mut self, c: &Rational, e: i64, power: i32) -> Self {
        if power == 0 || c.is_zero() || self.coeff.is_zero() {
            return self;
        }
        if e == 0 {
            let f = Rational::one() - c;
            if f.is_zero() {
                if power > 0 {
                    self.coeff = Rational::zero();
                } else if self.pole.is_none() {
                    self.pole = Some(format!("factor (1 - {c}) in a denominator"));
                }
            } else {
                self.coeff *= rat_pow(&f, power as i64);
            }
            return self;
        }
        if e > 0 {
            self.insert(e, c.clone(), power);
        } else {
            // 1 - c q^e = -c q^e (1 - q^{-e}/c)
            self.coeff *= rat_pow(&-c, power as i64);
            self.shift += e * power as i64;
            self.insert(-e, c.recip(), power);
        }
        self
    }

    fn insert(&mut self, exp: i64, c: Rational, power: i32) {
        let key = |b: &Binomial| (b.exp, b.c.clone());
        match self.factors.binary_search_by(|b| key(b).cmp(&(exp, c.clone()))) {
            Ok(i) => {
                self.factors[i].power += power;
                if self.factors[i].power == 0 {
                    self.factors.remove(i);
                }
            }
            Err(i) => self.factors.insert(i, Binomial { exp, c, power }),
        }
    }

    /// Multiplies by `(a; q^step)_n^sign`; negative `n` uses
    /// `(a; p)_{-n} = 1 / (a p^{-n}; p)_n`.
    fn poch_pow(mut self, a: &QMonomial, step: i64, n: i64, sign: i32) -> Self {
        if a.coeff.is_zero() {
            return self;
        }
        if n >= 0 {
            for i in 0..n {
                self = self.mul_binomial(&a.coeff, a.power + step * i, sign);
            }
        } else {
            for i in 1..=-n {
                self = self.mul_binomial(&a.coeff, a.power - step * i, -sign);
            }
        }
        self
    }

    /// Multiplies by `(a; q)_n`.
    pub fn mul_poch(self, a: &QMonomial, n: i64) -> Self {
        self.poch_pow(a, 1, n, 1)
    }

    /// Divides by `(a; q)_n`.
    pub fn div_poch(self, a: &QMonomial, n: i64) -> Self {
        self.poch_pow(a, 1, n, -1)
    }

    /// Multiplies by `(a; q^step)_n`.
    pub fn mul_poch_step(self, a: &QMonomial, step: i64, n: i64) -> Self {
        self.poch_pow(a, step, n, 1)
    }

    /// Divides by `(a; q^step)_n`.
    pub fn div_poch_step(self, a: &QMonomial, step: i64, n: i64) -> Self {
        self.poch_pow(a, step, n, -1)
    }

    /// Multiplies by `(q; q)_n`, the most common factor.
    pub fn mul_qfac(self, n: i64) -> Self {
        self.mul_poch(&QMonomial::q_pow(1), n)
    }

    pub fn div_qfac(self, n: i64) -> Self {
        self.div_poch(&QMonomial::q_pow(1), n)
    }

    pub fn mul(mut self, other: &QTerm) -> Self {
        if self.pole.is_none() {
            self.pole = other.pole.clone();
        }
        self.coeff *= &other.coeff;
        self.shift += other.shift;
        for b in &other.factors {
            self.insert(b.exp, b.c.clone(), b.power);
        }
        if let Some(d) = &other.dense {
            self = self.mul_series(d);
        }
        self
    }

    /// Applies the binomial factors (not coeff, shift or dense part) to `s`.
    pub fn apply_binomials(&self, s: &mut QSeries) {
        for b in &self.factors {
            let e = b.exp as usize;
            if e > s.order() {
                continue;
            }
            if b.power > 0 {
                for _ in 0..b.power {
                    s.mul_binomial(&b.c, e);
                }
            } else {
                for _ in 0..-b.power {
                    s.div_binomial(&b.c, e);
                }
            }
        }
    }

    /// The term divided by `coeff * q^shift`, expanded to `rel_order`.
    pub fn unit_part(&self, rel_order: usize) -> Result<QSeries> {
        let mut s = match &self.dense {
            None => QSeries::one(rel_order),
            Some(d) => {
                if d.order() < rel_order {
                    return Err(Error::InvalidParam(format!(
                        "dense factor known to order {} but {} requested",
                        d.order(),
                        rel_order
                    )));
                }
                d.truncate(rel_order)
            }
        };
        self.apply_binomials(&mut s);
        Ok(s)
    }

    /// Expands the term modulo `q^(order+1)`.
    pub fn to_series(&self, order: usize) -> Result<QSeries> {
        if let Some(p) = &self.pole {
            return Err(Error::Pole(p.clone()));
        }
        if self.coeff.is_zero() || self.shift > order as i64 {
            return Ok(QSeries::zero(order));
        }
        if self.shift < 0 {
            return Err(Error::NegativeValuation(self.shift));
        }
        let shift = self.shift as usize;
        let mut u = self.unit_part(order - shift)?;
        u.scale_in_place(&self.coeff);
        let mut out = QSeries::zero(order);
        out.add_scaled_shifted(&u, &Rational::one(), shift);
        Ok(out)
    }

    /// `(shift, series)` with the term equal to `q^shift * series`, the
    /// series known to `rel_order`. Allows negative shifts.
    pub fn to_shifted(&self, rel_order: usize) -> Result<(i64, QSeries)> {
        if let Some(p) = &self.pole {
            return Err(Error::Pole(p.clone()));
        }
        if self.coeff.is_zero() {
            return Ok((self.shift, QSeries::zero(rel_order)));
        }
        let mut u = self.unit_part(rel_order)?;
        u.scale_in_place(&self.coeff);
        Ok((self.shift, u))
    }
}
