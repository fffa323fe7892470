use num_traits::Zero;

use super::{QSeries, QTerm, Rational};
use crate::error::Result;

/// `q^shift * series`: a truncated Laurent series in q, known modulo
/// `q^(shift + series.order() + 1)`. Needed where individual terms carry
/// negative q-powers, as in pairs with factors like `(b/q)^n`.
#[derive(Clone, Debug)]
pub struct ShiftedSeries {
    pub shift: i64,
    pub series: QSeries,
}

impl ShiftedSeries {
    pub fn zero_from(shift: i64, rel_order: usize) -> Self {
        ShiftedSeries {
            shift,
            series: QSeries::zero(rel_order),
        }
    }

    pub fn from_term(t: &QTerm, rel_order: usize) -> Result<Self> {
        let (shift, series) = t.to_shifted(rel_order)?;
        Ok(ShiftedSeries { shift, series })
    }

    /// One past the highest known exponent.
    pub fn precision(&self) -> i64 {
        self.shift + self.series.order() as i64 + 1
    }

    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.shift || e >= self.precision() {
            return Rational::zero();
        }
        self.series.coeff((e - self.shift) as usize).clone()
    }

    /// Sum, known up to the smaller precision.
    pub fn add(&self, other: &ShiftedSeries) -> ShiftedSeries {
        let shift = self.shift.min(other.shift);
        let prec = self.precision().min(other.precision());
        if prec <= shift {
            return ShiftedSeries::zero_from(shift, 0);
        }
        let mut s = QSeries::zero((prec - shift - 1) as usize);
        for e in shift..prec {
            let c = self.coeff(e) + other.coeff(e);
            *s.coeff_mut((e - shift) as usize) = c;
        }
        ShiftedSeries { shift, series: s }
    }

    /// First exponent, below both precisions, where the two differ.
    pub fn first_difference(&self, other: &ShiftedSeries) -> Option<i64> {
        let lo = self.shift.min(other.shift);
        let hi = self.precision().min(other.precision());
        (lo..hi).find(|&e| self.coeff(e) != other.coeff(e))
    }
}
