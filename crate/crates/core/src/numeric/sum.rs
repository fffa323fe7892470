use std::collections::VecDeque;

use astro_float::BigFloat;

use super::complex::{big_from_f64, big_to_f64, bits_for, BigComplex, RM};
use crate::error::{Error, Result};

/// Hard cap on the number of terms in one numeric sum or product.
pub const MAX_TERMS: u64 = 1_000_000;

const OVERFLOW: f64 = 1e50;

/// Nonzero terms remembered for the ratio test.
const RECENT: usize = 4;

/// When a non-terminating sum or product may stop.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TailPolicy {
    pub abs_floor: f64,
    pub consecutive_required: u32,
    pub ratio_cap: f64,
}

impl Default for TailPolicy {
    fn default() -> Self {
        TailPolicy {
            abs_floor: 1e-40,
            consecutive_required: 3,
            ratio_cap: 0.99,
        }
    }
}

impl TailPolicy {
    /// Floor `10^-(digits-20)`: twenty digits of headroom over the
    /// working precision's last digit. Gives the default at 60 digits.
    pub fn for_digits(digits: u32) -> Self {
        TailPolicy {
            abs_floor: 10f64.powi(-(digits as i32 - 20).max(10)),
            ..TailPolicy::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumRange {
    Unilateral,
    Bilateral,
}

/// A numeric sum with the magnitude of its last included term.
#[derive(Clone, Debug)]
pub struct NSum {
    pub value: BigComplex,
    pub last_term: f64,
    pub terms: u64,
}

struct Tail {
    floor_sq: BigFloat,
    cap_sq: BigFloat,
    over_sq: BigFloat,
    p: usize,
    run: u32,
    recent_sq: VecDeque<BigFloat>,
}

impl Tail {
    fn new(policy: &TailPolicy, digits: u32) -> Self {
        let p = bits_for(digits);
        let sq = |x: f64| {
            let b = big_from_f64(x, digits);
            b.mul(&b, p, RM)
        };
        Tail {
            floor_sq: sq(policy.abs_floor),
            cap_sq: sq(policy.ratio_cap),
            over_sq: sq(OVERFLOW),
            p,
            run: 0,
            recent_sq: VecDeque::with_capacity(RECENT),
        }
    }

    /// Feeds one term's squared magnitude; true once the policy is met.
    fn feed(&mut self, policy: &TailPolicy, t_sq: BigFloat) -> Result<bool> {
        if t_sq.cmp(&self.over_sq).is_some_and(|c| c > 0) {
            return Err(Error::Overflow);
        }
        let small = t_sq.cmp(&self.floor_sq).is_some_and(|c| c < 0);
        // The ratio is taken against the largest of the last few nonzero
        // terms, so interleaved zeros (or rounding residue standing in for
        // zeros) do not reset the run.
        let ratio_ok = if t_sq.is_zero() {
            true
        } else {
            match self.recent_sq.iter().max_by(|a, b| a.cmp(b).unwrap_or(0).cmp(&0)) {
                Some(peak) => {
                    let r = t_sq.div(peak, self.p, RM);
                    r.cmp(&self.cap_sq).is_some_and(|c| c < 0)
                }
                None => false,
            }
        };
        if !t_sq.is_zero() {
            if self.recent_sq.len() == RECENT {
                self.recent_sq.pop_front();
            }
            self.recent_sq.push_back(t_sq);
        }
        if small && ratio_ok {
            self.run += 1;
        } else {
            self.run = 0;
        }
        Ok(self.run >= policy.consecutive_required)
    }
}

fn sum_direction(
    term: &mut impl FnMut(i64) -> Result<BigComplex>,
    start: i64,
    dir: i64,
    policy: &TailPolicy,
    digits: u32,
) -> Result<NSum> {
    let mut tail = Tail::new(policy, digits);
    let mut acc = BigComplex::zero(digits);
    let mut n = start;
    let mut count = 0u64;
    let mut last = 0.0;
    loop {
        if count >= MAX_TERMS {
            return Err(Error::NoConvergence(MAX_TERMS));
        }
        let t = term(n)?;
        let t_sq = t.norm_sqr();
        acc = acc.add(&t);
        count += 1;
        last = if t_sq.is_zero() { last } else { big_to_f64(&t_sq).sqrt() };
        if tail.feed(policy, t_sq)? {
            break;
        }
        if acc.norm_sqr().cmp(&tail.over_sq).is_some_and(|c| c > 0) {
            return Err(Error::Overflow);
        }
        n += dir;
    }
    Ok(NSum {
        value: acc,
        last_term: last,
        terms: count,
    })
}

/// Sums `term(n)` over `n >= 0` or over all integers (as the two
/// unilateral halves `n >= 0` and `n < 0`).
pub fn nsum(
    mut term: impl FnMut(i64) -> Result<BigComplex>,
    range: SumRange,
    policy: &TailPolicy,
    digits: u32,
) -> Result<NSum> {
    let up = sum_direction(&mut term, 0, 1, policy, digits)?;
    match range {
        SumRange::Unilateral => Ok(up),
        SumRange::Bilateral => {
            let down = sum_direction(&mut term, -1, -1, policy, digits)?;
            Ok(NSum {
                value: up.value.add(&down.value),
                last_term: up.last_term.max(down.last_term),
                terms: up.terms + down.terms,
            })
        }
    }
}

/// Length of a numeric Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLen {
    Finite(i64),
    Infinite,
}

/// `(a; q)_n` for integer `n` (negative `n` by reflection) or `n = inf`.
pub fn nprod_qpoch(a: &BigComplex, q: &BigComplex, n: PochLen, policy: &TailPolicy) -> Result<BigComplex> {
    let digits = a.digits().min(q.digits());
    let one = BigComplex::one(digits);
    match n {
        PochLen::Finite(n) if n >= 0 => {
            let mut acc = one.clone();
            let mut x = a.clone();
            for _ in 0..n {
                acc = acc.mul(&x.one_minus());
                x = x.mul(q);
            }
            Ok(acc)
        }
        PochLen::Finite(n) => {
            let qi = q.recip();
            let mut acc = one.clone();
            let mut x = a.mul(&qi);
            for _ in 0..(-n) {
                acc = acc.mul(&x.one_minus());
                x = x.mul(&qi);
            }
            if acc.is_zero() {
                return Err(Error::Pole("negative-index Pochhammer with a vanishing factor".into()));
            }
            Ok(one.div(&acc))
        }
        PochLen::Infinite => {
            let one_sq = BigFloat::from_i64(1, bits_for(digits));
            if q.norm_sqr().cmp(&one_sq).is_some_and(|c| c >= 0) {
                return Err(Error::Domain("infinite product needs |q| < 1".into()));
            }
            if a.is_zero() {
                return Ok(one);
            }
            let floor = big_from_f64(policy.abs_floor, digits);
            let p = bits_for(digits);
            let floor_sq = floor.mul(&floor, p, RM);
            let mut acc = one.clone();
            let mut x = a.clone();
            let mut run = 0;
            for _ in 0..MAX_TERMS {
                acc = acc.mul(&x.one_minus());
                if x.norm_sqr().cmp(&floor_sq).is_some_and(|c| c < 0) {
                    run += 1;
                    if run >= policy.consecutive_required {
                        return Ok(acc);
                    }
                } else {
                    run = 0;
                }
                x = x.mul(q);
            }
            Err(Error::NoConvergence(MAX_TERMS))
        }
    }
}

/// Incrementally extended table of `(a; q)_n`, `n >= 0`, for sums that
/// need many consecutive values. Negative indices fall back to
/// [`nprod_qpoch`].
#[derive(Clone, Debug)]
pub struct PochTable {
    a: BigComplex,
    q: BigComplex,
    vals: Vec<BigComplex>,
    next: BigComplex,
}

impl PochTable {
    pub fn new(a: &BigComplex, q: &BigComplex) -> Self {
        let digits = a.digits().min(q.digits());
        PochTable {
            a: a.clone(),
            q: q.clone(),
            vals: vec![BigComplex::one(digits)],
            next: a.clone(),
        }
    }

    pub fn get(&mut self, n: i64) -> Result<BigComplex> {
        if n < 0 {
            return nprod_qpoch(&self.a, &self.q, PochLen::Finite(n), &TailPolicy::default());
        }
        let n = n as usize;
        while self.vals.len() <= n {
            let v = self.vals.last().unwrap().mul(&self.next.one_minus());
            self.vals.push(v);
            self.next = self.next.mul(&self.q);
        }
        Ok(self.vals[n].clone())
    }
}

/// Incrementally extended table of `x^n`, `n >= 0`.
#[derive(Clone, Debug)]
pub struct PowTable {
    x: BigComplex,
    vals: Vec<BigComplex>,
}

impl PowTable {
    pub fn new(x: &BigComplex) -> Self {
        PowTable {
            x: x.clone(),
            vals: vec![BigComplex::one(x.digits())],
        }
    }

    pub fn get(&mut self, n: i64) -> BigComplex {
        if n < 0 {
            return self.x.powi(n);
        }
        let n = n as usize;
        while self.vals.len() <= n {
            let v = self.vals.last().unwrap().mul(&self.x);
            self.vals.push(v);
        }
        self.vals[n].clone()
    }
}
