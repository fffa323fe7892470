use num_integer::binomial;
use num_traits::{One, Zero};

use super::complex::{bits_for, pi, BigComplex, RM};
use crate::series::{int, Rational};

/// `zeta(2) = pi^2 / 6`.
pub fn zeta2_constant(digits: u32) -> BigComplex {
    let p = bits_for(digits);
    let pi = pi(digits);
    let six = astro_float::BigFloat::from_i64(6, p);
    BigComplex::from_real(pi.mul(&pi, p, RM).div(&six, p, RM), digits)
}

/// Bernoulli numbers `B_0..=B_n` (with `B_1 = -1/2`).
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            let c = binomial(num_bigint::BigInt::from(m + 1), num_bigint::BigInt::from(k));
            acc += Rational::from_integer(c) * bk;
        }
        b.push(-acc / int(m as i64 + 1));
    }
    b
}

/// `sum_{k > big_k} 1/k^2` by Euler-Maclaurin, with enough correction
/// terms for the requested precision when `big_k >= digits`.
///
/// Uses `sum_{k >= K} k^-2 = 1/K + 1/(2K^2) + sum_j B_{2j} K^{-2j-1}`.
pub fn inverse_square_tail(big_k: u64, digits: u32) -> BigComplex {
    let terms = digits as usize + 10;
    let b = bernoulli_numbers(2 * terms);
    let k = BigComplex::from_i64(big_k as i64, digits);
    let kinv = k.recip();
    let kinv2 = kinv.mul(&kinv);
    let mut acc = kinv.add(&kinv2.scale(&Rational::new(1.into(), 2.into())));
    let mut pw = kinv.mul(&kinv2);
    for j in 1..=terms {
        acc = acc.add(&pw.scale(&b[2 * j]));
        pw = pw.mul(&kinv2);
    }
    acc.sub(&kinv2)
}
