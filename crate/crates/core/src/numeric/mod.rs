//! Arbitrary-precision complex evaluation of sums and q-products at
//! concrete parameter points.

mod complex;
mod constants;
mod sum;

pub use complex::{
    big_from_f64, big_from_rational, big_to_f64, big_to_string, bits_for, pi,
    relative_discrepancy, BigComplex,
};
pub use constants::{bernoulli_numbers, inverse_square_tail, zeta2_constant};
pub use sum::{
    nprod_qpoch, nsum, NSum, PochLen, PochTable, PowTable, SumRange, TailPolicy, MAX_TERMS,
};

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 60;

/// Default relative tolerance for numeric verification.
pub const DEFAULT_TOL: f64 = 1e-20;
