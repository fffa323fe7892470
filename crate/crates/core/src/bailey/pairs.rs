//! The cataloged pairs: Bressoud's two WP-Bailey pairs, the pair of
//! McLaughlin and Zimmer, and the restricted pairs obtained from each by
//! replacing `k` with `ak`, letting `a -> 0` and setting `k = b`.
//!
//! The WP pairs are stated in base `sqrt(q)`; they are evaluated
//! numerically with `sqrt(q)` and `sqrt(a)` taken on the principal branch.
//! The restricted pairs are written with `sqrt(q)` renamed to `q`, so they
//! satisfy the restricted relation over the base `q^2`.

use super::{NumSeq, RestrictedBaileyPair, WPBaileyPair};
use crate::error::{Error, Result};
use crate::numeric::{BigComplex, PochTable, PowTable};
use crate::series::{QMonomial, QTerm};
use crate::summation::TermGenerator;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WpPairKind {
    /// `alpha_n = delta_{0,n}`.
    Delta,
    /// Bressoud's pair with `(1 - a q^{2n})/(1 - a)` in `alpha`.
    Bressoud3,
    /// Bressoud's pair with `(1 - sqrt(a) q^n)/(1 - sqrt(a))` in `alpha`.
    Bressoud2,
    /// The pair of McLaughlin and Zimmer.
    Cn333,
}

impl WpPairKind {
    /// `0` is the delta pair; `1..=3` are the three cataloged pairs.
    pub fn from_index(i: i64) -> Result<Self> {
        Ok(match i {
            0 => WpPairKind::Delta,
            1 => WpPairKind::Bressoud3,
            2 => WpPairKind::Bressoud2,
            3 => WpPairKind::Cn333,
            _ => return Err(Error::violation("pair must be 0, 1, 2 or 3")),
        })
    }
}

/// The restricted pairs derived from the WP pairs above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitedPair {
    Bressoud3,
    Bressoud2,
    Cn333,
}

impl LimitedPair {
    pub fn from_index(i: i64) -> Result<Self> {
        Ok(match i {
            1 => LimitedPair::Bressoud3,
            2 => LimitedPair::Bressoud2,
            3 => LimitedPair::Cn333,
            _ => return Err(Error::violation("pair must be 1, 2 or 3")),
        })
    }

    /// `(ea, ra, eb, rb)` with `alpha_n = (q^ea/b;q)_n/(q;q)_n (b q^ra)^n`
    /// and `beta_n = (q^eb/b;q^2)_n/(q^2;q^2)_n (b q^rb)^n`.
    fn shape(self) -> (i64, i64, i64, i64) {
        match self {
            LimitedPair::Bressoud3 => (0, -1, 0, -1),
            LimitedPair::Bressoud2 => (1, -1, 2, -1),
            LimitedPair::Cn333 => (0, 0, 0, 1),
        }
    }
}

/// The restricted pair over base `q^2`:
///
/// - Bressoud3: `alpha_n = (1/b;q)_n/(q;q)_n (b/q)^n`,
///   `beta_n = (1/b;q^2)_n/(q^2;q^2)_n (b/q)^n`
/// - Bressoud2: `alpha_n = (q/b;q)_n/(q;q)_n (b/q)^n`,
///   `beta_n = (q^2/b;q^2)_n/(q^2;q^2)_n (b/q)^n`
/// - Cn333: `alpha_n = (1/b;q)_n/(q;q)_n b^n`,
///   `beta_n = (1/b;q^2)_n/(q^2;q^2)_n (bq)^n`
pub fn limited_pair(kind: LimitedPair, b: &QMonomial) -> Result<RestrictedBaileyPair> {
    if b.coeff == num_traits::Zero::zero() {
        return Err(Error::violation("b must be nonzero"));
    }
    let (ea, ra, eb, rb) = kind.shape();
    let inv = b.recip();
    let alpha_arg = inv.shifted(ea);
    let beta_arg = inv.shifted(eb);
    let alpha_ratio = b.shifted(ra);
    let beta_ratio = b.shifted(rb);
    let alpha = move |n: i64| {
        QTerm::one()
            .mul_poch(&alpha_arg, n)
            .div_qfac(n)
            .mul_mono_pow(&alpha_ratio, n)
    };
    let beta = move |n: i64| {
        QTerm::one()
            .mul_poch_step(&beta_arg, 2, n)
            .div_poch_step(&QMonomial::q_pow(2), 2, n)
            .mul_mono_pow(&beta_ratio, n)
    };
    let (a2, b2) = (alpha.clone(), beta.clone());
    Ok(RestrictedBaileyPair::new(
        TermGenerator::new(move |n| Ok(alpha(n)), move |n| valuation_or_max(&a2(n))),
        TermGenerator::new(move |n| Ok(beta(n)), move |n| valuation_or_max(&b2(n))),
        b.clone(),
        2,
    ))
}

fn valuation_or_max(t: &QTerm) -> i64 {
    match t.valuation() {
        Ok(Some(v)) => v,
        Ok(None) => i64::MAX / 4,
        Err(_) => i64::MIN / 4,
    }
}

/// The same restricted pair at a numeric point; `alpha` uses base `q`,
/// `beta` base `q^2`.
pub fn limited_pair_numeric(kind: LimitedPair, b: &BigComplex, q: &BigComplex) -> (NumSeq, NumSeq) {
    let (ea, ra, eb, rb) = kind.shape();
    let inv = b.recip();
    let q2 = q.mul(q);
    let mut ta = PochTable::new(&inv.mul(&q.powi(ea)), q);
    let mut tq = PochTable::new(q, q);
    let mut pa = PowTable::new(&b.mul(&q.powi(ra)));
    let mut tb = PochTable::new(&inv.mul(&q.powi(eb)), &q2);
    let mut tq2 = PochTable::new(&q2, &q2);
    let mut pb = PowTable::new(&b.mul(&q.powi(rb)));
    (
        Box::new(move |n| Ok(ta.get(n)?.div(&tq.get(n)?).mul(&pa.get(n)))),
        Box::new(move |n| Ok(tb.get(n)?.div(&tq2.get(n)?).mul(&pb.get(n)))),
    )
}

/// One of the cataloged WP-Bailey pairs at `(a, k, q)`.
pub fn wp_pair(kind: WpPairKind, a: &BigComplex, k: &BigComplex, q: &BigComplex) -> WPBaileyPair {
    let digits = q.digits();
    let one = BigComplex::one(digits);
    let sq = q.sqrt();
    let sa = a.sqrt();
    let (alpha, beta): (NumSeq, NumSeq) = match kind {
        WpPairKind::Delta => {
            let zero = BigComplex::zero(digits);
            let o = one.clone();
            let mut t1 = PochTable::new(&k.div(a), q);
            let mut t2 = PochTable::new(k, q);
            let mut t3 = PochTable::new(q, q);
            let mut t4 = PochTable::new(&a.mul(q), q);
            (
                Box::new(move |n| Ok(if n == 0 { o.clone() } else { zero.clone() })),
                Box::new(move |n| Ok(t1.get(n)?.mul(&t2.get(n)?).div(&t3.get(n)?.mul(&t4.get(n)?)))),
            )
        }
        WpPairKind::Bressoud3 => {
            let r = k.div(&a.mul(&sq));
            let (a1, one1) = (a.clone(), one.clone());
            let q2 = q.mul(q);
            let mut n1 = PochTable::new(&sa, &sq);
            let mut n2 = PochTable::new(&a.div(k), &sq);
            let mut d1 = PochTable::new(&sq, &sq);
            let mut d2 = PochTable::new(&k.mul(&sq).div(&sa), &sq);
            let mut pr = PowTable::new(&r);
            let mut m1 = PochTable::new(k, q);
            let mut m2 = PochTable::new(&a.div(k), q);
            let mut m3 = PochTable::new(&k.mul(&sq).div(&sa).neg(), q);
            let mut m4 = PochTable::new(&k.mul(q).div(&sa).neg(), q);
            let mut e1 = PochTable::new(q, q);
            let mut e2 = PochTable::new(&q.mul(k).mul(k).div(a), q);
            let mut e3 = PochTable::new(&sa.neg(), q);
            let mut e4 = PochTable::new(&sa.mul(&sq).neg(), q);
            let mut pr2 = PowTable::new(&r);
            (
                Box::new(move |n| {
                    let lead = one1.sub(&a1.mul(&q2.powi(n))).div(&one1.sub(&a1));
                    let num = n1.get(n)?.mul(&n2.get(n)?);
                    let den = d1.get(n)?.mul(&d2.get(n)?);
                    Ok(lead.mul(&num).div(&den).mul(&pr.get(n)))
                }),
                Box::new(move |n| {
                    let num = m1.get(n)?.mul(&m2.get(n)?).mul(&m3.get(n)?).mul(&m4.get(n)?);
                    let den = e1.get(n)?.mul(&e2.get(n)?).mul(&e3.get(n)?).mul(&e4.get(n)?);
                    Ok(num.div(&den).mul(&pr2.get(n)))
                }),
            )
        }
        WpPairKind::Bressoud2 | WpPairKind::Cn333 => {
            let cn = kind == WpPairKind::Cn333;
            // alpha: (sqrt a, A; sqrt q)_n / (sqrt q, B; sqrt q)_n r^n
            let (arg_a, arg_b, r) = if cn {
                (a.div(k), k.mul(&sq).div(&sa), k.div(a))
            } else {
                (a.mul(&sq).div(k), k.div(&sa), k.div(&a.mul(&sq)))
            };
            let rb = if cn { k.mul(&sq).div(a) } else { k.div(&a.mul(&sq)) };
            let (sa1, q1, one1) = (sa.clone(), q.clone(), one.clone());
            let mut n1 = PochTable::new(&sa, &sq);
            let mut n2 = PochTable::new(&arg_a, &sq);
            let mut d1 = PochTable::new(&sq, &sq);
            let mut d2 = PochTable::new(&arg_b, &sq);
            let mut pr = PowTable::new(&r);
            // beta: (k, A'; q)_n / (q, B'; q)_n (-k/sqrt a; sqrt q)_2n / (-sqrt(aq); sqrt q)_2n rb^n
            let (arg_c, arg_d) = if cn {
                (a.div(k), k.mul(k).mul(q).div(a))
            } else {
                (a.mul(q).div(k), k.mul(k).div(a))
            };
            let mut m1 = PochTable::new(k, q);
            let mut m2 = PochTable::new(&arg_c, q);
            let mut e1 = PochTable::new(q, q);
            let mut e2 = PochTable::new(&arg_d, q);
            let mut h1 = PochTable::new(&k.div(&sa).neg(), &sq);
            let mut h2 = PochTable::new(&sa.mul(&sq).neg(), &sq);
            let mut pb = PowTable::new(&rb);
            (
                Box::new(move |n| {
                    let lead = one1.sub(&sa1.mul(&q1.powi(n))).div(&one1.sub(&sa1));
                    let num = n1.get(n)?.mul(&n2.get(n)?);
                    let den = d1.get(n)?.mul(&d2.get(n)?);
                    Ok(lead.mul(&num).div(&den).mul(&pr.get(n)))
                }),
                Box::new(move |n| {
                    let num = m1.get(n)?.mul(&m2.get(n)?).mul(&h1.get(2 * n)?);
                    let den = e1.get(n)?.mul(&e2.get(n)?).mul(&h2.get(2 * n)?);
                    Ok(num.div(&den).mul(&pb.get(n)))
                }),
            )
        }
    };
    WPBaileyPair {
        alpha,
        beta,
        a: a.clone(),
        k: k.clone(),
        q: q.clone(),
    }
}
