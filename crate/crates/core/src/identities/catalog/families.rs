//! Infinite families of multi-sum identities: the limiting corollaries
//! of the multi-sum theorems and the classical sums they extend.

use super::{ensure, g_at, int_in, series};
use crate::error::Result;
use crate::identities::params::{slot, Params, ParamsExt, SlotKind};
use crate::identities::support::*;
use crate::identities::{Backend, ExactSide, IdentityStatement};
use crate::series::{qpoch_step, QMonomial, QTerm};
use crate::summation::{IndexDomain, SumSpec};

use Backend::Exact;
use SlotKind::{Int, List, Seq, Value};

pub(super) fn entries() -> Vec<IdentityStatement> {
    vec![
        mseq10(),
        mseq102(),
        jacobi_id(),
        mseq103(),
        mseq1(),
        mseq111(),
        andrews_gordon(),
        cauchy(),
        aceq(),
        qbinom_special(),
        rr1(),
    ]
}

/// Minimum of `x_1(x_1-x_2) + ... + x_{n-1}(x_{n-1}-x_n) + x_n^2` over
/// reals with `x_1 = x`, rounded down.
fn chain_min(x: i64, n: i64) -> i64 {
    (x * x * (n + 1)).div_euclid(2 * n)
}

/// `sum m_j (m_j - m_{j+1})` over the gaps inside `idx`.
fn chain_known(idx: &[i64]) -> i64 {
    idx.windows(2).map(|w| w[0] * (w[0] - w[1])).sum()
}

fn euler(p: &Params, order: usize) -> Result<ExactSide> {
    series(euler_inv(order, p.int("k").unwrap_or(1) as usize)?)
}

fn mseq10() -> IdentityStatement {
    IdentityStatement::new(
        "mseq10",
        "k-fold sum with quadratic exponent m_1(m_1-m_2)+...+m_k^2 equals 1/(q;q)_inf^k",
        "multipartition extension of Jacobi's identity",
        "embeds Jacobi's identity in an infinite family",
    )
    .slots(&[slot("k", Int, "depth k >= 1")])
    .exact_sum(mseq10_spec, euler)
    .validate(|p, _| int_in(p, "k", 1, 6).map(|_| ()))
    .instance(Exact, &[("k", "1")])
    .instance(Exact, &[("k", "2")])
    .instance(Exact, &[("k", "3")])
}

fn mseq10_spec(p: &Params) -> Result<SumSpec> {
    let k = int_in(p, "k", 1, 6)? as usize;
    Ok(SumSpec::new(
        IndexDomain::Ordered { len: k },
        move |level, idx| {
            let m = idx[level];
            let mut t = QTerm::one().div_qfac(m);
            if level >= 1 {
                let prev = idx[level - 1];
                t = t.mul_q_pow(prev * (prev - m)).div_qfac(prev - m);
            }
            if level == k - 1 {
                t = t.mul_q_pow(m * m).div_qfac(m);
            }
            Ok(t)
        },
        move |idx| {
            let p = idx.len();
            let last = idx[p - 1];
            chain_known(idx) + chain_min(last, (k - p + 1) as i64)
        },
    ))
}

fn mseq102() -> IdentityStatement {
    IdentityStatement::new(
        "mseq102",
        "the k-modular companion of the multipartition family, equal to 1/(q;q)_inf",
        "k-modular extension of Jacobi's identity",
        "embeds Jacobi's identity in an infinite family",
    )
    .slots(&[slot("k", Int, "depth k >= 1")])
    .exact_sum(mseq102_spec, |_, order| series(euler_inv(order, 1)?))
    .validate(|p, _| int_in(p, "k", 1, 5).map(|_| ()))
    .instance(Exact, &[("k", "2")])
    .instance(Exact, &[("k", "3")])
}

/// Levels shared by the k-modular sums: `q^{m_1}/(q;q^k)_{m_1}` at the
/// top and `q^{k(m_L-1)d + m_{L+1}} / ((q^k;q^k)_d (q^{L+1};q^k)_{m_{L+1}})`
/// between consecutive indices.
fn modular_level(k: i64, level: usize, idx: &[i64]) -> QTerm {
    let m = idx[level];
    if level == 0 {
        return QTerm::q_pow(m).div_poch_step(&qp(1), k, m);
    }
    let prev = idx[level - 1];
    let d = prev - m;
    QTerm::q_pow(k * (prev - 1) * d + m)
        .div_poch_step(&qp(k), k, d)
        .div_poch_step(&qp(level as i64 + 1), k, m)
}

fn mseq102_spec(p: &Params) -> Result<SumSpec> {
    let k = int_in(p, "k", 1, 5)?;
    let len = k as usize;
    Ok(SumSpec::new(
        IndexDomain::Ordered { len },
        move |level, idx| {
            let mut t = modular_level(k, level, idx);
            if level == len - 1 {
                let m = idx[level];
                t = t.mul_q_pow(k * m * (m - 1)).div_poch_step(&qp(k), k, m);
            }
            Ok(t)
        },
        move |idx| {
            let p = idx.len();
            let quad = chain_known(idx) + chain_min(idx[p - 1], (len - p + 1) as i64);
            k * (quad - idx[0]).max(0) + idx.iter().sum::<i64>()
        },
    ))
}

fn jacobi_id() -> IdentityStatement {
    IdentityStatement::new(
        "jacobi_id",
        "sum q^(n^2)/(q;q)_n^2 = 1/(q;q)_inf",
        "Jacobi's identity",
        "identity of Jacobi",
    )
    .exact_sum(
        |_| {
            Ok(leaf_spec(
                IndexDomain::Unilateral,
                |idx| Ok(QTerm::q_pow(idx[0] * idx[0]).div_qfac(idx[0]).div_qfac(idx[0])),
                |idx| idx[0] * idx[0],
            ))
        },
        |_, order| series(euler_inv(order, 1)?),
    )
    .instance(Exact, &[])
}

fn mseq103() -> IdentityStatement {
    IdentityStatement::new(
        "mseq103",
        "k-modular multi-sum with a bilateral theta tail, equal to (q^i,q^(p-i),q^p;q^p)_inf/(q;q)_inf",
        "bilateral k-modular family",
        "Let $k\\geq 1$, $p\\geq 3$ and $i\\leq p/2$",
    )
    .slots(&[
        slot("k", Int, "depth k >= 1"),
        slot("p", Int, "modulus p >= 3"),
        slot("i", Int, "1 <= i <= p/2"),
    ])
    .exact_sum(mseq103_spec, mseq103_rhs)
    .validate(|p, _| mseq103_params(p).map(|_| ()))
    .instance(Exact, &[("k", "1"), ("p", "5"), ("i", "1")])
    .instance(Exact, &[("k", "1"), ("p", "5"), ("i", "2")])
    .instance(Exact, &[("k", "2"), ("p", "7"), ("i", "2")])
    .instance(Exact, &[("k", "1"), ("p", "7"), ("i", "3")])
}

fn mseq103_params(p: &Params) -> Result<(i64, i64, i64)> {
    let k = int_in(p, "k", 1, 4)?;
    let m = int_in(p, "p", 3, 40)?;
    let i = p.int("i")?;
    ensure(i >= 1 && 2 * i <= m, "1 <= i <= p/2")?;
    Ok((k, m, i))
}

fn mseq103_spec(p: &Params) -> Result<SumSpec> {
    let (k, pm, i) = mseq103_params(p)?;
    let len = k as usize;
    let h = move |t: i64| (pm * t * t + (pm - 2 * i) * t) / 2;
    Ok(SumSpec::new(
        IndexDomain::BilateralInner { len: len + 1 },
        move |level, idx| {
            if level < len {
                return Ok(modular_level(k, level, idx));
            }
            let (m, t) = (idx[len - 1], idx[len]);
            Ok(QTerm::constant(sign(t))
                .mul_q_pow(k * (m - 1) * (m - t) - k * t + h(t))
                .div_poch_step(&qp(k), k, m - t))
        },
        move |idx| {
            if idx.len() == len + 1 && idx[len] < 0 {
                idx[0] + h(idx[len])
            } else {
                idx[0]
            }
        },
    ))
}

fn mseq103_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let (_, m, i) = mseq103_params(p)?;
    series(inf_prod(order, &[(qp(i), m), (qp(m - i), m), (qp(m), m)], &[(qp(1), 1)])?)
}

fn mseq1() -> IdentityStatement {
    IdentityStatement::new(
        "mseq1",
        "limit a_j, b_j -> infinity of the unilateral multi-sum transformation",
        "limiting form of the unilateral multi-sum",
        "Let each $a_j$, $b_j\\to \\infty$",
    )
    .slots(&[
        slot("c", List, "c_1..c_k, each of q-valuation >= 1"),
        slot("g", Seq, "finitely supported g on n >= 0"),
    ])
    .exact_sum(mseq1_spec, mseq1_rhs)
    .validate(|p, _| {
        c_list(p, 1)?;
        require_unilateral(&p.seq("g")?)
    })
    .instance(Exact, &[("c", "[q, q^2]"), ("g", "{0: 1, 2: -3, 3: 1/2}")])
    .instance(Exact, &[("c", "[q]"), ("g", "{0: 1}")])
}

fn c_list(p: &Params, min_len: usize) -> Result<Vec<QMonomial>> {
    let c = p.list("c")?;
    ensure(c.len() >= min_len && c.len() <= 5, &format!("c must have between {min_len} and 5 entries"))?;
    for (j, m) in c.iter().enumerate() {
        require_nonzero(&format!("c_{}", j + 1), m)?;
        require_positive_valuation(&format!("c_{}", j + 1), m)?;
    }
    Ok(c)
}

/// `q^{(m_L - 1) d} c_L^d / (q;q)_d` between consecutive indices.
fn limit_level(c: &QMonomial, prev: i64, m: i64) -> QTerm {
    let d = prev - m;
    QTerm::q_pow((prev - 1) * d).mul_mono_pow(c, d).div_qfac(d)
}

fn mseq1_spec(p: &Params) -> Result<SumSpec> {
    let c = c_list(p, 1)?;
    let g = p.seq("g")?;
    let k = c.len();
    let e: Vec<i64> = c.iter().map(|m| m.power).collect();
    let smax = support_max(&g);
    let support = support_of(&g);
    Ok(SumSpec::new(
        IndexDomain::Ordered { len: k + 1 },
        move |level, idx| {
            if level == 0 {
                return Ok(QTerm::one().div_poch(&c[0], idx[0]));
            }
            let t = limit_level(&c[level - 1], idx[level - 1], idx[level]);
            Ok(if level < k {
                t.div_poch(&c[level], idx[level])
            } else {
                t.mul(&g_at(&g, idx[k]))
            })
        },
        move |idx| {
            let known: i64 = idx.windows(2).zip(&e).map(|(w, e)| (w[0] - 1 + e) * (w[0] - w[1])).sum();
            if idx.len() == k + 1 {
                known
            } else {
                known + (idx[idx.len() - 1] - smax).max(0)
            }
        },
    )
    .with_support(support))
}

fn mseq1_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let c = c_list(p, 1)?;
    let den: Vec<(QMonomial, i64)> = c.into_iter().map(|m| (m, 1)).collect();
    series(inf_prod(order, &[], &den)?.scalar_mul(&seq_total(&p.seq("g")?)))
}

fn mseq111() -> IdentityStatement {
    IdentityStatement::new(
        "mseq111",
        "limit a, a_j, b_j -> infinity of the bilateral multi-sum transformation",
        "limiting form of the bilateral multi-sum",
        "Let $a$ and each $a_j$",
    )
    .slots(&[
        slot("c", List, "c_1..c_(k-1), each of q-valuation >= 1"),
        slot("g", Seq, "finitely supported g on Z"),
    ])
    .exact_sum(mseq111_spec, mseq111_rhs)
    .validate(|p, _| {
        c_list(p, 0)?;
        p.seq("g").map(|_| ())
    })
    .instance(Exact, &[("c", "[q]"), ("g", "{-2: 1, 0: 2, 1: -1}")])
    .instance(Exact, &[("c", "[q, q^2]"), ("g", "{-1: 3, 2: 1/2}")])
}

fn mseq111_spec(p: &Params) -> Result<SumSpec> {
    let c = c_list(p, 0)?;
    let g = p.seq("g")?;
    let k = c.len() + 1;
    let e: Vec<i64> = c.iter().map(|m| m.power).collect();
    let s = support_max(&g).max(0);
    let support = support_of(&g);
    let q = qp(1);
    Ok(SumSpec::new(
        IndexDomain::BilateralInner { len: k + 1 },
        move |level, idx| {
            // 1/(c_j;q)_{m_j} for j < k, and 1/(q;q)_{m_k}.
            let poch = |j: usize| if j + 1 < k { &c[j] } else { &q };
            if level == 0 {
                return Ok(QTerm::one().div_poch(poch(0), idx[0]));
            }
            if level < k {
                return Ok(limit_level(&c[level - 1], idx[level - 1], idx[level]).div_poch(poch(level), idx[level]));
            }
            let (m, t) = (idx[k - 1], idx[k]);
            Ok(QTerm::q_pow(m * (m - t)).div_qfac(m - t).mul(&g_at(&g, t)))
        },
        move |idx| {
            let p = idx.len();
            let known: i64 = idx.windows(2).zip(&e).map(|(w, e)| (w[0] - 1 + e) * (w[0] - w[1])).sum();
            if p == k + 1 {
                let (m, t) = (idx[k - 1], idx[k]);
                known + m * (m - t)
            } else {
                known + (idx[p - 1] - (s + 1) * (s + 1) / 4).max(0)
            }
        },
    )
    .with_support(support))
}

fn mseq111_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let c = c_list(p, 0)?;
    let mut den: Vec<(QMonomial, i64)> = c.into_iter().map(|m| (m, 1)).collect();
    den.push((qp(1), 1));
    series(inf_prod(order, &[], &den)?.scalar_mul(&seq_total(&p.seq("g")?)))
}

fn andrews_gordon() -> IdentityStatement {
    IdentityStatement::new(
        "andrews_gordon",
        "analytic Andrews-Gordon identities",
        "Andrews-Gordon identities",
        "the case $k=2$ gives the Rogers-Ramanujan identities",
    )
    .slots(&[slot("k", Int, "k >= 2"), slot("i", Int, "1 <= i <= k")])
    .exact_sum(ag_spec, ag_rhs)
    .validate(|p, _| ag_params(p).map(|_| ()))
    .instance(Exact, &[("k", "2"), ("i", "1")])
    .instance(Exact, &[("k", "2"), ("i", "2")])
    .instance(Exact, &[("k", "3"), ("i", "1")])
    .instance(Exact, &[("k", "3"), ("i", "3")])
}

fn ag_params(p: &Params) -> Result<(i64, i64)> {
    let k = int_in(p, "k", 2, 6)?;
    let i = p.int("i")?;
    ensure((1..=k).contains(&i), "1 <= i <= k")?;
    Ok((k, i))
}

fn ag_spec(p: &Params) -> Result<SumSpec> {
    let (k, i) = ag_params(p)?;
    let len = (k - 1) as usize;
    // 1-based index j gets the linear term when j >= i.
    let expo = move |j: usize, m: i64| m * m + if j as i64 + 1 >= i { m } else { 0 };
    Ok(SumSpec::new(
        IndexDomain::Ordered { len },
        move |level, idx| {
            let m = idx[level];
            let mut t = QTerm::q_pow(expo(level, m));
            if level >= 1 {
                t = t.div_qfac(idx[level - 1] - m);
            }
            if level == len - 1 {
                t = t.div_qfac(m);
            }
            Ok(t)
        },
        move |idx| idx.iter().enumerate().map(|(j, &m)| expo(j, m)).sum(),
    ))
}

fn ag_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let (k, i) = ag_params(p)?;
    let md = 2 * k + 1;
    series(inf_prod(order, &[(qp(i), md), (qp(md - i), md), (qp(md), md)], &[(qp(1), 1)])?)
}

fn cauchy() -> IdentityStatement {
    IdentityStatement::new(
        "cauchy",
        "sum q^(n^2) z^n/(q,zq;q)_n = 1/(zq;q)_inf",
        "Cauchy's identity",
        "of Cauchy's identity",
    )
    .slots(&[slot("z", Value, "z = r*q^m with m >= 0")])
    .exact_sum(cauchy_spec, cauchy_rhs)
    .validate(|p, _| z_param(p).map(|_| ()))
    .instance(Exact, &[("z", "1")])
    .instance(Exact, &[("z", "q")])
    .instance(Exact, &[("z", "-2")])
}

fn z_param(p: &Params) -> Result<QMonomial> {
    let z = p.mono("z")?;
    require_nonneg("z", &z)?;
    Ok(z)
}

fn cauchy_spec(p: &Params) -> Result<SumSpec> {
    let z = z_param(p)?;
    let e = z.power;
    let zq = z.shifted(1);
    Ok(leaf_spec(
        IndexDomain::Unilateral,
        move |idx| {
            let n = idx[0];
            Ok(QTerm::q_pow(n * n).mul_mono_pow(&z, n).div_qfac(n).div_poch(&zq, n))
        },
        move |idx| idx[0] * idx[0] + e * idx[0],
    ))
}

fn cauchy_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let z = z_param(p)?;
    series(qpoch_step(&z.shifted(1), 1, None, order)?.invert()?)
}

fn aceq() -> IdentityStatement {
    IdentityStatement::new(
        "aceq",
        "(k-1)-fold independent-index generalization of Cauchy's identity",
        "multi-sum generalization of Cauchy's identity",
        "where $N_i=n_i+n_{i+1}+\\dots + n_{k-1}$",
    )
    .slots(&[slot("k", Int, "k >= 2"), slot("z", Value, "z = r*q^m with m >= 0")])
    .exact_sum(aceq_spec, cauchy_rhs)
    .validate(|p, _| {
        int_in(p, "k", 2, 5)?;
        z_param(p).map(|_| ())
    })
    .instance(Exact, &[("k", "2"), ("z", "1")])
    .instance(Exact, &[("k", "3"), ("z", "1")])
}

fn aceq_spec(p: &Params) -> Result<SumSpec> {
    let k = int_in(p, "k", 2, 5)?;
    let z = z_param(p)?;
    let e = z.power;
    let len = (k - 1) as usize;
    let zq = z.shifted(1);
    // sum over i of N_i^2 + e N_i, using only the indices present
    let quad = move |idx: &[i64]| -> (i64, i64) {
        let mut big = 0;
        let (mut sq, mut lin) = (0, 0);
        for &n in idx.iter().rev() {
            big += n;
            sq += big * big;
            lin += big;
        }
        (sq, lin)
    };
    Ok(SumSpec::new(
        IndexDomain::Independent { len },
        move |level, idx| {
            let mut t = QTerm::one().div_qfac(idx[level]);
            if level == len - 1 {
                let (sq, lin) = quad(idx);
                t = t.mul_q_pow(sq).mul_mono_pow(&z, lin);
                t = t.div_poch(&zq, idx[level]);
            }
            Ok(t)
        },
        move |idx| {
            let (sq, lin) = quad(idx);
            sq + e * lin
        },
    ))
}

fn qbinom_special() -> IdentityStatement {
    IdentityStatement::new(
        "qbinom_special",
        "sum q^(n(n+1)/2) x^n/(q;q)_n = (-xq;q)_inf",
        "special case of the q-binomial theorem",
        "special case of the $q$-binomial theorem",
    )
    .slots(&[slot("x", Value, "x = r*q^m with m >= 0")])
    .exact_sum(qbinom_spec, qbinom_rhs)
    .validate(|p, _| require_nonneg("x", &p.mono("x")?))
    .instance(Exact, &[("x", "1")])
    .instance(Exact, &[("x", "-1")])
    .instance(Exact, &[("x", "2")])
    .instance(Exact, &[("x", "q/3")])
    .instance(Exact, &[("x", "q^2")])
}

fn qbinom_spec(p: &Params) -> Result<SumSpec> {
    let x = p.mono("x")?;
    let e = x.power;
    Ok(leaf_spec(
        IndexDomain::Unilateral,
        move |idx| {
            let n = idx[0];
            Ok(QTerm::q_pow(n * (n + 1) / 2).mul_mono_pow(&x, n).div_qfac(n))
        },
        move |idx| idx[0] * (idx[0] + 1) / 2 + e * idx[0],
    ))
}

fn qbinom_rhs(p: &Params, order: usize) -> Result<ExactSide> {
    let x = p.mono("x")?;
    let mx = QMonomial::new(-x.coeff, x.power + 1);
    series(qpoch_step(&mx, 1, None, order)?)
}

fn rr1() -> IdentityStatement {
    IdentityStatement::new(
        "rr1",
        "first Rogers-Ramanujan identity",
        "first Rogers-Ramanujan identity",
        "use the first Rogers-Ramanujan identity",
    )
    .exact_sum(
        |_| {
            Ok(leaf_spec(
                IndexDomain::Unilateral,
                |idx| Ok(QTerm::q_pow(idx[0] * idx[0]).div_qfac(idx[0])),
                |idx| idx[0] * idx[0],
            ))
        },
        |_, order| series(inf_prod(order, &[], &[(qp(1), 5), (qp(4), 5)])?),
    )
    .instance(Exact, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_min_matches_small_cases() {
        // n = 1: x^2; n = 2: 3x^2/4.
        assert_eq!(chain_min(5, 1), 25);
        assert_eq!(chain_min(4, 2), 12);
        for x in 0..8 {
            for n in 1..5 {
                // brute force over integer chains
                let mut best = i64::MAX;
                let mut stack = vec![vec![x]];
                while let Some(c) = stack.pop() {
                    if c.len() as i64 == n {
                        let v = chain_known(&c) + c[c.len() - 1] * c[c.len() - 1];
                        best = best.min(v);
                        continue;
                    }
                    for y in 0..=*c.last().unwrap() {
                        let mut d = c.clone();
                        d.push(y);
                        stack.push(d);
                    }
                }
                assert!(chain_min(x, n) <= best, "x={x} n={n}");
            }
        }
    }
}
