use std::sync::Arc;

use num_traits::Zero;

use super::engine::{evaluate, SumSpec};
use crate::error::Result;
use crate::series::{QSeries, QTerm, Rational, ZLaurentSeries};

/// Where the summation indices range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexDomain {
    /// `n >= 0`.
    Unilateral,
    /// `n` over all integers, enumerated `0, -1, 1, -2, 2, ...`.
    Bilateral,
    /// `m_1 >= m_2 >= ... >= m_len >= 0`.
    Ordered { len: usize },
    /// `m_1 >= ... >= m_{len-1} >= 0` and `m_len <= m_{len-1}` unbounded below.
    BilateralInner { len: usize },
    /// Each `m_j >= 0` independently.
    Independent { len: usize },
}

impl IndexDomain {
    pub fn len(&self) -> usize {
        match self {
            IndexDomain::Unilateral | IndexDomain::Bilateral => 1,
            IndexDomain::Ordered { len }
            | IndexDomain::BilateralInner { len }
            | IndexDomain::Independent { len } => *len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, idx: &[i64]) -> bool {
        idx.len() == self.len() && self.contains_prefix(idx, idx.len().saturating_sub(1))
    }

    /// Whether `idx[..=level]` can start a tuple of the domain.
    pub fn contains_prefix(&self, idx: &[i64], level: usize) -> bool {
        let idx = &idx[..=level.min(idx.len() - 1)];
        let ordered = |s: &[i64]| s.windows(2).all(|w| w[0] >= w[1]);
        match self {
            IndexDomain::Unilateral => idx[0] >= 0,
            IndexDomain::Bilateral => true,
            IndexDomain::Independent { .. } => idx.iter().all(|&m| m >= 0),
            IndexDomain::Ordered { .. } => ordered(idx) && idx.iter().all(|&m| m >= 0),
            IndexDomain::BilateralInner { len } => {
                if *len == 1 {
                    return true;
                }
                let head = &idx[..idx.len().min(len - 1)];
                ordered(idx) && head.iter().all(|&m| m >= 0)
            }
        }
    }
}

pub type TermFn = Arc<dyn Fn(i64) -> Result<QTerm> + Send + Sync>;
pub type IndexBoundFn = Arc<dyn Fn(i64) -> i64 + Send + Sync>;

/// A sequence of q-series terms indexed by an integer, with a lower bound
/// `v(n)` for the q-valuation of term `n`.
#[derive(Clone)]
pub struct TermGenerator {
    pub term: TermFn,
    pub valuation_bound: IndexBoundFn,
    pub support_hint: Option<Vec<i64>>,
}

impl TermGenerator {
    pub fn new(
        term: impl Fn(i64) -> Result<QTerm> + Send + Sync + 'static,
        valuation_bound: impl Fn(i64) -> i64 + Send + Sync + 'static,
    ) -> Self {
        TermGenerator {
            term: Arc::new(term),
            valuation_bound: Arc::new(valuation_bound),
            support_hint: None,
        }
    }

    pub fn with_support(mut self, support: Vec<i64>) -> Self {
        self.support_hint = Some(support);
        self
    }

    /// A finitely supported sequence of constants.
    pub fn finite(values: Vec<(i64, Rational)>) -> Self {
        let support: Vec<i64> = values.iter().map(|(n, _)| *n).collect();
        let table = Arc::new(values);
        let t = table.clone();
        TermGenerator::new(
            move |n| {
                Ok(t.iter()
                    .find(|(m, _)| *m == n)
                    .map(|(_, c)| QTerm::constant(c.clone()))
                    .unwrap_or_else(QTerm::zero))
            },
            |_| 0,
        )
        .with_support(support)
    }

    /// Kronecker delta at 0.
    pub fn delta() -> Self {
        TermGenerator::finite(vec![(0, Rational::from_integer(1.into()))])
    }

    pub fn term(&self, n: i64) -> Result<QTerm> {
        (self.term)(n)
    }

    /// Exact sum of a finitely supported generator's values, as a constant.
    pub fn support_sum(&self, order: usize) -> Result<Option<QSeries>> {
        let Some(sup) = &self.support_hint else {
            return Ok(None);
        };
        let mut s = QSeries::zero(order);
        for &n in sup {
            s.add_assign_ref(&self.term(n)?.to_series(order)?);
        }
        Ok(Some(s))
    }

    fn single_spec(&self, domain: IndexDomain) -> SumSpec {
        let term = self.term.clone();
        let bound = self.valuation_bound.clone();
        let spec = SumSpec::new(domain, move |_, idx| term(idx[0]), move |idx| bound(idx[0]));
        match &self.support_hint {
            Some(s) => spec.with_support(s.clone()),
            None => spec,
        }
    }
}

/// `sum_{n >= 0} term(n)` modulo `q^(order+1)`.
pub fn sum_unilateral(gen: &TermGenerator, order: usize) -> Result<QSeries> {
    evaluate(&gen.single_spec(IndexDomain::Unilateral), order)
}

/// `sum_{n in Z} term(n)` modulo `q^(order+1)`.
pub fn sum_bilateral(gen: &TermGenerator, order: usize) -> Result<QSeries> {
    evaluate(&gen.single_spec(IndexDomain::Bilateral), order)
}

pub type LaurentTermFn = Arc<dyn Fn(i64) -> Result<(QTerm, i64)> + Send + Sync>;

/// Terms of the form `T(n) z^{e(n)}` with `T(n)` a q-series term.
#[derive(Clone)]
pub struct LaurentGenerator {
    pub term: LaurentTermFn,
    pub valuation_bound: IndexBoundFn,
}

impl LaurentGenerator {
    pub fn new(
        term: impl Fn(i64) -> Result<(QTerm, i64)> + Send + Sync + 'static,
        valuation_bound: impl Fn(i64) -> i64 + Send + Sync + 'static,
    ) -> Self {
        LaurentGenerator {
            term: Arc::new(term),
            valuation_bound: Arc::new(valuation_bound),
        }
    }
}

/// Bilateral sum with a formal z, collected into the declared window.
pub fn sum_bilateral_laurent(
    gen: &LaurentGenerator,
    order: usize,
    window: (i64, i64),
) -> Result<ZLaurentSeries> {
    let mut out = ZLaurentSeries::zero(order, window);
    let add = |n: i64, out: &mut ZLaurentSeries| -> Result<bool> {
        if (gen.valuation_bound)(n) > order as i64 {
            return Ok(false);
        }
        let (t, z) = (gen.term)(n)?;
        let s = t.to_series(order)?;
        for (i, c) in s.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.add_term(i, z, c)?;
            }
        }
        Ok(true)
    };
    if !add(0, &mut out)? {
        return Ok(out);
    }
    let (mut up, mut down) = (true, true);
    let mut k = 0;
    while up || down {
        k += 1;
        if k as u64 > super::GUARD {
            return Err(crate::error::Error::NoTermination(super::GUARD));
        }
        if down {
            down = add(-k, &mut out)?;
        }
        if up {
            up = add(k, &mut out)?;
        }
    }
    Ok(out)
}

pub type LevelFn = Arc<dyn Fn(i64, i64) -> Result<QTerm> + Send + Sync>;
pub type PrefixBoundFn = Arc<dyn Fn(&[i64]) -> i64 + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumMode {
    Ordered,
    BilateralInner,
}

/// The nested product structure `prod_j f_j(m_j, m_{j+1}) * g(m_{k+1})`
/// over tuples of length `k + 1`.
#[derive(Clone)]
pub struct MultiTermSpec {
    pub levels: Vec<LevelFn>,
    pub inner: TermGenerator,
    pub mode: SumMode,
    /// Lower bound for the valuation of any term extending a prefix.
    pub bound: PrefixBoundFn,
}

impl MultiTermSpec {
    pub fn new(
        levels: Vec<LevelFn>,
        inner: TermGenerator,
        mode: SumMode,
        bound: impl Fn(&[i64]) -> i64 + Send + Sync + 'static,
    ) -> Self {
        MultiTermSpec {
            levels,
            inner,
            mode,
            bound: Arc::new(bound),
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn to_sum_spec(&self) -> SumSpec {
        let k = self.depth();
        let len = k + 1;
        let domain = match self.mode {
            SumMode::Ordered => IndexDomain::Ordered { len },
            SumMode::BilateralInner => IndexDomain::BilateralInner { len },
        };
        let levels = self.levels.clone();
        let inner = self.inner.term.clone();
        let bound = self.bound.clone();
        let spec = SumSpec::new(
            domain,
            move |level, idx| {
                if level == 0 {
                    return Ok(QTerm::one());
                }
                let f = levels[level - 1](idx[level - 1], idx[level])?;
                if level == k {
                    Ok(f.mul(&inner(idx[level])?))
                } else {
                    Ok(f)
                }
            },
            move |idx| bound(idx),
        );
        match &self.inner.support_hint {
            Some(s) => spec.with_support(s.clone()),
            None => spec,
        }
    }
}

/// Sum over `m_1 >= ... >= m_{k+1} >= 0`.
pub fn multisum_ordered(spec: &MultiTermSpec, order: usize) -> Result<QSeries> {
    let mut s = spec.clone();
    s.mode = SumMode::Ordered;
    evaluate(&s.to_sum_spec(), order)
}

/// Sum over `m_1 >= ... >= m_k >= 0`, `m_{k+1} <= m_k`.
pub fn multisum_bilateral_inner(spec: &MultiTermSpec, order: usize) -> Result<QSeries> {
    let mut s = spec.clone();
    s.mode = SumMode::BilateralInner;
    evaluate(&s.to_sum_spec(), order)
}

/// Sum over independent indices `m_j >= 0`; the summand is the product of
/// `factor(level, prefix)` over levels.
pub fn multisum_independent(
    len: usize,
    factor: impl Fn(usize, &[i64]) -> Result<QTerm> + Send + Sync + 'static,
    bound: impl Fn(&[i64]) -> i64 + Send + Sync + 'static,
    order: usize,
) -> Result<QSeries> {
    evaluate(
        &SumSpec::new(IndexDomain::Independent { len }, factor, bound),
        order,
    )
}
