use std::sync::Arc;

use num_traits::One;

use super::IndexDomain;
use crate::error::{Error, Result};
use crate::series::{QSeries, QTerm, Rational};

/// Maximum number of index values visited by one evaluation.
pub const GUARD: u64 = 1_000_000;

/// Extra indices whose bounds must also exceed the order after an
/// infinite loop stops.
const LOOKAHEAD: i64 = 3;

/// Pruned full tuples whose actual valuation is checked against the bound.
const SPOT_CHECKS: usize = 20;

pub type FactorFn = Arc<dyn Fn(usize, &[i64]) -> Result<QTerm> + Send + Sync>;
pub type BoundFn = Arc<dyn Fn(&[i64]) -> i64 + Send + Sync>;

/// A sum over an index domain. The summand at `(m_1, ..., m_L)` is the
/// product of `factor(level, &[m_1..=m_{level+1}])` over all levels, so a
/// factor depending only on outer indices is built once per prefix.
///
/// `bound(prefix)` must be a lower bound for the q-valuation of every
/// summand extending `prefix`, nondecreasing along each infinite index.
#[derive(Clone)]
pub struct SumSpec {
    pub domain: IndexDomain,
    pub factor: FactorFn,
    pub bound: BoundFn,
    /// Restricts the innermost index to a finite set.
    pub last_support: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SumStats {
    /// Index values visited at any level.
    pub visited: u64,
    /// Full tuples reached.
    pub leaves: u64,
    /// Full tuples whose term was expanded and added.
    pub materialized: u64,
    /// Largest |m_1| reached.
    pub max_outer: i64,
}

impl SumSpec {
    pub fn new(
        domain: IndexDomain,
        factor: impl Fn(usize, &[i64]) -> Result<QTerm> + Send + Sync + 'static,
        bound: impl Fn(&[i64]) -> i64 + Send + Sync + 'static,
    ) -> Self {
        SumSpec {
            domain,
            factor: Arc::new(factor),
            bound: Arc::new(bound),
            last_support: None,
        }
    }

    pub fn with_support(mut self, mut support: Vec<i64>) -> Self {
        support.sort_unstable();
        support.dedup();
        self.last_support = Some(support);
        self
    }

    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The full summand at a tuple, built level by level.
    pub fn term_at(&self, idx: &[i64]) -> Result<QTerm> {
        let mut t = QTerm::one();
        for level in 0..idx.len() {
            t = t.mul(&(self.factor)(level, &idx[..=level])?);
        }
        Ok(t)
    }

    /// Whether a tuple lies in the summation domain.
    pub fn contains(&self, idx: &[i64]) -> bool {
        if idx.len() != self.len() || !self.domain.contains(idx) {
            return false;
        }
        match &self.last_support {
            Some(s) => s.binary_search(idx.last().unwrap()).is_ok(),
            None => true,
        }
    }
}

struct Partial {
    sym: QTerm,
    // Binomial and dense factors of `sym` expanded to `order - sym.shift`,
    // without its scalar coefficient. Dropped once a factor with a
    // negative shift appears, since earlier truncation would be too short.
    dense: Option<QSeries>,
}

impl Partial {
    fn extend(&self, f: &QTerm, order: usize) -> Partial {
        let sym = self.sym.clone().mul(f);
        let dense = match &self.dense {
            Some(d) if f.shift() >= 0 && sym.shift() <= order as i64 && !sym.is_zero() => {
                let rel = order - sym.shift() as usize;
                let mut d = d.truncate(rel);
                f.apply_binomials(&mut d);
                if f.has_dense() {
                    match QTerm::one().mul(f).unit_part(rel) {
                        Ok(fd) => Some(&d * &fd),
                        Err(_) => None,
                    }
                } else {
                    Some(d)
                }
            }
            _ => None,
        };
        Partial { sym, dense }
    }
}

enum Range {
    Finite(Vec<i64>),
    Up,
    Down(i64),
    Alternating,
}

struct Ctx<'a> {
    spec: &'a SumSpec,
    order: usize,
    acc: QSeries,
    stats: SumStats,
    spot_left: usize,
    prefix: Vec<i64>,
}

/// Evaluates the sum modulo `q^(order+1)`.
pub fn evaluate(spec: &SumSpec, order: usize) -> Result<QSeries> {
    evaluate_with_stats(spec, order).map(|(s, _)| s)
}

pub fn evaluate_with_stats(spec: &SumSpec, order: usize) -> Result<(QSeries, SumStats)> {
    let mut ctx = Ctx {
        spec,
        order,
        acc: QSeries::zero(order),
        stats: SumStats::default(),
        spot_left: SPOT_CHECKS,
        prefix: Vec::with_capacity(spec.len()),
    };
    let root = Partial {
        sym: QTerm::one(),
        dense: Some(QSeries::one(order)),
    };
    if !spec.is_empty() {
        ctx.visit(0, &root)?;
    }
    Ok((ctx.acc, ctx.stats))
}

impl Ctx<'_> {
    fn range(&self, level: usize) -> Range {
        let last = level + 1 == self.spec.len();
        let prev = if level == 0 { None } else { Some(self.prefix[level - 1]) };
        let natural = match (&self.spec.domain, level) {
            (IndexDomain::Unilateral, _) => Range::Up,
            (IndexDomain::Bilateral, _) => Range::Alternating,
            (IndexDomain::Independent { .. }, _) => Range::Up,
            (IndexDomain::Ordered { .. }, 0) => Range::Up,
            (IndexDomain::Ordered { .. }, _) => {
                let p = prev.unwrap();
                Range::Finite((0..=p).rev().collect())
            }
            (IndexDomain::BilateralInner { len }, 0) if *len == 1 => Range::Alternating,
            (IndexDomain::BilateralInner { .. }, 0) => Range::Up,
            (IndexDomain::BilateralInner { .. }, _) if last => Range::Down(prev.unwrap()),
            (IndexDomain::BilateralInner { .. }, _) => {
                let p = prev.unwrap();
                Range::Finite((0..=p).rev().collect())
            }
        };
        match (&self.spec.last_support, last) {
            (Some(sup), true) => {
                let allowed = |v: i64| match &natural {
                    Range::Finite(vals) => vals.contains(&v),
                    Range::Up => v >= 0,
                    Range::Down(p) => v <= *p,
                    Range::Alternating => true,
                };
                let mut vals: Vec<i64> = sup.iter().copied().filter(|&v| allowed(v)).collect();
                vals.sort_by_key(|v| v.abs());
                Range::Finite(vals)
            }
            _ => natural,
        }
    }

    fn visit(&mut self, level: usize, partial: &Partial) -> Result<()> {
        match self.range(level) {
            Range::Finite(vals) => {
                for v in vals {
                    self.step(level, v, partial)?;
                }
            }
            Range::Up => {
                let mut v = 0;
                while self.step(level, v, partial)? {
                    v += 1;
                }
                self.lookahead(level, v, 1)?;
            }
            Range::Down(top) => {
                let mut v = top;
                while self.step(level, v, partial)? {
                    v -= 1;
                }
                self.lookahead(level, v, -1)?;
            }
            Range::Alternating => {
                let (mut up, mut down) = (true, true);
                let mut k = 0i64;
                if !self.step(level, 0, partial)? {
                    self.lookahead(level, 0, 1)?;
                    self.lookahead(level, 0, -1)?;
                    return Ok(());
                }
                while up || down {
                    k += 1;
                    if down && !self.step(level, -k, partial)? {
                        down = false;
                        self.lookahead(level, -k, -1)?;
                    }
                    if up && !self.step(level, k, partial)? {
                        up = false;
                        self.lookahead(level, k, 1)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn lookahead(&mut self, level: usize, from: i64, dir: i64) -> Result<()> {
        for j in 1..=LOOKAHEAD {
            self.prefix.push(from + dir * j);
            let b = (self.spec.bound)(&self.prefix);
            let idx = self.prefix.clone();
            self.prefix.pop();
            if b <= self.order as i64 && self.spec.domain.contains_prefix(&idx, level) {
                return Err(Error::PruningUnsound {
                    index: idx,
                    bound: b,
                    actual: b,
                });
            }
        }
        Ok(())
    }

    /// Processes one index value; `false` when its bound exceeds the order.
    fn step(&mut self, level: usize, v: i64, partial: &Partial) -> Result<bool> {
        self.stats.visited += 1;
        if self.stats.visited > GUARD {
            return Err(Error::NoTermination(GUARD));
        }
        if level == 0 {
            self.stats.max_outer = self.stats.max_outer.max(v.abs());
        }
        self.prefix.push(v);
        let res = self.step_inner(level, partial);
        self.prefix.pop();
        res
    }

    fn step_inner(&mut self, level: usize, partial: &Partial) -> Result<bool> {
        let last = level + 1 == self.spec.len();
        let b = (self.spec.bound)(&self.prefix);
        if b > self.order as i64 {
            if last && self.spot_left > 0 {
                self.spot_left -= 1;
                let t = self.spec.term_at(&self.prefix)?;
                self.check_bound(&t, b)?;
            }
            return Ok(false);
        }
        let f = (self.spec.factor)(level, &self.prefix)?;
        let child = partial.extend(&f, self.order);
        if last {
            self.leaf(&child, b)?;
        } else {
            self.visit(level + 1, &child)?;
        }
        Ok(true)
    }

    fn check_bound(&self, t: &QTerm, b: i64) -> Result<Option<i64>> {
        let v = t.valuation()?;
        if let Some(v) = v {
            if v < b {
                return Err(Error::PruningUnsound {
                    index: self.prefix.clone(),
                    bound: b,
                    actual: v,
                });
            }
        }
        Ok(v)
    }

    fn leaf(&mut self, t: &Partial, b: i64) -> Result<()> {
        self.stats.leaves += 1;
        let v = match self.check_bound(&t.sym, b)? {
            None => return Ok(()),
            Some(v) => v,
        };
        if v > self.order as i64 {
            return Ok(());
        }
        self.stats.materialized += 1;
        match &t.dense {
            Some(d) => {
                let shift = t.sym.shift();
                debug_assert!(shift >= 0);
                self.acc.add_scaled_shifted(d, t.sym.coeff(), shift as usize);
            }
            None => {
                let s = t.sym.to_series(self.order)?;
                self.acc.add_scaled_shifted(&s, &Rational::one(), 0);
            }
        }
        Ok(())
    }
}
