//! The executable identity catalog and the drivers that verify its
//! entries on the exact and numeric backends.

pub(crate) mod catalog;
pub(crate) mod params;
mod report;
pub(crate) mod support;

use std::sync::OnceLock;
use std::time::Instant;

use num_traits::One;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use params::{
    mono_value, parse_monomial, parse_number, params_from, slot, ParamValue, Params, ParamsExt,
    Slot, SlotKind,
};
pub use catalog::{multcfin_nonzero, multcfin_terminates};
pub use report::{sort_reports, Backend, Verdict, VerificationReport};

use crate::error::{Error, Result};
use crate::numeric::{big_to_f64, relative_discrepancy, BigComplex};
use crate::series::{QSeries, Rational, ShiftedSeries, ZLaurentSeries};
use crate::summation::{evaluate, SumSpec};

/// One side of an identity on the exact backend.
#[derive(Clone, Debug)]
pub enum ExactSide {
    Series(QSeries),
    Laurent(ZLaurentSeries),
    /// Finitely many series, compared elementwise (pair relations).
    List(Vec<ShiftedSeries>),
}

/// One side of an identity on the numeric backend.
#[derive(Clone, Debug)]
pub enum NumericSide {
    Value(BigComplex),
    List(Vec<BigComplex>),
}

pub type ExactFn = fn(&Params, usize) -> Result<ExactSide>;
pub type NumericFn = fn(&Params, u32) -> Result<NumericSide>;
pub type ValidateFn = fn(&Params, Backend) -> Result<()>;
pub type SpecFn = fn(&Params) -> Result<SumSpec>;
pub type RandomFn = fn(&mut ChaCha8Rng, Backend) -> Option<Params>;

/// Where an identity comes from: a short location and a verbatim quote.
#[derive(Clone, Copy, Debug)]
pub struct Anchor {
    pub location: &'static str,
    pub quote: &'static str,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub backend: Backend,
    pub params: Params,
}

/// A cataloged identity with independent builders for its two sides.
pub struct IdentityStatement {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: Anchor,
    pub slots: Vec<Slot>,
    pub instances: Vec<Instance>,
    exact_lhs: Option<ExactFn>,
    exact_rhs: Option<ExactFn>,
    numeric: Option<(NumericFn, NumericFn)>,
    validate: Option<ValidateFn>,
    lhs_spec: Option<SpecFn>,
    random: Option<RandomFn>,
}

impl IdentityStatement {
    pub(crate) fn new(id: &'static str, description: &'static str, location: &'static str, quote: &'static str) -> Self {
        IdentityStatement {
            id,
            description,
            anchor: Anchor { location, quote },
            slots: Vec::new(),
            instances: Vec::new(),
            exact_lhs: None,
            exact_rhs: None,
            numeric: None,
            validate: None,
            lhs_spec: None,
            random: None,
        }
    }

    pub(crate) fn slots(mut self, slots: &[Slot]) -> Self {
        self.slots = slots.to_vec();
        self
    }

    pub(crate) fn exact(mut self, lhs: ExactFn, rhs: ExactFn) -> Self {
        self.exact_lhs = Some(lhs);
        self.exact_rhs = Some(rhs);
        self
    }

    /// Exact backend whose left side is the sum `spec`, evaluated by the
    /// summation engine.
    pub(crate) fn exact_sum(mut self, spec: SpecFn, rhs: ExactFn) -> Self {
        self.lhs_spec = Some(spec);
        self.exact_rhs = Some(rhs);
        self
    }

    pub(crate) fn numeric(mut self, lhs: NumericFn, rhs: NumericFn) -> Self {
        self.numeric = Some((lhs, rhs));
        self
    }

    pub(crate) fn validate(mut self, f: ValidateFn) -> Self {
        self.validate = Some(f);
        self
    }

    pub(crate) fn random(mut self, f: RandomFn) -> Self {
        self.random = Some(f);
        self
    }

    pub(crate) fn instance(mut self, backend: Backend, pairs: &[(&str, &str)]) -> Self {
        let params = params_from(&self.slots, pairs);
        self.instances.push(Instance { backend, params });
        self
    }

    pub fn backends(&self) -> Vec<Backend> {
        let mut v = Vec::new();
        if self.exact_rhs.is_some() {
            v.push(Backend::Exact);
        }
        if self.numeric.is_some() {
            v.push(Backend::Numeric);
        }
        v
    }

    pub fn supports(&self, backend: Backend) -> bool {
        match backend {
            Backend::Exact => self.exact_rhs.is_some(),
            Backend::Numeric => self.numeric.is_some(),
        }
    }

    pub fn slot(&self, name: &str) -> Option<&Slot> {
        self.slots.iter().find(|s| s.name == name)
    }

    /// The left side as a sum specification, for entries whose left side
    /// is a (multi-)sum evaluated by the summation engine.
    pub fn lhs_sum(&self, params: &Params) -> Option<Result<SumSpec>> {
        self.lhs_spec.map(|f| f(params))
    }

    /// Draws a random admissible instance, if the entry has a generator.
    pub fn random_instance(&self, rng: &mut ChaCha8Rng, backend: Backend) -> Option<Params> {
        self.random.and_then(|f| f(rng, backend))
    }

    pub fn has_random(&self) -> bool {
        self.random.is_some()
    }

    pub fn check_domain(&self, params: &Params, backend: Backend) -> Result<()> {
        match self.validate {
            Some(f) => f(params, backend),
            None => Ok(()),
        }
    }
}

static CATALOG: OnceLock<Vec<IdentityStatement>> = OnceLock::new();

/// All cataloged identities, in a fixed order.
pub fn catalog() -> &'static [IdentityStatement] {
    CATALOG.get_or_init(|| {
        let mut v = catalog::entries();
        v.extend(crate::bailey::catalog_entries());
        v.extend(crate::qpolys::catalog_entries());
        v
    })
}

pub fn lookup(id: &str) -> Result<&'static IdentityStatement> {
    catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// An identity with every parameter bound, ready to verify.
#[derive(Clone)]
pub struct BoundIdentity {
    pub entry: &'static IdentityStatement,
    pub backend: Backend,
    pub params: Params,
    pub instance: usize,
}

impl std::fmt::Debug for BoundIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundIdentity")
            .field("id", &self.entry.id)
            .field("backend", &self.backend)
            .field("params", &self.params)
            .field("instance", &self.instance)
            .finish()
    }
}

/// Binds parameters to an entry. Slots not given are taken from the
/// entry's first default instance on that backend.
pub fn instantiate(id: &str, given: &Params, backend: Backend) -> Result<BoundIdentity> {
    let entry = lookup(id)?;
    if !entry.supports(backend) {
        return Err(Error::UnsupportedBackend {
            id: id.to_string(),
            backend: backend.to_string(),
        });
    }
    let mut params = entry
        .instances
        .iter()
        .find(|i| i.backend == backend)
        .map(|i| i.params.clone())
        .unwrap_or_default();
    for (k, v) in given {
        if entry.slot(k).is_none() {
            return Err(Error::InvalidParam(format!("identity '{id}' has no parameter '{k}'")));
        }
        params.insert(k.clone(), v.clone());
    }
    entry.check_domain(&params, backend)?;
    Ok(BoundIdentity {
        entry,
        backend,
        params,
        instance: 0,
    })
}

/// The default instances of every entry whose id matches `filter`.
pub fn default_instances(filter: impl Fn(&str) -> bool) -> Vec<BoundIdentity> {
    let mut out = Vec::new();
    for entry in catalog().iter().filter(|e| filter(e.id)) {
        for (i, inst) in entry.instances.iter().enumerate() {
            out.push(BoundIdentity {
                entry,
                backend: inst.backend,
                params: inst.params.clone(),
                instance: i,
            });
        }
    }
    out
}

/// `count` random instances per entry that has a generator, drawn from
/// a seeded stream so runs are reproducible.
pub fn random_instances(filter: impl Fn(&str) -> bool, seed: u64, count: usize) -> Vec<BoundIdentity> {
    use rand::SeedableRng;
    let mut out = Vec::new();
    for entry in catalog().iter().filter(|e| filter(e.id) && e.has_random()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fxhash(entry.id));
        for backend in entry.backends() {
            let base = entry.instances.len();
            for i in 0..count {
                if let Some(params) = entry.random_instance(&mut rng, backend) {
                    out.push(BoundIdentity {
                        entry,
                        backend,
                        params,
                        instance: base + i,
                    });
                }
            }
        }
    }
    out
}

fn fxhash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x1000_0000_01b3))
}

fn params_strings(p: &Params) -> std::collections::BTreeMap<String, String> {
    p.iter().map(|(k, v)| (k.clone(), v.to_string())).collect()
}

fn perturb_exact(side: &mut ExactSide, order: usize) {
    let e = order.min(5);
    match side {
        ExactSide::Series(s) => *s.coeff_mut(e) += Rational::one(),
        ExactSide::Laurent(s) => {
            let _ = s.add_term(e, 0, &Rational::one());
        }
        ExactSide::List(v) => {
            if let Some(first) = v.first_mut() {
                let e = e.min(first.series.order());
                *first.series.coeff_mut(e) += Rational::one();
            }
        }
    }
}

/// First mismatch between two exact sides: exponent and description.
fn compare_exact(lhs: &ExactSide, rhs: &ExactSide) -> Result<Option<(i64, String)>> {
    match (lhs, rhs) {
        (ExactSide::Series(a), ExactSide::Series(b)) => Ok(a.first_difference(b).map(|e| {
            (e as i64, format!("q^{e}: lhs {} vs rhs {}", a.coeff(e), b.coeff(e)))
        })),
        (ExactSide::Laurent(a), ExactSide::Laurent(b)) => Ok(a.first_difference(b).map(|(e, z)| {
            (e as i64, format!("q^{e} z^{z}: lhs {} vs rhs {}", a.coeff(e, z), b.coeff(e, z)))
        })),
        (ExactSide::List(a), ExactSide::List(b)) => {
            if a.len() != b.len() {
                return Err(Error::InvalidParam("sides have different lengths".into()));
            }
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                if let Some(e) = x.first_difference(y) {
                    return Ok(Some((e, format!("term {i}, q^{e}: lhs {} vs rhs {}", x.coeff(e), y.coeff(e)))));
                }
            }
            Ok(None)
        }
        _ => Err(Error::InvalidParam("sides have different shapes".into())),
    }
}

/// Builds both sides at order `order` and compares them coefficientwise.
pub fn verify_exact(bound: &BoundIdentity, order: usize) -> Result<VerificationReport> {
    verify_exact_with(bound, order, false)
}

/// As [`verify_exact`], optionally adding 1 to one right-side coefficient.
pub fn verify_exact_with(bound: &BoundIdentity, order: usize, fault: bool) -> Result<VerificationReport> {
    let entry = bound.entry;
    let rhs_fn = entry.exact_rhs.ok_or_else(|| Error::UnsupportedBackend {
        id: entry.id.to_string(),
        backend: "exact".into(),
    })?;
    entry.check_domain(&bound.params, Backend::Exact)?;
    let start = Instant::now();
    let lhs = match (entry.exact_lhs, entry.lhs_spec) {
        (Some(f), _) => f(&bound.params, order)?,
        (None, Some(spec)) => ExactSide::Series(evaluate(&spec(&bound.params)?, order)?),
        (None, None) => unreachable!("exact entry without a left side"),
    };
    let mut rhs = rhs_fn(&bound.params, order)?;
    if fault {
        perturb_exact(&mut rhs, order);
    }
    let diff = compare_exact(&lhs, &rhs)?;
    let wall_ms = start.elapsed().as_millis() as u64;
    Ok(VerificationReport {
        id: entry.id.to_string(),
        backend: Backend::Exact,
        order_or_precision: order as u32,
        params: params_strings(&bound.params),
        verdict: if diff.is_none() { Verdict::Pass } else { Verdict::Fail },
        discrepancy: diff.as_ref().map(|d| d.1.clone()).unwrap_or_else(|| "0".into()),
        first_diff_exponent: diff.map(|d| d.0),
        wall_ms,
        instance: bound.instance,
    })
}

/// Evaluates both sides at `digits` and passes when the relative
/// discrepancy is at most `tol`.
pub fn verify_numeric(bound: &BoundIdentity, digits: u32, tol: f64) -> Result<VerificationReport> {
    verify_numeric_with(bound, digits, tol, false)
}

/// The relative discrepancy of a numeric check, without a verdict.
pub fn numeric_discrepancy(bound: &BoundIdentity, digits: u32, fault: bool) -> Result<f64> {
    let entry = bound.entry;
    let (lhs_fn, rhs_fn) = entry.numeric.ok_or_else(|| Error::UnsupportedBackend {
        id: entry.id.to_string(),
        backend: "numeric".into(),
    })?;
    entry.check_domain(&bound.params, Backend::Numeric)?;
    let lhs = lhs_fn(&bound.params, digits)?;
    let mut rhs = rhs_fn(&bound.params, digits)?;
    if fault {
        let bump = BigComplex::from_rational(&(Rational::one() + crate::series::rat(1, 1_000_000)), digits);
        rhs = match rhs {
            NumericSide::Value(v) => NumericSide::Value(v.mul(&bump)),
            NumericSide::List(mut v) => {
                if let Some(x) = v.first_mut() {
                    *x = x.mul(&bump);
                }
                NumericSide::List(v)
            }
        };
    }
    let pairs: Vec<(BigComplex, BigComplex)> = match (lhs, rhs) {
        (NumericSide::Value(a), NumericSide::Value(b)) => vec![(a, b)],
        (NumericSide::List(a), NumericSide::List(b)) if a.len() == b.len() => a.into_iter().zip(b).collect(),
        _ => return Err(Error::InvalidParam("sides have different shapes".into())),
    };
    if pairs.iter().any(|(a, b)| !a.is_finite() || !b.is_finite()) {
        return Err(Error::Pole(format!("{}: a side is not finite at this point", entry.id)));
    }
    Ok(pairs
        .iter()
        .map(|(a, b)| {
            let d = big_to_f64(&relative_discrepancy(a, b));
            if d.is_nan() {
                f64::INFINITY
            } else {
                d
            }
        })
        .fold(0.0, f64::max))
}

pub fn verify_numeric_with(bound: &BoundIdentity, digits: u32, tol: f64, fault: bool) -> Result<VerificationReport> {
    let start = Instant::now();
    let d = numeric_discrepancy(bound, digits, fault)?;
    let wall_ms = start.elapsed().as_millis() as u64;
    Ok(VerificationReport {
        id: bound.entry.id.to_string(),
        backend: Backend::Numeric,
        order_or_precision: digits,
        params: params_strings(&bound.params),
        verdict: if d <= tol { Verdict::Pass } else { Verdict::Fail },
        discrepancy: format!("{d:.3e}"),
        first_diff_exponent: None,
        wall_ms,
        instance: bound.instance,
    })
}

/// Settings for a batch of checks.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub order: usize,
    pub digits: u32,
    pub tol: f64,
    /// Ids whose right side gets the injected fault.
    pub faults: Vec<String>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            order: crate::series::DEFAULT_ORDER,
            digits: crate::numeric::DEFAULT_DIGITS,
            tol: crate::numeric::DEFAULT_TOL,
            faults: Vec::new(),
        }
    }
}

/// Runs one check; engine errors become failing reports.
pub fn run_one(bound: &BoundIdentity, opts: &RunOptions) -> VerificationReport {
    let fault = opts.faults.iter().any(|f| f == bound.entry.id);
    let res = match bound.backend {
        Backend::Exact => verify_exact_with(bound, opts.order, fault),
        Backend::Numeric => verify_numeric_with(bound, opts.digits, opts.tol, fault),
    };
    res.unwrap_or_else(|e| VerificationReport {
        id: bound.entry.id.to_string(),
        backend: bound.backend,
        order_or_precision: match bound.backend {
            Backend::Exact => opts.order as u32,
            Backend::Numeric => opts.digits,
        },
        params: params_strings(&bound.params),
        verdict: Verdict::Fail,
        discrepancy: format!("error: {e}"),
        first_diff_exponent: None,
        wall_ms: 0,
        instance: bound.instance,
    })
}

/// Runs checks in parallel on the current rayon pool; the result is
/// sorted by id, then instance index.
pub fn run_all(bounds: &[BoundIdentity], opts: &RunOptions) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = bounds.par_iter().map(|b| run_one(b, opts)).collect();
    sort_reports(&mut reports);
    reports
}
