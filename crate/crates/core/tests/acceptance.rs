//! One line per acceptance criterion; exits nonzero if any fails.
//! Runs without the libtest harness so the lines show on success too.

use std::collections::BTreeSet;
use std::time::Instant;

use qverify::identities::{
    catalog, default_instances, numeric_discrepancy, random_instances, run_all, Backend, BoundIdentity, RunOptions,
};
use qverify::series::{qpoch_infinite, QMonomial, QSeries};
use qverify::summation::{evaluate, SumSpec};

/// Criterion 1: truncation order of the exact suite.
const EXACT_ORDER: usize = 30;
/// Criterion 2: order and trial count of the property suites.
const PROPERTY_ORDER: usize = 12;
const PROPERTY_TRIALS: usize = 50;
const PROPERTY_SEED: u64 = 0x5eed;
/// Criterion 3: working precisions and tolerance.
const DIGITS: u32 = 60;
const DIGITS_HI: u32 = 120;
const TOL: f64 = 1e-20;
/// Criterion 4: order of the box oracle and of the partition oracle.
const BOX_ORDER: usize = 8;
const PARTITION_ORDER: usize = 30;

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(n: u32, name: &str, start: Instant, o: &Outcome) {
    println!(
        "criterion {n} [{}] {name}: {} ({:.1} s)",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail,
        start.elapsed().as_secs_f64()
    );
}

fn exact_suite() -> Outcome {
    let bounds: Vec<_> = default_instances(|_| true)
        .into_iter()
        .filter(|b| b.backend == Backend::Exact)
        .collect();
    let opts = RunOptions { order: EXACT_ORDER, ..RunOptions::default() };
    let reports = run_all(&bounds, &opts);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| format!("{}#{}", r.id, r.instance)).collect();
    let required = [
        "jacobi_id", "mseq10", "mseq102", "mseq103", "mnkqid", "mnk2qid", "mnktwoqid", "c33", "amod7id",
        "andrews_gordon", "aceq", "multcr", "jacobi_triple_product", "multcfin", "multcinf3",
    ];
    let ids: BTreeSet<_> = reports.iter().map(|r| r.id.as_str()).collect();
    let missing: Vec<_> = required.iter().filter(|id| !ids.contains(*id)).collect();
    Outcome {
        pass: failed.is_empty() && missing.is_empty(),
        detail: format!(
            "{} exact instances at N = {EXACT_ORDER}, failing {failed:?}, missing {missing:?}",
            reports.len()
        ),
    }
}

fn property_suites() -> Outcome {
    let ids = ["multc", "multcc", "thm_t3", "btrans2"];
    let opts = RunOptions { order: PROPERTY_ORDER, ..RunOptions::default() };
    let mut failed = Vec::new();
    let mut counts = Vec::new();
    for id in ids {
        let bounds: Vec<_> = random_instances(|e| e == id, PROPERTY_SEED, PROPERTY_TRIALS)
            .into_iter()
            .filter(|b| b.backend == Backend::Exact)
            .collect();
        counts.push(format!("{id}: {}", bounds.len()));
        if bounds.len() != PROPERTY_TRIALS {
            failed.push(format!("{id} drew {} trials", bounds.len()));
        }
        for r in run_all(&bounds, &opts).into_iter().filter(|r| !r.passed()) {
            failed.push(format!("{}#{} {:?}", r.id, r.instance, r.params));
        }
    }
    Outcome {
        pass: failed.is_empty(),
        detail: format!("{} at order {PROPERTY_ORDER}, failing {failed:?}", counts.join(", ")),
    }
}

fn numeric_suite() -> Outcome {
    let required = [
        "q_gauss", "thm_t2", "thm_t3", "multcinf", "multcinf2", "t3c4_whipple", "wq3f2", "btrans2eq2", "btrans2eq22",
        "btrans2eq2_equiv", "btrans2eq22_equiv", "andrews_thm7", "wpeq_bressoud", "usp1", "pneq", "c5_zeta",
    ];
    let bounds: Vec<BoundIdentity> = default_instances(|_| true)
        .into_iter()
        .filter(|b| b.backend == Backend::Numeric)
        .collect();
    let mut failed = Vec::new();
    let mut worst: f64 = 0.0;
    let mut worst_drift: f64 = 0.0;
    for b in &bounds {
        let tag = format!("{}#{}", b.entry.id, b.instance);
        match (numeric_discrepancy(b, DIGITS, false), numeric_discrepancy(b, DIGITS_HI, false)) {
            (Ok(lo), Ok(hi)) => {
                worst = worst.max(lo);
                worst_drift = worst_drift.max((lo - hi).abs());
                if !(lo <= TOL && (lo - hi).abs() < TOL) {
                    failed.push(format!("{tag}: {lo:e} at {DIGITS}, {hi:e} at {DIGITS_HI}"));
                }
            }
            (l, h) => failed.push(format!("{tag}: {:?} / {:?}", l.err(), h.err())),
        }
    }
    let ids: BTreeSet<_> = bounds.iter().map(|b| b.entry.id).collect();
    let missing: Vec<_> = required.iter().filter(|id| !ids.contains(*id)).collect();
    Outcome {
        pass: failed.is_empty() && missing.is_empty(),
        detail: format!(
            "{} numeric instances, worst discrepancy {worst:.1e}, worst drift {worst_drift:.1e}, tol {TOL:e}, failing {failed:?}, missing {missing:?}",
            bounds.len()
        ),
    }
}

/// All tuples of the domain with every index in `-reach..=reach`, summed
/// without any valuation pruning.
fn box_sum(spec: &SumSpec, order: usize, reach: i64) -> QSeries {
    fn go(spec: &SumSpec, order: usize, reach: i64, idx: &mut Vec<i64>, acc: &mut QSeries) {
        if idx.len() == spec.len() {
            if spec.contains(idx) {
                let t = spec.term_at(idx).unwrap();
                acc.add_assign_ref(&t.to_series(order).unwrap());
            }
            return;
        }
        for v in -reach..=reach {
            idx.push(v);
            if spec.domain.contains_prefix(idx, idx.len() - 1) {
                go(spec, order, reach, idx, acc);
            }
            idx.pop();
        }
    }
    let mut acc = QSeries::zero(order);
    go(spec, order, reach, &mut Vec::new(), &mut acc);
    acc
}

fn reach_for(len: usize) -> i64 {
    match len {
        0..=2 => 12,
        3 => 10,
        _ => 8,
    }
}

const MAX_REACH: i64 = 24;

/// Partitions of `n` into parts at most `max`, by direct recursion.
fn partitions(n: usize, max: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|p| partitions(n - p, p)).sum()
}

fn oracles() -> Outcome {
    let mut failed = Vec::new();
    let mut checked = BTreeSet::new();
    for b in default_instances(|_| true).into_iter().filter(|b| b.backend == Backend::Exact) {
        let Some(spec) = b.entry.lhs_sum(&b.params) else { continue };
        let spec = spec.unwrap();
        let tag = format!("{}#{}", b.entry.id, b.instance);
        // Widen the box until two successive sizes agree.
        let mut reach = reach_for(spec.len());
        let mut naive = box_sum(&spec, BOX_ORDER, reach);
        let mut saturated = false;
        while reach < MAX_REACH {
            reach += 2;
            let wider = box_sum(&spec, BOX_ORDER, reach);
            saturated = wider == naive;
            naive = wider;
            if saturated {
                break;
            }
        }
        let pruned = evaluate(&spec, BOX_ORDER).unwrap();
        if !saturated {
            failed.push(format!("{tag}: box not saturated at reach {reach}"));
        } else if let Some(e) = pruned.first_difference(&naive) {
            failed.push(format!("{tag}: differs at q^{e}"));
        }
        checked.insert(b.entry.id);
    }
    let euler = qpoch_infinite(&QMonomial::q_pow(1).into(), PARTITION_ORDER).unwrap().invert().unwrap();
    for n in 0..=PARTITION_ORDER {
        let want = partitions(n, n);
        if *euler.coeff(n) != qverify::series::int(want as i64) {
            failed.push(format!("p({n}) = {want}, series gives {}", euler.coeff(n)));
        }
    }
    Outcome {
        pass: failed.is_empty(),
        detail: format!(
            "box oracle at N = {BOX_ORDER} over {} exact entries, partitions to {PARTITION_ORDER}, failing {failed:?}",
            checked.len()
        ),
    }
}

fn fault_sensitivity() -> Outcome {
    let bounds = default_instances(|_| true);
    let ids: BTreeSet<&str> = catalog().iter().map(|e| e.id).collect();
    let mut failed = Vec::new();
    for id in &ids {
        let opts = RunOptions { faults: vec![id.to_string()], ..RunOptions::default() };
        let own: Vec<_> = bounds.iter().filter(|b| b.entry.id == *id).cloned().collect();
        let vacuous: Vec<_> = run_all(&own, &opts).into_iter().filter(|r| r.passed()).map(|r| r.instance).collect();
        if !vacuous.is_empty() {
            failed.push(format!("{id}: instances {vacuous:?} pass despite the fault"));
        }
    }
    // A whole-suite run with one injected fault names exactly that entry.
    for id in ["jacobi_id", "usp1", "btrans2"] {
        let opts = RunOptions { faults: vec![id.to_string()], ..RunOptions::default() };
        let named: BTreeSet<_> = run_all(&bounds, &opts).into_iter().filter(|r| !r.passed()).map(|r| r.id).collect();
        if named != BTreeSet::from([id.to_string()]) {
            failed.push(format!("fault in {id} reported as {named:?}"));
        }
    }
    Outcome {
        pass: failed.is_empty(),
        detail: format!("{} entries faulted one at a time, failing {failed:?}", ids.len()),
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 5] = [
        (1, "exact suite", exact_suite),
        (2, "property suites", property_suites),
        (3, "numeric suite", numeric_suite),
        (4, "oracle equivalences", oracles),
        (5, "fault sensitivity", fault_sensitivity),
    ];
    let mut all = true;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let o = run();
        report(n, name, start, &o);
        all &= o.pass;
    }
    if !all {
        eprintln!("at least one acceptance criterion failed");
        std::process::exit(1);
    }
}
