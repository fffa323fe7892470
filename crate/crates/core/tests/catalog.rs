use qverify::identities::{catalog, default_instances, run_all, RunOptions};

#[test]
fn every_default_instance_passes() {
    let bounds = default_instances(|_| true);
    let reports = run_all(&bounds, &RunOptions::default());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    for r in &reports {
        eprintln!("{:24} {:?} #{} {:?} {} ({} ms)", r.id, r.backend, r.instance, r.verdict, r.discrepancy, r.wall_ms);
    }
    assert!(failed.is_empty(), "{} failing: {:#?}", failed.len(), failed);
}

#[test]
fn catalog_ids_are_unique_and_anchored() {
    let mut ids: Vec<_> = catalog().iter().map(|e| e.id).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
    for e in catalog() {
        assert!(!e.anchor.quote.is_empty() && !e.anchor.location.is_empty(), "{}", e.id);
        assert!(!e.instances.is_empty(), "{} has no default instance", e.id);
    }
}
