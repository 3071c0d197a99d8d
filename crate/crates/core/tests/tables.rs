use phr_core::classify::{golden_tables, verify_table, TableStatus};
use phr_core::{Compute, SearchOptions};

#[test]
fn every_reference_table_passes() {
    let opts = SearchOptions::default();
    let mut failures = Vec::new();
    for table in golden_tables(&opts.limits).unwrap() {
        let start = std::time::Instant::now();
        let report = verify_table(&table, &opts, &Compute).unwrap();
        eprintln!("{} {} {:?}", report.status, report.id, start.elapsed());
        if report.status != TableStatus::Pass {
            eprintln!("  missing: {:?}\n  extra: {:?}\n  incomplete: {:?}", report.missing, report.extra, report.incomplete);
            failures.push(report.id);
        }
    }
    assert!(failures.is_empty(), "failing tables: {failures:?}");
}
