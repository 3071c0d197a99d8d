use std::fs;
use std::sync::Arc;
use std::thread;

use phr::cache::{parse, render};
use phr::WeightCache;
use phr_core::{build_root_system, weight_system, Error, Family, LieType, Limits, RootSystem, WeightSystemSource};

fn rs(f: Family, r: usize) -> RootSystem {
    build_root_system(LieType::new(f, r).unwrap()).unwrap()
}

#[test]
fn files_are_written_once_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let s = rs(Family::B, 4);
    let mu = s.weight(vec![0, 0, 0, 1]).unwrap();
    let limits = Limits::default();
    let first = WeightCache::on_disk(dir.path()).unwrap();
    let ws = first.weight_system(&s, &mu, &limits).unwrap();
    let path = dir.path().join("B4-0_0_0_1.wts");
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text, render(s.lie_type(), &ws));
    assert!(text.starts_with("type B4 highest 0 0 0 1\n"));

    let again = first.weight_system(&s, &mu, &limits).unwrap();
    assert!(Arc::ptr_eq(&ws, &again));

    let second = WeightCache::on_disk(dir.path()).unwrap();
    let loaded = second.weight_system(&s, &mu, &limits).unwrap();
    assert_eq!(*loaded, *ws);
    assert!(second.take_warnings().is_empty());
}

#[test]
fn corrupt_files_are_replaced() {
    let dir = tempfile::tempdir().unwrap();
    let s = rs(Family::G, 2);
    let mu = s.weight(vec![1, 0]).unwrap();
    let path = dir.path().join("G2-1_0.wts");
    let limits = Limits::default();
    let truth = weight_system(&s, &mu, &limits).unwrap();

    for bad in ["garbage\n", "type G2 highest 1 0\n1 0 : 1\n0 0 : 2\n", "type G2 highest 1 0\n1 0 : 1\n"] {
        fs::write(&path, bad).unwrap();
        let cache = WeightCache::on_disk(dir.path()).unwrap();
        let ws = cache.weight_system(&s, &mu, &limits).unwrap();
        assert_eq!(*ws, truth);
        assert_eq!(cache.take_warnings().len(), 1, "{bad:?}");
        assert_eq!(fs::read_to_string(&path).unwrap(), render(s.lie_type(), &truth));
    }
}

#[test]
fn ceilings_apply_to_cached_lookups() {
    let dir = tempfile::tempdir().unwrap();
    let s = rs(Family::A, 2);
    let mu = s.weight(vec![2, 0]).unwrap();
    let cache = WeightCache::on_disk(dir.path()).unwrap();
    cache.weight_system(&s, &mu, &Limits::default()).unwrap();
    let tight = Limits { dim_ceiling: 5, ..Limits::default() };
    assert_eq!(cache.weight_system(&s, &mu, &tight).unwrap_err(), Error::DimensionCeiling { dim: 6, ceiling: 5 });
}

#[test]
fn concurrent_lookups_agree_and_leave_no_temporary_files() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Arc::new(WeightCache::on_disk(dir.path()).unwrap());
    let s = Arc::new(rs(Family::D, 6));
    let labels: Vec<Vec<i64>> = vec![
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 1],
        vec![0, 1, 0, 0, 0, 0],
    ];
    let handles: Vec<_> = (0..8)
        .map(|i| {
            let cache = cache.clone();
            let s = s.clone();
            let labels = labels.clone();
            thread::spawn(move || {
                let mut dims = Vec::new();
                for k in 0..labels.len() {
                    let mu = s.weight(labels[(i + k) % labels.len()].clone()).unwrap();
                    dims.push((mu.dynkin().to_vec(), cache.weight_system(&s, &mu, &Limits::default()).unwrap().dim()));
                }
                dims.sort();
                dims
            })
        })
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(results.windows(2).all(|w| w[0] == w[1]));
    let dims: Vec<u64> = results[0].iter().map(|(_, d)| *d).collect();
    assert_eq!(dims, vec![32, 32, 66, 12]);

    let names: Vec<String> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    assert_eq!(names.len(), 4, "{names:?}");
    assert!(names.iter().all(|n| n.ends_with(".wts")));
    for (name, record) in cache.inspect().unwrap() {
        let record = record.unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(record.lie_type, s.lie_type());
    }
}

#[test]
fn inspect_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    let cache = WeightCache::on_disk(dir.path()).unwrap();
    let s = rs(Family::C, 3);
    for labels in [vec![1, 0, 0], vec![0, 0, 1]] {
        cache.weight_system(&s, &s.weight(labels).unwrap(), &Limits::default()).unwrap();
    }
    fs::write(dir.path().join("broken.wts"), "type C3\n").unwrap();
    fs::write(dir.path().join("notes.txt"), "kept").unwrap();
    let listing = cache.inspect().unwrap();
    let names: Vec<&str> = listing.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["C3-0_0_1.wts", "C3-1_0_0.wts", "broken.wts"]);
    assert_eq!(listing[0].1.as_ref().unwrap().dim(), 14);
    assert!(listing[2].1.is_err());

    assert_eq!(cache.clear().unwrap(), 3);
    assert!(cache.inspect().unwrap().is_empty());
    assert!(dir.path().join("notes.txt").exists());
}

#[test]
fn in_memory_cache_has_no_files() {
    let cache = WeightCache::in_memory();
    let s = rs(Family::A, 1);
    cache.weight_system(&s, &s.weight(vec![4]).unwrap(), &Limits::default()).unwrap();
    assert!(cache.dir().is_none());
    assert!(cache.inspect().unwrap().is_empty());
    assert_eq!(cache.clear().unwrap(), 0);
}

#[test]
fn parsed_files_keep_their_sorted_order() {
    let s = rs(Family::A, 2);
    let ws = weight_system(&s, &s.weight(vec![1, 1]).unwrap(), &Limits::default()).unwrap();
    let text = render(s.lie_type(), &ws);
    let record = parse(&text, std::path::Path::new("mem")).unwrap();
    assert_eq!(record.weights[&vec![0, 0]], 2);
    assert_eq!(record.dim(), 8);
}
