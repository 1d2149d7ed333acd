use boxsep::cli::{run_benchmark, BenchConfig};

#[test]
fn presorted_is_not_slower_than_unsorted() {
    let cfg = BenchConfig {
        sizes: vec![1 << 20],
        seeds: vec![1, 2],
        reps: 3,
        ..BenchConfig::default()
    };
    let fast = run_benchmark(&BenchConfig { presorted: true, ..cfg.clone() }).unwrap();
    let slow = run_benchmark(&BenchConfig { presorted: false, ..cfg }).unwrap();
    let noise = fast.noise_floor.max(slow.noise_floor);
    let (a, b) = (fast.rows[0].median_secs, slow.rows[0].median_secs);
    assert!(a <= b * (1.0 + noise), "presorted {a:.4}s, unsorted {b:.4}s, noise floor {noise:.2}");
    // the same seeds give the same instances in both modes, up to order
    assert_eq!(fast.rows[0].instance_hashes.len(), 2);
}

#[test]
fn fixed_seeds_give_identical_hashes() {
    let cfg = BenchConfig {
        sizes: vec![1 << 16, 1 << 17, 1 << 18],
        seeds: vec![3],
        reps: 1,
        ..BenchConfig::default()
    };
    let a = run_benchmark(&cfg).unwrap();
    let b = run_benchmark(&cfg).unwrap();
    assert_eq!(a.rows.len(), 3);
    assert_eq!(a.ratios.len(), 2);
    for (x, y) in a.rows.iter().zip(&b.rows) {
        assert_eq!(x.instance_hashes, y.instance_hashes);
    }
}
