use boxsep::matrix_engine::{row_maxima, row_maxima_brute, StaircaseMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random staircase matrix with `r` rows and `c` columns: monotone corners
/// and non-increasing window ends.
fn random_matrix(r: usize, c: usize, seed: u64) -> StaircaseMatrix<i128> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut walk = |k: usize| -> Vec<i128> {
        let mut v = 0;
        (0..k).map(|_| { v += rng.gen_range(1..50); v }).collect()
    };
    let (b, d, a, cc) = (walk(r), walk(r), walk(c), walk(c));
    let rows = (0..r).map(|i| (b[i], d[r - 1 - i])).collect();
    let cols = (0..c).map(|j| (-a[c - 1 - j], -cc[j])).collect();
    let mut ends = |k: usize| -> Vec<usize> {
        let mut v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=c)).collect();
        v.sort_unstable_by(|x, y| y.cmp(x));
        v
    };
    let (lo, hi) = (ends(r), ends(r));
    StaircaseMatrix::new(rows, cols, lo.into_iter().zip(hi).collect()).unwrap()
}

#[test]
fn large_matrices_match_a_scan() {
    for (seed, (r, c)) in [(300, 300), (1000, 50), (50, 1000), (700, 900)].into_iter().enumerate() {
        let m = random_matrix(r, c, seed as u64);
        assert_eq!(row_maxima(&m), row_maxima_brute(&m), "{r}x{c}");
    }
}

#[test]
fn evaluations_grow_near_linearly() {
    let mut worst: f64 = 0.0;
    for (seed, n) in [256usize, 1024, 4096, 16384].into_iter().enumerate() {
        let m = random_matrix(n, n, 100 + seed as u64);
        m.reset_evaluations();
        row_maxima(&m);
        let size = (2 * n) as f64;
        let lg = size.log2();
        let per = m.evaluations() as f64 / (size * lg * lg);
        worst = worst.max(per);
        // far below the n^2 entries of the matrix
        assert!(m.evaluations() < (n * n / 8) as u64, "n = {n}: {} evaluations", m.evaluations());
    }
    assert!(worst <= 2.0, "evaluations / ((R+C) log^2) reached {worst:.3}");
}
