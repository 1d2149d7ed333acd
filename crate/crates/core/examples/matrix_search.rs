//! Row maxima of a staircase-shaped area matrix without looking at every
//! entry. Row `i` is a corner `(b, d)` up and right of the origin, column
//! `j` a corner `(a, c)` down and left of it; the entry is the area of the
//! box they span, and each row only sees a window of columns.
//!
//! cargo run --example matrix_search

use boxsep::matrix_engine::{row_maxima, row_maxima_brute, StaircaseMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write;

fn walk(rng: &mut ChaCha8Rng, k: usize) -> Vec<i128> {
    let mut v = 0;
    (0..k).map(|_| { v += rng.gen_range(1..50); v }).collect()
}

pub fn run() -> String {
    let n = 3000;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (b, d, a, c) = (walk(&mut rng, n), walk(&mut rng, n), walk(&mut rng, n), walk(&mut rng, n));
    // going down the rows the corner moves right and down; going right
    // along the columns it moves right and down as well
    let rows = (0..n).map(|i| (b[i], d[n - 1 - i])).collect();
    let cols = (0..n).map(|j| (-a[n - 1 - j], -c[j])).collect();
    let mut ends = |k: usize| -> Vec<usize> {
        let mut v: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=n)).collect();
        v.sort_unstable_by(|x, y| y.cmp(x));
        v
    };
    let (lo, hi) = (ends(n), ends(n));
    let m = StaircaseMatrix::new(rows, cols, lo.into_iter().zip(hi).collect()).unwrap();

    let fast = row_maxima(&m);
    let used = m.evaluations();
    m.reset_evaluations();
    let slow = row_maxima_brute(&m);
    let all = m.evaluations();

    let mut out = String::new();
    writeln!(out, "{} x {} matrix", m.rows(), m.cols()).unwrap();
    writeln!(out, "agrees with a full scan: {}", fast == slow).unwrap();
    writeln!(out, "entries evaluated: {used} (scan: {all})").unwrap();
    let real = fast.iter().filter(|r| r.value.area().is_some()).count();
    writeln!(out, "rows with a real maximum: {real}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
