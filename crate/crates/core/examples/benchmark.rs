//! Doubling experiment on presorted blues. Each size is solved for a few
//! seeds; the ratio between consecutive medians should sit near 2.
//!
//! cargo run --release --example benchmark

use boxsep::cli::{run_benchmark, BenchConfig};

pub fn run() -> String {
    let cfg = BenchConfig {
        sizes: vec![1 << 14, 1 << 15, 1 << 16],
        seeds: vec![1, 2],
        presorted: true,
        reps: 3,
        ..BenchConfig::default()
    };
    run_benchmark(&cfg).unwrap().table()
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
