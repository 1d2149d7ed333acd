//! A symmetric instance has several boxes of the same area. `solve_all`
//! lists every one, and the brute-force oracle agrees.
//!
//! cargo run --example all_optima

use boxsep::oracle::oracle_all;
use boxsep::{solve_all, Instance};
use std::fmt::Write;

pub fn run() -> String {
    let reds = [(0, 0)];
    let blues = [(2, 2), (-2, 2), (-2, -2), (2, -2), (0, 4), (0, -4), (4, 0), (-4, 0)];
    let inst = Instance::<i128>::from_coords(&reds, &blues);

    let fast = solve_all(&inst).expect("bounded");
    let slow = oracle_all(&inst).expect("bounded");
    assert_eq!(fast, slow);

    let mut out = String::new();
    writeln!(out, "{} optimal boxes", fast.len()).unwrap();
    for r in &fast {
        writeln!(out, "  {r}").unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
