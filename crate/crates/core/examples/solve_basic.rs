//! Largest box around three reds when a ring of blues is in the way.
//!
//! cargo run --example solve_basic

use boxsep::solver::Support;
use boxsep::{solve_one, Instance};
use std::fmt::Write;

pub fn run() -> String {
    let reds = [(0, 0), (2, 1), (1, 3)];
    let blues = [(-3, 1), (5, 2), (1, 7), (1, -4), (4, 6), (-2, -3), (3, -1)];
    let inst = Instance::<i128>::from_coords(&reds, &blues);
    let sol = solve_one(&inst).expect("valid instance");

    let mut out = String::new();
    let rect = sol.rect().expect("bounded");
    writeln!(out, "box      {rect}").unwrap();
    writeln!(out, "area     {}", sol.area.as_ref().unwrap()).unwrap();
    writeln!(out, "forced   {} blue(s) inside no matter what", sol.forced_blue).unwrap();
    writeln!(out, "case     {:?}", sol.best.as_ref().unwrap().case).unwrap();
    for (side, s) in ["top", "right", "bottom", "left"].iter().zip(&sol.best.as_ref().unwrap().supports) {
        match s {
            Support::Blue(p) => writeln!(out, "{side:<8} held by blue {p}").unwrap(),
            Support::Wall(w) => writeln!(out, "{side:<8} on wall {w:?}").unwrap(),
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
