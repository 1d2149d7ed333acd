//! Two generated families. The first packs many maximal boxes around a
//! single red; the second turns "largest gap between sorted numbers" into a
//! box problem.
//!
//! cargo run --example hard_families

use boxsep::generators::{extract_fap_from_solution, fap_area, fap_by_sorting, gen_fap, gen_omega_m, random_unit_rationals};
use boxsep::{solve_all, solve_one};
use num_rational::BigRational;
use num_traits::One;
use std::fmt::Write;

pub fn run() -> String {
    let mut out = String::new();
    let one = BigRational::one();
    for m in [8, 16, 32, 64] {
        let inst = gen_omega_m(m, &one, &one).unwrap();
        let sol = solve_one(&inst).unwrap();
        let n_opt = solve_all(&inst).map(|v| v.len()).unwrap_or(0);
        writeln!(
            out,
            "m = {m:>3}: {n_opt} optimal boxes, {} candidates, area {}",
            sol.stats.total(),
            sol.area.unwrap()
        )
        .unwrap();
    }

    let values = random_unit_rationals(12, 3, 50);
    let (ai, aj) = fap_by_sorting(&values).unwrap();
    let sol = solve_one(&gen_fap(&values).unwrap()).unwrap();
    writeln!(out, "widest gap by sorting: {ai} .. {aj}, box area {}", fap_area(&ai, &aj)).unwrap();
    match extract_fap_from_solution(&sol) {
        Some((bi, bj)) => writeln!(out, "read back from the box:  {bi} .. {bj}, area {}", sol.area.unwrap()).unwrap(),
        None => writeln!(out, "no pair could be read back").unwrap(),
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
