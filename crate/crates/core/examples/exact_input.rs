//! Point files may mix integers, decimals and fractions. Anything that does
//! not fit an `i128` comfortably is solved in exact rationals.
//!
//! cargo run --example exact_input

use boxsep::cli::{emit_solution, parse_points, AnyInstance, Format};
use boxsep::solve_one;

const POINTS: &str = "\
color,x,y
R,0,0
R,1/3,2/7
B,-1.5,0.25
B,2,1e-1
B,0.1,3
B,1/9,-2
B,1,1
";

pub fn run() -> String {
    match parse_points(POINTS).expect("well formed") {
        AnyInstance::Rational(inst) => {
            let sol = solve_one(&inst).unwrap();
            emit_solution(&inst, &sol, Format::Json)
        }
        AnyInstance::Int(inst) => {
            let sol = solve_one(&inst).unwrap();
            emit_solution(&inst, &sol, Format::Json)
        }
    }
}

#[allow(dead_code)]
fn main() {
    println!("{}", run());
}
