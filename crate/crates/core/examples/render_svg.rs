//! Draw a random instance with every optimal box.
//!
//! cargo run --example render_svg > picture.svg

use boxsep::cli::render_svg;
use boxsep::generators::gen_random;
use boxsep::solve_all;

pub fn run() -> String {
    // seed 7 happens to be bounded
    let inst = gen_random(4, 24, 7, (-10, 10)).unwrap();
    let frame = boxsep::compute_frame(&inst).unwrap();
    let optima = solve_all(&inst).unwrap_or_default();
    let refs: Vec<_> = optima.iter().collect();
    render_svg(&inst, &frame.smin, frame.smax().as_ref(), &refs)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
