//! The four staircases of a random instance: in each quadrant around the
//! reds, the blues that nothing else shadows.
//!
//! cargo run --example staircases

use boxsep::generators::gen_random;
use boxsep::staircase::StaircaseSet;
use boxsep::{compute_frame, Instance, Point, Quadrant};
use std::fmt::Write;

pub fn run() -> String {
    // random blues, reds bunched near the origin
    let mut blues = gen_random(1, 80, 11, (-20, 20)).unwrap().blues;
    // fence on the axes so every side is bounded
    blues.extend([Point::new(0, 21), Point::new(0, -21), Point::new(21, 1), Point::new(-21, 1)]);
    let reds = vec![Point::new(0, 0), Point::new(2, 1), Point::new(-1, 2)];
    let inst = Instance::new(reds, blues);
    let frame = compute_frame(&inst).unwrap();
    let set = StaircaseSet::from_frame(&frame, false);

    let mut out = String::new();
    writeln!(out, "smin {}", frame.smin).unwrap();
    match frame.smax() {
        Some(r) => writeln!(out, "smax {r}").unwrap(),
        None => writeln!(out, "smax unbounded").unwrap(),
    }
    for q in Quadrant::ALL {
        let pts: Vec<String> = set.get(q).points().iter().map(|p| p.to_string()).collect();
        writeln!(out, "{q:?}: {} of {} blues  {}", pts.len(), frame.quadrant(q).len(), pts.join(" ")).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
