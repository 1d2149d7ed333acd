//! Every example under `examples/` runs here too, so they cannot rot.

#[path = "../examples/all_optima.rs"]
mod all_optima;
#[path = "../examples/benchmark.rs"]
mod benchmark;
#[path = "../examples/exact_input.rs"]
mod exact_input;
#[path = "../examples/hard_families.rs"]
mod hard_families;
#[path = "../examples/matrix_search.rs"]
mod matrix_search;
#[path = "../examples/render_svg.rs"]
mod render_svg;
#[path = "../examples/solve_basic.rs"]
mod solve_basic;
#[path = "../examples/staircases.rs"]
mod staircases;
#[path = "../examples/verify.rs"]
mod verify;

#[test]
fn solve_basic_reports_a_box() {
    let out = solve_basic::run();
    assert!(out.contains("area     60"), "{out}");
}

#[test]
fn all_optima_lists_both_boxes() {
    assert!(all_optima::run().starts_with("2 optimal boxes"));
}

#[test]
fn exact_input_is_valid_json() {
    let v: serde_json::Value = serde_json::from_str(&exact_input::run()).unwrap();
    assert_eq!(v["status"], "bounded");
    assert_eq!(v["area"], "25/2");
}

#[test]
fn render_svg_draws_every_point() {
    let svg = render_svg::run();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<circle").count(), 4 + 24);
}

#[test]
fn staircases_print_four_quadrants() {
    assert_eq!(staircases::run().lines().count(), 6);
}

#[test]
fn matrix_search_agrees_with_scan() {
    assert!(matrix_search::run().contains("agrees with a full scan: true"));
}

#[test]
fn hard_families_runs() {
    assert!(hard_families::run().contains("m =  64"));
}

#[test]
fn benchmark_prints_a_table() {
    assert_eq!(benchmark::run().matches("ratio").count(), 2);
}

#[test]
fn verify_finds_no_failures() {
    assert!(verify::run().contains(" 0 failures"));
}
