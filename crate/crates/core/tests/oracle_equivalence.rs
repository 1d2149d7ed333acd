use boxsep::generators::gen_random;
use boxsep::oracle::{count_open_interior, is_maximal, oracle_all, oracle_best, OracleResult};
use boxsep::{contains_closed, solve_all, solve_one, Instance, Status};

fn instance(seed: u64) -> Instance<i128> {
    let n = 1 + (seed % 20) as usize;
    let m = (seed / 20 % 31) as usize;
    gen_random(n, m, seed, (-6, 6)).unwrap()
}

fn check_one(seed: u64) {
    let inst = instance(seed);
    let sol = solve_one(&inst).unwrap();
    match oracle_best(&inst).unwrap() {
        OracleResult::Unbounded(sides) => {
            assert_eq!(sol.status, Status::Unbounded(sides), "seed {seed}");
        }
        OracleResult::Bounded { area, min_blue, .. } => {
            assert_eq!(sol.area.as_ref(), Some(&area), "seed {seed}: {inst:?}");
            assert_eq!(sol.forced_blue, min_blue, "seed {seed}");
            let rect = sol.rect().unwrap();
            assert!(inst.reds.iter().all(|p| contains_closed(rect, p)), "seed {seed}");
            assert_eq!(count_open_interior(rect, &inst.blues), sol.forced_blue, "seed {seed}");
            let smax = sol.smax.as_ref().unwrap();
            assert!(is_maximal(rect, smax, &inst.blues), "seed {seed}: {rect} not maximal");
        }
    }
}

#[test]
fn best_area_matches_oracle() {
    for seed in 0..3000 {
        check_one(seed);
    }
}

#[test]
fn all_optima_match_oracle() {
    for seed in 0..1000 {
        let inst = instance(seed);
        match (solve_all(&inst), oracle_all(&inst)) {
            (Ok(a), Ok(b)) => assert_eq!(a, b, "seed {seed}: {inst:?}"),
            (Err(a), Err(b)) => assert_eq!(a, b),
            (a, b) => panic!("seed {seed}: {a:?} vs {b:?}"),
        }
    }
}

#[test]
fn reflection_keeps_the_area() {
    for seed in 0..500 {
        let inst = instance(seed);
        let flipped = Instance::new(
            inst.reds.iter().map(|p| p.mirrored(true, true)).collect(),
            inst.blues.iter().map(|p| p.mirrored(true, true)).collect(),
        );
        assert_eq!(solve_one(&inst).unwrap().area, solve_one(&flipped).unwrap().area, "seed {seed}");
    }
}
