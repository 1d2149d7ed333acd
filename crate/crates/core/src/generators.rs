//! Seeded random instances and the two structured families: the linear
//! number of optima construction and the furthest-adjacent-pair reduction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Instance, Point};
use crate::solver::Solution;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` reds and `m` blues with integer coordinates drawn uniformly from the
/// inclusive `range` on both axes.
pub fn gen_random(n: usize, m: usize, seed: u64, range: (i64, i64)) -> Result<Instance<i128>> {
    gen_random_with(n, m, seed, range, range)
}

/// As [`gen_random`] with separate ranges for reds and blues.
pub fn gen_random_with(
    n: usize,
    m: usize,
    seed: u64,
    red_range: (i64, i64),
    blue_range: (i64, i64),
) -> Result<Instance<i128>> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one red point".into()));
    }
    if red_range.0 > red_range.1 || blue_range.0 > blue_range.1 {
        return Err(Error::InvalidArgument("empty coordinate range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |(lo, hi): (i64, i64), k: usize| -> Vec<Point<i128>> {
        (0..k)
            .map(|_| Point::new(rng.gen_range(lo..=hi) as i128, rng.gen_range(lo..=hi) as i128))
            .collect()
    };
    let reds = draw(red_range, n);
    let blues = draw(blue_range, m);
    Ok(Instance::new(reds, blues))
}

/// Instance with `m` blues (`m >= 6`) whose optimum area `x0 * y0` is
/// attained by a number of rectangles growing linearly in `m`.
///
/// Blues: `p = (x0/4, y0/2)`, `q = (x0/2, y0/4)` and `r_1 .. r_{m-2}` with
/// `x_i = -3x0/2 + i * (3x0/2) / (m - 1)` and
/// `y_i = y0/2 - x0*y0 / (x0/2 - x_{i-1})`, where `x_0 = -3x0/2`.
/// Reds: `(x0/2, 0)`, `(0, y0/2)`, `(x_{m-3}, 0)`, `(0, y_2)`.
pub fn gen_omega_m(m: usize, x0: &BigRational, y0: &BigRational) -> Result<Instance<BigRational>> {
    if m < 6 {
        return Err(Error::InvalidArgument("the construction needs m >= 6".into()));
    }
    if *x0 <= BigRational::zero() || *y0 <= BigRational::zero() {
        return Err(Error::InvalidArgument("x0 and y0 must be positive".into()));
    }
    let two = rat(2, 1);
    let half_x = x0 / &two;
    let half_y = y0 / &two;
    let start = -(x0 * rat(3, 2));
    let step = (x0 * rat(3, 2)) / rat(m as i64 - 1, 1);
    let x = |i: usize| &start + &step * rat(i as i64, 1);
    let y = |i: usize| &half_y - (x0 * y0) / (&half_x - x(i - 1));

    let mut blues = vec![
        Point::new(x0 / rat(4, 1), half_y.clone()),
        Point::new(half_x.clone(), y0 / rat(4, 1)),
    ];
    blues.extend((1..=m - 2).map(|i| Point::new(x(i), y(i))));
    let zero = BigRational::zero();
    let reds = vec![
        Point::new(half_x.clone(), zero.clone()),
        Point::new(zero.clone(), half_y.clone()),
        Point::new(x(m - 3), zero.clone()),
        Point::new(zero, y(2)),
    ];
    Ok(Instance::new(reds, blues))
}

fn sorted_distinct(values: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut v = values.to_vec();
    v.sort();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument("values must be distinct".into()));
    }
    Ok(v)
}

/// Rectangle instance encoding the numbers `a` (distinct, in `[0, 1]`, at
/// least three of them): blues `(a, 1/(1+a))` and `(-a, -1/(1+a))`, reds at
/// the origin and at the second smallest / second largest value on the axes.
pub fn gen_fap(values: &[BigRational]) -> Result<Instance<BigRational>> {
    if values.len() < 3 {
        return Err(Error::InvalidArgument("need at least three values".into()));
    }
    let (zero, one) = (BigRational::zero(), BigRational::one());
    if values.iter().any(|a| *a < zero || *a > one) {
        return Err(Error::InvalidArgument("values must lie in [0, 1]".into()));
    }
    let s = sorted_distinct(values)?;
    let h = |a: &BigRational| (&one + a).recip();
    let mut blues = Vec::with_capacity(2 * values.len());
    for a in values {
        blues.push(Point::new(a.clone(), h(a)));
        blues.push(Point::new(-a.clone(), -h(a)));
    }
    let second = &s[1];
    let height = h(&s[s.len() - 2]);
    let reds = vec![
        Point::new(zero.clone(), zero.clone()),
        Point::new(second.clone(), zero.clone()),
        Point::new(zero.clone(), height.clone()),
        Point::new(-second.clone(), zero.clone()),
        Point::new(zero, -height),
    ];
    Ok(Instance::new(reds, blues))
}

/// Adjacent pair with the largest gap in sorted order, leftmost on ties.
pub fn fap_by_sorting(values: &[BigRational]) -> Result<(BigRational, BigRational)> {
    if values.len() < 2 {
        return Err(Error::InvalidArgument("need at least two values".into()));
    }
    let mut s = values.to_vec();
    s.sort();
    let mut best = 0;
    for k in 1..s.len() - 1 {
        if &s[k + 1] - &s[k] > &s[best + 1] - &s[best] {
            best = k;
        }
    }
    Ok((s[best].clone(), s[best + 1].clone()))
}

/// Read back the pair `(a_i, a_j)` from a rectangle of a [`gen_fap`]
/// instance: `a_j` is the right edge and `1/(1 + a_i)` the top edge.
pub fn extract_fap_from_solution(sol: &Solution<BigRational>) -> Option<(BigRational, BigRational)> {
    let r = sol.rect()?;
    if r.ymax <= BigRational::zero() {
        return None;
    }
    Some((r.ymax.recip() - BigRational::one(), r.xmax.clone()))
}

/// `4 a_j / (1 + a_i)`, the area of the rectangle through the pair.
pub fn fap_area(a_i: &BigRational, a_j: &BigRational) -> BigRational {
    rat(4, 1) * a_j / (BigRational::one() + a_i)
}

/// `len` distinct rationals in `[0, 1]` with denominators up to `max_den`.
pub fn random_unit_rationals(len: usize, seed: u64, max_den: i64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BigRational> = Vec::with_capacity(len);
    while out.len() < len {
        let d = rng.gen_range(1..=max_den);
        let v = rat(rng.gen_range(0..=d), d);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}
