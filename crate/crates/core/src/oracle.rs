//! Brute-force references for testing. Slow on purpose and independent of
//! the solver: only the geometry predicates are shared.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{contains_closed, strictly_inside, AxisRect, Instance, Point, Scalar, Side};

pub fn count_open_interior<T: Scalar>(rect: &AxisRect<T>, blues: &[Point<T>]) -> usize {
    blues.iter().filter(|p| strictly_inside(rect, p)).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult<T> {
    Unbounded(Vec<Side>),
    Bounded {
        area: T,
        rect: AxisRect<T>,
        /// Fewest blue points any enclosing rectangle must hold.
        min_blue: usize,
    },
}

impl<T: Scalar> OracleResult<T> {
    pub fn area(&self) -> Option<&T> {
        match self {
            OracleResult::Bounded { area, .. } => Some(area),
            OracleResult::Unbounded(_) => None,
        }
    }
}

struct Setup<T> {
    smin: AxisRect<T>,
    smax: AxisRect<T>,
}

fn projects<T: Scalar>(v: &T, lo: &T, hi: &T) -> bool {
    if lo == hi {
        v == lo
    } else {
        lo < v && v < hi
    }
}

fn setup<T: Scalar>(inst: &Instance<T>) -> Result<std::result::Result<Setup<T>, Vec<Side>>> {
    if inst.reds.is_empty() {
        return Err(Error::NoRedPoints);
    }
    let x1 = inst.reds.iter().map(|p| &p.x).min().unwrap().clone();
    let x2 = inst.reds.iter().map(|p| &p.x).max().unwrap().clone();
    let y1 = inst.reds.iter().map(|p| &p.y).min().unwrap().clone();
    let y2 = inst.reds.iter().map(|p| &p.y).max().unwrap().clone();
    let vert: Vec<&Point<T>> = inst.blues.iter().filter(|p| projects(&p.x, &x1, &x2)).collect();
    let horiz: Vec<&Point<T>> = inst.blues.iter().filter(|p| projects(&p.y, &y1, &y2)).collect();
    let top = vert.iter().filter(|p| p.y >= y2).map(|p| p.y.clone()).min();
    let bottom = vert.iter().filter(|p| p.y <= y1).map(|p| p.y.clone()).max();
    let right = horiz.iter().filter(|p| p.x >= x2).map(|p| p.x.clone()).min();
    let left = horiz.iter().filter(|p| p.x <= x1).map(|p| p.x.clone()).max();
    let missing: Vec<Side> = [
        (Side::Top, top.is_none()),
        (Side::Right, right.is_none()),
        (Side::Bottom, bottom.is_none()),
        (Side::Left, left.is_none()),
    ]
    .into_iter()
    .filter(|(_, m)| *m)
    .map(|(s, _)| s)
    .collect();
    if !missing.is_empty() {
        return Ok(Err(missing));
    }
    Ok(Ok(Setup {
        smin: AxisRect::new(x1, y1, x2, y2),
        smax: AxisRect::new(left.unwrap(), bottom.unwrap(), right.unwrap(), top.unwrap()),
    }))
}

/// Every rectangle between smin and smax whose edges sit on blue
/// coordinates or smax walls, with its open-interior blue count.
fn grid<T: Scalar>(inst: &Instance<T>, s: &Setup<T>) -> Vec<(AxisRect<T>, usize)> {
    let pick = |vals: Vec<T>, keep: &dyn Fn(&T) -> bool, wall: &T| -> Vec<T> {
        let mut v: Vec<T> = vals.into_iter().filter(|v| keep(v)).collect();
        v.push(wall.clone());
        v.sort();
        v.dedup();
        v
    };
    let xs: Vec<T> = inst.blues.iter().map(|p| p.x.clone()).collect();
    let ys: Vec<T> = inst.blues.iter().map(|p| p.y.clone()).collect();
    let (smin, smax) = (&s.smin, &s.smax);
    let lefts = pick(xs.clone(), &|v| &smax.xmin <= v && v <= &smin.xmin, &smax.xmin);
    let rights = pick(xs, &|v| &smin.xmax <= v && v <= &smax.xmax, &smax.xmax);
    let bottoms = pick(ys.clone(), &|v| &smax.ymin <= v && v <= &smin.ymin, &smax.ymin);
    let tops = pick(ys, &|v| &smin.ymax <= v && v <= &smax.ymax, &smax.ymax);
    let mut out = Vec::new();
    for a in &lefts {
        for b in &rights {
            for c in &bottoms {
                for d in &tops {
                    let r = AxisRect::new(a.clone(), c.clone(), b.clone(), d.clone());
                    let k = count_open_interior(&r, &inst.blues);
                    out.push((r, k));
                }
            }
        }
    }
    out
}

/// Largest-area rectangle among those holding the fewest blues.
pub fn oracle_best<T: Scalar>(inst: &Instance<T>) -> Result<OracleResult<T>> {
    let s = match setup(inst)? {
        Ok(s) => s,
        Err(sides) => return Ok(OracleResult::Unbounded(sides)),
    };
    let cells = grid(inst, &s);
    let min_blue = cells.iter().map(|(_, k)| *k).min().unwrap();
    let (rect, _) = cells
        .into_iter()
        .filter(|(_, k)| *k == min_blue)
        .max_by(|(a, _), (b, _)| a.area().cmp(&b.area()))
        .unwrap();
    debug_assert!(inst.reds.iter().all(|p| contains_closed(&rect, p)));
    Ok(OracleResult::Bounded {
        area: rect.area(),
        rect,
        min_blue,
    })
}

/// No side can move outward without a blue entering or leaving smax.
pub fn is_maximal<T: Scalar>(rect: &AxisRect<T>, smax: &AxisRect<T>, blues: &[Point<T>]) -> bool {
    let on_h = |y: &T| blues.iter().any(|p| &p.y == y && rect.xmin < p.x && p.x < rect.xmax);
    let on_v = |x: &T| blues.iter().any(|p| &p.x == x && rect.ymin < p.y && p.y < rect.ymax);
    (rect.ymax == smax.ymax || on_h(&rect.ymax))
        && (rect.ymin == smax.ymin || on_h(&rect.ymin))
        && (rect.xmax == smax.xmax || on_v(&rect.xmax))
        && (rect.xmin == smax.xmin || on_v(&rect.xmin))
}

/// smax as the oracle sees it, or the open directions.
pub fn oracle_smax<T: Scalar>(inst: &Instance<T>) -> Result<std::result::Result<AxisRect<T>, Vec<Side>>> {
    Ok(setup(inst)?.map(|s| s.smax))
}

/// All maximal rectangles of the optimal area, ordered by (xmin, ymin, xmax, ymax).
pub fn oracle_all<T: Scalar>(inst: &Instance<T>) -> Result<Vec<AxisRect<T>>> {
    let s = match setup(inst)? {
        Ok(s) => s,
        Err(sides) => return Err(Error::Unbounded(sides)),
    };
    let cells = grid(inst, &s);
    let min_blue = cells.iter().map(|(_, k)| *k).min().unwrap();
    let feasible: Vec<AxisRect<T>> = cells.into_iter().filter(|(_, k)| *k == min_blue).map(|(r, _)| r).collect();
    let top = feasible.iter().map(AxisRect::area).max().unwrap();
    let set: BTreeSet<AxisRect<T>> = feasible
        .into_iter()
        .filter(|r| r.area() == top && is_maximal(r, &s.smax, &inst.blues))
        .collect();
    Ok(set.into_iter().collect())
}
