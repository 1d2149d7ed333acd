//! One optimum through staircase candidates, all optima through a sweep.
//!
//! Candidates are generated in a normalised orientation and the other
//! orientations are handled by mirroring the staircases:
//!
//! * corner: two adjacent NE entries fix top and right; left and bottom
//!   are completed greedily (both completion orders), in all 4 mirrors;
//! * pinwheel: one support per quadrant, in the identity and x mirror;
//! * diagonal: NE pair against SW pair, searched through the implicit area
//!   matrix, in the identity (NE/SW) and x mirror (NW/SE).
//!
//! Candidates are visited corner, pinwheel, NE/SW, NW/SE, and the last one of
//! maximum area wins.

use std::collections::BTreeSet;

use crate::bounding::{compute_frame, compute_frame_presorted, Frame};
use crate::error::{Error, Result};
use crate::geometry::{contains_closed, strictly_inside, AxisRect, Instance, Point, Quadrant, Scalar, Side};
use crate::matrix_engine::{row_maxima, StaircaseMatrix};
use crate::staircase::{precompute_pointers, PointerTables, Relation, StaircaseSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Support<T> {
    Blue(Point<T>),
    /// The side rests on this smax wall.
    Wall(Side),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diagonal {
    NeSw,
    NwSe,
}

impl Diagonal {
    pub fn name(self) -> &'static str {
        match self {
            Diagonal::NeSw => "NE/SW",
            Diagonal::NwSe => "NW/SE",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Three supports on one side of smin.
    Corner,
    /// One support from each quadrant.
    Pinwheel,
    /// Two supports from each of two opposite quadrants.
    Diagonal(Diagonal),
}

impl CaseTag {
    pub fn number(self) -> u8 {
        match self {
            CaseTag::Corner => 1,
            CaseTag::Pinwheel => 2,
            CaseTag::Diagonal(_) => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate<T> {
    pub rect: AxisRect<T>,
    /// Top, right, bottom, left.
    pub supports: [Support<T>; 4],
    pub case: CaseTag,
}

impl<T: Scalar> Candidate<T> {
    pub fn support(&self, side: Side) -> &Support<T> {
        &self.supports[side as usize]
    }

    fn mirrored(self, mx: bool, my: bool) -> Candidate<T> {
        let mut supports = self.supports.clone();
        for side in Side::ALL {
            let s = match &self.supports[side as usize] {
                Support::Blue(p) => Support::Blue(p.mirrored(mx, my)),
                Support::Wall(w) => Support::Wall(w.mirrored(mx, my)),
            };
            supports[side.mirrored(mx, my) as usize] = s;
        }
        let case = match self.case {
            CaseTag::Diagonal(Diagonal::NeSw) if mx != my => CaseTag::Diagonal(Diagonal::NwSe),
            CaseTag::Diagonal(Diagonal::NwSe) if mx != my => CaseTag::Diagonal(Diagonal::NeSw),
            c => c,
        };
        Candidate {
            rect: self.rect.mirrored(mx, my),
            supports,
            case,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Bounded,
    Unbounded(Vec<Side>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub corner: usize,
    pub pinwheel: usize,
    /// Rows of the two diagonal matrices.
    pub diagonal_rows: usize,
    /// Diagonal rows whose maximum was a real area.
    pub diagonal: usize,
    pub staircase_entries: usize,
}

impl Stats {
    pub fn total(&self) -> usize {
        self.corner + self.pinwheel + self.diagonal_rows
    }
}

#[derive(Debug, Clone)]
pub struct Solution<T> {
    pub status: Status,
    pub best: Option<Candidate<T>>,
    pub area: Option<T>,
    pub forced_blue: usize,
    pub smin: AxisRect<T>,
    pub smax: Option<AxisRect<T>>,
    pub stats: Stats,
}

impl<T: Scalar> Solution<T> {
    pub fn rect(&self) -> Option<&AxisRect<T>> {
        self.best.as_ref().map(|c| &c.rect)
    }

    pub fn is_bounded(&self) -> bool {
        self.status == Status::Bounded
    }
}

/// One mirrored copy of the staircases with its pointers.
#[derive(Debug, Clone)]
pub struct Orientation<T> {
    pub mx: bool,
    pub my: bool,
    pub set: StaircaseSet<T>,
    pub ptr: PointerTables,
}

impl<T: Scalar> Orientation<T> {
    pub fn new(base: &StaircaseSet<T>, mx: bool, my: bool) -> Self {
        let set = base.mirrored(mx, my);
        let ptr = precompute_pointers(&set);
        Orientation { mx, my, set, ptr }
    }

    fn entry(&self, q: Quadrant, i: usize) -> &Point<T> {
        &self.set.get(q).entries[i]
    }

    fn support(&self, q: Quadrant, i: Option<usize>, role: Side) -> Support<T> {
        match i {
            Some(i) if !self.set.get(q).is_sentinel(i) => Support::Blue(self.entry(q, i).clone()),
            _ => Support::Wall(role),
        }
    }

    /// Left limit from NW entries below the NE (or SE) entry `i`.
    fn nw_below(&self, src: Quadrant, i: usize) -> (T, Option<usize>) {
        match self.ptr.get(src, i, Quadrant::NW, Relation::Below) {
            Some(k) => (self.entry(Quadrant::NW, k).x.clone(), Some(k)),
            None => (self.set.smax.xmin.clone(), None),
        }
    }

    /// Bottom limit from SE entries left of entry `i`.
    fn se_left(&self, src: Quadrant, i: usize) -> (T, Option<usize>) {
        match self.ptr.get(src, i, Quadrant::SE, Relation::Left) {
            Some(k) => (self.entry(Quadrant::SE, k).y.clone(), Some(k)),
            None => (self.set.smax.ymin.clone(), None),
        }
    }

    /// Left limit from SW entries above a bottom edge set by SE entry `k`
    /// (the SE wall when `None`).
    fn sw_above(&self, se: Option<usize>) -> (T, Option<usize>) {
        match self.ptr.get(Quadrant::SE, se.unwrap_or(0), Quadrant::SW, Relation::Above) {
            Some(k) => (self.entry(Quadrant::SW, k).x.clone(), Some(k)),
            None => (self.set.smax.xmin.clone(), None),
        }
    }

    /// Bottom limit from SW entries right of a left edge set by NW entry `k`
    /// (the NW wall when `None`).
    fn sw_right(&self, nw: Option<usize>) -> (T, Option<usize>) {
        match self.ptr.get(Quadrant::NW, nw.unwrap_or(0), Quadrant::SW, Relation::Right) {
            Some(k) => (self.entry(Quadrant::SW, k).y.clone(), Some(k)),
            None => (self.set.smax.ymin.clone(), None),
        }
    }

    fn rect(&self, a: T, c: T, b: T, d: T) -> AxisRect<T> {
        AxisRect {
            xmin: a,
            ymin: c,
            xmax: b,
            ymax: d,
        }
    }

    fn corner_candidates(&self, out: &mut impl FnMut(Candidate<T>)) {
        let ne = self.set.get(Quadrant::NE);
        for i in 0..ne.pairs() {
            let d = ne.entries[i].y.clone();
            let b = ne.entries[i + 1].x.clone();
            let top = self.support(Quadrant::NE, Some(i), Side::Top);
            let right = self.support(Quadrant::NE, Some(i + 1), Side::Right);
            let (a_nw, nw) = self.nw_below(Quadrant::NE, i);
            let (c_se, se) = self.se_left(Quadrant::NE, i + 1);

            // bottom first, then left
            let (a_sw, sw) = self.sw_above(se);
            let (a, left) = if a_sw > a_nw {
                (a_sw, self.support(Quadrant::SW, sw, Side::Left))
            } else {
                (a_nw.clone(), self.support(Quadrant::NW, nw, Side::Left))
            };
            out(Candidate {
                rect: self.rect(a, c_se.clone(), b.clone(), d.clone()),
                supports: [
                    top.clone(),
                    right.clone(),
                    self.support(Quadrant::SE, se, Side::Bottom),
                    left,
                ],
                case: CaseTag::Corner,
            });

            // left first, then bottom
            let (c_sw, sw) = self.sw_right(nw);
            let (c, bottom) = if c_sw > c_se {
                (c_sw, self.support(Quadrant::SW, sw, Side::Bottom))
            } else {
                (c_se, self.support(Quadrant::SE, se, Side::Bottom))
            };
            out(Candidate {
                rect: self.rect(a_nw, c, b, d),
                supports: [top, right, bottom, self.support(Quadrant::NW, nw, Side::Left)],
                case: CaseTag::Corner,
            });
        }
    }

    fn pinwheel_candidates(&self, out: &mut impl FnMut(Candidate<T>)) {
        let se = self.set.get(Quadrant::SE);
        for r in 0..se.len() {
            let Some(t) = self.ptr.get(Quadrant::SE, r, Quadrant::NE, Relation::Left) else {
                continue;
            };
            let b = se.entries[r].x.clone();
            let d = self.entry(Quadrant::NE, t).y.clone();
            let (a, nw) = self.nw_below(Quadrant::NE, t);
            let (c, sw) = self.sw_right(nw);
            let (c_se, _) = self.se_left(Quadrant::SE, r);
            if c < c_se || (se.entries[r].y <= c && b != self.set.smax.xmax) {
                continue;
            }
            out(Candidate {
                rect: self.rect(a, c, b, d),
                supports: [
                    self.support(Quadrant::NE, Some(t), Side::Top),
                    self.support(Quadrant::SE, Some(r), Side::Right),
                    self.support(Quadrant::SW, sw, Side::Bottom),
                    self.support(Quadrant::NW, nw, Side::Left),
                ],
                case: CaseTag::Pinwheel,
            });
        }
    }

    /// Admissible SW pair windows `[lo, hi)` for every NE pair.
    pub fn diagonal_windows(&self) -> Vec<(usize, usize)> {
        let ne = self.set.get(Quadrant::NE);
        let sw = self.set.get(Quadrant::SW);
        let cols = sw.pairs();
        let mut out = Vec::with_capacity(ne.pairs());
        // lo only moves left and hi only moves left as i grows
        let mut lo = cols;
        let mut hi = cols;
        for i in 0..ne.pairs() {
            let (a_min, _) = self.nw_below(Quadrant::NE, i);
            let (c_min, _) = self.se_left(Quadrant::NE, i + 1);
            while lo > 0 && sw.entries[lo - 1].x >= a_min {
                lo -= 1;
            }
            while hi > 0 && sw.entries[hi].y < c_min {
                hi -= 1;
            }
            out.push((lo, hi));
        }
        out
    }

    pub fn diagonal_matrix(&self) -> StaircaseMatrix<T> {
        let ne = self.set.get(Quadrant::NE);
        let sw = self.set.get(Quadrant::SW);
        let rows = (0..ne.pairs())
            .map(|i| (ne.entries[i + 1].x.clone(), ne.entries[i].y.clone()))
            .collect();
        let cols = (0..sw.pairs())
            .map(|j| (sw.entries[j].x.clone(), sw.entries[j + 1].y.clone()))
            .collect();
        StaircaseMatrix::new(rows, cols, self.diagonal_windows()).expect("diagonal matrix out of shape")
    }

    fn diagonal_candidates(&self, stats: &mut Stats, out: &mut impl FnMut(Candidate<T>)) {
        let m = self.diagonal_matrix();
        stats.diagonal_rows += m.rows();
        let ne = self.set.get(Quadrant::NE);
        let sw = self.set.get(Quadrant::SW);
        for (i, rm) in row_maxima(&m).into_iter().enumerate() {
            if rm.value.is_padding() {
                continue;
            }
            stats.diagonal += 1;
            let j = rm.col;
            out(Candidate {
                rect: self.rect(
                    sw.entries[j].x.clone(),
                    sw.entries[j + 1].y.clone(),
                    ne.entries[i + 1].x.clone(),
                    ne.entries[i].y.clone(),
                ),
                supports: [
                    self.support(Quadrant::NE, Some(i), Side::Top),
                    self.support(Quadrant::NE, Some(i + 1), Side::Right),
                    self.support(Quadrant::SW, Some(j + 1), Side::Bottom),
                    self.support(Quadrant::SW, Some(j), Side::Left),
                ],
                case: CaseTag::Diagonal(Diagonal::NeSw),
            });
        }
    }
}

/// Identity, x mirror, y mirror, both.
pub fn orientations<T: Scalar>(set: &StaircaseSet<T>) -> [Orientation<T>; 4] {
    [
        Orientation::new(set, false, false),
        Orientation::new(set, true, false),
        Orientation::new(set, false, true),
        Orientation::new(set, true, true),
    ]
}

/// Every corner and pinwheel candidate, in original coordinates.
pub fn enumerate_cases_1_2<T: Scalar>(orients: &[Orientation<T>; 4]) -> Vec<Candidate<T>> {
    let mut out = Vec::new();
    for o in orients {
        o.corner_candidates(&mut |c| out.push(c.mirrored(o.mx, o.my)));
    }
    for o in orients.iter().filter(|o| !o.my) {
        o.pinwheel_candidates(&mut |c| out.push(c.mirrored(o.mx, o.my)));
    }
    out
}

/// Windows of the diagonal matrix for one diagonal, rows in staircase order
/// of that diagonal's upper quadrant (NE, or NW read right to left).
pub fn build_case3_windows<T: Scalar>(orients: &[Orientation<T>; 4], diagonal: Diagonal) -> Vec<(usize, usize)> {
    match diagonal {
        Diagonal::NeSw => orients[0].diagonal_windows(),
        Diagonal::NwSe => orients[1].diagonal_windows(),
    }
}

fn unbounded_solution<T: Scalar>(frame: Frame<T>) -> Solution<T> {
    Solution {
        status: Status::Unbounded(frame.unbounded_sides()),
        best: None,
        area: None,
        forced_blue: frame.forced_blue,
        smin: frame.smin,
        smax: None,
        stats: Stats::default(),
    }
}

fn solve_impl<T: Scalar>(frame: Frame<T>, presorted: bool) -> Result<Solution<T>> {
    if !frame.is_bounded() {
        return Ok(unbounded_solution(frame));
    }
    let set = StaircaseSet::from_frame(&frame, presorted);
    let orients = orientations(&set);
    let mut stats = Stats {
        staircase_entries: set.total_len(),
        ..Stats::default()
    };

    let mut best: Option<(T, Candidate<T>)> = None;
    let mut offer = |c: Candidate<T>| {
        let area = c.rect.area();
        if best.as_ref().is_none_or(|(b, _)| area >= *b) {
            best = Some((area, c));
        }
    };
    for o in &orients {
        o.corner_candidates(&mut |c| {
            stats.corner += 1;
            offer(c.mirrored(o.mx, o.my))
        });
    }
    for o in orients.iter().filter(|o| !o.my) {
        o.pinwheel_candidates(&mut |c| {
            stats.pinwheel += 1;
            offer(c.mirrored(o.mx, o.my))
        });
    }
    for o in orients.iter().filter(|o| !o.my) {
        let mut local = Stats::default();
        o.diagonal_candidates(&mut local, &mut |c| offer(c.mirrored(o.mx, o.my)));
        stats.diagonal_rows += local.diagonal_rows;
        stats.diagonal += local.diagonal;
    }

    let (area, cand) = best.expect("a bounded frame always has a corner candidate");
    Ok(Solution {
        status: Status::Bounded,
        best: Some(cand),
        area: Some(area),
        forced_blue: frame.forced_blue,
        smin: frame.smin.clone(),
        smax: frame.smax(),
        stats,
    })
}

/// A maximum separating rectangle. Errors only when there are no red points.
pub fn solve_one<T: Scalar>(inst: &Instance<T>) -> Result<Solution<T>> {
    solve_impl(compute_frame(inst)?, false)
}

/// Like [`solve_one`] for blues already sorted by x: one pass over the blues
/// and no sort. Errors if they are not sorted.
pub fn solve_one_presorted<T: Scalar>(inst: &Instance<T>) -> Result<Solution<T>> {
    solve_impl(compute_frame_presorted(inst)?, true)
}

/// Every maximal separating rectangle (any area), sorted and deduplicated.
pub fn solve_all_maximal<T: Scalar>(inst: &Instance<T>) -> Result<Vec<AxisRect<T>>> {
    let frame = compute_frame(inst)?;
    let Some(smax) = frame.smax() else {
        return Err(Error::Unbounded(frame.unbounded_sides()));
    };
    let obstacles: Vec<Point<T>> = inst
        .blues
        .iter()
        .filter(|p| contains_closed(&smax, p) && !strictly_inside(&frame.smin, p))
        .cloned()
        .collect();
    let found = maximal_empty_rectangles(&smax, obstacles);
    Ok(found.into_iter().filter(|r| r.contains_rect(&frame.smin)).collect())
}

/// All maximum-area separating rectangles, sorted by (xmin, ymin, xmax, ymax).
pub fn solve_all<T: Scalar>(inst: &Instance<T>) -> Result<Vec<AxisRect<T>>> {
    let all = solve_all_maximal(inst)?;
    let Some(top) = all.iter().map(AxisRect::area).max() else {
        return Ok(all);
    };
    Ok(all.into_iter().filter(|r| r.area() == top).collect())
}

/// Maximal rectangles inside `bbox` whose open interior misses every point.
fn maximal_empty_rectangles<T: Scalar>(bbox: &AxisRect<T>, mut pts: Vec<Point<T>>) -> BTreeSet<AxisRect<T>> {
    let mut out = BTreeSet::new();
    if bbox.xmin == bbox.xmax || bbox.ymin == bbox.ymax {
        out.insert(bbox.clone());
        return out;
    }
    pts.sort();
    let (xl, xr, yb, yt) = (&bbox.xmin, &bbox.xmax, &bbox.ymin, &bbox.ymax);
    let rect = |a: &T, c: &T, b: &T, d: &T| AxisRect {
        xmin: a.clone(),
        ymin: c.clone(),
        xmax: b.clone(),
        ymax: d.clone(),
    };
    let inner_y = |p: &Point<T>| yb < &p.y && &p.y < yt;

    // groups of equal x, ascending
    let mut groups: Vec<&[Point<T>]> = Vec::new();
    let mut start = 0;
    for k in 1..=pts.len() {
        if k == pts.len() || pts[k].x != pts[start].x {
            groups.push(&pts[start..k]);
            start = k;
        }
    }

    // left side on a point, sweeping right
    for (g, grp) in groups.iter().enumerate() {
        for p in grp.iter().filter(|p| inner_y(p) && &p.x < xr) {
            let (mut lo, mut hi) = (yb.clone(), yt.clone());
            let mut open = true;
            for next in &groups[g + 1..] {
                if &next[0].x >= xr {
                    break;
                }
                let hits: Vec<&Point<T>> = next.iter().filter(|q| lo < q.y && q.y < hi).collect();
                if hits.is_empty() {
                    continue;
                }
                out.insert(rect(&p.x, &lo, &next[0].x, &hi));
                for q in hits {
                    if q.y > p.y {
                        hi = hi.min(q.y.clone());
                    } else if q.y < p.y {
                        lo = lo.max(q.y.clone());
                    } else {
                        open = false;
                    }
                }
                if !open {
                    break;
                }
            }
            if open {
                out.insert(rect(&p.x, &lo, xr, &hi));
            }
        }
    }

    // left side on the wall, right side on a point
    for (g, grp) in groups.iter().enumerate() {
        for q in grp.iter().filter(|q| inner_y(q) && &q.x > xl) {
            let (mut lo, mut hi) = (yb.clone(), yt.clone());
            let mut open = true;
            for prev in groups[..g].iter().rev() {
                if &prev[0].x <= xl {
                    break;
                }
                for r in prev.iter() {
                    if !(lo < r.y && r.y < hi) {
                        continue;
                    }
                    if r.y > q.y {
                        hi = r.y.clone();
                    } else if r.y < q.y {
                        lo = r.y.clone();
                    } else {
                        open = false;
                    }
                }
                if !open {
                    break;
                }
            }
            if open {
                out.insert(rect(xl, &lo, &q.x, &hi));
            }
        }
    }

    // both walls
    let mut ys: Vec<T> = pts
        .iter()
        .filter(|p| xl < &p.x && &p.x < xr && inner_y(p))
        .map(|p| p.y.clone())
        .collect();
    ys.push(yb.clone());
    ys.push(yt.clone());
    ys.sort();
    ys.dedup();
    for w in ys.windows(2) {
        out.insert(rect(xl, &w[0], xr, &w[1]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Instance<i128> {
        Instance::from_coords(
            &[(0, 0), (2, 0), (1, 1), (1, -1)],
            &[(1, 3), (1, -3), (4, 0), (-2, 0), (3, 2)],
        )
    }

    fn r(a: i128, c: i128, b: i128, d: i128) -> AxisRect<i128> {
        AxisRect::new(a, c, b, d)
    }

    #[test]
    fn w_best_area() {
        let sol = solve_one(&w()).unwrap();
        assert_eq!(sol.area, Some(30));
        let rect = sol.rect().unwrap().clone();
        assert!(rect == r(-2, -3, 3, 3) || rect == r(-2, -3, 4, 2));
    }

    #[test]
    fn w_all_optima() {
        assert_eq!(solve_all(&w()).unwrap(), vec![r(-2, -3, 3, 3), r(-2, -3, 4, 2)]);
    }

    #[test]
    fn w_corner_candidates_cover_both_optima() {
        let frame = compute_frame(&w()).unwrap();
        let set = StaircaseSet::from_frame(&frame, false);
        let cands = enumerate_cases_1_2(&orientations(&set));
        let rects: BTreeSet<_> = cands.iter().filter(|c| c.rect.area() == 30).map(|c| c.rect.clone()).collect();
        assert_eq!(rects.into_iter().collect::<Vec<_>>(), vec![r(-2, -3, 3, 3), r(-2, -3, 4, 2)]);
        assert!(cands.iter().all(|c| c.rect.area() <= 30));
    }

    #[test]
    fn clean_annulus_gives_smax() {
        let inst = Instance::from_coords(&[(0, 0), (2, 2)], &[(1, 5), (1, -4), (6, 1), (-3, 1)]);
        let sol = solve_one(&inst).unwrap();
        assert_eq!(sol.rect(), Some(&r(-3, -4, 6, 5)));
        assert_eq!(solve_all(&inst).unwrap(), vec![r(-3, -4, 6, 5)]);
        let frame = compute_frame(&inst).unwrap();
        let set = StaircaseSet::from_frame(&frame, false);
        let distinct: BTreeSet<_> = enumerate_cases_1_2(&orientations(&set)).into_iter().map(|c| c.rect).collect();
        assert_eq!(distinct.into_iter().collect::<Vec<_>>(), vec![r(-3, -4, 6, 5)]);
    }

    #[test]
    fn single_red_axis_blues() {
        let inst = Instance::from_coords(&[(0, 0)], &[(1, 0), (-1, 0), (0, 1), (0, -1)]);
        let sol = solve_one(&inst).unwrap();
        assert_eq!(sol.rect(), Some(&r(-1, -1, 1, 1)));
        assert_eq!(sol.area, Some(4));
        assert!(sol.best.unwrap().supports.iter().all(|s| matches!(s, Support::Wall(_))));
    }

    #[test]
    fn unbounded_everywhere() {
        let inst = Instance::from_coords(&[(0, 0)], &[(1, 1)]);
        let sol = solve_one(&inst).unwrap();
        assert_eq!(sol.status, Status::Unbounded(Side::ALL.to_vec()));
        assert!(sol.best.is_none() && sol.area.is_none());
        assert_eq!(solve_all(&inst), Err(Error::Unbounded(Side::ALL.to_vec())));
    }

    #[test]
    fn one_blue_per_quadrant_has_pinwheel_candidate() {
        let inst = Instance::from_coords(
            &[(-2, -2), (2, 2)],
            &[(3, 4), (4, -3), (-3, -4), (-4, 3), (0, 6), (0, -6), (6, 0), (-6, 0)],
        );
        let frame = compute_frame(&inst).unwrap();
        assert_eq!(frame.smax().unwrap(), r(-6, -6, 6, 6));
        let set = StaircaseSet::from_frame(&frame, false);
        let cands = enumerate_cases_1_2(&orientations(&set));
        let wheel = cands
            .iter()
            .find(|c| c.case == CaseTag::Pinwheel && c.rect == r(-4, -4, 4, 4))
            .expect("pinwheel candidate");
        assert!(wheel.supports.iter().all(|s| matches!(s, Support::Blue(_))));
        assert_eq!(wheel.support(Side::Right), &Support::Blue(Point::new(4, -3)));
    }

    #[test]
    fn corner_blues_never_support_all_four_sides() {
        // blues at the corners of [-2,2]^2 touch a rectangle only at corners
        let inst = Instance::from_coords(
            &[(-1, -1), (1, 1)],
            &[(2, 2), (-2, 2), (-2, -2), (2, -2), (0, 3), (0, -3), (3, 0), (-3, 0)],
        );
        let sol = solve_one(&inst).unwrap();
        assert_eq!(sol.area, Some(24));
        assert_eq!(solve_all(&inst).unwrap(), vec![r(-3, -2, 3, 2), r(-2, -3, 2, 3)]);
    }

    #[test]
    fn diagonal_windows_without_side_quadrants_span_everything() {
        let inst = Instance::from_coords(
            &[(0, 0), (2, 2)],
            &[(3, 6), (4, 4), (6, 3), (-1, -4), (-2, -2), (-4, -1), (1, 9), (1, -9), (9, 1), (-9, 1)],
        );
        let frame = compute_frame(&inst).unwrap();
        let set = StaircaseSet::from_frame(&frame, false);
        let orients = orientations(&set);
        let win = build_case3_windows(&orients, Diagonal::NeSw);
        let cols = set.get(Quadrant::SW).pairs();
        assert_eq!(win, vec![(0, cols); set.get(Quadrant::NE).pairs()]);
    }

    #[test]
    fn diagonal_windows_empty_when_opposite_quadrant_empty() {
        let inst = Instance::from_coords(&[(0, 0), (2, 2)], &[(3, 6), (4, 4), (1, 9), (1, -9), (9, 1), (-9, 1)]);
        let frame = compute_frame(&inst).unwrap();
        let set = StaircaseSet::from_frame(&frame, false);
        let m = orientations(&set)[0].diagonal_matrix();
        assert_eq!(m.cols(), 1);
        let sol = solve_one(&inst).unwrap();
        assert!(sol.is_bounded());
    }

    #[test]
    fn presorted_matches_unsorted() {
        let mut inst = w();
        inst.blues.push(Point::new(-1, -2));
        inst.blues.push(Point::new(3, -2));
        let a = solve_one(&inst).unwrap();
        assert!(solve_one_presorted(&inst).is_err());
        inst.sort_blues_by_x();
        let b = solve_one_presorted(&inst).unwrap();
        assert_eq!(a.area, b.area);
    }
}
