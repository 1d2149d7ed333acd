//! smin, smax, unbounded detection and the annulus split into quadrants.
//!
//! Each smin side slides outward until it meets a blue point whose projection
//! falls on that side. For a side of positive length the projection must land
//! in the open side; for a degenerate side (a single abscissa or ordinate) it
//! must land on it exactly. A blue point that projects onto a side endpoint of
//! a proper side is a corner obstacle and ends up in a quadrant instead.

use crate::error::{Error, Result};
use crate::geometry::{contains_closed, strictly_inside, AxisRect, Instance, Point, Quadrant, Scalar, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SideLimit<T> {
    Bounded { coord: T, support: Point<T> },
    Unbounded,
}

impl<T: Scalar> SideLimit<T> {
    pub fn coord(&self) -> Option<&T> {
        match self {
            SideLimit::Bounded { coord, .. } => Some(coord),
            SideLimit::Unbounded => None,
        }
    }

    pub fn support(&self) -> Option<&Point<T>> {
        match self {
            SideLimit::Bounded { support, .. } => Some(support),
            SideLimit::Unbounded => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Frame<T> {
    pub smin: AxisRect<T>,
    /// Indexed by `Side as usize` (top, right, bottom, left).
    pub sides: [SideLimit<T>; 4],
    pub forced_blue: usize,
    /// NE, NW, SW, SE; each keeps the input order of the blues.
    pub quadrants: [Vec<Point<T>>; 4],
}

/// Where the blue points of an instance fall relative to a frame.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Census {
    pub forced: usize,
    /// Strip points lying inside the closed smax (the side supports among them).
    pub wall: usize,
    pub quadrant: usize,
    /// Outside the closed smax.
    pub outside: usize,
}

impl<T: Scalar> Frame<T> {
    pub fn side(&self, s: Side) -> &SideLimit<T> {
        &self.sides[s as usize]
    }

    pub fn is_bounded(&self) -> bool {
        self.sides.iter().all(|s| matches!(s, SideLimit::Bounded { .. }))
    }

    pub fn unbounded_sides(&self) -> Vec<Side> {
        Side::ALL
            .into_iter()
            .filter(|s| matches!(self.side(*s), SideLimit::Unbounded))
            .collect()
    }

    pub fn smax(&self) -> Option<AxisRect<T>> {
        Some(AxisRect {
            xmin: self.side(Side::Left).coord()?.clone(),
            ymin: self.side(Side::Bottom).coord()?.clone(),
            xmax: self.side(Side::Right).coord()?.clone(),
            ymax: self.side(Side::Top).coord()?.clone(),
        })
    }

    pub fn quadrant(&self, q: Quadrant) -> &[Point<T>] {
        &self.quadrants[q.index()]
    }

    pub fn annulus_len(&self) -> usize {
        self.quadrants.iter().map(Vec::len).sum()
    }

    /// Classify `blues` against this frame. Unbounded frames count every
    /// non-forced point as outside.
    pub fn census(&self, blues: &[Point<T>]) -> Census {
        let smax = self.smax();
        let mut c = Census::default();
        for p in blues {
            let k = Class::of(&self.smin, p);
            if k.inside {
                c.forced += 1;
            } else if !smax.as_ref().is_some_and(|m| contains_closed(m, p)) {
                c.outside += 1;
            } else if k.strip() {
                c.wall += 1;
            } else {
                c.quadrant += 1;
            }
        }
        c
    }
}

/// Does `v` project onto the side spanning `[lo, hi]`?
pub(crate) fn on_span<T: Scalar>(v: &T, lo: &T, hi: &T) -> bool {
    if lo < hi {
        lo < v && v < hi
    } else {
        v == lo
    }
}

pub fn compute_smin<T: Scalar>(reds: &[Point<T>]) -> Result<AxisRect<T>> {
    let first = reds.first().ok_or(Error::NoRedPoints)?;
    let mut r = AxisRect {
        xmin: first.x.clone(),
        ymin: first.y.clone(),
        xmax: first.x.clone(),
        ymax: first.y.clone(),
    };
    for p in &reds[1..] {
        if p.x < r.xmin {
            r.xmin = p.x.clone();
        }
        if p.x > r.xmax {
            r.xmax = p.x.clone();
        }
        if p.y < r.ymin {
            r.ymin = p.y.clone();
        }
        if p.y > r.ymax {
            r.ymax = p.y.clone();
        }
    }
    Ok(r)
}

/// Position of one point relative to smin, computed once.
struct Class {
    north: bool,
    south: bool,
    east: bool,
    west: bool,
    in_x: bool,
    in_y: bool,
    inside: bool,
}

impl Class {
    fn of<T: Scalar>(smin: &AxisRect<T>, p: &Point<T>) -> Class {
        let north = p.y >= smin.ymax;
        let south = p.y <= smin.ymin;
        let east = p.x >= smin.xmax;
        let west = p.x <= smin.xmin;
        Class {
            north,
            south,
            east,
            west,
            in_x: on_span(&p.x, &smin.xmin, &smin.xmax),
            in_y: on_span(&p.y, &smin.ymin, &smin.ymax),
            inside: !(north || south || east || west),
        }
    }

    fn strip(&self) -> bool {
        (self.in_x && (self.north || self.south)) || (self.in_y && (self.east || self.west))
    }

    /// First match in NE, NW, SW, SE.
    fn quadrant(&self) -> Option<Quadrant> {
        match (self.north, self.south, self.east, self.west) {
            (true, _, true, _) => Some(Quadrant::NE),
            (true, _, _, true) => Some(Quadrant::NW),
            (_, true, _, true) => Some(Quadrant::SW),
            (_, true, true, _) => Some(Quadrant::SE),
            _ => None,
        }
    }
}

/// Nearest blocking point per side seen so far.
struct Slide<'a, T> {
    best: [Option<&'a Point<T>>; 4],
}

impl<'a, T: Scalar> Slide<'a, T> {
    fn new() -> Self {
        Slide { best: [None; 4] }
    }

    fn offer(&mut self, k: &Class, p: &'a Point<T>) {
        let b = &mut self.best;
        if k.in_x {
            if k.north && b[0].is_none_or(|q| p.y < q.y) {
                b[0] = Some(p);
            }
            if k.south && b[2].is_none_or(|q| p.y > q.y) {
                b[2] = Some(p);
            }
        }
        if k.in_y {
            if k.east && b[1].is_none_or(|q| p.x < q.x) {
                b[1] = Some(p);
            }
            if k.west && b[3].is_none_or(|q| p.x > q.x) {
                b[3] = Some(p);
            }
        }
    }

    fn limits(&self) -> [SideLimit<T>; 4] {
        let limit = |s: Side| match self.best[s as usize] {
            None => SideLimit::Unbounded,
            Some(p) => SideLimit::Bounded {
                coord: match s {
                    Side::Top | Side::Bottom => p.y.clone(),
                    Side::Left | Side::Right => p.x.clone(),
                },
                support: p.clone(),
            },
        };
        Side::ALL.map(limit)
    }
}

/// Slide every side of `smin` outward to the nearest blocking blue point.
/// Ties keep the first point in input order.
pub fn compute_smax<T: Scalar>(smin: &AxisRect<T>, blues: &[Point<T>]) -> [SideLimit<T>; 4] {
    let mut slide = Slide::new();
    for p in blues {
        slide.offer(&Class::of(smin, p), p);
    }
    slide.limits()
}

/// Split the blues of a bounded frame. Order inside each quadrant follows the
/// input order, so x-sorted input gives x-sorted quadrants.
pub fn prune<T: Scalar>(smin: &AxisRect<T>, sides: [SideLimit<T>; 4], blues: &[Point<T>]) -> Result<Frame<T>> {
    let mut frame = Frame {
        smin: smin.clone(),
        sides,
        forced_blue: 0,
        quadrants: Default::default(),
    };
    let smax = match frame.smax() {
        Some(r) => r,
        None => return Err(Error::Unbounded(frame.unbounded_sides())),
    };
    for p in blues {
        if strictly_inside(smin, p) {
            frame.forced_blue += 1;
        } else if contains_closed(&smax, p) {
            let k = Class::of(smin, p);
            if !k.strip() {
                let q = k.quadrant().expect("annulus point outside every corner region");
                frame.quadrants[q.index()].push(p.clone());
            }
        }
    }
    Ok(frame)
}

/// smin, smax and, when bounded, the pruned quadrants. An unbounded frame
/// still carries `forced_blue` but no quadrant points.
pub fn compute_frame<T: Scalar>(inst: &Instance<T>) -> Result<Frame<T>> {
    let smin = compute_smin(&inst.reds)?;
    let sides = compute_smax(&smin, &inst.blues);
    if sides.iter().all(|s| matches!(s, SideLimit::Bounded { .. })) {
        return prune(&smin, sides, &inst.blues);
    }
    let forced_blue = inst.blues.iter().filter(|p| strictly_inside(&smin, p)).count();
    Ok(Frame {
        smin,
        sides,
        forced_blue,
        quadrants: Default::default(),
    })
}

/// [`compute_frame`] for blues sorted by x. One pass finds smax and checks
/// the order; the points inside smax then form a contiguous run, located by
/// binary search, and only that run is split into quadrants.
pub fn compute_frame_presorted<T: Scalar>(inst: &Instance<T>) -> Result<Frame<T>> {
    let smin = compute_smin(&inst.reds)?;
    let mut slide = Slide::new();
    let mut forced_blue = 0;
    let mut prev: Option<&T> = None;
    for p in &inst.blues {
        if prev.is_some_and(|x| p.x < *x) {
            return Err(Error::InvalidArgument("blue points are not sorted by x".into()));
        }
        prev = Some(&p.x);
        let k = Class::of(&smin, p);
        if k.inside {
            forced_blue += 1;
        } else {
            slide.offer(&k, p);
        }
    }
    let mut frame = Frame {
        smin,
        sides: slide.limits(),
        forced_blue,
        quadrants: Default::default(),
    };
    if let Some(smax) = frame.smax() {
        let lo = inst.blues.partition_point(|p| p.x < smax.xmin);
        let hi = inst.blues.partition_point(|p| p.x <= smax.xmax);
        for p in &inst.blues[lo..hi] {
            let k = Class::of(&frame.smin, p);
            if !k.inside && !k.strip() && smax.ymin <= p.y && p.y <= smax.ymax {
                let q = k.quadrant().expect("annulus point outside every corner region");
                frame.quadrants[q.index()].push(p.clone());
            }
        }
    }
    Ok(frame)
}
