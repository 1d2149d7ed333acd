//! Exact points, rectangles and the two containment predicates.
//!
//! Reds are contained in the closed rectangle, blues only count when they sit
//! in the open interior. Nothing here takes a tolerance.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{ToPrimitive, Zero};

/// An exact, totally ordered coordinate type.
///
/// Implemented for every type with exact ring arithmetic, e.g. `i128` and
/// `num_rational::BigRational`.
pub trait Scalar:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Zero
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    /// Reflect through the axes selected by `mx` / `my`.
    pub fn mirrored(&self, mx: bool, my: bool) -> Self {
        Point {
            x: if mx { -self.x.clone() } else { self.x.clone() },
            y: if my { -self.y.clone() } else { self.y.clone() },
        }
    }
}

impl<T: Display> Display for Point<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Closed axis-aligned rectangle. Zero width or height is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisRect<T> {
    pub xmin: T,
    pub ymin: T,
    pub xmax: T,
    pub ymax: T,
}

impl<T: Scalar> AxisRect<T> {
    /// Panics if the edges are out of order.
    pub fn new(xmin: T, ymin: T, xmax: T, ymax: T) -> Self {
        assert!(xmin <= xmax && ymin <= ymax, "inverted rectangle");
        AxisRect {
            xmin,
            ymin,
            xmax,
            ymax,
        }
    }

    pub fn area(&self) -> T {
        rect_area(self)
    }

    pub fn contains_rect(&self, other: &AxisRect<T>) -> bool {
        self.xmin <= other.xmin
            && other.xmax <= self.xmax
            && self.ymin <= other.ymin
            && other.ymax <= self.ymax
    }

    pub fn mirrored(&self, mx: bool, my: bool) -> Self {
        let (xmin, xmax) = if mx {
            (-self.xmax.clone(), -self.xmin.clone())
        } else {
            (self.xmin.clone(), self.xmax.clone())
        };
        let (ymin, ymax) = if my {
            (-self.ymax.clone(), -self.ymin.clone())
        } else {
            (self.ymin.clone(), self.ymax.clone())
        };
        AxisRect {
            xmin,
            ymin,
            xmax,
            ymax,
        }
    }

    pub fn edge(&self, side: Side) -> &T {
        match side {
            Side::Top => &self.ymax,
            Side::Right => &self.xmax,
            Side::Bottom => &self.ymin,
            Side::Left => &self.xmin,
        }
    }
}

impl<T: Display> Display for AxisRect<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}, {}] x [{}, {}]",
            self.xmin, self.xmax, self.ymin, self.ymax
        )
    }
}

pub fn rect_area<T: Scalar>(r: &AxisRect<T>) -> T {
    (r.xmax.clone() - r.xmin.clone()) * (r.ymax.clone() - r.ymin.clone())
}

pub fn contains_closed<T: Scalar>(r: &AxisRect<T>, p: &Point<T>) -> bool {
    r.xmin <= p.x && p.x <= r.xmax && r.ymin <= p.y && p.y <= r.ymax
}

pub fn strictly_inside<T: Scalar>(r: &AxisRect<T>, p: &Point<T>) -> bool {
    r.xmin < p.x && p.x < r.xmax && r.ymin < p.y && p.y < r.ymax
}

/// Red and blue point sets. `reds` must be non-empty for any solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance<T> {
    pub reds: Vec<Point<T>>,
    pub blues: Vec<Point<T>>,
}

impl<T: Scalar> Instance<T> {
    pub fn new(reds: Vec<Point<T>>, blues: Vec<Point<T>>) -> Self {
        Instance { reds, blues }
    }

    pub fn from_coords(reds: &[(T, T)], blues: &[(T, T)]) -> Self {
        let pts = |v: &[(T, T)]| {
            v.iter()
                .map(|(x, y)| Point::new(x.clone(), y.clone()))
                .collect()
        };
        Instance {
            reds: pts(reds),
            blues: pts(blues),
        }
    }

    /// Sort blues by x (stable), the order the presorted solver path expects.
    pub fn sort_blues_by_x(&mut self) {
        self.blues.sort_by(|a, b| a.x.cmp(&b.x));
    }

    pub fn blues_sorted_by_x(&self) -> bool {
        self.blues.windows(2).all(|w| w[0].x <= w[1].x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Top,
    Right,
    Bottom,
    Left,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Right, Side::Bottom, Side::Left];

    pub fn name(self) -> &'static str {
        match self {
            Side::Top => "top",
            Side::Right => "right",
            Side::Bottom => "bottom",
            Side::Left => "left",
        }
    }

    /// The side this one becomes after reflecting the plane.
    pub fn mirrored(self, mx: bool, my: bool) -> Side {
        match self {
            Side::Left if mx => Side::Right,
            Side::Right if mx => Side::Left,
            Side::Top if my => Side::Bottom,
            Side::Bottom if my => Side::Top,
            s => s,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    NE,
    NW,
    SW,
    SE,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::NE, Quadrant::NW, Quadrant::SW, Quadrant::SE];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Quadrant::NE => "NE",
            Quadrant::NW => "NW",
            Quadrant::SW => "SW",
            Quadrant::SE => "SE",
        }
    }

    /// Signs (sx, sy) that map this quadrant onto NE.
    pub fn signs(self) -> (bool, bool) {
        match self {
            Quadrant::NE => (false, false),
            Quadrant::NW => (true, false),
            Quadrant::SW => (true, true),
            Quadrant::SE => (false, true),
        }
    }

    pub fn mirrored(self, mx: bool, my: bool) -> Quadrant {
        let (sx, sy) = self.signs();
        match (sx ^ mx, sy ^ my) {
            (false, false) => Quadrant::NE,
            (true, false) => Quadrant::NW,
            (true, true) => Quadrant::SW,
            (false, true) => Quadrant::SE,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(xmin: i128, ymin: i128, xmax: i128, ymax: i128) -> AxisRect<i128> {
        AxisRect::new(xmin, ymin, xmax, ymax)
    }

    #[test]
    fn area_examples() {
        assert_eq!(rect_area(&r(0, -1, 2, 1)), 4);
        assert_eq!(rect_area(&r(0, 0, 0, 5)), 0);
        assert_eq!(rect_area(&r(-2, -3, 4, 3)), 36);
    }

    #[test]
    fn closed_containment() {
        let sq = r(0, 0, 2, 2);
        assert!(contains_closed(&sq, &Point::new(2, 1)));
        assert!(!contains_closed(&sq, &Point::new(3, 1)));
        assert!(contains_closed(&sq, &Point::new(1, 1)));
    }

    #[test]
    fn open_interior() {
        let sq = r(0, 0, 2, 2);
        assert!(!strictly_inside(&sq, &Point::new(2, 1)));
        assert!(strictly_inside(&sq, &Point::new(1, 1)));
        assert!(!strictly_inside(&r(0, 0, 0, 2), &Point::new(0, 1)));
    }

    #[test]
    fn mirroring_is_an_involution() {
        let a = r(-1, 2, 5, 7);
        for mx in [false, true] {
            for my in [false, true] {
                assert_eq!(a.mirrored(mx, my).mirrored(mx, my), a);
                assert_eq!(a.mirrored(mx, my).area(), a.area());
            }
        }
        assert_eq!(a.mirrored(true, false), r(-5, 2, 1, 7));
    }

    #[test]
    fn quadrant_mirror_table() {
        assert_eq!(Quadrant::NE.mirrored(true, false), Quadrant::NW);
        assert_eq!(Quadrant::NE.mirrored(true, true), Quadrant::SW);
        assert_eq!(Quadrant::SE.mirrored(false, true), Quadrant::NE);
        assert_eq!(Side::Left.mirrored(true, true), Side::Right);
        assert_eq!(Side::Top.mirrored(true, false), Side::Top);
    }

    #[test]
    fn rational_coordinates() {
        use num_rational::BigRational;
        let h = BigRational::new(1.into(), 2.into());
        let sq = AxisRect::new(-h.clone(), -h.clone(), h.clone(), h.clone());
        assert_eq!(sq.area(), BigRational::from_integer(1.into()));
        assert!(strictly_inside(&sq, &Point::new(BigRational::zero(), BigRational::zero())));
    }
}
