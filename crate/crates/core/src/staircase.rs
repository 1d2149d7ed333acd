//! Dominance staircases of the four annulus quadrants, with smax walls as
//! sentinel entries, and the cross-quadrant pointer tables.
//!
//! Every staircase is stored by non-decreasing x. Entry 0 and the last entry
//! are the sentinels:
//!
//! | quadrant | y along the chain | first sentinel | last sentinel |
//! |----------|-------------------|----------------|---------------|
//! | NE       | decreasing        | (X2, YT)       | (XR, Y2)      |
//! | NW       | increasing        | (XL, Y2)       | (X1, YT)      |
//! | SW       | decreasing        | (XL, Y1)       | (X1, YB)      |
//! | SE       | increasing        | (X2, YB)       | (XR, Y1)      |
//!
//! with smin = [X1, X2] x [Y1, Y2] and smax = [XL, XR] x [YB, YT]. A point is
//! "closer" to smin when it is nearer in both coordinates; only points that no
//! other point (sentinels included) is weakly closer than survive.

use crate::bounding::Frame;
use crate::geometry::{AxisRect, Point, Quadrant, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase<T> {
    pub quadrant: Quadrant,
    /// Sentinels at both ends, real points in between.
    pub entries: Vec<Point<T>>,
}

impl<T: Scalar> Staircase<T> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_sentinel(&self, i: usize) -> bool {
        i == 0 || i + 1 == self.entries.len()
    }

    pub fn prev(&self, i: usize) -> Option<usize> {
        i.checked_sub(1)
    }

    pub fn next(&self, i: usize) -> Option<usize> {
        (i + 1 < self.entries.len()).then_some(i + 1)
    }

    /// Real (non-sentinel) entries.
    pub fn points(&self) -> &[Point<T>] {
        &self.entries[1..self.entries.len() - 1]
    }

    /// Number of adjacent entry pairs.
    pub fn pairs(&self) -> usize {
        self.entries.len() - 1
    }

    /// y decreases along NE and SW chains, increases along NW and SE.
    pub fn y_descending(&self) -> bool {
        matches!(self.quadrant, Quadrant::NE | Quadrant::SW)
    }

    pub fn mirrored(&self, mx: bool, my: bool) -> Staircase<T> {
        let mut entries: Vec<Point<T>> = self.entries.iter().map(|p| p.mirrored(mx, my)).collect();
        if mx {
            entries.reverse();
        }
        Staircase {
            quadrant: self.quadrant.mirrored(mx, my),
            entries,
        }
    }
}

/// First and last sentinel of quadrant `q`.
pub fn sentinels<T: Scalar>(q: Quadrant, smin: &AxisRect<T>, smax: &AxisRect<T>) -> (Point<T>, Point<T>) {
    let p = |x: &T, y: &T| Point::new(x.clone(), y.clone());
    match q {
        Quadrant::NE => (p(&smin.xmax, &smax.ymax), p(&smax.xmax, &smin.ymax)),
        Quadrant::NW => (p(&smax.xmin, &smin.ymax), p(&smin.xmin, &smax.ymax)),
        Quadrant::SW => (p(&smax.xmin, &smin.ymin), p(&smin.xmin, &smax.ymin)),
        Quadrant::SE => (p(&smin.xmax, &smax.ymin), p(&smax.xmax, &smin.ymin)),
    }
}

/// Build the staircase of quadrant `q` from its pruned points.
///
/// With `presorted` the points must already be ordered by x (any order among
/// equal x); the sort is then skipped.
pub fn build_staircase<T: Scalar>(
    points: &[Point<T>],
    q: Quadrant,
    smin: &AxisRect<T>,
    smax: &AxisRect<T>,
    presorted: bool,
) -> Staircase<T> {
    // Work in the reflected frame where q becomes NE and closer means smaller.
    let (sx, sy) = q.signs();
    let nmin = smin.mirrored(sx, sy);
    let nmax = smax.mirrored(sx, sy);
    let mut pts: Vec<Point<T>> = points.iter().map(|p| p.mirrored(sx, sy)).collect();
    if !presorted {
        pts.sort_unstable_by(|a, b| a.x.cmp(&b.x));
    } else if sx {
        pts.reverse();
    }
    debug_assert!(pts.windows(2).all(|w| w[0].x <= w[1].x));

    let mut chain: Vec<Point<T>> = Vec::new();
    for p in pts {
        if p.x >= nmax.xmax || p.y >= nmax.ymax {
            continue;
        }
        match chain.last_mut() {
            Some(last) if p.y < last.y => {
                if p.x == last.x {
                    *last = p;
                } else {
                    chain.push(p);
                }
            }
            Some(_) => {}
            None => chain.push(p),
        }
    }

    let mut entries = Vec::with_capacity(chain.len() + 2);
    entries.push(Point::new(nmin.xmax.clone(), nmax.ymax.clone()));
    entries.extend(chain);
    entries.push(Point::new(nmax.xmax.clone(), nmin.ymax.clone()));
    Staircase {
        quadrant: Quadrant::NE,
        entries,
    }
    .mirrored(sx, sy)
}

/// The four staircases of one frame together with smin and smax.
#[derive(Debug, Clone)]
pub struct StaircaseSet<T> {
    pub smin: AxisRect<T>,
    pub smax: AxisRect<T>,
    /// Indexed by `Quadrant::index`.
    pub stairs: [Staircase<T>; 4],
}

impl<T: Scalar> StaircaseSet<T> {
    /// Panics on an unbounded frame.
    pub fn from_frame(frame: &Frame<T>, presorted: bool) -> Self {
        let smax = frame.smax().expect("staircases need a bounded frame");
        let build = |q: Quadrant| build_staircase(frame.quadrant(q), q, &frame.smin, &smax, presorted);
        StaircaseSet {
            stairs: Quadrant::ALL.map(build),
            smin: frame.smin.clone(),
            smax,
        }
    }

    pub fn get(&self, q: Quadrant) -> &Staircase<T> {
        &self.stairs[q.index()]
    }

    pub fn total_len(&self) -> usize {
        self.stairs.iter().map(Staircase::len).sum()
    }

    /// The same configuration reflected in x and/or y.
    pub fn mirrored(&self, mx: bool, my: bool) -> Self {
        let mut stairs = self.stairs.clone();
        for st in &self.stairs {
            let m = st.mirrored(mx, my);
            let at = m.quadrant.index();
            stairs[at] = m;
        }
        StaircaseSet {
            smin: self.smin.mirrored(mx, my),
            smax: self.smax.mirrored(mx, my),
            stairs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Highest entry strictly below.
    Below,
    /// Rightmost entry strictly to the left.
    Left,
    /// Lowest entry strictly above.
    Above,
    /// Leftmost entry strictly to the right.
    Right,
}

impl Relation {
    pub const ALL: [Relation; 4] = [Relation::Below, Relation::Left, Relation::Above, Relation::Right];
}

const NONE: u32 = u32::MAX;

/// `below_q(p)`, `left_q(p)`, `above_q(p)`, `right_q(p)` for every entry `p`
/// of every staircase and every target quadrant `q`.
///
/// Ties between target entries with the same coordinate (a real point level
/// with a sentinel) resolve to the entry adjacent, in staircase order, to the
/// entries that do not qualify.
#[derive(Debug, Clone)]
pub struct PointerTables {
    // [source][target][relation] -> per source entry
    tables: Vec<Vec<u32>>,
}

impl PointerTables {
    fn slot(src: Quadrant, dst: Quadrant, rel: Relation) -> usize {
        (src.index() * 4 + dst.index()) * 4 + rel as usize
    }

    pub fn get(&self, src: Quadrant, i: usize, dst: Quadrant, rel: Relation) -> Option<usize> {
        let v = self.tables[Self::slot(src, dst, rel)][i];
        (v != NONE).then_some(v as usize)
    }
}

/// For queries in ascending order, how many targets (ascending) are below
/// each query, strictly (`<`) or weakly (`<=`).
fn rank_scan<T: Ord>(queries: &[&T], targets: &[&T], weak: bool) -> Vec<usize> {
    let mut out = Vec::with_capacity(queries.len());
    let mut k = 0;
    for q in queries {
        while k < targets.len() && (targets[k] < *q || (weak && targets[k] == *q)) {
            k += 1;
        }
        out.push(k);
    }
    out
}

fn to_u32(v: Option<usize>) -> u32 {
    v.map_or(NONE, |i| u32::try_from(i).expect("staircase too long"))
}

fn relation_table<T: Scalar>(src: &Staircase<T>, dst: &Staircase<T>, rel: Relation) -> Vec<u32> {
    let n = dst.len();
    match rel {
        Relation::Left | Relation::Right => {
            let qs: Vec<&T> = src.entries.iter().map(|p| &p.x).collect();
            let ts: Vec<&T> = dst.entries.iter().map(|p| &p.x).collect();
            let weak = rel == Relation::Right;
            rank_scan(&qs, &ts, weak)
                .into_iter()
                .map(|k| to_u32(if weak { (k < n).then_some(k) } else { k.checked_sub(1) }))
                .collect()
        }
        Relation::Below | Relation::Above => {
            // visit both sequences in ascending y
            let src_order: Vec<usize> = if src.y_descending() {
                (0..src.len()).rev().collect()
            } else {
                (0..src.len()).collect()
            };
            let dst_order: Vec<usize> = if dst.y_descending() {
                (0..n).rev().collect()
            } else {
                (0..n).collect()
            };
            let qs: Vec<&T> = src_order.iter().map(|&i| &src.entries[i].y).collect();
            let ts: Vec<&T> = dst_order.iter().map(|&i| &dst.entries[i].y).collect();
            let weak = rel == Relation::Above;
            let ranks = rank_scan(&qs, &ts, weak);
            let mut out = vec![NONE; src.len()];
            for (pos, k) in ranks.into_iter().enumerate() {
                // Below: the k-th smallest y is dst_order[k - 1]. Above: dst_order[k].
                let hit = if weak { (k < n).then(|| dst_order[k]) } else { k.checked_sub(1).map(|k| dst_order[k]) };
                out[src_order[pos]] = to_u32(hit);
            }
            out
        }
    }
}

pub fn precompute_pointers<T: Scalar>(set: &StaircaseSet<T>) -> PointerTables {
    let mut tables = vec![Vec::new(); 64];
    for src in Quadrant::ALL {
        for dst in Quadrant::ALL {
            for rel in Relation::ALL {
                tables[PointerTables::slot(src, dst, rel)] = relation_table(set.get(src), set.get(dst), rel);
            }
        }
    }
    PointerTables { tables }
}
