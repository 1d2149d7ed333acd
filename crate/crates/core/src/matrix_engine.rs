//! Implicit area matrix for diagonal (two-and-two) candidates, its padding,
//! and row maxima.
//!
//! Row `i` stands for a corner `(b_i, d_i)` and column `j` for an opposite
//! corner `(a_j, c_j)`; the entry is `(b_i - a_j) * (d_i - c_j)`. Only a
//! window of columns `[lo_i, hi_i)` is meaningful per row, and both window
//! ends never increase with `i`. Outside the window an entry is padded: zero
//! to the left, `-(j - hi_i + 1)` to the right. When the window is empty the
//! zero side wins.
//!
//! Indices are 0-based and windows half-open.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::error::{Error, Result};
use crate::geometry::Scalar;

/// Padded matrix value; compares numerically with `Zero == Area(0)`.
#[derive(Debug, Clone)]
pub enum Padded<T> {
    /// `-k` for `k >= 1`.
    Negative(usize),
    Zero,
    Area(T),
}

impl<T: Scalar> Padded<T> {
    fn nonneg(&self) -> Option<T> {
        match self {
            Padded::Negative(_) => None,
            Padded::Zero => Some(T::zero()),
            Padded::Area(a) => Some(a.clone()),
        }
    }

    pub fn area(&self) -> Option<&T> {
        match self {
            Padded::Area(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_padding(&self) -> bool {
        !matches!(self, Padded::Area(_))
    }
}

impl<T: Scalar> Ord for Padded<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Padded::Negative(a), Padded::Negative(b)) => b.cmp(a),
            (Padded::Negative(_), _) => Ordering::Less,
            (_, Padded::Negative(_)) => Ordering::Greater,
            _ => self.nonneg().cmp(&other.nonneg()),
        }
    }
}

impl<T: Scalar> PartialOrd for Padded<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> PartialEq for Padded<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for Padded<T> {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Padding {
    /// Zeros left of the window, decreasing negatives right of it.
    Staircase,
    /// Zeros on both sides.
    ZeroBoth,
}

#[derive(Debug)]
pub struct StaircaseMatrix<T> {
    rows: Vec<(T, T)>,
    cols: Vec<(T, T)>,
    windows: Vec<(usize, usize)>,
    evals: AtomicU64,
}

impl<T: Scalar> Clone for StaircaseMatrix<T> {
    fn clone(&self) -> Self {
        StaircaseMatrix {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            windows: self.windows.clone(),
            evals: AtomicU64::new(self.evaluations()),
        }
    }
}

impl<T: Scalar> StaircaseMatrix<T> {
    /// `rows[i] = (b_i, d_i)`, `cols[j] = (a_j, c_j)`, `windows[i] = [lo, hi)`.
    ///
    /// Window ends are clamped to the column count. Errors if the windows are
    /// not monotone or if some entry could be negative (`a_j > b_i` or
    /// `c_j > d_i`).
    pub fn new(rows: Vec<(T, T)>, cols: Vec<(T, T)>, windows: Vec<(usize, usize)>) -> Result<Self> {
        if windows.len() != rows.len() {
            return Err(Error::InvalidArgument(format!(
                "{} windows for {} rows",
                windows.len(),
                rows.len()
            )));
        }
        let n = cols.len();
        let windows: Vec<(usize, usize)> = windows.into_iter().map(|(lo, hi)| (lo.min(n), hi.min(n))).collect();
        if windows.windows(2).any(|w| w[1].0 > w[0].0 || w[1].1 > w[0].1) {
            return Err(Error::InvalidArgument("window ends must be non-increasing".into()));
        }
        let min_b = rows.iter().map(|r| &r.0).min();
        let min_d = rows.iter().map(|r| &r.1).min();
        let max_a = cols.iter().map(|c| &c.0).max();
        let max_c = cols.iter().map(|c| &c.1).max();
        if let (Some(b), Some(d), Some(a), Some(c)) = (min_b, min_d, max_a, max_c) {
            if a > b || c > d {
                return Err(Error::InvalidArgument("column corner beyond a row corner".into()));
            }
        }
        Ok(StaircaseMatrix {
            rows,
            cols,
            windows,
            evals: AtomicU64::new(0),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn window(&self, i: usize) -> (usize, usize) {
        self.windows[i]
    }

    pub fn evaluations(&self) -> u64 {
        self.evals.load(AtomicOrdering::Relaxed)
    }

    pub fn reset_evaluations(&self) {
        self.evals.store(0, AtomicOrdering::Relaxed);
    }

    fn area(&self, i: usize, j: usize) -> T {
        self.evals.fetch_add(1, AtomicOrdering::Relaxed);
        let (b, d) = &self.rows[i];
        let (a, c) = &self.cols[j];
        (b.clone() - a.clone()) * (d.clone() - c.clone())
    }

    fn padded(&self, i: usize, j: usize, padding: Padding) -> Padded<T> {
        let (lo, hi) = self.windows[i];
        if j < lo {
            Padded::Zero
        } else if j >= hi {
            match padding {
                Padding::Staircase => Padded::Negative(j - hi + 1),
                Padding::ZeroBoth => Padded::Zero,
            }
        } else {
            Padded::Area(self.area(i, j))
        }
    }

    pub fn padded_entry(&self, i: usize, j: usize) -> Result<Padded<T>> {
        if i >= self.rows() || j >= self.cols() {
            return Err(Error::IndexOutOfRange {
                row: i,
                col: j,
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(self.padded(i, j, Padding::Staircase))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowMax<T: Scalar> {
    pub col: usize,
    pub value: Padded<T>,
}

/// Row maximum of every row with the rightmost column on ties.
///
/// Rows whose window is empty get their padding maximum. The defined entries
/// form a band whose two edges move left going down; the band is cut into
/// fully defined blocks, each searched with SMAWK. Inside a block the areas
/// satisfy `M(i,j) + M(k,l) >= M(i,l) + M(k,j)` for `i < k`, `j < l`, so the
/// rightmost argmax moves right going down.
pub fn row_maxima<T: Scalar>(m: &StaircaseMatrix<T>) -> Vec<RowMax<T>> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    let mut best: Vec<Option<(T, usize)>> = vec![None; m.rows()];
    let live: Vec<usize> = (0..m.rows()).filter(|&i| m.windows[i].0 < m.windows[i].1).collect();
    band(m, &live, 0, m.cols(), &mut best);
    best.into_iter()
        .enumerate()
        .map(|(i, b)| match b {
            Some((v, col)) => RowMax {
                col,
                value: Padded::Area(v),
            },
            None => {
                let lo = m.windows[i].0;
                debug_assert!(lo >= m.windows[i].1);
                if lo > 0 {
                    RowMax {
                        col: lo - 1,
                        value: Padded::Zero,
                    }
                } else {
                    RowMax {
                        col: 0,
                        value: Padded::Negative(1),
                    }
                }
            }
        })
        .collect()
}

fn lo_of<T>(m: &StaircaseMatrix<T>, i: usize, c0: usize) -> usize {
    m.windows[i].0.max(c0)
}

fn hi_of<T>(m: &StaircaseMatrix<T>, i: usize, c1: usize) -> usize {
    m.windows[i].1.min(c1)
}

type Best<T> = [Option<(T, usize)>];

/// Rows (all live) restricted to columns `[c0, c1)`.
fn band<T: Scalar>(m: &StaircaseMatrix<T>, rows: &[usize], c0: usize, c1: usize, best: &mut Best<T>) {
    if rows.is_empty() || c0 >= c1 {
        return;
    }
    let mid = rows.len() / 2;
    let r = rows[mid];
    let (lo, hi) = (lo_of(m, r, c0), hi_of(m, r, c1));
    if lo < hi {
        lower_left(m, &rows[..=mid], c0, hi, best);
        band(m, &rows[..mid], hi, c1, best);
        upper_right(m, &rows[mid + 1..], lo, c1, best);
        band(m, &rows[mid + 1..], c0, lo, best);
    } else if m.windows[r].1 <= c0 {
        // rows below end even earlier
        band(m, &rows[..mid], c0, c1, best);
    } else {
        // rows above start even later
        band(m, &rows[mid + 1..], c0, c1, best);
    }
}

/// Segments `[max(lo_i, c0), e)`; every row reaches at least `e`.
fn lower_left<T: Scalar>(m: &StaircaseMatrix<T>, rows: &[usize], c0: usize, e: usize, best: &mut Best<T>) {
    let skip = rows.partition_point(|&i| lo_of(m, i, c0) >= e);
    let rows = &rows[skip..];
    if rows.is_empty() {
        return;
    }
    let mid = rows.len() / 2;
    let s = lo_of(m, rows[mid], c0);
    block(m, &rows[mid..], s, e, best);
    lower_left(m, &rows[..mid], s, e, best);
    lower_left(m, &rows[mid + 1..], c0, s, best);
}

/// Segments `[s, min(hi_i, c1))`; every row starts at or before `s`.
fn upper_right<T: Scalar>(m: &StaircaseMatrix<T>, rows: &[usize], s: usize, c1: usize, best: &mut Best<T>) {
    let keep = rows.partition_point(|&i| hi_of(m, i, c1) > s);
    let rows = &rows[..keep];
    if rows.is_empty() {
        return;
    }
    let mid = rows.len() / 2;
    let e = hi_of(m, rows[mid], c1);
    block(m, &rows[..=mid], s, e, best);
    upper_right(m, &rows[..mid], e, c1, best);
    upper_right(m, &rows[mid + 1..], s, e, best);
}

/// Fully defined block `rows x [s, e)`.
fn block<T: Scalar>(m: &StaircaseMatrix<T>, rows: &[usize], s: usize, e: usize, best: &mut Best<T>) {
    if s >= e {
        return;
    }
    let width = e - s;
    let mut found = vec![0usize; rows.len()];
    if rows.len() <= 2 || width <= 2 || rows.len() * width <= 4 * (rows.len() + width) {
        for (k, &i) in rows.iter().enumerate() {
            let mut arg = s;
            let mut top = m.area(i, s);
            for j in s + 1..e {
                let v = m.area(i, j);
                if v >= top {
                    top = v;
                    arg = j;
                }
            }
            offer(best, i, top, arg);
            found[k] = arg;
        }
        return;
    }
    let cols: Vec<usize> = (s..e).collect();
    let key = |i: usize, j: usize| (m.area(i, j), j);
    smawk(rows, &cols, &key, &mut found);
    for (k, &i) in rows.iter().enumerate() {
        let v = m.area(i, found[k]);
        offer(best, i, v, found[k]);
    }
}

fn offer<T: Scalar>(best: &mut Best<T>, i: usize, v: T, col: usize) {
    let better = match &best[i] {
        None => true,
        Some((bv, bc)) => (&v, col) > (bv, *bc),
    };
    if better {
        best[i] = Some((v, col));
    }
}

/// Row maxima of a totally monotone matrix whose argmax is non-decreasing
/// down the rows. Keys must be distinct within a row. `out[k]` receives the
/// column for `rows[k]`.
pub fn smawk<K: Ord>(rows: &[usize], cols: &[usize], key: &dyn Fn(usize, usize) -> K, out: &mut [usize]) {
    if rows.is_empty() {
        return;
    }
    let mut stack: Vec<usize> = Vec::with_capacity(rows.len());
    for &c in cols {
        while let Some(&top) = stack.last() {
            let r = rows[stack.len() - 1];
            if key(r, top) < key(r, c) {
                stack.pop();
            } else {
                break;
            }
        }
        if stack.len() < rows.len() {
            stack.push(c);
        }
    }
    let odd: Vec<usize> = rows.iter().skip(1).step_by(2).copied().collect();
    let mut odd_out = vec![0usize; odd.len()];
    smawk(&odd, &stack, key, &mut odd_out);
    for (k, c) in odd_out.into_iter().enumerate() {
        out[2 * k + 1] = c;
    }
    let mut at = 0;
    for pos in (0..rows.len()).step_by(2) {
        let stop = if pos + 1 < rows.len() { out[pos + 1] } else { *stack.last().unwrap() };
        let r = rows[pos];
        let mut arg = stack[at];
        let mut top = key(r, arg);
        while stack[at] != stop {
            at += 1;
            let k = key(r, stack[at]);
            if k > top {
                top = k;
                arg = stack[at];
            }
        }
        out[pos] = arg;
    }
}

/// Exhaustive row scan over padded entries, rightmost column on ties.
pub fn row_maxima_brute<T: Scalar>(m: &StaircaseMatrix<T>) -> Vec<RowMax<T>> {
    if m.cols() == 0 {
        return Vec::new();
    }
    (0..m.rows())
        .map(|i| {
            let mut best = RowMax {
                col: 0,
                value: m.padded(i, 0, Padding::Staircase),
            };
            for j in 1..m.cols() {
                let v = m.padded(i, j, Padding::Staircase);
                if v >= best.value {
                    best = RowMax { col: j, value: v };
                }
            }
            best
        })
        .collect()
}

/// Checks `M(k,j) <= M(k,l) => M(i,j) <= M(i,l)` for all `i < k`, `j < l`
/// over the padded matrix. Quartic; meant for small matrices.
pub fn verify_total_inverse_monotone<T: Scalar>(m: &StaircaseMatrix<T>) -> bool {
    verify_total_inverse_monotone_with(m, Padding::Staircase)
}

pub fn verify_total_inverse_monotone_with<T: Scalar>(m: &StaircaseMatrix<T>, padding: Padding) -> bool {
    let full: Vec<Vec<Padded<T>>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.padded(i, j, padding)).collect())
        .collect();
    for i in 0..m.rows() {
        for k in i + 1..m.rows() {
            for j in 0..m.cols() {
                for l in j + 1..m.cols() {
                    if full[k][j] <= full[k][l] && full[i][j] > full[i][l] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[(i128, i128)], cols: &[(i128, i128)], windows: &[(usize, usize)]) -> StaircaseMatrix<i128> {
        StaircaseMatrix::new(rows.to_vec(), cols.to_vec(), windows.to_vec()).unwrap()
    }

    #[test]
    fn padding_values() {
        // one row, window [1, 3) in 0-based half-open form
        let m = matrix(&[(10, 10)], &[(0, 0), (1, 2), (2, 1), (3, 3), (4, 4)], &[(1, 3)]);
        assert_eq!(m.padded_entry(0, 0).unwrap(), Padded::Zero);
        assert_eq!(m.padded_entry(0, 4).unwrap(), Padded::Negative(2));
        assert_eq!(m.padded_entry(0, 1).unwrap(), Padded::Area((10 - 1) * (10 - 2)));
        assert!(matches!(m.padded_entry(1, 0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(m.padded_entry(0, 5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn padded_order_is_numeric() {
        let z: Padded<i128> = Padded::Zero;
        assert!(Padded::<i128>::Negative(3) < Padded::Negative(1));
        assert!(Padded::Negative(1) < z);
        assert_eq!(z, Padded::Area(0));
        assert!(Padded::Area(1) > z);
    }

    #[test]
    fn single_entry() {
        let m = matrix(&[(7, 1)], &[(0, 0)], &[(0, 1)]);
        assert_eq!(row_maxima(&m), vec![RowMax { col: 0, value: Padded::Area(7) }]);
    }

    #[test]
    fn all_windows_empty() {
        let m = matrix(&[(5, 5), (5, 5)], &[(0, 0), (1, 1), (2, 2)], &[(2, 1), (0, 0)]);
        let got = row_maxima(&m);
        assert_eq!(got[0], RowMax { col: 1, value: Padded::Zero });
        assert_eq!(got[1], RowMax { col: 0, value: Padded::Negative(1) });
        assert_eq!(got, row_maxima_brute(&m));
        assert_eq!(m.evaluations(), 0);
    }

    #[test]
    fn empty_matrix() {
        let m = matrix(&[], &[], &[]);
        assert!(row_maxima(&m).is_empty());
    }

    #[test]
    fn rejects_bad_windows() {
        let r = StaircaseMatrix::new(vec![(5i128, 5), (5, 5)], vec![(0, 0)], vec![(0, 0), (0, 1)]);
        assert!(r.is_err());
        let r = StaircaseMatrix::new(vec![(0i128, 5)], vec![(1, 0)], vec![(0, 1)]);
        assert!(r.is_err());
    }

    #[test]
    fn argmax_sequence_need_not_be_monotone() {
        let m = matrix(
            &[(5, 20), (9, 13), (20, 3)],
            &[(-20, -2), (-11, -7), (-6, -10), (-4, -11), (-3, -12), (-1, -20)],
            &[(1, 6), (0, 6), (0, 6)],
        );
        let got = row_maxima(&m);
        let cols: Vec<usize> = got.iter().map(|r| r.col).collect();
        assert_eq!(cols, vec![1, 0, 5]);
        assert_eq!(got, row_maxima_brute(&m));
        assert!(!verify_total_inverse_monotone(&m));
    }

    #[test]
    fn zero_both_sides_breaks_monotonicity() {
        // M(0,0) > 0 with the other three corners of the 2x2 padded to zero.
        let m = matrix(&[(4, 4), (4, 4)], &[(0, 0), (1, 1)], &[(0, 1), (0, 0)]);
        assert!(!verify_total_inverse_monotone_with(&m, Padding::ZeroBoth));
    }

    #[test]
    fn one_row_is_vacuous() {
        let m = matrix(&[(9, 9)], &[(0, 1), (1, 0), (2, 5)], &[(0, 3)]);
        assert!(verify_total_inverse_monotone(&m));
    }

    #[test]
    fn smawk_on_inverse_monge_block() {
        let rows = [(10i128, 30i128), (14, 25), (20, 18), (25, 12), (31, 9)];
        let cols = [(-9i128, -1i128), (-7, -3), (-5, -4), (-3, -6), (-2, -8), (0, -9)];
        let m = matrix(&rows, &cols, &[(0, 6); 5]);
        let idx: Vec<usize> = (0..rows.len()).collect();
        let cidx: Vec<usize> = (0..cols.len()).collect();
        let mut out = vec![0; rows.len()];
        let key = |i: usize, j: usize| (m.area(i, j), j);
        smawk(&idx, &cidx, &key, &mut out);
        let brute: Vec<usize> = row_maxima_brute(&m).into_iter().map(|r| r.col).collect();
        assert_eq!(out, brute);
    }
}
