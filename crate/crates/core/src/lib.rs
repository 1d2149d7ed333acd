//! Maximum separating rectangles.
//!
//! Given red and blue points, find an axis-aligned rectangle that holds every
//! red point (boundary included), as few blue points as possible in its open
//! interior, and has the largest area among those.
//!
//! ```
//! use boxsep::{solve_one, Instance, Status};
//!
//! let inst = Instance::<i128>::from_coords(
//!     &[(0, 0), (2, 0), (1, 1), (1, -1)],
//!     &[(1, 3), (1, -3), (4, 0), (-2, 0), (3, 2)],
//! );
//! let sol = solve_one(&inst).unwrap();
//! assert_eq!(sol.status, Status::Bounded);
//! assert_eq!(sol.area, Some(30));
//! ```

pub mod bounding;
pub mod cli;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod matrix_engine;
pub mod oracle;
pub mod solver;
pub mod staircase;

pub use bounding::{compute_frame, compute_smax, compute_smin, prune, Frame, SideLimit};
pub use error::{Error, Result};
pub use geometry::{
    contains_closed, rect_area, strictly_inside, AxisRect, Instance, Point, Quadrant, Scalar, Side,
};
pub use solver::{solve_all, solve_one, solve_one_presorted, Candidate, Solution, Status, Support};
