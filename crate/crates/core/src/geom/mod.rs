//! Geometric primitives: points, tolerances, convex hulls and the
//! per-point convex-position classification every other module checks
//! itself against.

mod classify;
mod hull2;
mod hull3;
mod minnorm;
mod sphere;

pub use classify::{
    classify_points_2d, classify_points_2d_detailed, classify_points_3d,
    classify_points_3d_detailed, origin_interior_2d, origin_interior_3d, Classification,
};
pub use hull2::{convex_hull_2d, Hull2};
pub use hull3::{convex_hull_3d, Facet, Hull3};
pub use minnorm::min_norm_point;
pub(crate) use sphere::GOLDEN_ANGLE;
pub use sphere::{fibonacci_lattice, geodesic_distance};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// A point (or vector) in 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub fn pt2(x: f64, y: f64) -> Point2 {
    Point2 { x, y }
}

pub fn pt3(x: f64, y: f64, z: f64) -> Point3 {
    Point3 { x, y, z }
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn dot(self, o: Point2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product; positive when `o` is
    /// counterclockwise from `self`.
    pub fn cross(self, o: Point2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn dist(self, o: Point2) -> f64 {
        (self - o).norm()
    }

    pub fn normalize(self) -> Point2 {
        let n = self.norm();
        Point2 {
            x: self.x / n,
            y: self.y / n,
        }
    }

    /// Perpendicular vector, rotated +90 degrees.
    pub fn perp(self) -> Point2 {
        Point2 {
            x: -self.y,
            y: self.x,
        }
    }

    pub fn polar_angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3 {
            x: self.y * o.z - self.z * o.y,
            y: self.z * o.x - self.x * o.z,
            z: self.x * o.y - self.y * o.x,
        }
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn dist(self, o: Point3) -> f64 {
        (self - o).norm()
    }

    pub fn normalize(self) -> Point3 {
        let n = self.norm();
        Point3 {
            x: self.x / n,
            y: self.y / n,
            z: self.z / n,
        }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        pt2(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        pt2(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        pt2(self.x * s, self.y * s)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        pt2(-self.x, -self.y)
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, o: Point3) -> Point3 {
        pt3(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        pt3(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Point3 {
    type Output = Point3;
    fn mul(self, s: f64) -> Point3 {
        pt3(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        pt3(-self.x, -self.y, -self.z)
    }
}

/// Relative geometric tolerance with an absolute floor.
///
/// Every sidedness decision is made against `rel_eps * extent` where the
/// extent is the bounding-box diagonal of the input; radii regularly span
/// several orders of magnitude, so a single absolute epsilon would be wrong
/// at one end of the range or the other.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel_eps: f64,
    pub abs_floor: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel_eps: 1e-9,
            abs_floor: 0.0,
        }
    }
}

impl Tolerance {
    pub fn new(rel_eps: f64, abs_floor: f64) -> Result<Self, GeomError> {
        if !(rel_eps > 0.0) || !rel_eps.is_finite() {
            return Err(GeomError::BadTolerance);
        }
        if !(abs_floor >= 0.0) || !abs_floor.is_finite() {
            return Err(GeomError::BadTolerance);
        }
        Ok(Tolerance { rel_eps, abs_floor })
    }

    pub fn with_rel_eps(rel_eps: f64) -> Result<Self, GeomError> {
        Tolerance::new(rel_eps, 0.0)
    }

    /// Absolute distance threshold for an input of the given extent.
    pub fn threshold(&self, extent: f64) -> f64 {
        (self.rel_eps * extent).max(self.abs_floor)
    }
}

/// Bounding-box diagonal of a 2D point set; zero for empty input.
pub fn extent_2d(points: &[Point2]) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let (mut lo, mut hi) = (points[0], points[0]);
    for p in points {
        lo = pt2(lo.x.min(p.x), lo.y.min(p.y));
        hi = pt2(hi.x.max(p.x), hi.y.max(p.y));
    }
    (hi - lo).norm()
}

/// Bounding-box diagonal of a 3D point set; zero for empty input.
pub fn extent_3d(points: &[Point3]) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let (mut lo, mut hi) = (points[0], points[0]);
    for p in points {
        lo = pt3(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z));
        hi = pt3(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z));
    }
    (hi - lo).norm()
}

/// Convex-position class of a single point relative to the whole set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    /// An extreme point: not a convex combination of the other points.
    StrictVertex,
    /// On the hull boundary but expressible as a convex combination of
    /// others (collinear with an edge, interior to a facet, or duplicated).
    BoundaryNonVertex,
    /// Strictly inside the hull.
    Interior,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PointClass::StrictVertex => "StrictVertex",
            PointClass::BoundaryNonVertex => "BoundaryNonVertex",
            PointClass::Interior => "Interior",
        };
        f.write_str(s)
    }
}

/// Errors from the geometric primitives.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("too few points: need at least {needed}, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("degenerate hull: input is collinear/coplanar within tolerance")]
    DegenerateHull,
    #[error("input vector is not unit length within tolerance")]
    NonUnitInput,
    #[error("non-finite coordinate in input")]
    NonFiniteInput,
    #[error("invalid tolerance parameters")]
    BadTolerance,
    #[error("numerical failure: {0}")]
    Numerical(String),
}

/// Groups mutually-near points (within `threshold`). Returns, per point, the
/// size of its group; a value above 1 means the point is duplicated for
/// classification purposes.
pub(crate) fn duplicate_group_sizes_2d(points: &[Point2], threshold: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x));
    group_sizes(
        points.len(),
        &order,
        |a, b| (points[a].x - points[b].x).abs() <= threshold,
        |a, b| points[a].dist(points[b]) <= threshold,
    )
}

pub(crate) fn duplicate_group_sizes_3d(points: &[Point3], threshold: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x.total_cmp(&points[b].x));
    group_sizes(
        points.len(),
        &order,
        |a, b| (points[a].x - points[b].x).abs() <= threshold,
        |a, b| points[a].dist(points[b]) <= threshold,
    )
}

fn group_sizes<FX, FD>(n: usize, order: &[usize], x_near: FX, near: FD) -> Vec<usize>
where
    FX: Fn(usize, usize) -> bool,
    FD: Fn(usize, usize) -> bool,
{
    // Union-find over a sorted sliding window.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for wi in 0..order.len() {
        for wj in (wi + 1)..order.len() {
            if !x_near(order[wi], order[wj]) {
                break;
            }
            if near(order[wi], order[wj]) {
                let (ri, rj) = (find(&mut parent, order[wi]), find(&mut parent, order[wj]));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut counts = vec![0usize; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        counts[r] += 1;
    }
    (0..n).map(|i| counts[find(&mut parent, i)]).collect()
}
