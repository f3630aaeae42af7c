//! Per-point convex-position classification.
//!
//! A point is a `StrictVertex` exactly when it is not a convex combination
//! of the other points (within tolerance). Duplicated points are never
//! strict. Flat inputs are classified within their affine hull and flagged
//! degenerate.

use super::{
    duplicate_group_sizes_2d, duplicate_group_sizes_3d, extent_2d, extent_3d, pt2,
    convex_hull_2d, convex_hull_3d, GeomError, Hull2, Hull3, Point2, Point3, PointClass,
    Tolerance,
};

/// Classification of every input point, with a degeneracy flag for flat
/// inputs (classified within their affine hull).
#[derive(Debug, Clone)]
pub struct Classification {
    pub classes: Vec<PointClass>,
    pub degenerate: bool,
}

impl Classification {
    pub fn strict_count(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| **c == PointClass::StrictVertex)
            .count()
    }

    pub fn has_interior(&self) -> bool {
        self.classes.iter().any(|c| *c == PointClass::Interior)
    }

    pub fn all_strict(&self) -> bool {
        self.classes.iter().all(|c| *c == PointClass::StrictVertex)
    }
}

pub fn classify_points_2d(points: &[Point2], tol: &Tolerance) -> Result<Vec<PointClass>, GeomError> {
    classify_points_2d_detailed(points, tol).map(|c| c.classes)
}

pub fn classify_points_3d(points: &[Point3], tol: &Tolerance) -> Result<Vec<PointClass>, GeomError> {
    classify_points_3d_detailed(points, tol).map(|c| c.classes)
}

pub fn classify_points_2d_detailed(
    points: &[Point2],
    tol: &Tolerance,
) -> Result<Classification, GeomError> {
    if points.len() < 3 {
        return Err(GeomError::TooFewPoints {
            needed: 3,
            got: points.len(),
        });
    }
    match convex_hull_2d(points, tol) {
        Ok(hull) => {
            let thr = tol.threshold(hull.extent);
            let dup = duplicate_group_sizes_2d(points, thr);
            let on_cycle = {
                let mut v = vec![false; points.len()];
                for &i in &hull.cycle {
                    v[i] = true;
                }
                v
            };
            let classes = points
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    if on_cycle[i] && dup[i] == 1 {
                        PointClass::StrictVertex
                    } else if hull.signed_inner_distance(points, p) > thr {
                        PointClass::Interior
                    } else {
                        PointClass::BoundaryNonVertex
                    }
                })
                .collect();
            Ok(Classification {
                classes,
                degenerate: false,
            })
        }
        Err(GeomError::DegenerateHull) => classify_collinear(points, tol),
        Err(e) => Err(e),
    }
}

pub fn classify_points_3d_detailed(
    points: &[Point3],
    tol: &Tolerance,
) -> Result<Classification, GeomError> {
    if points.len() < 4 {
        return Err(GeomError::TooFewPoints {
            needed: 4,
            got: points.len(),
        });
    }
    match convex_hull_3d(points, tol) {
        Ok(hull) => {
            let thr = tol.threshold(hull.extent);
            let dup = duplicate_group_sizes_3d(points, thr);
            let is_vertex = {
                let mut v = vec![false; points.len()];
                for &i in &hull.vertex_indices {
                    v[i] = true;
                }
                v
            };
            let classes = points
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    if is_vertex[i] && dup[i] == 1 {
                        PointClass::StrictVertex
                    } else if hull.max_signed_distance(p) < -thr {
                        PointClass::Interior
                    } else {
                        PointClass::BoundaryNonVertex
                    }
                })
                .collect();
            Ok(Classification {
                classes,
                degenerate: false,
            })
        }
        Err(GeomError::DegenerateHull) => classify_coplanar(points, tol),
        Err(e) => Err(e),
    }
}

/// Collinear 2D input: within the affine hull (a line) the two extreme
/// points are vertices and everything else is interior to the segment.
fn classify_collinear(points: &[Point2], tol: &Tolerance) -> Result<Classification, GeomError> {
    let extent = extent_2d(points);
    let thr = tol.threshold(extent);
    if extent <= thr {
        // All points coincide; nothing is extreme.
        return Ok(Classification {
            classes: vec![PointClass::BoundaryNonVertex; points.len()],
            degenerate: true,
        });
    }
    let a = (0..points.len())
        .max_by(|&i, &j| {
            points[i]
                .dist(points[0])
                .total_cmp(&points[j].dist(points[0]))
        })
        .unwrap();
    let b = (0..points.len())
        .max_by(|&i, &j| {
            points[i]
                .dist(points[a])
                .total_cmp(&points[j].dist(points[a]))
        })
        .unwrap();
    let dir = (points[b] - points[a]).normalize();
    let ts: Vec<f64> = points.iter().map(|&p| (p - points[a]).dot(dir)).collect();
    let (tmin, tmax) = ts
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &t| {
            (lo.min(t), hi.max(t))
        });
    let dup = duplicate_group_sizes_2d(points, thr);
    let classes = ts
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let at_end = (t - tmin).abs() <= thr || (tmax - t).abs() <= thr;
            if at_end && dup[i] == 1 {
                PointClass::StrictVertex
            } else if at_end {
                PointClass::BoundaryNonVertex
            } else {
                PointClass::Interior
            }
        })
        .collect();
    Ok(Classification {
        classes,
        degenerate: true,
    })
}

/// Coplanar 3D input: project onto the carrying plane and classify there.
fn classify_coplanar(points: &[Point3], tol: &Tolerance) -> Result<Classification, GeomError> {
    let extent = extent_3d(points);
    let thr = tol.threshold(extent);
    if extent <= thr {
        return Ok(Classification {
            classes: vec![PointClass::BoundaryNonVertex; points.len()],
            degenerate: true,
        });
    }
    let a = (0..points.len())
        .max_by(|&i, &j| {
            points[i]
                .dist(points[0])
                .total_cmp(&points[j].dist(points[0]))
        })
        .unwrap();
    let b = (0..points.len())
        .max_by(|&i, &j| {
            points[i]
                .dist(points[a])
                .total_cmp(&points[j].dist(points[a]))
        })
        .unwrap();
    let u = (points[b] - points[a]).normalize();
    let c = (0..points.len())
        .max_by(|&i, &j| {
            let di = {
                let v = points[i] - points[a];
                (v - u * v.dot(u)).norm()
            };
            let dj = {
                let v = points[j] - points[a];
                (v - u * v.dot(u)).norm()
            };
            di.total_cmp(&dj)
        })
        .unwrap();
    let n = (points[b] - points[a]).cross(points[c] - points[a]);
    if n.norm() <= 1e-300 {
        // Collinear in 3D; reuse the 2D line path on an arbitrary projection.
        let proj: Vec<Point2> = points
            .iter()
            .map(|&p| pt2((p - points[a]).dot(u), 0.0))
            .collect();
        return classify_collinear(&proj, tol).map(|mut cl| {
            cl.degenerate = true;
            cl
        });
    }
    let n = n.normalize();
    let w = n.cross(u);
    let proj: Vec<Point2> = points
        .iter()
        .map(|&p| pt2((p - points[a]).dot(u), (p - points[a]).dot(w)))
        .collect();
    classify_points_2d_detailed(&proj, tol).map(|mut cl| {
        cl.degenerate = true;
        cl
    })
}

/// True when the origin is strictly inside the hull, by more than the
/// tolerance-scaled margin. Degenerate hulls never contain the origin.
pub fn origin_interior_2d(hull: &Hull2, points: &[Point2], tol: &Tolerance) -> bool {
    let thr = tol.threshold(hull.extent);
    hull.signed_inner_distance(points, Point2::ORIGIN) > thr
}

pub fn origin_interior_3d(hull: &Hull3, tol: &Tolerance) -> bool {
    let thr = tol.threshold(hull.extent);
    -hull.max_signed_distance(Point3::ORIGIN) > thr
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{pt2, pt3};

    #[test]
    fn interior_point_of_triangle() {
        let pts = [pt2(0.0, 0.0), pt2(1.0, 0.0), pt2(0.0, 1.0), pt2(0.25, 0.25)];
        let classes = classify_points_2d(&pts, &Tolerance::default()).unwrap();
        assert_eq!(
            classes,
            vec![
                PointClass::StrictVertex,
                PointClass::StrictVertex,
                PointClass::StrictVertex,
                PointClass::Interior
            ]
        );
    }

    #[test]
    fn edge_midpoint_is_boundary() {
        let pts = [pt2(0.0, 0.0), pt2(2.0, 0.0), pt2(1.0, 0.0), pt2(1.0, 1.0)];
        let classes = classify_points_2d(&pts, &Tolerance::default()).unwrap();
        assert_eq!(classes[2], PointClass::BoundaryNonVertex);
        assert_eq!(classes[0], PointClass::StrictVertex);
    }

    #[test]
    fn duplicates_are_never_strict() {
        let pts = [pt2(0.0, 0.0), pt2(1.0, 0.0), pt2(0.0, 1.0), pt2(1.0, 0.0)];
        let classes = classify_points_2d(&pts, &Tolerance::default()).unwrap();
        assert_eq!(classes[1], PointClass::BoundaryNonVertex);
        assert_eq!(classes[3], PointClass::BoundaryNonVertex);
        assert_eq!(classes[0], PointClass::StrictVertex);
    }

    #[test]
    fn collinear_run_on_3d_edge_is_boundary() {
        let pts = [
            pt3(0.0, 0.0, 2.0),
            pt3(0.0, 0.0, -2.0),
            pt3(2.0, 0.0, 0.0),
            pt3(-1.0, 1.0, 0.0),
            pt3(-1.0, -1.0, 0.0),
            pt3(0.0, 0.0, 0.5),
        ];
        let classes = classify_points_3d(&pts, &Tolerance::default()).unwrap();
        assert_eq!(classes[5], PointClass::Interior);
        let pts_edge = [
            pt3(0.0, 0.0, 2.0),
            pt3(1.0, 0.0, 1.0),
            pt3(2.0, 0.0, 0.0),
            pt3(-1.0, 1.0, 0.0),
            pt3(-1.0, -1.0, 0.0),
            pt3(0.0, 0.0, -2.0),
        ];
        // Index 1 sits on the straight edge from index 0 to index 2.
        let classes = classify_points_3d(&pts_edge, &Tolerance::default()).unwrap();
        assert_eq!(classes[1], PointClass::BoundaryNonVertex);
        assert_eq!(classes[0], PointClass::StrictVertex);
        assert_eq!(classes[2], PointClass::StrictVertex);
    }

    #[test]
    fn origin_containment_cases() {
        let tol = Tolerance::default();
        let square = [pt2(1.0, 1.0), pt2(-1.0, 1.0), pt2(-1.0, -1.0), pt2(1.0, -1.0)];
        let hull = convex_hull_2d(&square, &tol).unwrap();
        assert!(origin_interior_2d(&hull, &square, &tol));

        let off = [pt2(1.0, 0.0), pt2(2.0, 0.0), pt2(1.0, 1.0)];
        let hull = convex_hull_2d(&off, &tol).unwrap();
        assert!(!origin_interior_2d(&hull, &off, &tol));

        let touching = [pt2(0.0, -1.0), pt2(0.0, 1.0), pt2(1.0, 0.0)];
        let hull = convex_hull_2d(&touching, &tol).unwrap();
        assert!(!origin_interior_2d(&hull, &touching, &tol));
    }

    #[test]
    fn coplanar_input_classified_in_plane_and_flagged() {
        let pts = [
            pt3(0.0, 0.0, 1.0),
            pt3(1.0, 0.0, 1.0),
            pt3(0.0, 1.0, 1.0),
            pt3(0.2, 0.2, 1.0),
        ];
        let cl = classify_points_3d_detailed(&pts, &Tolerance::default()).unwrap();
        assert!(cl.degenerate);
        assert_eq!(cl.classes[3], PointClass::Interior);
    }
}
