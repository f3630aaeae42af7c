//! 2D convex hull via Andrew's monotone chain.
//!
//! The boundary cycle keeps only tolerance-strict corners: a point lying on
//! an edge (within `rel_eps * extent` of the line through its neighbors) is
//! dropped from the cycle, so `vertex_indices` is exactly the extreme-point
//! frame of the input.

use super::{extent_2d, GeomError, Point2, Tolerance};

/// Counterclockwise boundary description of a 2D convex hull.
#[derive(Debug, Clone)]
pub struct Hull2 {
    /// Indices of the strict hull vertices, in counterclockwise cycle order.
    pub cycle: Vec<usize>,
    /// Bounding-box diagonal of the input, the scale all thresholds used.
    pub extent: f64,
}

impl Hull2 {
    pub fn vertex_indices(&self) -> &[usize] {
        &self.cycle
    }

    /// Signed distance of `p` from the hull boundary: positive inside,
    /// negative outside, measured as the minimum left-distance over edges.
    pub fn signed_inner_distance(&self, points: &[Point2], p: Point2) -> f64 {
        let mut best = f64::INFINITY;
        for e in 0..self.cycle.len() {
            let a = points[self.cycle[e]];
            let b = points[self.cycle[(e + 1) % self.cycle.len()]];
            let d = b - a;
            let len = d.norm();
            if len == 0.0 {
                continue;
            }
            best = best.min(d.cross(p - a) / len);
        }
        best
    }
}

/// Computes the convex hull of at least three non-collinear points.
pub fn convex_hull_2d(points: &[Point2], tol: &Tolerance) -> Result<Hull2, GeomError> {
    if points.len() < 3 {
        return Err(GeomError::TooFewPoints {
            needed: 3,
            got: points.len(),
        });
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::NonFiniteInput);
    }
    let extent = extent_2d(points);
    let thr = tol.threshold(extent);

    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a]
            .x
            .total_cmp(&points[b].x)
            .then(points[a].y.total_cmp(&points[b].y))
    });

    // A candidate `a` survives only if the corner o→a→b turns strictly left
    // by more than the tolerance band around collinearity.
    let keeps = |o: usize, a: usize, b: usize| -> bool {
        let u = points[a] - points[o];
        let v = points[b] - points[o];
        u.cross(v) > thr * (points[b] - points[o]).norm()
    };

    let mut lower: Vec<usize> = Vec::new();
    for &i in &order {
        while lower.len() >= 2 && !keeps(lower[lower.len() - 2], lower[lower.len() - 1], i) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in order.iter().rev() {
        while upper.len() >= 2 && !keeps(upper[upper.len() - 2], upper[upper.len() - 1], i) {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    let mut cycle = lower;
    cycle.extend_from_slice(&upper);

    if cycle.len() < 3 {
        return Err(GeomError::DegenerateHull);
    }

    // Canonical start for determinism: rotate so the smallest index leads.
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    cycle.rotate_left(start);

    Ok(Hull2 { cycle, extent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt2;

    #[test]
    fn triangle_keeps_all_three() {
        let pts = [pt2(0.0, 0.0), pt2(1.0, 0.0), pt2(0.0, 1.0)];
        let hull = convex_hull_2d(&pts, &Tolerance::default()).unwrap();
        let mut idx = hull.cycle.clone();
        idx.sort();
        assert_eq!(idx, vec![0, 1, 2]);
    }

    #[test]
    fn on_edge_point_is_excluded() {
        let pts = [pt2(0.0, 0.0), pt2(2.0, 0.0), pt2(1.0, 0.0), pt2(1.0, 1.0)];
        let hull = convex_hull_2d(&pts, &Tolerance::default()).unwrap();
        let mut idx = hull.cycle.clone();
        idx.sort();
        assert_eq!(idx, vec![0, 1, 3]);
    }

    #[test]
    fn collinear_input_is_degenerate() {
        let pts = [pt2(0.0, 0.0), pt2(1.0, 1.0), pt2(2.0, 2.0), pt2(3.0, 3.0)];
        assert_eq!(
            convex_hull_2d(&pts, &Tolerance::default()).unwrap_err(),
            GeomError::DegenerateHull
        );
    }

    #[test]
    fn cycle_is_counterclockwise() {
        let pts = [pt2(1.0, 1.0), pt2(-1.0, 1.0), pt2(-1.0, -1.0), pt2(1.0, -1.0)];
        let hull = convex_hull_2d(&pts, &Tolerance::default()).unwrap();
        let mut area = 0.0;
        for e in 0..hull.cycle.len() {
            let a = pts[hull.cycle[e]];
            let b = pts[hull.cycle[(e + 1) % hull.cycle.len()]];
            area += a.cross(b);
        }
        assert!(area > 0.0);
    }
}
