//! Spherical metric and deterministic sphere sampling.

use super::{GeomError, Point3, Tolerance};

/// Golden angle in radians, `pi * (3 - sqrt(5))`.
pub(crate) const GOLDEN_ANGLE: f64 = 2.399963229728653;

/// Geodesic distance between two unit vectors, `arccos(p . q)`, in [0, pi].
///
/// The dot product is clamped to [-1, 1] so nearly-parallel unit vectors do
/// not produce NaN.
pub fn geodesic_distance(p: Point3, q: Point3, tol: &Tolerance) -> Result<f64, GeomError> {
    if !p.is_finite() || !q.is_finite() {
        return Err(GeomError::NonFiniteInput);
    }
    let thr = tol.threshold(1.0);
    if (p.norm() - 1.0).abs() > thr || (q.norm() - 1.0).abs() > thr {
        return Err(GeomError::NonUnitInput);
    }
    Ok(p.dot(q).clamp(-1.0, 1.0).acos())
}

/// Quasi-uniform unit-sphere sample of `n` points (Fibonacci lattice).
/// Deterministic: same `n` always yields the same points.
pub fn fibonacci_lattice(n: usize) -> Vec<Point3> {
    (0..n)
        .map(|i| {
            let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = i as f64 * GOLDEN_ANGLE;
            Point3 {
                x: r * phi.cos(),
                y: r * phi.sin(),
                z,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt3;
    use std::f64::consts::PI;

    #[test]
    fn identity_orthogonal_antipodal() {
        let tol = Tolerance::default();
        let x = pt3(1.0, 0.0, 0.0);
        let z = pt3(0.0, 0.0, 1.0);
        assert_eq!(geodesic_distance(x, x, &tol).unwrap(), 0.0);
        assert!((geodesic_distance(x, z, &tol).unwrap() - PI / 2.0).abs() < 1e-12);
        assert!((geodesic_distance(x, -x, &tol).unwrap() - PI).abs() < 1e-12);
    }

    #[test]
    fn non_unit_input_rejected() {
        let tol = Tolerance::default();
        let bad = pt3(1.1, 0.0, 0.0);
        assert_eq!(
            geodesic_distance(bad, pt3(1.0, 0.0, 0.0), &tol).unwrap_err(),
            GeomError::NonUnitInput
        );
    }

    #[test]
    fn lattice_points_are_unit_and_spread() {
        let pts = fibonacci_lattice(1000);
        assert_eq!(pts.len(), 1000);
        for p in &pts {
            assert!((p.norm() - 1.0).abs() < 1e-12);
        }
        // Every octant should be populated for a 1000-point lattice.
        for sx in [-1.0f64, 1.0] {
            for sy in [-1.0f64, 1.0] {
                for sz in [-1.0f64, 1.0] {
                    assert!(pts
                        .iter()
                        .any(|p| p.x * sx > 0.0 && p.y * sy > 0.0 && p.z * sz > 0.0));
                }
            }
        }
    }
}
