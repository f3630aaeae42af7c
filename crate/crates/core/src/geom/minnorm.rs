//! Minimum-norm point in the convex hull of a small 3D point set
//! (Wolfe's algorithm).
//!
//! Used as the feasibility route for cone-interior tests: the open cone
//! `{x : d_j . x > 0 for all j}` is nonempty exactly when the origin is not
//! in the convex hull of the `d_j`, and the min-norm point then supplies the
//! certifying direction together with its margin.

use super::Point3;

/// Returns the minimum-norm point of `conv(points)` and its norm.
///
/// The result is a certificate, not just a value: every input point `p`
/// satisfies `x . p >= |x|^2 - eps`, so `x / |x|` separates the origin from
/// the hull with margin at least `|x| - eps/|x|`.
pub fn min_norm_point(points: &[Point3]) -> (Point3, f64) {
    assert!(!points.is_empty());
    let scale2 = points
        .iter()
        .map(|p| p.norm2())
        .fold(0.0f64, f64::max)
        .max(1e-300);
    let eps = 1e-14 * scale2;

    let mut best = 0usize;
    for (i, p) in points.iter().enumerate() {
        if p.norm2() < points[best].norm2() {
            best = i;
        }
    }
    let mut corral: Vec<usize> = vec![best];
    let mut lambda: Vec<f64> = vec![1.0];
    let mut x = points[best];

    for _ in 0..200 {
        // Most-violating point of the optimality condition.
        let mut q = 0usize;
        let mut qv = f64::INFINITY;
        for (i, p) in points.iter().enumerate() {
            let v = x.dot(*p);
            if v < qv {
                qv = v;
                q = i;
            }
        }
        if qv >= x.norm2() - eps {
            break;
        }
        if !corral.contains(&q) {
            corral.push(q);
            lambda.push(0.0);
        }

        // Minor cycle: project onto the affine hull of the corral, walking
        // back to the feasible (nonnegative) region when needed.
        loop {
            let mu = match affine_min_norm(points, &corral) {
                Some(mu) => mu,
                None => {
                    // Affinely dependent corral; drop the smallest-weight
                    // member and retry.
                    let drop = lambda
                        .iter()
                        .enumerate()
                        .min_by(|a, b| a.1.total_cmp(b.1))
                        .map(|(i, _)| i)
                        .unwrap();
                    corral.remove(drop);
                    lambda.remove(drop);
                    if corral.is_empty() {
                        return (x, x.norm());
                    }
                    continue;
                }
            };
            if mu.iter().all(|&m| m > 1e-12) {
                lambda = mu;
                break;
            }
            // Step from lambda toward mu until a coordinate hits zero.
            let mut theta = 1.0f64;
            for (l, m) in lambda.iter().zip(mu.iter()) {
                if *m <= 1e-12 && l - m > 0.0 {
                    theta = theta.min(l / (l - m));
                }
            }
            for (l, m) in lambda.iter_mut().zip(mu.iter()) {
                *l += theta * (m - *l);
            }
            let mut i = 0;
            while i < corral.len() {
                if lambda[i] <= 1e-12 && corral.len() > 1 {
                    corral.remove(i);
                    lambda.remove(i);
                } else {
                    i += 1;
                }
            }
        }
        let total: f64 = lambda.iter().sum();
        x = Point3::ORIGIN;
        for (l, &i) in lambda.iter().zip(corral.iter()) {
            x = x + points[i] * (*l / total);
        }
    }
    (x, x.norm())
}

/// Minimum-norm point over the affine hull of the corral, returned as
/// barycentric coordinates. `None` when the KKT system is singular.
fn affine_min_norm(points: &[Point3], corral: &[usize]) -> Option<Vec<f64>> {
    let k = corral.len();
    if k == 1 {
        return Some(vec![1.0]);
    }
    // KKT system: [G 1; 1^T 0] [mu; nu] = [0; 1] with Gram matrix G.
    let n = k + 1;
    let mut a = vec![vec![0.0f64; n + 1]; n];
    for i in 0..k {
        for j in 0..k {
            a[i][j] = points[corral[i]].dot(points[corral[j]]);
        }
        a[i][k] = 1.0;
        a[i][n] = 0.0;
    }
    for j in 0..k {
        a[k][j] = 1.0;
    }
    a[k][n] = 1.0;

    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1e-300);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[piv][col].abs() <= 1e-13 * scale {
            return None;
        }
        a.swap(col, piv);
        for row in 0..n {
            if row == col {
                continue;
            }
            let f = a[row][col] / a[col][col];
            for c in col..=n {
                a[row][c] -= f * a[col][c];
            }
        }
    }
    Some((0..k).map(|i| a[i][n] / a[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt3;

    #[test]
    fn single_point() {
        let (x, n) = min_norm_point(&[pt3(3.0, 4.0, 0.0)]);
        assert!((n - 5.0).abs() < 1e-12);
        assert!((x.x - 3.0).abs() < 1e-12);
    }

    #[test]
    fn segment_straddling_origin() {
        let (_, n) = min_norm_point(&[pt3(-1.0, 1.0, 0.0), pt3(1.0, 1.0, 0.0)]);
        assert!((n - 1.0).abs() < 1e-10);
        let (_, n) = min_norm_point(&[pt3(-1.0, 0.0, 0.0), pt3(1.0, 0.0, 0.0)]);
        assert!(n < 1e-7);
    }

    #[test]
    fn simplex_containing_origin_has_zero_norm() {
        let pts = [
            pt3(1.0, 1.0, 1.0),
            pt3(-1.0, -1.0, 1.0),
            pt3(-1.0, 1.0, -1.0),
            pt3(1.0, -1.0, -1.0),
        ];
        let (_, n) = min_norm_point(&pts);
        assert!(n < 1e-7);
    }

    #[test]
    fn offset_cluster_distance() {
        let pts = [
            pt3(2.0, 0.1, 0.0),
            pt3(2.0, -0.1, 0.3),
            pt3(3.0, 0.0, -0.2),
        ];
        let (x, n) = min_norm_point(&pts);
        assert!(n >= 1.9 && n <= 2.2);
        for p in &pts {
            assert!(x.dot(*p) >= x.norm2() - 1e-9);
        }
    }
}
