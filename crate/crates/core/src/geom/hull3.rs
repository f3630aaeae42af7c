//! 3D convex hull via quickhull with tolerance-based absorption.
//!
//! Points within `rel_eps * extent` of a face plane are absorbed rather than
//! lifted to apexes, so collinear runs along hull edges and coplanar facet
//! interiors never become corners. A post-pass separates tolerance-strict
//! vertices (normal-cone margin test) from corners that merely sit on the
//! boundary.

use std::collections::HashMap;

use super::{extent_3d, GeomError, Point3, Tolerance};

/// Oriented triangular facet of a 3D hull.
#[derive(Debug, Clone, Copy)]
pub struct Facet {
    /// Indices into the input point set, counterclockwise seen from outside.
    pub corners: [usize; 3],
    /// Outward unit normal.
    pub normal: Point3,
    /// Plane offset: `normal . x = offset` on the facet plane.
    pub offset: f64,
}

/// Convex hull of a 3D point set.
#[derive(Debug, Clone)]
pub struct Hull3 {
    /// Indices of tolerance-strict hull vertices, ascending.
    pub vertex_indices: Vec<usize>,
    /// Triangular facets; corners may include boundary points that are not
    /// strict vertices (e.g. points interior to a collinear hull edge).
    pub facets: Vec<Facet>,
    /// Bounding-box diagonal of the input.
    pub extent: f64,
}

impl Hull3 {
    /// Largest signed plane distance of `p` over all facets; negative values
    /// mean strictly inside, values near zero mean on the boundary.
    pub fn max_signed_distance(&self, p: Point3) -> f64 {
        let mut best = f64::NEG_INFINITY;
        for f in &self.facets {
            best = best.max(f.normal.dot(p) - f.offset);
        }
        best
    }
}

struct Face {
    corners: [u32; 3],
    normal: Point3,
    offset: f64,
    outside: Vec<u32>,
    far: u32,
    far_dist: f64,
    alive: bool,
}

impl Face {
    fn dist(&self, p: Point3) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

fn make_face(points: &[Point3], a: u32, b: u32, c: u32, interior: Point3) -> Face {
    let (pa, pb, pc) = (points[a as usize], points[b as usize], points[c as usize]);
    let mut normal = (pb - pa).cross(pc - pa);
    let mut corners = [a, b, c];
    let nn = normal.norm();
    if nn > 0.0 {
        normal = normal * (1.0 / nn);
    }
    let centroid = (pa + pb + pc) * (1.0 / 3.0);
    if normal.dot(centroid - interior) < 0.0 {
        normal = -normal;
        corners = [a, c, b];
    }
    let offset = normal.dot(centroid);
    Face {
        corners,
        normal,
        offset,
        outside: Vec::new(),
        far: 0,
        far_dist: f64::NEG_INFINITY,
        alive: true,
    }
}

/// Computes the convex hull of at least four non-coplanar points.
pub fn convex_hull_3d(points: &[Point3], tol: &Tolerance) -> Result<Hull3, GeomError> {
    if points.len() < 4 {
        return Err(GeomError::TooFewPoints {
            needed: 4,
            got: points.len(),
        });
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(GeomError::NonFiniteInput);
    }
    let extent = extent_3d(points);
    let thr = tol.threshold(extent);

    let (i0, i1, i2, i3) = initial_simplex(points, thr)?;
    let interior = (points[i0 as usize]
        + points[i1 as usize]
        + points[i2 as usize]
        + points[i3 as usize])
        * 0.25;

    let mut faces: Vec<Face> = vec![
        make_face(points, i0, i1, i2, interior),
        make_face(points, i0, i1, i3, interior),
        make_face(points, i0, i2, i3, interior),
        make_face(points, i1, i2, i3, interior),
    ];
    let mut edges: HashMap<(u32, u32), u32> = HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        register_edges(&mut edges, f.corners, fi as u32);
    }

    for (pi, p) in points.iter().enumerate() {
        let pi = pi as u32;
        if pi == i0 || pi == i1 || pi == i2 || pi == i3 {
            continue;
        }
        for f in faces.iter_mut() {
            let d = f.dist(*p);
            if d > thr {
                f.outside.push(pi);
                if d > f.far_dist {
                    f.far_dist = d;
                    f.far = pi;
                }
                break;
            }
        }
    }

    let mut work: Vec<u32> = (0..faces.len() as u32).collect();
    let max_iters = 8 * points.len() + 1024;
    let mut iters = 0usize;

    while let Some(fid) = work.pop() {
        let fid = fid as usize;
        if !faces[fid].alive || faces[fid].outside.is_empty() {
            continue;
        }
        iters += 1;
        if iters > max_iters {
            return Err(GeomError::Numerical(
                "quickhull did not converge".to_string(),
            ));
        }
        let apex = faces[fid].far;
        let ap = points[apex as usize];

        // Flood-fill the faces visible from the apex.
        let mut visible: Vec<u32> = vec![fid as u32];
        let mut seen: HashMap<u32, bool> = HashMap::new();
        seen.insert(fid as u32, true);
        let mut stack = vec![fid as u32];
        while let Some(v) = stack.pop() {
            let cs = faces[v as usize].corners;
            for (a, b) in [(cs[0], cs[1]), (cs[1], cs[2]), (cs[2], cs[0])] {
                if let Some(&nb) = edges.get(&(b, a)) {
                    if seen.contains_key(&nb) {
                        continue;
                    }
                    let vis = faces[nb as usize].alive && faces[nb as usize].dist(ap) > thr;
                    seen.insert(nb, vis);
                    if vis {
                        visible.push(nb);
                        stack.push(nb);
                    }
                }
            }
        }

        // Horizon: directed edges of visible faces whose twin is hidden.
        let mut horizon: Vec<(u32, u32)> = Vec::new();
        let mut orphans: Vec<u32> = Vec::new();
        for &v in &visible {
            let cs = faces[v as usize].corners;
            for (a, b) in [(cs[0], cs[1]), (cs[1], cs[2]), (cs[2], cs[0])] {
                let hidden_twin = match edges.get(&(b, a)) {
                    Some(&nb) => !seen.get(&nb).copied().unwrap_or(false),
                    None => true,
                };
                if hidden_twin {
                    horizon.push((a, b));
                }
            }
            orphans.extend(faces[v as usize].outside.iter().copied());
        }
        for &v in &visible {
            let f = &mut faces[v as usize];
            f.alive = false;
            f.outside = Vec::new();
            unregister_edges(&mut edges, f.corners);
        }

        let mut new_ids: Vec<u32> = Vec::new();
        for &(a, b) in &horizon {
            let nf = make_face(points, a, b, apex, interior);
            let id = faces.len() as u32;
            register_edges(&mut edges, nf.corners, id);
            faces.push(nf);
            new_ids.push(id);
        }

        for pi in orphans {
            if pi == apex {
                continue;
            }
            let p = points[pi as usize];
            for &id in &new_ids {
                let f = &mut faces[id as usize];
                let d = f.dist(p);
                if d > thr {
                    f.outside.push(pi);
                    if d > f.far_dist {
                        f.far_dist = d;
                        f.far = pi;
                    }
                    break;
                }
            }
        }
        for &id in &new_ids {
            if !faces[id as usize].outside.is_empty() {
                work.push(id);
            }
        }
    }

    let facets: Vec<Facet> = faces
        .iter()
        .filter(|f| f.alive)
        .map(|f| Facet {
            corners: [
                f.corners[0] as usize,
                f.corners[1] as usize,
                f.corners[2] as usize,
            ],
            normal: f.normal,
            offset: f.offset,
        })
        .collect();
    if facets.len() < 4 {
        return Err(GeomError::Numerical("hull collapsed".to_string()));
    }

    let vertex_indices = strict_vertices(points, &facets, thr);
    Ok(Hull3 {
        vertex_indices,
        facets,
        extent,
    })
}

fn register_edges(edges: &mut HashMap<(u32, u32), u32>, cs: [u32; 3], id: u32) {
    edges.insert((cs[0], cs[1]), id);
    edges.insert((cs[1], cs[2]), id);
    edges.insert((cs[2], cs[0]), id);
}

fn unregister_edges(edges: &mut HashMap<(u32, u32), u32>, cs: [u32; 3]) {
    edges.remove(&(cs[0], cs[1]));
    edges.remove(&(cs[1], cs[2]));
    edges.remove(&(cs[2], cs[0]));
}

fn initial_simplex(points: &[Point3], thr: f64) -> Result<(u32, u32, u32, u32), GeomError> {
    // Extremes along the coordinate axes give well-spread seed candidates.
    let mut cands: Vec<usize> = Vec::with_capacity(6);
    for axis in 0..3 {
        let coord = |p: &Point3| match axis {
            0 => p.x,
            1 => p.y,
            _ => p.z,
        };
        let lo = (0..points.len())
            .min_by(|&a, &b| coord(&points[a]).total_cmp(&coord(&points[b])))
            .unwrap();
        let hi = (0..points.len())
            .max_by(|&a, &b| coord(&points[a]).total_cmp(&coord(&points[b])))
            .unwrap();
        cands.push(lo);
        cands.push(hi);
    }
    let mut best = (0usize, 0usize, f64::NEG_INFINITY);
    for i in 0..cands.len() {
        for j in (i + 1)..cands.len() {
            let d = points[cands[i]].dist(points[cands[j]]);
            if d > best.2 {
                best = (cands[i], cands[j], d);
            }
        }
    }
    let (a, b, dab) = best;
    if dab <= thr {
        return Err(GeomError::DegenerateHull);
    }
    let dir = (points[b] - points[a]) * (1.0 / dab);
    let mut c = 0usize;
    let mut dc = f64::NEG_INFINITY;
    for (i, p) in points.iter().enumerate() {
        let v = *p - points[a];
        let d = (v - dir * v.dot(dir)).norm();
        if d > dc {
            dc = d;
            c = i;
        }
    }
    if dc <= thr {
        return Err(GeomError::DegenerateHull);
    }
    let n = (points[b] - points[a]).cross(points[c] - points[a]).normalize();
    let mut d_idx = 0usize;
    let mut dd = f64::NEG_INFINITY;
    for (i, p) in points.iter().enumerate() {
        let d = (n.dot(*p - points[a])).abs();
        if d > dd {
            dd = d;
            d_idx = i;
        }
    }
    if dd <= thr {
        return Err(GeomError::DegenerateHull);
    }
    Ok((a as u32, b as u32, c as u32, d_idx as u32))
}

/// Keeps only corners whose normal cone has a direction separating them from
/// all their facet neighbors by more than the threshold.
fn strict_vertices(points: &[Point3], facets: &[Facet], thr: f64) -> Vec<usize> {
    let mut normal_sum: HashMap<usize, Point3> = HashMap::new();
    let mut neighbors: HashMap<usize, Vec<usize>> = HashMap::new();
    for f in facets {
        for (slot, &v) in f.corners.iter().enumerate() {
            *normal_sum.entry(v).or_insert(Point3::ORIGIN) = normal_sum
                .get(&v)
                .copied()
                .unwrap_or(Point3::ORIGIN)
                + f.normal;
            let nb = neighbors.entry(v).or_default();
            for (other_slot, &u) in f.corners.iter().enumerate() {
                if other_slot != slot {
                    nb.push(u);
                }
            }
        }
    }
    let mut out: Vec<usize> = Vec::new();
    for (&v, sum) in &normal_sum {
        let n = sum.norm();
        if n <= 1e-300 {
            continue;
        }
        let d = *sum * (1.0 / n);
        let pv = points[v];
        let margin = neighbors[&v]
            .iter()
            .map(|&u| d.dot(pv - points[u]))
            .fold(f64::INFINITY, f64::min);
        if margin > thr {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::pt3;

    #[test]
    fn octahedron_has_six_vertices_eight_facets() {
        let pts = [
            pt3(1.0, 0.0, 0.0),
            pt3(-1.0, 0.0, 0.0),
            pt3(0.0, 1.0, 0.0),
            pt3(0.0, -1.0, 0.0),
            pt3(0.0, 0.0, 1.0),
            pt3(0.0, 0.0, -1.0),
        ];
        let hull = convex_hull_3d(&pts, &Tolerance::default()).unwrap();
        assert_eq!(hull.vertex_indices.len(), 6);
        assert_eq!(hull.facets.len(), 8);
    }

    #[test]
    fn coplanar_input_is_degenerate() {
        let pts = [
            pt3(0.0, 0.0, 0.0),
            pt3(1.0, 0.0, 0.0),
            pt3(0.0, 1.0, 0.0),
            pt3(1.0, 1.0, 0.0),
            pt3(0.3, 0.7, 0.0),
        ];
        assert_eq!(
            convex_hull_3d(&pts, &Tolerance::default()).unwrap_err(),
            GeomError::DegenerateHull
        );
    }

    #[test]
    fn interior_point_is_absorbed() {
        let pts = [
            pt3(0.0, 0.0, 0.0),
            pt3(4.0, 0.0, 0.0),
            pt3(0.0, 4.0, 0.0),
            pt3(0.0, 0.0, 4.0),
            pt3(0.5, 0.5, 0.5),
        ];
        let hull = convex_hull_3d(&pts, &Tolerance::default()).unwrap();
        assert_eq!(hull.vertex_indices, vec![0, 1, 2, 3]);
        assert!(hull.max_signed_distance(pts[4]) < 0.0);
    }

    #[test]
    fn all_points_on_nonpositive_side_of_every_facet() {
        let pts: Vec<Point3> = (0..64)
            .map(|i| {
                let a = i as f64 * 0.61803398875 * std::f64::consts::TAU;
                let b = (i as f64 * 0.7548776662).fract() * 2.0 - 1.0;
                let r = (1.0 - b * b as f64).max(0.0).sqrt();
                pt3(r * a.cos(), r * a.sin(), b)
            })
            .collect();
        let hull = convex_hull_3d(&pts, &Tolerance::default()).unwrap();
        let thr = Tolerance::default().threshold(hull.extent);
        for p in &pts {
            assert!(hull.max_signed_distance(*p) <= thr);
        }
    }
}
