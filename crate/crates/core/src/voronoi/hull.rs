use serde::Serialize;

use super::cmp3;
use crate::error::{Error, Result};
use crate::tol;

/// A convex polyhedron with polygonal faces, each listed counter-clockwise
/// when viewed from outside.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyhedron {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

impl Polyhedron {
    pub fn edge_count(&self) -> usize {
        self.faces.iter().map(|f| f.len()).sum::<usize>() / 2
    }

    /// Euler characteristic `V − E + F` (2 for a closed convex surface).
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}

fn sub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Convex hull by exhaustive supporting-plane search. Every plane through
/// three input points with all points on one side is a face plane; planes
/// whose normals agree within the coplanarity tolerance are merged, and each
/// face keeps only the extreme points of its polygon.
pub fn convex_hull(points: &[[f64; 3]]) -> Result<Polyhedron> {
    let n = points.len();
    let scale = points
        .iter()
        .map(|p| dot3(p, p).sqrt())
        .fold(1.0f64, f64::max);
    let eps = tol::POINT * scale;

    let mut planes: Vec<([f64; 3], f64)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = cross(&sub(&points[j], &points[i]), &sub(&points[k], &points[i]));
                let len = dot3(&c, &c).sqrt();
                if len < eps {
                    continue;
                }
                let mut u = [c[0] / len, c[1] / len, c[2] / len];
                let mut h = dot3(&u, &points[i]);
                let (mut above, mut below) = (false, false);
                for p in points {
                    let s = dot3(&u, p) - h;
                    above |= s > eps;
                    below |= s < -eps;
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                if above {
                    u = [-u[0], -u[1], -u[2]];
                    h = -h;
                }
                let known = planes.iter().any(|(v, g)| {
                    (1.0 - dot3(v, &u)).abs() < tol::COPLANAR && (g - h).abs() < eps.max(tol::COPLANAR)
                });
                if !known {
                    planes.push((u, h));
                }
            }
        }
    }
    if planes.len() < 4 {
        return Err(Error::Numeric("point set spans fewer than three dimensions".into()));
    }

    let mut vertices: Vec<[f64; 3]> = Vec::new();
    let mut faces_raw: Vec<Vec<[f64; 3]>> = Vec::new();
    for (u, h) in &planes {
        let on: Vec<[f64; 3]> = points
            .iter()
            .filter(|p| (dot3(u, p) - h).abs() <= eps)
            .copied()
            .collect();
        let polygon = face_polygon(&on, u);
        for p in &polygon {
            if !vertices.iter().any(|v| super::close3(v, p)) {
                vertices.push(*p);
            }
        }
        faces_raw.push(polygon);
    }
    vertices.sort_by(cmp3);
    let index_of = |p: &[f64; 3]| vertices.iter().position(|v| super::close3(v, p)).unwrap();
    let mut faces: Vec<Vec<usize>> = faces_raw
        .iter()
        .map(|poly| {
            let mut f: Vec<usize> = poly.iter().map(index_of).collect();
            let start = (0..f.len()).min_by_key(|&i| f[i]).unwrap();
            f.rotate_left(start);
            f
        })
        .collect();
    faces.sort();
    Ok(Polyhedron { vertices, faces })
}

/// Replace every face of `base` by a fan of triangles meeting at the apex
/// whose direction is closest to the face's outward normal. Apexes inside
/// the solid give a star-shaped, non-convex surface.
pub fn cap_faces(base: &Polyhedron, apexes: &[[f64; 3]]) -> Result<Polyhedron> {
    if apexes.is_empty() {
        return Err(Error::Numeric("no apex points".into()));
    }
    let mut vertices = base.vertices.clone();
    let offset = vertices.len();
    vertices.extend_from_slice(apexes);
    let mut faces = Vec::new();
    for f in &base.faces {
        let c = f.iter().fold([0.0; 3], |acc, &i| {
            let v = base.vertices[i];
            [acc[0] + v[0], acc[1] + v[1], acc[2] + v[2]]
        });
        let best = apexes
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| {
                let ca = dot3(a, &c) / dot3(a, a).sqrt();
                let cb = dot3(b, &c) / dot3(b, b).sqrt();
                ca.total_cmp(&cb)
            })
            .map(|(k, _)| offset + k)
            .expect("non-empty");
        for w in 0..f.len() {
            faces.push(vec![f[w], f[(w + 1) % f.len()], best]);
        }
    }
    Ok(Polyhedron { vertices, faces })
}

/// Extreme points of a planar point set, ordered counter-clockwise about
/// the outward normal `u`.
fn face_polygon(points: &[[f64; 3]], u: &[f64; 3]) -> Vec<[f64; 3]> {
    let seed = if u[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let e1 = {
        let c = cross(u, &seed);
        let l = dot3(&c, &c).sqrt();
        [c[0] / l, c[1] / l, c[2] / l]
    };
    let e2 = cross(u, &e1);
    let mut pts: Vec<([f64; 2], [f64; 3])> = points
        .iter()
        .map(|p| ([dot3(p, &e1), dot3(p, &e2)], *p))
        .collect();
    pts.sort_by(|a, b| a.0[0].total_cmp(&b.0[0]).then(a.0[1].total_cmp(&b.0[1])));
    pts.dedup_by(|a, b| (a.0[0] - b.0[0]).abs() < tol::POINT && (a.0[1] - b.0[1]).abs() < tol::POINT);
    if pts.len() < 3 {
        return pts.into_iter().map(|p| p.1).collect();
    }
    let turn = |o: &[f64; 2], a: &[f64; 2], b: &[f64; 2]| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut hull: Vec<([f64; 2], [f64; 3])> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &([f64; 2], [f64; 3])>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2
                && turn(&hull[hull.len() - 2].0, &hull[hull.len() - 1].0, &p.0) <= tol::POINT
            {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
    }
    hull.into_iter().map(|p| p.1).collect()
}
