//! The Voronoi cell of `Z^n`, its 3D shadows, and their decomposition into
//! orbits of rank 3 subgroups.

mod classify;
mod hull;
mod icosahedral;
mod solids;

use std::collections::BTreeSet;

pub use classify::{classify_partition, classify_solid, NormClass, SolidKind, SolidReport};
pub use hull::{cap_faces, convex_hull, Polyhedron};
pub use solids::{named_solids, NamedSolid};
pub use icosahedral::{
    b6_cube_decomposition, rhombohedra_from_axes, CubeOrbit, Parity, Rhombohedron,
};

use crate::error::{Error, Result};
use crate::frame::dot;
use crate::tol;
use crate::weyl::{cube_vertices, orbit_under, HalfInt, RootDatum, SignedPerm};

/// `V(0)`: the unit cube `½(±l_1 ± … ± l_n)` together with the orbits of
/// `ω_1/2, …, ω_{n−1}/2, ω_n` that mark the centres of its faces of every
/// dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct VoronoiCell {
    pub rank: usize,
    pub vertices: Vec<Vec<HalfInt>>,
    pub facet_normals: Vec<Vec<Vec<HalfInt>>>,
}

impl VoronoiCell {
    pub fn vertices_f64(&self) -> Vec<Vec<f64>> {
        self.vertices
            .iter()
            .map(|v| v.iter().map(|x| x.to_f64()).collect())
            .collect()
    }

    /// `|x_i| ≤ ½ + tol` for every coordinate.
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.rank && x.iter().all(|c| c.abs() <= 0.5 + tol::POINT)
    }

    /// Outward half-spaces `u·x ≤ ½` with `u = ±l_i`.
    pub fn half_spaces(&self) -> Vec<(Vec<f64>, f64)> {
        let n = self.rank;
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            for s in [1.0, -1.0] {
                let mut u = vec![0.0; n];
                u[i] = s;
                out.push((u, 0.5));
            }
        }
        out
    }
}

pub fn voronoi_cell(datum: &RootDatum) -> VoronoiCell {
    let n = datum.rank();
    let gens = datum.generators();
    let facet_normals = (0..n)
        .map(|i| {
            let w = &datum.weights()[i];
            let start: Vec<HalfInt> = if i + 1 < n {
                w.iter().map(|x| HalfInt::from_twice(x.twice() / 2)).collect()
            } else {
                w.clone()
            };
            orbit_under(&gens, &start)
        })
        .collect();
    VoronoiCell {
        rank: n,
        vertices: cube_vertices(n),
        facet_normals,
    }
}

/// A projected point and how many input points landed on it.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedPoint {
    pub coords: [f64; 3],
    pub multiplicity: usize,
}

impl ProjectedPoint {
    pub fn norm(&self) -> f64 {
        dot(&self.coords, &self.coords).sqrt()
    }
}

/// `(v·b_1, v·b_2, v·b_3)` for each point, merging coincident images
/// (within `1e-9`) and sorting the result lexicographically.
pub fn project_to_3d(points: &[Vec<f64>], triple: [&[f64]; 3]) -> Result<Vec<ProjectedPoint>> {
    let n = triple[0].len();
    for b in triple {
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
    }
    let mut deviation: f64 = 0.0;
    for i in 0..3 {
        for j in i..3 {
            let expect = if i == j { 1.0 } else { 0.0 };
            deviation = deviation.max((dot(triple[i], triple[j]) - expect).abs());
        }
    }
    if deviation > tol::ORTHO {
        return Err(Error::NotOrthonormal { deviation });
    }

    let mut out: Vec<ProjectedPoint> = Vec::new();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
        let q = [dot(triple[0], p), dot(triple[1], p), dot(triple[2], p)];
        match out.iter_mut().find(|o| close3(&o.coords, &q)) {
            Some(o) => o.multiplicity += 1,
            None => out.push(ProjectedPoint {
                coords: q,
                multiplicity: 1,
            }),
        }
    }
    out.sort_by(|a, b| cmp3(&a.coords, &b.coords));
    Ok(out)
}

pub(crate) fn close3(a: &[f64; 3], b: &[f64; 3]) -> bool {
    (0..3).all(|k| (a[k] - b[k]).abs() <= tol::POINT)
}

pub(crate) fn cmp3(a: &[f64; 3], b: &[f64; 3]) -> std::cmp::Ordering {
    a[0].total_cmp(&b[0])
        .then(a[1].total_cmp(&b[1]))
        .then(a[2].total_cmp(&b[2]))
}

/// Partition `points` into orbits of the group generated by `generators`.
/// Parts are ordered by size, then by their lexicographically smallest point;
/// each part is sorted.
pub fn decompose_orbits(
    points: &[Vec<HalfInt>],
    generators: &[SignedPerm],
) -> Result<Vec<Vec<Vec<HalfInt>>>> {
    let set: BTreeSet<Vec<HalfInt>> = points.iter().cloned().collect();
    for (k, g) in generators.iter().enumerate() {
        for p in &set {
            if p.len() != g.rank() {
                return Err(Error::DimensionMismatch {
                    expected: g.rank(),
                    found: p.len(),
                });
            }
            if !set.contains(&g.apply(p)) {
                return Err(Error::ClosureViolation { generator: k + 1 });
            }
        }
    }
    let mut remaining = set;
    let mut parts = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let part = orbit_under(generators, &seed);
        for p in &part {
            remaining.remove(p);
        }
        parts.push(part);
    }
    parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a[0].cmp(&b[0])));
    Ok(parts)
}
