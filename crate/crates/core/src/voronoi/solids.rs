use serde::Serialize;

use super::{
    b6_cube_decomposition, cap_faces, classify_partition, classify_solid, convex_hull,
    decompose_orbits, project_to_3d, Polyhedron, ProjectedPoint, SolidKind, SolidReport,
};
use crate::error::{Error, Result};
use crate::frame::{b4_t_basis, b5_fivefold_frame, b6_h3_frame};
use crate::weyl::{cube_vertices, d5d_generators, long_roots, short_roots, to_f64_vec, HalfInt, RootDatum};

/// A labelled 3D shadow together with its surface mesh.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedSolid {
    /// File stem, e.g. `rhombic_triacontahedron`.
    pub name: String,
    pub report: SolidReport,
    #[serde(skip)]
    pub mesh: Polyhedron,
}

impl NamedSolid {
    pub fn kind(&self) -> SolidKind {
        self.report.label
    }
}

fn f64s(v: &[Vec<HalfInt>]) -> Vec<Vec<f64>> {
    v.iter().map(|p| to_f64_vec(p)).collect()
}

fn coords(points: &[ProjectedPoint]) -> Vec<[f64; 3]> {
    points
        .iter()
        .filter(|p| p.norm() > crate::tol::POINT)
        .map(|p| p.coords)
        .collect()
}

fn hull_solid(name: &str, parts: &[Vec<ProjectedPoint>]) -> Result<NamedSolid> {
    let all: Vec<ProjectedPoint> = parts.iter().flatten().cloned().collect();
    Ok(NamedSolid {
        name: name.into(),
        report: classify_partition(parts),
        mesh: convex_hull(&coords(&all))?,
    })
}

/// The named solids obtained from the rank `n` cube and root polytopes in
/// the fixed 3D frames: the rhombic dodecahedron for rank 4; the rhombic
/// icosahedron and pentagonal antiprism for rank 5; the rhombic
/// triacontahedron, dodecahedral star and two icosidodecahedra for rank 6.
pub fn named_solids(rank: usize) -> Result<Vec<NamedSolid>> {
    match rank {
        4 => {
            let t = b4_t_basis();
            let p = project_to_3d(&f64s(&cube_vertices(4)), [t.vector(1), t.vector(2), t.vector(3)])?;
            Ok(vec![hull_solid("rhombic_dodecahedron", &[p])?])
        }
        5 => {
            let (f, _) = b5_fivefold_frame();
            let triple = [f.vector(0), f.vector(3), f.vector(4)];
            let gens = d5d_generators(&RootDatum::new(5)?)?;
            let parts = decompose_orbits(&cube_vertices(5), &gens)?;
            let mut shells = parts
                .iter()
                .map(|p| project_to_3d(&f64s(p), triple))
                .collect::<Result<Vec<_>>>()?;
            // the innermost orbit lies inside the zonohedron spanned by the rest
            let inner = (0..shells.len())
                .min_by(|&i, &j| shells[i][0].norm().total_cmp(&shells[j][0].norm()))
                .expect("non-empty");
            shells.remove(inner);
            let roots = project_to_3d(&f64s(&short_roots(5)), triple)?;
            Ok(vec![
                hull_solid("rhombic_icosahedron", &shells)?,
                hull_solid("pentagonal_antiprism", &[roots])?,
            ])
        }
        6 => {
            let (f, _) = b6_h3_frame();
            let triple = [f.vector(0), f.vector(1), f.vector(2)];
            let orbits = b6_cube_decomposition();
            let proj = orbits
                .iter()
                .map(|o| project_to_3d(&f64s(&o.points), triple))
                .collect::<Result<Vec<_>>>()?;
            let tri = hull_solid("rhombic_triacontahedron", &[proj[0].clone(), proj[2].clone()])?;

            let dodecahedron = convex_hull(&coords(&proj[3]))?;
            let star = NamedSolid {
                name: "dodecahedral_star".into(),
                report: classify_partition(&[proj[1].clone(), proj[3].clone()]),
                mesh: cap_faces(&dodecahedron, &coords(&proj[1]))?,
            };

            let long = project_to_3d(&f64s(&long_roots(6)), triple)?;
            let split = long.iter().map(|p| p.norm()).fold(0.0, f64::max) * 0.8;
            let (outer, inner): (Vec<_>, Vec<_>) = long.into_iter().partition(|p| p.norm() > split);
            let ico = |name: &str, pts: Vec<ProjectedPoint>| -> Result<NamedSolid> {
                Ok(NamedSolid {
                    name: name.into(),
                    report: classify_solid(&pts),
                    mesh: convex_hull(&coords(&pts))?,
                })
            };
            Ok(vec![
                tri,
                star,
                ico("icosidodecahedron_inner", inner)?,
                ico("icosidodecahedron_outer", outer)?,
            ])
        }
        _ => Err(Error::RankOutOfRange { rank, min: 4, max: 6 }),
    }
}
