use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::frame::{
    b5_fivefold_frame, b6_h3_frame, cartan_eigensystem, coxeter_plane_frame, sigma, tau,
};
use crate::voronoi::{
    b6_cube_decomposition, classify_partition, classify_solid, decompose_orbits, named_solids,
    project_to_3d, SolidKind,
};
use crate::weyl::{
    cube_vertices, d5d_generators, dihedral_generators, generate_group, h3_generators,
    long_roots, orbit, short_roots, to_f64_vec, HalfInt, RootDatum, SignedPerm,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Suite(Vec<CheckResult>);

impl Suite {
    fn equal<T: std::fmt::Debug + PartialEq>(&mut self, name: impl Into<String>, found: T, expected: T) {
        self.0.push(CheckResult {
            name: name.into(),
            passed: found == expected,
            detail: format!("found {found:?}, expected {expected:?}"),
            delta: None,
        });
    }

    fn near(&mut self, name: impl Into<String>, found: f64, expected: f64, tol: f64) {
        let delta = (found - expected).abs();
        self.0.push(CheckResult {
            name: name.into(),
            passed: delta <= tol,
            detail: format!("found {found:.12}, expected {expected:.12}, tolerance {tol:e}"),
            delta: Some(delta),
        });
    }

    fn below(&mut self, name: impl Into<String>, value: f64, limit: f64) {
        self.0.push(CheckResult {
            name: name.into(),
            passed: value <= limit,
            detail: format!("{value:e} <= {limit:e}"),
            delta: Some(value),
        });
    }
}

fn orthogonality(m: &DMatrix<f64>) -> f64 {
    (m * m.transpose() - DMatrix::identity(m.nrows(), m.ncols()))
        .abs()
        .max()
}

fn f64s(v: &[Vec<HalfInt>]) -> Vec<Vec<f64>> {
    v.iter().map(|p| to_f64_vec(p)).collect()
}

/// Group relations, frame orthonormality, projected norms and orbit
/// decompositions.
pub fn run_checks() -> CheckReport {
    let mut s = Suite(Vec::new());

    for n in 4..=6 {
        let d = RootDatum::new(n).expect("supported rank");
        for (k, expected) in [(0, 2 * n), (1, 2 * n * (n - 1)), (n - 1, 1 << n)] {
            let mut a = vec![0u32; n];
            a[k] = 1;
            let o = orbit(&d, &a).expect("valid weight");
            s.equal(format!("orbit_size_B{n}_{}", o.label()), o.len(), expected);
        }
    }

    for n in 2..=8 {
        let d = RootDatum::new(n).expect("supported rank");
        let worst = match cartan_eigensystem(&d) {
            Ok(e) => e
                .pairs
                .iter()
                .map(|p| {
                    let law = 2.0 * (1.0 - (p.exponent as f64 * PI / (2 * n) as f64).cos());
                    (p.value - law).abs()
                })
                .fold(0.0, f64::max),
            Err(_) => f64::INFINITY,
        };
        s.below(format!("cartan_spectrum_B{n}"), worst, 1e-9);
    }

    let d6 = RootDatum::new(6).expect("rank 6");
    let [r1, r2, r3] = h3_generators(&d6).expect("rank 6");
    let rel = |name: &str, g: SignedPerm, k: u32| (format!("h3_relation_{name}"), g.pow(k).is_identity());
    for (name, ok) in [
        rel("R1^2", r1.clone(), 2),
        rel("R2^2", r2.clone(), 2),
        rel("R3^2", r3.clone(), 2),
        rel("(R1R3)^2", &r1 * &r3, 2),
        rel("(R1R2)^3", &r1 * &r2, 3),
        rel("(R2R3)^5", &r2 * &r3, 5),
    ] {
        s.equal(name, ok, true);
    }
    s.equal(
        "h3_closure",
        generate_group(&[r1.clone(), r2.clone(), r3.clone()]).len(),
        120,
    );
    let d5 = RootDatum::new(5).expect("rank 5");
    let d5d = d5d_generators(&d5).expect("rank 5");
    s.equal("d5d_closure", generate_group(&d5d).len(), 20);
    s.equal("d5d_R3_is_minus_identity", d5d[2] == SignedPerm::negation(5), true);
    for n in 4..=6 {
        let d = RootDatum::new(n).expect("supported rank");
        let (a, b) = dihedral_generators(&d);
        s.equal(format!("coxeter_order_B{n}"), (&a * &b).order(), 2 * n as u32);
    }

    for n in 2..=8 {
        let d = RootDatum::new(n).expect("supported rank");
        let dev = coxeter_plane_frame(&d).map_or(f64::INFINITY, |f| f.orthonormality_deviation());
        s.below(format!("coxeter_frame_orthonormal_B{n}"), dev, 1e-12);
    }
    let (_, b) = b5_fivefold_frame();
    s.below("fivefold_matrix_orthogonal", orthogonality(&b), 1e-12);
    let (f6, m) = b6_h3_frame();
    s.below("icosahedral_matrix_orthogonal", orthogonality(&m), 1e-12);

    let par6 = [f6.vector(0), f6.vector(1), f6.vector(2)];
    let orbits = b6_cube_decomposition();
    let norms: Vec<f64> = orbits.iter().map(|o| o.par_norm(&f6)).collect();
    let r2 = 2f64.sqrt();
    let named = [
        ("norm_icosahedron_III", norms[2], 1.144, tau() / r2),
        ("norm_dodecahedron_I", norms[0], 1.042, (0.3 * (2.0 + tau())).sqrt()),
        ("norm_dodecahedron_IV", norms[3], 0.644, (0.3 * (2.0 + sigma())).sqrt()),
        ("norm_icosahedron_II", norms[1], 0.438, -sigma() / r2),
    ];
    for (name, value, rounded, closed) in named {
        s.near(format!("{name}_rounded"), value, rounded, 5e-3);
        s.near(format!("{name}_closed_form"), value, closed, 1e-9);
    }
    s.near("ratio_III_over_II", norms[2] / norms[1], tau() * tau(), 1e-9);
    s.near("ratio_I_over_IV", norms[0] / norms[3], tau(), 1e-9);

    match project_to_3d(&f64s(&short_roots(6)), par6) {
        Ok(p) => {
            let worst = p.iter().map(|q| (q.norm() - 1.0 / r2).abs()).fold(0.0, f64::max);
            s.below("b6_short_root_norm", worst, 1e-9);
        }
        Err(_) => s.equal("b6_short_root_norm", false, true),
    }
    match project_to_3d(&f64s(&long_roots(6)), par6) {
        Ok(p) => {
            let small = p.iter().map(|q| q.norm()).fold(f64::INFINITY, f64::min);
            let large = p.iter().map(|q| q.norm()).fold(0.0, f64::max);
            s.near("icosidodecahedron_inner_norm", small, 0.743, 5e-4);
            s.near("icosidodecahedron_outer_norm", large, 1.203, 5e-4);
        }
        Err(_) => s.equal("icosidodecahedron_norms", false, true),
    }

    let t = crate::frame::b4_t_basis();
    match project_to_3d(&f64s(&cube_vertices(4)), [t.vector(1), t.vector(2), t.vector(3)]) {
        Ok(p) => {
            let r = classify_solid(&p);
            s.equal("b4_cube_shadow", (r.label, r.vertex_count, r.at_origin), (SolidKind::RhombicDodecahedron, 14, 2));
        }
        Err(_) => s.equal("b4_cube_shadow", false, true),
    }

    match decompose_orbits(&cube_vertices(5), &d5d) {
        Ok(parts) => {
            let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
            s.equal("b5_cube_d5d_orbits", sizes, vec![2, 10, 10, 10]);
        }
        Err(_) => s.equal("b5_cube_d5d_orbits", false, true),
    }
    match named_solids(5) {
        Ok(solids) => {
            let r = &solids[0];
            s.equal(
                "b5_rhombic_icosahedron",
                (r.kind(), r.report.suborbits.clone(), r.mesh.vertices.len(), r.mesh.faces.len()),
                (SolidKind::RhombicIcosahedron, vec![2, 10, 10], 22, 20),
            );
        }
        Err(_) => s.equal("b5_rhombic_icosahedron", false, true),
    }

    let sizes: Vec<usize> = orbits.iter().map(|o| o.points.len()).collect();
    s.equal("b6_cube_h3_orbits", sizes, vec![20, 12, 12, 20]);
    let shadow = |i: usize, j: usize| {
        let parts: Vec<_> = [i, j]
            .iter()
            .map(|&k| project_to_3d(&f64s(&orbits[k].points), par6).unwrap_or_default())
            .collect();
        classify_partition(&parts).label
    };
    s.equal("b6_triacontahedron", shadow(0, 2), SolidKind::RhombicTriacontahedron);
    s.equal("b6_dodecahedral_star", shadow(1, 3), SolidKind::DodecahedralStar);

    let checks = s.0;
    CheckReport {
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_build_passes() {
        let r = run_checks();
        let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        assert!(r.passed, "failed: {failed:?}");
        assert!(r.checks.iter().any(|c| c.name == "h3_relation_(R2R3)^5"));
        assert!(r.checks.iter().any(|c| c.name == "norm_icosahedron_III_rounded" && c.delta.is_some()));
    }
}
