use serde::Serialize;

use super::{classify::SolidKind, decompose_orbits};
use crate::error::{Error, Result};
use crate::frame::{dot, Frame, FrameKind};
use crate::weyl::{cube_vertices, h3_generators, HalfInt, RootDatum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// One `W(H_3)` orbit of the 6-cube vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct CubeOrbit {
    pub label: &'static str,
    pub shape: SolidKind,
    /// Parity of the number of minus signs.
    pub parity: Parity,
    pub points: Vec<Vec<HalfInt>>,
}

impl CubeOrbit {
    /// Common norm of the points' parallel-space images.
    pub fn par_norm(&self, frame: &Frame) -> f64 {
        let v: Vec<f64> = self.points[0].iter().map(|x| x.to_f64()).collect();
        let p = frame.par_coords(&v);
        dot(&p, &p).sqrt()
    }

    /// `+`/`−` sign string of each point, e.g. `"+-++-+"`.
    pub fn sign_strings(&self) -> Vec<String> {
        self.points
            .iter()
            .map(|p| p.iter().map(|x| if x.is_negative() { '-' } else { '+' }).collect())
            .collect()
    }
}

fn minus_parity(p: &[HalfInt]) -> Parity {
    if p.iter().filter(|x| x.is_negative()).count() % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// The 64 vertices of the 6-cube split into the four icosahedral orbits:
/// I (20, even), II (12, even), III (12, odd), IV (20, odd).
pub fn b6_cube_decomposition() -> [CubeOrbit; 4] {
    let datum = RootDatum::new(6).expect("rank 6 supported");
    let gens = h3_generators(&datum).expect("rank 6");
    let parts = decompose_orbits(&cube_vertices(6), &gens).expect("generators preserve the cube");
    let pick = |size: usize, parity: Parity| {
        parts
            .iter()
            .find(|p| p.len() == size && minus_parity(&p[0]) == parity)
            .expect("orbit present")
            .clone()
    };
    [
        CubeOrbit {
            label: "I",
            shape: SolidKind::Dodecahedron,
            parity: Parity::Even,
            points: pick(20, Parity::Even),
        },
        CubeOrbit {
            label: "II",
            shape: SolidKind::Icosahedron,
            parity: Parity::Even,
            points: pick(12, Parity::Even),
        },
        CubeOrbit {
            label: "III",
            shape: SolidKind::Icosahedron,
            parity: Parity::Odd,
            points: pick(12, Parity::Odd),
        },
        CubeOrbit {
            label: "IV",
            shape: SolidKind::Dodecahedron,
            parity: Parity::Odd,
            points: pick(20, Parity::Odd),
        },
    ]
}

/// Parallelepiped spanned by three edge vectors from the origin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rhombohedron {
    pub edges: [[f64; 3]; 3],
}

impl Rhombohedron {
    /// Signed volume `det(e_1, e_2, e_3)`.
    pub fn volume(&self) -> f64 {
        let [a, b, c] = self.edges;
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
    }

    pub fn vertices(&self) -> Vec<[f64; 3]> {
        (0..8)
            .map(|m| {
                let mut v = [0.0; 3];
                for (k, e) in self.edges.iter().enumerate() {
                    if m >> k & 1 == 1 {
                        (0..3).for_each(|i| v[i] += e[i]);
                    }
                }
                v
            })
            .collect()
    }

    /// Angles between edge pairs, in radians.
    pub fn face_angles(&self) -> [f64; 3] {
        let ang = |a: &[f64; 3], b: &[f64; 3]| {
            (dot(a, b) / (dot(a, a) * dot(b, b)).sqrt()).clamp(-1.0, 1.0).acos()
        };
        let [a, b, c] = &self.edges;
        [ang(a, b), ang(b, c), ang(a, c)]
    }
}

/// The parallelepipeds spanned by the parallel images of `(l_1, l_2, l_3)`
/// and `(l_4, l_5, l_6)` in the icosahedral frame.
pub fn rhombohedra_from_axes(frame: &Frame) -> Result<[Rhombohedron; 2]> {
    if frame.kind() != FrameKind::H3 {
        return Err(Error::FrameUnavailable {
            frame: "rhombohedra",
            rank: frame.rank(),
        });
    }
    let axis = |i: usize| {
        let mut v = vec![0.0; 6];
        v[i] = 1.0;
        let p = frame.par_coords(&v);
        [p[0], p[1], p[2]]
    };
    Ok([
        Rhombohedron {
            edges: [axis(0), axis(1), axis(2)],
        },
        Rhombohedron {
            edges: [axis(3), axis(4), axis(5)],
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{b6_h3_frame, sigma, tau};

    fn default_frame() -> Frame {
        b6_h3_frame().0
    }

    #[test]
    fn orbit_sizes_and_norms() {
        let f = default_frame();
        let orbits = b6_cube_decomposition();
        let sizes: Vec<usize> = orbits.iter().map(|o| o.points.len()).collect();
        assert_eq!(sizes, vec![20, 12, 12, 20]);
        let n: Vec<f64> = orbits.iter().map(|o| o.par_norm(&f)).collect();
        let r2 = 2f64.sqrt();
        assert!((n[2] - tau() / r2).abs() < 1e-9);
        assert!((n[0] - (0.3 * (2.0 + tau())).sqrt()).abs() < 1e-9);
        assert!((n[3] - (0.3 * (2.0 + sigma())).sqrt()).abs() < 1e-9);
        assert!((n[1] + sigma() / r2).abs() < 1e-9);
        assert!((n[2] / n[1] - tau() * tau()).abs() < 1e-9);
        assert!((n[0] / n[3] - tau()).abs() < 1e-9);
        for o in &orbits {
            for p in &o.points {
                let v: Vec<f64> = p.iter().map(|x| x.to_f64()).collect();
                let q = f.par_coords(&v);
                assert!((dot(&q, &q).sqrt() - o.par_norm(&f)).abs() < 1e-12);
                assert_eq!(minus_parity(p), o.parity);
            }
        }
        let all_plus = vec![HalfInt::HALF; 6];
        assert!(orbits[0].points.contains(&all_plus));
        assert!(orbits[0].sign_strings().contains(&"------".to_string()));
    }

    #[test]
    fn rhombohedra() {
        let f = default_frame();
        let [acute, obtuse] = rhombohedra_from_axes(&f).unwrap();
        for r in [&acute, &obtuse] {
            for e in &r.edges {
                assert!((dot(e, e).sqrt() - 0.5f64.sqrt()).abs() < 1e-12);
            }
        }
        let (va, vo) = (acute.volume().abs(), obtuse.volume().abs());
        assert!((va - vo).abs() > 1e-3);
        assert!((va / vo - tau()).abs() < 1e-9);
        assert_eq!(acute.vertices().len(), 8);
        // golden rhombi: every face angle is arccos(±1/√5)
        let golden = (1.0 / 5f64.sqrt()).acos();
        for a in acute.face_angles().iter().chain(&obtuse.face_angles()) {
            assert!((a.min(std::f64::consts::PI - a) - golden).abs() < 1e-9);
        }
        assert!(rhombohedra_from_axes(&crate::frame::b4_t_basis()).is_err());
    }
}
