//! Hand-built frames for ranks 4, 5 and 6.

use nalgebra::DMatrix;

use super::{dot, sigma, tau, Frame, FrameKind};
use crate::error::{Error, Result};
use crate::weyl::RootDatum;

/// `t_0 = ½(l_1+l_2+l_3+l_4)`, `t_1 = ½(l_1−l_2+l_3−l_4)`,
/// `t_2 = ½(−l_1+l_2+l_3−l_4)`, `t_3 = ½(l_1+l_2−l_3−l_4)`.
///
/// `t_0` is fixed by the octahedral subgroup and is the invariant direction;
/// `(t_1, t_2, t_3)` is the parallel space.
pub fn b4_t_basis() -> Frame {
    let basis = vec![
        vec![0.5, 0.5, 0.5, 0.5],
        vec![0.5, -0.5, 0.5, -0.5],
        vec![-0.5, 0.5, 0.5, -0.5],
        vec![0.5, 0.5, -0.5, -0.5],
    ];
    Frame::new(FrameKind::TBasis, basis, vec![1, 2, 3], vec![], vec![0])
        .expect("t-basis is orthonormal")
}

/// Five-fold frame of rank 5 and the matrix `B` with `l_i = Σ_j b_ij x̂_j`.
///
/// The first four vectors come from the `A_4` Cartan eigenvectors written in
/// simple roots; `x̂_5` is the normalized diagonal. Parallel space is
/// `(x̂_1, x̂_4)`, the window lives in `(x̂_2, x̂_3, x̂_5)`.
pub fn b5_fivefold_frame() -> (Frame, DMatrix<f64>) {
    let datum = RootDatum::new(5).expect("rank 5 supported");
    let alpha: Vec<Vec<f64>> = (0..5).map(|i| datum.simple_root_f64(i)).collect();
    let (t, s) = (tau(), sigma());
    let r2 = 2f64.sqrt();
    let combos: [(f64, [f64; 5]); 5] = [
        (1.0 / (2.0 * (2.0 + s)).sqrt(), [1.0, t, t, 1.0, 0.0]),
        (1.0 / ((2.0 + s) * r2), [1.0, -s, s, -1.0, 0.0]),
        (1.0 / (2.0 * (2.0 + t)).sqrt(), [1.0, s, s, 1.0, 0.0]),
        (1.0 / ((2.0 + t) * r2), [1.0, -t, t, -1.0, 0.0]),
        (1.0 / 5f64.sqrt(), [1.0, 2.0, 3.0, 4.0, 5.0]),
    ];
    let basis: Vec<Vec<f64>> = combos
        .iter()
        .map(|(scale, c)| {
            (0..5)
                .map(|k| scale * (0..5).map(|j| c[j] * alpha[j][k]).sum::<f64>())
                .collect()
        })
        .collect();
    let frame = Frame::new(FrameKind::Fivefold, basis, vec![0, 3], vec![1, 2, 4], vec![])
        .expect("five-fold frame is orthonormal");

    let a = (2.0 + t).sqrt();
    let b = (2.0 + s).sqrt();
    #[rustfmt::skip]
    let rows = [
        a, t, b, -s, r2,
        b, s, -a, -t, r2,
        0.0, -2.0, 0.0, 2.0, r2,
        -b, s, a, -t, r2,
        -a, t, -b, -s, r2,
    ];
    let bmat = DMatrix::from_row_slice(5, 5, &rows) / 10f64.sqrt();
    (frame, bmat)
}

/// Rank 6 frame `(x̂_1, x̂_2, x̂_3, x̂'_1, x̂'_2, x̂'_3)` in which the
/// icosahedral generators are block diagonal, with the orthogonal matrix `M`
/// satisfying `l_i = Σ_j M_ij x̂_j`.
pub fn b6_h3_frame() -> (Frame, DMatrix<f64>) {
    let t = tau();
    #[rustfmt::skip]
    let rows = [
        -1.0, -t, 0.0, -t, 1.0, 0.0,
        1.0, -t, 0.0, t, 1.0, 0.0,
        0.0, -1.0, -t, 0.0, -t, 1.0,
        0.0, -1.0, t, 0.0, -t, -1.0,
        -t, 0.0, -1.0, 1.0, 0.0, -t,
        t, 0.0, -1.0, -1.0, 0.0, -t,
    ];
    let m = DMatrix::from_row_slice(6, 6, &rows) / (2.0 * (2.0 + t)).sqrt();
    let basis: Vec<Vec<f64>> = (0..6).map(|j| m.column(j).iter().copied().collect()).collect();
    let frame = Frame::new(FrameKind::H3, basis, vec![0, 1, 2], vec![3, 4, 5], vec![])
        .expect("icosahedral frame is orthonormal");
    (frame, m)
}

/// Integer coordinates of a rank 6 lattice vector over `Z[τ]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IcosahedralCoords {
    pub n: [i64; 6],
    /// Components along `(x̂_1, x̂_2, x̂_3, x̂'_1, x̂'_2, x̂'_3)`.
    pub components: [f64; 6],
}

/// `n_i` for the weight coefficients `a`, and the frame components
/// `[(n_1+n_2τ), (n_3+n_4τ), (n_5+n_6τ), τ(n_1+n_2σ), τ(n_3+n_4σ), τ(n_5+n_6σ)] / √(2(2+τ))`.
pub fn b6_integer_coords(a: [i64; 6]) -> IcosahedralCoords {
    let [a1, a2, a3, a4, a5, a6] = a;
    let n = [
        -a1,
        -a5,
        -(a3 + 2 * a4 + 2 * a5 + 2 * a6),
        -(a1 + 2 * a2 + 2 * a3 + 2 * a4 + 2 * a5 + 2 * a6),
        -(a5 + 2 * a6),
        -a3,
    ];
    let (t, s) = (tau(), sigma());
    let scale = 1.0 / (2.0 * (2.0 + t)).sqrt();
    let nf = n.map(|x| x as f64);
    let components = [
        scale * (nf[0] + nf[1] * t),
        scale * (nf[2] + nf[3] * t),
        scale * (nf[4] + nf[5] * t),
        scale * t * (nf[0] + nf[1] * s),
        scale * t * (nf[2] + nf[3] * s),
        scale * t * (nf[4] + nf[5] * s),
    ];
    IcosahedralCoords { n, components }
}

/// Simple roots of `H_3` in parallel-space coordinates:
/// `β_1 = −√2 x̂_1`, `β_2 = (x̂_1 + σx̂_2 + τx̂_3)/√2`, `β_3 = −√2 x̂_3`.
pub fn h3_roots() -> [[f64; 3]; 3] {
    let (t, s) = (tau(), sigma());
    let r2 = 2f64.sqrt();
    [
        [-r2, 0.0, 0.0],
        [1.0 / r2, s / r2, t / r2],
        [0.0, 0.0, -r2],
    ]
}

/// An orthonormal pair spanning a symmetry plane of the icosahedral group,
/// in parallel-space coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryPlane {
    /// Order of the rotation about the plane's normal (2, 3 or 5).
    pub fold: u32,
    pub u: [f64; 3],
    pub v: [f64; 3],
}

impl SymmetryPlane {
    pub fn project(&self, p: &[f64]) -> [f64; 2] {
        [dot(&self.u, p), dot(&self.v, p)]
    }

    pub fn normal(&self) -> [f64; 3] {
        let (u, v) = (self.u, self.v);
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    }
}

/// The 2-, 3- and 5-fold planes `(x̂_1, x̂_3)`, `(ŷ_1, ŷ_2)`, `(ẑ_1, ẑ_2)`.
pub fn h3_symmetry_planes(frame: &Frame) -> Result<[SymmetryPlane; 3]> {
    if frame.kind() != FrameKind::H3 {
        return Err(Error::FrameUnavailable {
            frame: "h3 symmetry planes",
            rank: frame.rank(),
        });
    }
    let (t, s) = (tau(), sigma());
    let r3 = 3f64.sqrt();
    let two_fold = SymmetryPlane {
        fold: 2,
        u: [1.0, 0.0, 0.0],
        v: [0.0, 0.0, 1.0],
    };
    let three_fold = SymmetryPlane {
        fold: 3,
        u: [-0.5, 0.5 * s, 0.5 * t],
        v: [-3.0 / (2.0 * r3), -s / (2.0 * r3), -t / (2.0 * r3)],
    };
    let z2 = 1.0 / (2.0 * (2.0 + t).sqrt());
    let five_fold = SymmetryPlane {
        fold: 5,
        u: [0.5 * t, -0.5, 0.5 * s],
        v: [z2, z2 * s, z2 * (2.0 + t)],
    };
    Ok([two_fold, three_fold, five_fold])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::norm;
    use crate::weyl::{h3_generators, weight_to_lattice};
    use std::f64::consts::PI;

    #[test]
    fn t_basis_properties() {
        let f = b4_t_basis();
        assert!(f.orthonormality_deviation() < 1e-15);
        let d = RootDatum::new(4).unwrap();
        let gamma = crate::weyl::SignedPerm::from_images(vec![3, 4, 1, 2]).unwrap();
        let mut fixers = vec![gamma];
        for i in 1..=3 {
            fixers.push(d.generator(i).unwrap());
        }
        for g in fixers {
            assert_eq!(g.apply(f.vector(0)), f.vector(0));
        }
        // ±l_i land on the cube ½(±t_1 ±t_2 ±t_3)
        for i in 0..4 {
            for sgn in [1.0, -1.0] {
                let mut v = vec![0.0; 4];
                v[i] = sgn;
                let p = f.par_coords(&v);
                assert!(p.iter().all(|c| (c.abs() - 0.5).abs() < 1e-15));
            }
        }
    }

    #[test]
    fn fivefold_matrix() {
        let (f, b) = b5_fivefold_frame();
        let bbt = &b * b.transpose();
        assert!((bbt - DMatrix::identity(5, 5)).abs().max() < 1e-12);
        // B is the transpose of the frame matrix
        assert!((f.matrix().transpose() - &b).abs().max() < 1e-12);
        let r5 = 5f64.sqrt();
        for k in 0..5 {
            assert!((f.vector(4)[k] - 1.0 / r5).abs() < 1e-12);
        }
        let expect = [0.0, -2.0, 0.0, 2.0, 2f64.sqrt()];
        for (j, e) in expect.iter().enumerate() {
            assert!((b[(2, j)] - e / 10f64.sqrt()).abs() < 1e-12);
        }
        for i in 0..5 {
            assert!((b.row(i).norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn icosahedral_matrix_and_blocks() {
        let (f, m) = b6_h3_frame();
        assert!((&m * m.transpose() - DMatrix::identity(6, 6)).abs().max() < 1e-12);
        let scale = (2.0 * (2.0 + tau())).sqrt();
        let first = [-1.0, -tau(), 0.0, -tau(), 1.0, 0.0];
        for j in 0..6 {
            assert!((m[(0, j)] * scale - first[j]).abs() < 1e-12);
        }
        let d = RootDatum::new(6).unwrap();
        for g in h3_generators(&d).unwrap() {
            let c = m.transpose() * g.to_matrix() * &m;
            for i in 0..6 {
                for j in 0..6 {
                    if (i < 3) != (j < 3) {
                        assert!(c[(i, j)].abs() < 1e-12);
                    }
                }
            }
        }
        for i in 0..6 {
            let mut v = vec![0.0; 6];
            v[i] = 1.0;
            assert!((norm(&f.par_coords(&v)) - 0.5f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn integer_coords() {
        let c = b6_integer_coords([1, 0, 0, 0, 0, 0]);
        assert_eq!(c.n, [-1, 0, 0, -1, 0, 0]);
        assert_eq!(b6_integer_coords([0; 6]).n, [0; 6]);
        let (f, _) = b6_h3_frame();
        for a in [[1, 2, -3, 0, 4, -1], [0, 0, 0, 0, 0, 1], [5, -5, 2, 2, -7, 3]] {
            let l: Vec<f64> = weight_to_lattice(&a).into_iter().map(|x| x as f64).collect();
            let direct = f.coords(&l);
            let c = b6_integer_coords(a);
            for k in 0..6 {
                assert!((direct[k] - c.components[k]).abs() < 1e-9);
            }
        }
    }

    fn rotate_about(p: &[f64], plane: &SymmetryPlane, angle: f64) -> [f64; 3] {
        let nrm = plane.normal();
        let a = dot(&plane.u, p);
        let b = dot(&plane.v, p);
        let c = dot(&nrm, p);
        let (s, co) = angle.sin_cos();
        let (a2, b2) = (co * a - s * b, s * a + co * b);
        [0, 1, 2].map(|k| a2 * plane.u[k] + b2 * plane.v[k] + c * nrm[k])
    }

    #[test]
    fn symmetry_planes_rotate_icosahedron() {
        let (f, _) = b6_h3_frame();
        let mut ico = Vec::new();
        for i in 0..6 {
            for sgn in [1.0, -1.0] {
                let mut v = vec![0.0; 6];
                v[i] = sgn;
                ico.push(f.par_coords(&v));
            }
        }
        let planes = h3_symmetry_planes(&f).unwrap();
        for plane in &planes {
            assert!(dot(&plane.u, &plane.v).abs() < 1e-12);
            assert!((norm(&plane.u) - 1.0).abs() < 1e-12);
            assert!((norm(&plane.v) - 1.0).abs() < 1e-12);
            let angle = 2.0 * PI / plane.fold as f64;
            for p in &ico {
                let q = rotate_about(p, plane, angle);
                let hit = ico.iter().any(|r| {
                    r.iter().zip(&q).map(|(x, y)| (x - y).powi(2)).sum::<f64>() < 1e-18
                });
                assert!(hit, "fold {}", plane.fold);
            }
        }
        assert!(h3_symmetry_planes(&b4_t_basis()).is_err());
    }

    #[test]
    fn root_pairs_span_planes() {
        let (f, _) = b6_h3_frame();
        let [b1, b2, b3] = h3_roots();
        let planes = h3_symmetry_planes(&f).unwrap();
        for (plane, (p, q)) in planes.iter().zip([(b1, b3), (b1, b2), (b2, b3)]) {
            let nrm = plane.normal();
            assert!(dot(&nrm, &p).abs() < 1e-12);
            assert!(dot(&nrm, &q).abs() < 1e-12);
        }
    }
}
