use std::f64::consts::PI;

use super::eigen::cartan_eigensystem;
use super::{Frame, FrameKind};
use crate::error::{Error, Result};
use crate::weyl::RootDatum;

/// Unit vectors `x̂_i = (hλ_i)^{-1/2} Σ_j α_j^∨ X_ji` from the Cartan
/// eigenvectors. `(x̂_1, x̂_n)` is the Coxeter plane (exponents 1 and h−1),
/// the remaining pairs `(x̂_i, x̂_{n+1−i})` are perpendicular, and for odd `n`
/// the unpaired middle vector is invariant.
pub fn coxeter_plane_frame(datum: &RootDatum) -> Result<Frame> {
    let n = datum.rank();
    let spectrum = cartan_eigensystem(datum)?;
    let h = datum.coxeter_number() as f64;
    let coroots: Vec<Vec<f64>> = (0..n).map(|j| datum.coroot(j)).collect();

    let basis: Vec<Vec<f64>> = spectrum
        .pairs
        .iter()
        .map(|p| {
            let scale = 1.0 / (h * p.value).sqrt();
            (0..n)
                .map(|k| scale * (0..n).map(|j| coroots[j][k] * p.vector[j]).sum::<f64>())
                .collect()
        })
        .collect();

    let par = vec![0, n - 1];
    let mut perp = Vec::new();
    for i in 1..n / 2 {
        perp.push(i);
        perp.push(n - 1 - i);
    }
    let invariant = if n % 2 == 1 { vec![n / 2] } else { vec![] };
    Ok(Frame::new(FrameKind::Coxeter, basis, par, perp, invariant)?.with_spectrum(spectrum))
}

/// Simple roots `β_i, β_{n+1−i}` of the dihedral diagram acting in the plane
/// `(x̂_i, x̂_{n+1−i})`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneRoots {
    /// 1-based plane index `i ≤ n/2`.
    pub index: usize,
    pub exponent: u32,
    pub first: Vec<f64>,
    pub second: Vec<f64>,
}

impl PlaneRoots {
    pub fn angle(&self) -> f64 {
        let c = super::dot(&self.first, &self.second)
            / (super::norm(&self.first) * super::norm(&self.second));
        c.clamp(-1.0, 1.0).acos()
    }
}

/// `β_i = √2[sin(mπ/2h) x̂_i + cos(mπ/2h) x̂_{n+1−i}]`,
/// `β_{n+1−i} = √2[sin(mπ/2h) x̂_i − cos(mπ/2h) x̂_{n+1−i}]`.
pub fn plane_roots(frame: &Frame, index: usize) -> Result<PlaneRoots> {
    let spectrum = frame.spectrum().ok_or(Error::NotSpectralFrame)?;
    let n = frame.rank();
    if index == 0 || index > n / 2 {
        return Err(Error::UnpairedIndex { index, rank: n });
    }
    let i = index - 1;
    let j = n - 1 - i;
    let m = spectrum.pairs[i].exponent;
    let theta = m as f64 * PI / (2.0 * spectrum.coxeter_number as f64);
    let (s, c) = theta.sin_cos();
    let r2 = 2f64.sqrt();
    let xi = frame.vector(i);
    let xj = frame.vector(j);
    let first = xi.iter().zip(xj).map(|(a, b)| r2 * (s * a + c * b)).collect();
    let second = xi.iter().zip(xj).map(|(a, b)| r2 * (s * a - c * b)).collect();
    Ok(PlaneRoots {
        index,
        exponent: m,
        first,
        second,
    })
}

/// Frame components of the lattice vector `Σ_{j<n} a_j ω_j + 2a_n ω_n`:
/// `p_i = (hλ_i)^{-1/2} (Σ_{j<n} a_j X_ji + 2a_n)`.
pub fn lattice_components(frame: &Frame, a: &[i64]) -> Result<Vec<f64>> {
    let spectrum = frame.spectrum().ok_or(Error::NotSpectralFrame)?;
    let n = frame.rank();
    if a.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.len(),
        });
    }
    let h = spectrum.coxeter_number as f64;
    Ok(spectrum
        .pairs
        .iter()
        .map(|p| {
            let s: f64 = (0..n - 1).map(|j| a[j] as f64 * p.vector[j]).sum::<f64>()
                + 2.0 * a[n - 1] as f64;
            s / (h * p.value).sqrt()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::dot;
    use crate::weyl::{dihedral_generators, weight_to_lattice};
    use proptest::prelude::*;

    fn apply(m: &nalgebra::DMatrix<f64>, v: &[f64]) -> Vec<f64> {
        (m * nalgebra::DVector::from_column_slice(v)).iter().copied().collect()
    }

    #[test]
    fn frames_are_orthonormal() {
        for n in 2..=8 {
            let f = coxeter_plane_frame(&RootDatum::new(n).unwrap()).unwrap();
            assert!(f.orthonormality_deviation() < 1e-12);
            let mut all: Vec<usize> = f.window_indices();
            all.extend(f.par_indices());
            all.sort();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn b5_middle_direction() {
        let f = coxeter_plane_frame(&RootDatum::new(5).unwrap()).unwrap();
        assert_eq!(f.invariant_indices(), &[2]);
        // p_3 = (a_1 − a_3 + a_5)/√5
        let a = [3, -2, 5, 7, -1];
        let p = lattice_components(&f, &a).unwrap();
        assert!((p[2] - (3.0 - 5.0 - 1.0) / 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn short_root_star() {
        for n in 3..=8 {
            let f = coxeter_plane_frame(&RootDatum::new(n).unwrap()).unwrap();
            let mut angles = Vec::new();
            let mut norms = Vec::new();
            for i in 0..n {
                for s in [1.0, -1.0] {
                    let mut v = vec![0.0; n];
                    v[i] = s;
                    let p = f.par_coords(&v);
                    norms.push((p[0] * p[0] + p[1] * p[1]).sqrt());
                    angles.push(p[1].atan2(p[0]));
                }
            }
            let spread = norms.iter().cloned().fold(f64::MIN, f64::max)
                - norms.iter().cloned().fold(f64::MAX, f64::min);
            assert!(spread < 1e-9);
            angles.sort_by(|a, b| a.total_cmp(b));
            for w in angles.windows(2) {
                assert!((w[1] - w[0] - PI / n as f64).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn plane_root_geometry() {
        for n in 4..=8 {
            let d = RootDatum::new(n).unwrap();
            let f = coxeter_plane_frame(&d).unwrap();
            let h = 2.0 * n as f64;
            let (r1, r2) = dihedral_generators(&d);
            let (m1, m2) = (r1.to_matrix(), r2.to_matrix());
            for i in 1..=n / 2 {
                let pr = plane_roots(&f, i).unwrap();
                assert!((dot(&pr.first, &pr.first) - 2.0).abs() < 1e-12);
                assert!((dot(&pr.second, &pr.second) - 2.0).abs() < 1e-12);
                let expect = PI - pr.exponent as f64 * PI / h;
                assert!((pr.angle() - expect).abs() < 1e-9);
                // R_1 and R_2 each negate exactly one of the pair
                let neg = |m: &nalgebra::DMatrix<f64>, v: &[f64]| {
                    apply(m, v).iter().zip(v).all(|(a, b)| (a + b).abs() < 1e-9)
                };
                let a = neg(&m1, &pr.first) && neg(&m2, &pr.second);
                let b = neg(&m2, &pr.first) && neg(&m1, &pr.second);
                assert!(a ^ b, "n={n} i={i}");
            }
        }
        let f6 = coxeter_plane_frame(&RootDatum::new(6).unwrap()).unwrap();
        let pr = plane_roots(&f6, 1).unwrap();
        assert!((pr.angle() - (PI - PI / 12.0)).abs() < 1e-9);
        assert!(matches!(plane_roots(&f6, 4), Err(Error::UnpairedIndex { .. })));
        assert!(matches!(plane_roots(&f6, 0), Err(Error::UnpairedIndex { .. })));
    }

    #[test]
    fn zero_tuple_has_zero_components() {
        let f = coxeter_plane_frame(&RootDatum::new(4).unwrap()).unwrap();
        assert_eq!(lattice_components(&f, &[0, 0, 0, 0]).unwrap(), vec![0.0; 4]);
        assert!(lattice_components(&f, &[0, 0, 0]).is_err());
    }

    #[test]
    fn coxeter_element_is_block_rotation() {
        for n in 4..=7 {
            let d = RootDatum::new(n).unwrap();
            let f = coxeter_plane_frame(&d).unwrap();
            let (r1, r2) = dihedral_generators(&d);
            let c = f.matrix() * (&r1 * &r2).to_matrix() * f.matrix().transpose();
            for i in 0..n {
                for j in 0..n {
                    let paired = i == j || i + j == n - 1;
                    if !paired {
                        assert!(c[(i, j)].abs() < 1e-9, "n={n} ({i},{j})");
                    }
                }
            }
            // rotation by 2π/h in the Coxeter plane
            let h = 2.0 * n as f64;
            assert!((c[(0, 0)] - (2.0 * PI / h).cos()).abs() < 1e-9);
        }
    }

    proptest! {
        #[test]
        fn components_match_dot_products(
            n in 4usize..=6,
            a in proptest::collection::vec(-50i64..50, 6)
        ) {
            let f = coxeter_plane_frame(&RootDatum::new(n).unwrap()).unwrap();
            let a = &a[..n];
            let c: Vec<f64> = weight_to_lattice(a).into_iter().map(|x| x as f64).collect();
            let direct = f.coords(&c);
            let eq = lattice_components(&f, a).unwrap();
            for (x, y) in direct.iter().zip(&eq) {
                prop_assert!((x - y).abs() < 1e-9);
            }
        }
    }
}
