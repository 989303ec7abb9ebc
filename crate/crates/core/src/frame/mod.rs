//! Orthonormal frames that split `R^n` into parallel, perpendicular and
//! invariant subspaces.

mod closed_form;
mod coxeter;
mod eigen;
mod fixed;

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

pub use closed_form::{b4_coxeter_components, b5_coxeter_components};
pub use coxeter::{coxeter_plane_frame, lattice_components, plane_roots, PlaneRoots};
pub use eigen::{cartan_eigensystem, CartanEigensystem, EigenPair};
pub use fixed::{
    b4_t_basis, b5_fivefold_frame, b6_h3_frame, b6_integer_coords, h3_roots,
    h3_symmetry_planes, IcosahedralCoords, SymmetryPlane,
};

use crate::error::{Error, Result};
use crate::tol;

/// golden ratio `τ = (1 + √5)/2`
pub fn tau() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// algebraic conjugate `σ = (1 − √5)/2`
pub fn sigma() -> f64 {
    (1.0 - 5f64.sqrt()) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrameKind {
    /// Cartan-eigenvector frame; any rank.
    Coxeter,
    /// Rank 5 frame built from the `A_4` eigenvectors plus the diagonal.
    Fivefold,
    /// Rank 6 frame block-diagonalizing the icosahedral subgroup.
    H3,
    /// Rank 4 basis `t_0 … t_3` with `t_0` invariant.
    TBasis,
}

impl FrameKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FrameKind::Coxeter => "coxeter",
            FrameKind::Fivefold => "fivefold",
            FrameKind::H3 => "h3",
            FrameKind::TBasis => "tbasis",
        }
    }

    /// Construct the frame of this kind for the given rank.
    pub fn build(self, rank: usize) -> Result<Frame> {
        let unavailable = || Error::FrameUnavailable {
            frame: self.as_str(),
            rank,
        };
        match self {
            FrameKind::Coxeter => {
                let datum = crate::weyl::RootDatum::new(rank)?;
                coxeter_plane_frame(&datum)
            }
            FrameKind::Fivefold if rank == 5 => Ok(b5_fivefold_frame().0),
            FrameKind::H3 if rank == 6 => Ok(b6_h3_frame().0),
            FrameKind::TBasis if rank == 4 => Ok(b4_t_basis()),
            _ => Err(unavailable()),
        }
    }
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FrameKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "coxeter" => Ok(FrameKind::Coxeter),
            "fivefold" => Ok(FrameKind::Fivefold),
            "h3" => Ok(FrameKind::H3),
            "tbasis" => Ok(FrameKind::TBasis),
            other => Err(format!("unknown frame `{other}`")),
        }
    }
}

/// An ordered orthonormal basis `x̂_1 … x̂_n` (rows, in `l`-coordinates)
/// together with the index sets of the parallel, perpendicular and
/// invariant directions. Indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    kind: FrameKind,
    basis: Vec<Vec<f64>>,
    par: Vec<usize>,
    perp: Vec<usize>,
    invariant: Vec<usize>,
    exponents: Vec<u32>,
    spectrum: Option<CartanEigensystem>,
}

impl Frame {
    pub(crate) fn new(
        kind: FrameKind,
        basis: Vec<Vec<f64>>,
        par: Vec<usize>,
        perp: Vec<usize>,
        invariant: Vec<usize>,
    ) -> Result<Self> {
        let n = basis.len();
        let mut seen = vec![false; n];
        for &i in par.iter().chain(&perp).chain(&invariant) {
            assert!(i < n && !seen[i], "index sets must partition 0..{n}");
            seen[i] = true;
        }
        assert!(seen.iter().all(|&s| s), "index sets must cover 0..{n}");
        let frame = Frame {
            kind,
            basis,
            par,
            perp,
            invariant,
            exponents: Vec::new(),
            spectrum: None,
        };
        let deviation = frame.orthonormality_deviation();
        if deviation > tol::ORTHO {
            return Err(Error::NotOrthonormal { deviation });
        }
        Ok(frame)
    }

    pub(crate) fn with_spectrum(mut self, spectrum: CartanEigensystem) -> Self {
        self.exponents = spectrum.pairs.iter().map(|p| p.exponent).collect();
        self.spectrum = Some(spectrum);
        self
    }

    pub fn kind(&self) -> FrameKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.basis[i]
    }

    pub fn par_indices(&self) -> &[usize] {
        &self.par
    }

    pub fn perp_indices(&self) -> &[usize] {
        &self.perp
    }

    pub fn invariant_indices(&self) -> &[usize] {
        &self.invariant
    }

    /// Perpendicular directions followed by invariant ones: the space the
    /// acceptance window lives in.
    pub fn window_indices(&self) -> Vec<usize> {
        self.perp.iter().chain(&self.invariant).copied().collect()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn spectrum(&self) -> Option<&CartanEigensystem> {
        self.spectrum.as_ref()
    }

    /// Rows are the basis vectors.
    pub fn matrix(&self) -> DMatrix<f64> {
        let n = self.rank();
        DMatrix::from_fn(n, n, |i, j| self.basis[i][j])
    }

    pub fn orthonormality_deviation(&self) -> f64 {
        let n = self.rank();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                let d = dot(&self.basis[i], &self.basis[j]);
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((d - expect).abs());
            }
        }
        worst
    }

    pub fn component(&self, i: usize, v: &[f64]) -> f64 {
        dot(&self.basis[i], v)
    }

    pub fn coords(&self, v: &[f64]) -> Vec<f64> {
        self.basis.iter().map(|b| dot(b, v)).collect()
    }

    pub fn select(&self, indices: &[usize], v: &[f64]) -> Vec<f64> {
        indices.iter().map(|&i| dot(&self.basis[i], v)).collect()
    }

    pub fn par_coords(&self, v: &[f64]) -> Vec<f64> {
        self.select(&self.par, v)
    }

    pub fn window_coords(&self, v: &[f64]) -> Vec<f64> {
        self.select(&self.window_indices(), v)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_identities() {
        let (t, s) = (tau(), sigma());
        assert!((t * t - t - 1.0).abs() < 1e-15);
        assert!((t * s + 1.0).abs() < 1e-15);
        assert!((t + s - 1.0).abs() < 1e-15);
    }

    #[test]
    fn frame_kinds_by_rank() {
        assert!(FrameKind::Fivefold.build(5).is_ok());
        assert!(matches!(
            FrameKind::Fivefold.build(4),
            Err(Error::FrameUnavailable { .. })
        ));
        assert!(FrameKind::H3.build(6).is_ok());
        assert!(FrameKind::TBasis.build(4).is_ok());
        assert!(FrameKind::Coxeter.build(9).is_err());
        assert_eq!("h3".parse::<FrameKind>().unwrap(), FrameKind::H3);
        assert!("bogus".parse::<FrameKind>().is_err());
    }

    #[test]
    fn non_orthonormal_rejected() {
        let r = Frame::new(
            FrameKind::Coxeter,
            vec![vec![1.0, 0.0], vec![1.0, 1.0]],
            vec![0],
            vec![1],
            vec![],
        );
        assert!(matches!(r, Err(Error::NotOrthonormal { .. })));
    }
}
