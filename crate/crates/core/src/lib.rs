//! Coxeter–Weyl groups `W(B_n)` and cut-and-project quasicrystals from the
//! hypercubic lattice `Z^n`.
//!
//! * [`weyl`]: root datum, signed-permutation group elements, orbits and the
//!   dihedral / `D_n` / icosahedral / `D_5d` generating sets.
//! * [`frame`]: orthonormal projection frames, both the Cartan-eigenvector
//!   Coxeter-plane frame and the fixed frames for ranks 4, 5 and 6.
//! * [`voronoi`]: the Voronoi cell, its 3D shadows and their orbit
//!   decomposition and classification.
//! * [`cut_project`]: acceptance windows, strip enumeration and planar /
//!   icosahedral patches.
//! * [`render`]: CSV, JSON, SVG and OFF writers and the invariant checker
//!   behind the `bnq` command-line tool.

pub mod cli;
pub mod cut_project;
pub mod error;
pub mod frame;
pub mod render;
pub mod tol;
pub mod voronoi;
pub mod weyl;

pub use error::{Error, Result};
