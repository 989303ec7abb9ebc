use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{dot, norm, Frame};
use crate::tol;
use crate::weyl::cube_vertices;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowMode {
    Hull,
    Disc,
}

impl WindowMode {
    pub fn as_str(self) -> &'static str {
        match self {
            WindowMode::Hull => "hull",
            WindowMode::Disc => "disc",
        }
    }
}

impl fmt::Display for WindowMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WindowMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hull" => Ok(WindowMode::Hull),
            "disc" => Ok(WindowMode::Disc),
            other => Err(format!("unknown window mode `{other}`")),
        }
    }
}

/// Translation of the Voronoi cell, in `l`-coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftSpec {
    Zero,
    /// `ω_n = ½(l_1 + … + l_n)`.
    Omega,
    Custom(Vec<f64>),
}

impl ShiftSpec {
    pub fn vector(&self, rank: usize) -> Result<Vec<f64>> {
        match self {
            ShiftSpec::Zero => Ok(vec![0.0; rank]),
            ShiftSpec::Omega => Ok(vec![0.5; rank]),
            ShiftSpec::Custom(v) if v.len() == rank => Ok(v.clone()),
            ShiftSpec::Custom(v) => Err(Error::DimensionMismatch {
                expected: rank,
                found: v.len(),
            }),
        }
    }

    pub fn label(&self) -> String {
        match self {
            ShiftSpec::Zero => "zero".into(),
            ShiftSpec::Omega => "omega".into(),
            ShiftSpec::Custom(v) => v
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

impl fmt::Display for ShiftSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for ShiftSpec {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "zero" | "0" => Ok(ShiftSpec::Zero),
            "omega" | "omega_n" => Ok(ShiftSpec::Omega),
            list => list
                .split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|e| format!("bad shift `{x}`: {e}")))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map(ShiftSpec::Custom),
        }
    }
}

/// Half-space `normal · x ≤ offset`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HalfSpace {
    pub normal: Vec<f64>,
    pub offset: f64,
}

/// Acceptance region in the window space of a frame (perpendicular then
/// invariant directions): the shadow of the translated Voronoi cell, or the
/// disc circumscribing the untranslated shadow, centred on the shift.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Window {
    pub mode: WindowMode,
    pub dimension: usize,
    /// Shift in `l`-coordinates.
    pub lattice_shift: Vec<f64>,
    /// Window-space image of the shift.
    pub shift: Vec<f64>,
    /// Window-space images of the translated cube vertices, deduplicated.
    pub vertices: Vec<Vec<f64>>,
    pub facets: Vec<HalfSpace>,
    /// Circumradius `R_0` of the untranslated shadow.
    pub radius: f64,
}

impl Window {
    /// Build from the cube shadow. The shadow of `[−½, ½]^n` is the zonotope
    /// generated by the images `g_i` of `l_i`; each facet normal is orthogonal
    /// to `d − 1` generators and has support `½ Σ |u·g_i|`.
    pub fn build(frame: &Frame, mode: WindowMode, shift: &[f64]) -> Result<Window> {
        let n = frame.rank();
        if shift.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: shift.len(),
            });
        }
        let dims = frame.window_indices();
        let d = dims.len();
        if d < 2 {
            return Err(Error::UnsupportedWindowDimension(d));
        }
        let gens: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut e = vec![0.0; n];
                e[i] = 1.0;
                frame.select(&dims, &e)
            })
            .collect();
        let shift_w = frame.select(&dims, shift);

        let mut vertices: Vec<Vec<f64>> = Vec::new();
        let mut radius: f64 = 0.0;
        for v in cube_vertices(n) {
            let x: Vec<f64> = v.iter().map(|c| c.to_f64()).collect();
            let p = frame.select(&dims, &x);
            radius = radius.max(norm(&p));
            let q: Vec<f64> = p.iter().zip(&shift_w).map(|(a, b)| a + b).collect();
            if !vertices.iter().any(|w| close(w, &q)) {
                vertices.push(q);
            }
        }
        vertices.sort_by(|a, b| cmp_vec(a, b));

        let mut facets: Vec<HalfSpace> = Vec::new();
        for subset in combinations(n, d - 1) {
            let rows: Vec<&[f64]> = subset.iter().map(|&i| gens[i].as_slice()).collect();
            let u = generalized_cross(&rows, d);
            let len = norm(&u);
            if len < 1e-9 {
                continue;
            }
            for sign in [1.0, -1.0] {
                let u: Vec<f64> = u.iter().map(|c| sign * c / len).collect();
                if facets
                    .iter()
                    .any(|f| f.normal.iter().zip(&u).all(|(a, b)| (a - b).abs() < 1e-9))
                {
                    continue;
                }
                let support: f64 = 0.5 * gens.iter().map(|g| dot(&u, g).abs()).sum::<f64>();
                let offset = support + dot(&u, &shift_w);
                facets.push(HalfSpace { normal: u, offset });
            }
        }
        if facets.is_empty() {
            return Err(Error::Numeric("window shadow is degenerate".into()));
        }
        Ok(Window {
            mode,
            dimension: d,
            lattice_shift: shift.to_vec(),
            shift: shift_w,
            vertices,
            facets,
            radius,
        })
    }

    /// Closed membership test with `1e-9` slack.
    pub fn contains(&self, p: &[f64]) -> bool {
        match self.mode {
            WindowMode::Hull => self.hull_contains(p),
            WindowMode::Disc => self.disc_contains(p),
        }
    }

    pub fn hull_contains(&self, p: &[f64]) -> bool {
        self.facets
            .iter()
            .all(|f| dot(&f.normal, p) <= f.offset + tol::POINT)
    }

    pub fn disc_contains(&self, p: &[f64]) -> bool {
        let r2: f64 = p
            .iter()
            .zip(&self.shift)
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        r2.sqrt() <= self.radius + tol::POINT
    }

    /// Largest norm of any accepted window-space point.
    pub fn reach(&self) -> f64 {
        match self.mode {
            WindowMode::Hull => self
                .vertices
                .iter()
                .map(|v| norm(v))
                .fold(0.0, f64::max),
            WindowMode::Disc => norm(&self.shift) + self.radius,
        }
    }

    /// Smallest facet slack of `p` (negative outside the hull).
    pub fn slack(&self, p: &[f64]) -> f64 {
        self.facets
            .iter()
            .map(|f| f.offset - dot(&f.normal, p))
            .fold(f64::INFINITY, f64::min)
    }
}

fn close(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol::POINT)
}

pub(crate) fn cmp_vec(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.total_cmp(y);
        if o.is_ne() {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Vector orthogonal to `d − 1` vectors in `R^d`, by cofactor expansion.
fn generalized_cross(rows: &[&[f64]], d: usize) -> Vec<f64> {
    (0..d)
        .map(|j| {
            let minor = nalgebra::DMatrix::from_fn(d - 1, d - 1, |r, c| {
                let col = if c < j { c } else { c + 1 };
                rows[r][col]
            });
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sign * minor.determinant()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{b6_h3_frame, coxeter_plane_frame};
    use crate::weyl::RootDatum;

    fn coxeter(n: usize) -> Frame {
        coxeter_plane_frame(&RootDatum::new(n).unwrap()).unwrap()
    }

    #[test]
    fn cross_is_orthogonal() {
        let a = [1.0, 2.0, 0.5, -1.0];
        let b = [0.0, 1.0, 3.0, 2.0];
        let c = [2.0, -1.0, 1.0, 0.0];
        let u = generalized_cross(&[&a, &b, &c], 4);
        for v in [&a[..], &b[..], &c[..]] {
            assert!(dot(&u, v).abs() < 1e-12);
        }
        assert!(norm(&u) > 1.0);
    }

    #[test]
    fn vertices_inside_and_origin_interior() {
        for (n, shift) in [(4, vec![0.0; 4]), (4, vec![0.5; 4]), (5, vec![0.5; 5]), (6, vec![0.0; 6])] {
            let f = coxeter(n);
            let w = Window::build(&f, WindowMode::Hull, &shift).unwrap();
            assert_eq!(w.dimension, n - 2);
            for v in &w.vertices {
                assert!(w.hull_contains(v));
                assert!(w.disc_contains(v));
            }
            assert!(w.slack(&w.shift) > 1e-3);
        }
    }

    #[test]
    fn zero_shift_is_centrosymmetric() {
        let w = Window::build(&coxeter(4), WindowMode::Hull, &[0.0; 4]).unwrap();
        for v in &w.vertices {
            let m: Vec<f64> = v.iter().map(|x| -x).collect();
            assert!(w.vertices.iter().any(|u| close(u, &m)));
        }
        for f in &w.facets {
            let m: Vec<f64> = f.normal.iter().map(|x| -x).collect();
            assert!(w.facets.iter().any(|g| close(&g.normal, &m) && (g.offset - f.offset).abs() < 1e-12));
        }
    }

    #[test]
    fn b4_octagon() {
        let w = Window::build(&coxeter(4), WindowMode::Disc, &[0.5; 4]).unwrap();
        assert_eq!(w.facets.len(), 8);
        assert_eq!(w.vertices.len(), 16);
        // circumradius of the octagonal shadow
        let expected = w
            .vertices
            .iter()
            .map(|v| norm(&[v[0] - w.shift[0], v[1] - w.shift[1]]))
            .fold(0.0, f64::max);
        assert!((w.radius - expected).abs() < 1e-12);
    }

    #[test]
    fn icosahedral_window_is_triacontahedron() {
        let (f, _) = b6_h3_frame();
        let w = Window::build(&f, WindowMode::Hull, &[0.0; 6]).unwrap();
        assert_eq!(w.dimension, 3);
        assert_eq!(w.facets.len(), 30);
    }

    #[test]
    fn dimension_checks() {
        let f = crate::frame::b4_t_basis();
        assert!(matches!(
            Window::build(&f, WindowMode::Hull, &[0.0; 4]),
            Err(Error::UnsupportedWindowDimension(1))
        ));
        assert!(Window::build(&coxeter(4), WindowMode::Hull, &[0.0; 3]).is_err());
    }

    #[test]
    fn shift_parsing() {
        assert_eq!("omega".parse::<ShiftSpec>().unwrap(), ShiftSpec::Omega);
        assert_eq!("zero".parse::<ShiftSpec>().unwrap(), ShiftSpec::Zero);
        assert_eq!(
            "0.1, -0.2".parse::<ShiftSpec>().unwrap(),
            ShiftSpec::Custom(vec![0.1, -0.2])
        );
        assert!("x".parse::<ShiftSpec>().is_err());
        assert!(ShiftSpec::Custom(vec![1.0]).vector(2).is_err());
    }
}
